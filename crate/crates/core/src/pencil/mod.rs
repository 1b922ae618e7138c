//! Pencils `F + λG`, `λ ∈ K ∪ {∞}`: sweeps over the λ-line, the generic
//! Hilbert function, special fibers, and checks of the bounds relating them to
//! `A = R / Ann(F, G)`.

mod verify;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apolar::{ActionKind, FormSpace};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::hilbert::{
    hilbert_of_form, hilbert_of_space, overlap_profile, symmetry_check, HilbertSeq, OverlapProfile,
};
use crate::scalars::{FieldSpec, Scalar};

pub use verify::{
    below_half_check, compression_flags, ghms_decomposition, ghms_type_two_bound, theorem2_bound,
    verify_corollary_partials, verify_theorem1, BelowHalfVerdict, CompressionFlags,
    CorollaryVerdict, GhmsBound, GhmsDecomposition, Theorem1Row, Theorem1Verdict, Theorem2Row,
    Theorem2Verdict,
};

/// Largest `|λ|` drawn over `Q`.
pub const RATIONAL_SAMPLE_RANGE: i64 = 10_000;

/// A point of `P¹`: `λ` for the member `F + λG`, or `∞` for `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lambda {
    Finite(Scalar),
    Infinity,
}

impl Lambda {
    pub fn is_endpoint(&self) -> bool {
        match self {
            Lambda::Infinity => true,
            Lambda::Finite(s) => s.is_zero(),
        }
    }
}

impl Ord for Lambda {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Lambda::Infinity, Lambda::Infinity) => Ordering::Equal,
            (Lambda::Infinity, _) => Ordering::Greater,
            (_, Lambda::Infinity) => Ordering::Less,
            (Lambda::Finite(a), Lambda::Finite(b)) => match (a.as_rational(), b.as_rational()) {
                (Some(x), Some(y)) => x.cmp(y),
                _ => a.as_residue().cmp(&b.as_residue()),
            },
        }
    }
}

impl PartialOrd for Lambda {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(s) => write!(f, "{s}"),
            Lambda::Infinity => f.write_str("inf"),
        }
    }
}

/// `F + λG`, or `G` at infinity.
pub fn pencil_member(f: &Form, g: &Form, lambda: &Lambda) -> Result<Form> {
    match lambda {
        Lambda::Infinity => Ok(g.clone()),
        Lambda::Finite(s) => f.add(&g.scale(s)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilPoint {
    pub lambda: Lambda,
    pub member: Form,
    pub h: HilbertSeq,
}

impl PencilPoint {
    /// `dim R_1 ∘ F_λ`, the number of independent first partials.
    pub fn first_partials(&self) -> usize {
        let j = self.h.len() - 1;
        if j == 0 {
            0
        } else {
            self.h.get(j - 1)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Number of points drawn besides `0` and `∞`; ignored when exhaustive.
    pub samples: usize,
    pub seed: u64,
    /// Visit every point of `P¹(GF(p))`.
    pub exhaustive: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            samples: 8,
            seed: 0,
            exhaustive: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: usize,
    pub exhaustive: bool,
    pub points: usize,
    /// Enough points were computed that no fiber of the pencil can have a
    /// larger Hilbert function than `H_gen`.
    pub certified: bool,
    /// Special fibers were searched only among sampled points.
    pub sampled_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub theorem1: Theorem1Verdict,
    pub theorem2: Theorem2Verdict,
    pub corollary: CorollaryVerdict,
    /// Decompositions with `V = <F>` and `V = <G>`.
    pub ghms: [GhmsDecomposition; 2],
    pub below_half: BelowHalfVerdict,
    pub symmetric_fibers: bool,
    pub compression: CompressionFlags,
}

impl Verdicts {
    pub fn all_pass(&self) -> bool {
        self.theorem1.holds
            && self.theorem2.holds
            && !matches!(self.corollary, CorollaryVerdict::Fails { .. })
            && self.ghms.iter().all(|g| g.o_sequence_ok)
            && self.below_half.holds
            && self.symmetric_fibers
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilReport {
    pub h_f: HilbertSeq,
    pub h_g: HilbertSeq,
    pub h_a: HilbertSeq,
    pub overlap: OverlapProfile,
    pub h_gen: HilbertSeq,
    /// Every computed fiber, sorted by `λ` with `∞` last.
    pub points: Vec<PencilPoint>,
    /// Computed fibers whose Hilbert function falls below `H_gen` somewhere.
    pub special_fibers: Vec<PencilPoint>,
    pub verdicts: Verdicts,
    pub sampling: Sampling,
    pub warnings: Vec<String>,
}

impl PencilReport {
    pub fn special_lambdas(&self) -> Vec<Lambda> {
        self.special_fibers
            .iter()
            .map(|p| p.lambda.clone())
            .collect()
    }

    pub fn point(&self, lambda: &Lambda) -> Option<&PencilPoint> {
        self.points.iter().find(|p| &p.lambda == lambda)
    }
}

fn sample_lambdas(field: FieldSpec, config: &SweepConfig) -> Result<Vec<Lambda>> {
    let mut out = vec![Lambda::Finite(Scalar::zero(field)), Lambda::Infinity];
    match field {
        FieldSpec::Rationals => {
            if config.exhaustive {
                return Err(Error::ExhaustiveOverInfiniteField);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut drawn = BTreeSet::new();
            while drawn.len() < config.samples {
                let v = rng.gen_range(1..=RATIONAL_SAMPLE_RANGE);
                let v = if rng.gen::<bool>() { v } else { -v };
                drawn.insert(v);
            }
            out.extend(
                drawn
                    .into_iter()
                    .map(|v| Lambda::Finite(Scalar::from_i64(field, v))),
            );
        }
        FieldSpec::Prime(p) => {
            if config.exhaustive {
                out.extend((1..p).map(|v| Lambda::Finite(Scalar::from_i64(field, v as i64))));
            } else {
                if config.samples as u64 > p - 1 {
                    return Err(Error::InsufficientFieldSize {
                        requested: config.samples as u64 + 2,
                        available: p + 1,
                    });
                }
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                let mut drawn = BTreeSet::new();
                while drawn.len() < config.samples {
                    drawn.insert(rng.gen_range(1..p));
                }
                out.extend(
                    drawn
                        .into_iter()
                        .map(|v| Lambda::Finite(Scalar::from_i64(field, v as i64))),
                );
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Computes the Hilbert function of every chosen fiber, the data of
/// `A = R / Ann(F, G)`, and all verdicts.
///
/// A nonzero `(m+1)`-minor of the catalecticant of `F + λG` is a binary form
/// of degree `m+1` in the coordinates of `λ`, so it vanishes at no more than
/// `m+1` points of `P¹`; once more than `max H_gen + 1` points are computed,
/// `H_gen` is the generic Hilbert function.
pub fn sweep(f: &Form, g: &Form, config: &SweepConfig, action: ActionKind) -> Result<PencilReport> {
    let space = FormSpace::new(vec![f.clone(), g.clone()])?;
    let field = space.field();
    let h_f = hilbert_of_form(f, action)?;
    let h_g = hilbert_of_form(g, action)?;
    let h_a = hilbert_of_space(&space, action)?;
    let overlap = overlap_profile(f, g, action)?;

    let mut points = Vec::new();
    for lambda in sample_lambdas(field, config)? {
        let member = pencil_member(f, g, &lambda)?;
        let h = hilbert_of_form(&member, action)?;
        points.push(PencilPoint { lambda, member, h });
    }
    let mut h_gen = points[0].h.clone();
    for p in &points[1..] {
        h_gen = h_gen.termwise_max(&p.h)?;
    }
    let special_fibers: Vec<PencilPoint> =
        points.iter().filter(|p| p.h != h_gen).cloned().collect();

    let peak = h_gen.values().iter().copied().max().unwrap_or(0);
    let certified = points.len() > peak + 1;
    let sampling = Sampling {
        seed: config.seed,
        samples: config.samples,
        exhaustive: config.exhaustive,
        points: points.len(),
        certified,
        sampled_only: !config.exhaustive,
    };

    let mut warnings = Vec::new();
    if !certified {
        warnings.push(format!(
            "only {} points computed; H_gen is a lower bound for the generic Hilbert function until more than {} are",
            points.len(),
            peak + 1
        ));
    }
    if !config.exhaustive {
        let misses = special_fibers
            .iter()
            .filter(|p| !p.lambda.is_endpoint())
            .count();
        if misses > 2 {
            warnings.push(format!(
                "{misses} sampled non-endpoint fibers miss H_gen; sampling may be too sparse"
            ));
        }
    }

    let theorem1 = verify_theorem1(&h_a, &overlap, &h_gen, &points);
    let theorem2 = theorem2_bound(&h_a, &h_gen);
    let corollary = verify_corollary_partials(&h_a, &h_gen);
    let ghms = [
        ghms_decomposition(&space, 0, action)?,
        ghms_decomposition(&space, 1, action)?,
    ];
    let below_half = below_half_check(&h_a, &points);
    let symmetric_fibers = points.iter().all(|p| symmetry_check(&p.h));
    let compression = compression_flags(&h_a, &h_gen);

    Ok(PencilReport {
        h_f,
        h_g,
        h_a,
        overlap,
        h_gen,
        points,
        special_fibers,
        verdicts: Verdicts {
            theorem1,
            theorem2,
            corollary,
            ghms,
            below_half,
            symmetric_fibers,
            compression,
        },
        sampling,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;

    const Q: FieldSpec = FieldSpec::Rationals;
    const D: ActionKind = ActionKind::Differentiation;

    fn f(s: &str, r: usize) -> Form {
        parse_form(s, r, Q).unwrap()
    }

    fn fin(v: i64) -> Lambda {
        Lambda::Finite(Scalar::from_i64(Q, v))
    }

    #[test]
    fn members() {
        let (a, b) = (f("X^4", 2), f("X*Y^3", 2));
        assert_eq!(pencil_member(&a, &b, &fin(0)).unwrap(), a);
        assert_eq!(pencil_member(&a, &b, &Lambda::Infinity).unwrap(), b);
        assert_eq!(pencil_member(&a, &b, &fin(1)).unwrap(), f("X^4 + X*Y^3", 2));
    }

    #[test]
    fn lambda_order_puts_infinity_last() {
        let mut v = vec![Lambda::Infinity, fin(3), fin(-7), fin(0)];
        v.sort();
        assert_eq!(v, vec![fin(-7), fin(0), fin(3), Lambda::Infinity]);
    }

    #[test]
    fn binary_sweep() {
        let report = sweep(&f("X^4", 2), &f("X*Y^3", 2), &SweepConfig::default(), D).unwrap();
        assert_eq!(report.h_a.values(), &[1, 2, 3, 3, 2]);
        assert_eq!(report.h_gen.values(), &[1, 2, 3, 2, 1]);
        assert_eq!(report.special_lambdas(), vec![fin(0), Lambda::Infinity]);
        assert_eq!(report.points.len(), 10);
        assert!(report.sampling.certified);
        assert!(report.verdicts.all_pass());
    }

    #[test]
    fn sampling_is_deterministic() {
        let c = SweepConfig {
            samples: 5,
            seed: 42,
            exhaustive: false,
        };
        assert_eq!(
            sample_lambdas(Q, &c).unwrap(),
            sample_lambdas(Q, &c).unwrap()
        );
        let gf = FieldSpec::Prime(13);
        let lambdas = sample_lambdas(gf, &c).unwrap();
        assert_eq!(lambdas.len(), 7);
        assert_eq!(lambdas.last(), Some(&Lambda::Infinity));
    }

    #[test]
    fn sampling_limits() {
        let exhaustive = SweepConfig {
            samples: 0,
            seed: 0,
            exhaustive: true,
        };
        assert_eq!(
            sample_lambdas(Q, &exhaustive),
            Err(Error::ExhaustiveOverInfiniteField)
        );
        assert_eq!(
            sample_lambdas(FieldSpec::Prime(7), &exhaustive)
                .unwrap()
                .len(),
            8
        );
        let too_many = SweepConfig {
            samples: 7,
            seed: 0,
            exhaustive: false,
        };
        assert_eq!(
            sample_lambdas(FieldSpec::Prime(7), &too_many),
            Err(Error::InsufficientFieldSize {
                requested: 9,
                available: 8
            })
        );
    }

    #[test]
    fn exhaustive_sweep_over_small_field() {
        let gf = FieldSpec::Prime(11);
        let a = parse_form("X^4", 2, gf).unwrap();
        let b = parse_form("X*Y^3", 2, gf).unwrap();
        let config = SweepConfig {
            samples: 0,
            seed: 0,
            exhaustive: true,
        };
        let report = sweep(&a, &b, &config, D).unwrap();
        assert_eq!(report.points.len(), 12);
        assert_eq!(report.h_gen.values(), &[1, 2, 3, 2, 1]);
        assert_eq!(report.special_fibers.len(), 2);
        assert!(!report.sampling.sampled_only);
    }
}
