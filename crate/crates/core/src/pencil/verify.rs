//! Checks of the bounds a pencil must satisfy, each phrased over data already
//! computed by a sweep.

use alloc::vec;
use alloc::vec::Vec;

use super::{Lambda, PencilPoint};
use crate::apolar::{ActionKind, FormSpace};
use crate::error::{Error, Result};
use crate::forms::graded_dim;
use crate::hilbert::{
    compressed_bound, hilbert_of_space, hplus_sum, is_o_sequence, HilbertSeq, OverlapProfile,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Row {
    pub u: usize,
    pub i: usize,
    pub h_a_u: usize,
    pub d_i: usize,
    pub t_i: usize,
    /// `H(A)_u - d_i`
    pub lower: i64,
    /// `H(A)_u - t_i`
    pub upper: i64,
    pub generic: usize,
    /// `(H_gen)_i - lower`
    pub lower_margin: i64,
    /// `upper - max (H_λ)_i` over computed `λ ∉ {0, ∞}`; `None` without such points.
    pub upper_margin: Option<i64>,
}

impl Theorem1Row {
    pub fn holds(&self) -> bool {
        self.lower_margin >= 0 && self.upper_margin.is_none_or(|m| m >= 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Verdict {
    pub holds: bool,
    pub rows: Vec<Theorem1Row>,
}

/// `H(A)_u - d_i <= (H_gen)_i` and, for every computed `λ ∉ {0, ∞}`,
/// `(H_λ)_i <= H(A)_u - t_i`, over `0 < u < j`, `i = j - u`.
pub fn verify_theorem1(
    h_a: &HilbertSeq,
    overlap: &OverlapProfile,
    h_gen: &HilbertSeq,
    points: &[PencilPoint],
) -> Theorem1Verdict {
    let j = h_a.len() - 1;
    let mut rows = Vec::new();
    for u in 1..j {
        let i = j - u;
        let lower = h_a.get(u) as i64 - overlap.d[i] as i64;
        let upper = h_a.get(u) as i64 - overlap.t[i] as i64;
        let worst = points
            .iter()
            .filter(|p| !p.lambda.is_endpoint())
            .map(|p| p.h.get(i))
            .max();
        rows.push(Theorem1Row {
            u,
            i,
            h_a_u: h_a.get(u),
            d_i: overlap.d[i],
            t_i: overlap.t[i],
            lower,
            upper,
            generic: h_gen.get(i),
            lower_margin: h_gen.get(i) as i64 - lower,
            upper_margin: worst.map(|w| upper - w as i64),
        });
    }
    Theorem1Verdict {
        holds: rows.iter().all(Theorem1Row::holds),
        rows,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Row {
    pub u: usize,
    pub i: usize,
    /// `3 δ'_u = 2 H(A)_u - 2 - H(A)_i`
    pub three_delta: i64,
    /// `H(A)_u - ⌈δ'_u⌉`, or `H(A)_u` when `δ'_u < 0`.
    pub bound: i64,
    pub generic: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Verdict {
    pub rows: Vec<Theorem2Row>,
    /// Best lower bound for each `(H_gen)_i`, using the symmetry of `H_gen`
    /// to carry a bound at `i` over to `j - i`.
    pub sequence: Vec<i64>,
    pub holds: bool,
}

/// Lower bounds for `H_gen` from `H(A)` alone, one for each `0 < u <= i = j - u`.
pub fn theorem2_bound(h_a: &HilbertSeq, h_gen: &HilbertSeq) -> Theorem2Verdict {
    let j = h_a.len() - 1;
    let mut rows = Vec::new();
    let mut sequence = vec![0i64; j + 1];
    sequence[0] = 1;
    sequence[j] = 1;
    for u in 1..=j / 2 {
        let i = j - u;
        let h_u = h_a.get(u) as i64;
        let three_delta = 2 * h_u - 2 - h_a.get(i) as i64;
        let bound = if three_delta < 0 {
            h_u
        } else {
            h_u - (three_delta + 2) / 3
        };
        sequence[i] = sequence[i].max(bound);
        sequence[u] = sequence[u].max(bound);
        rows.push(Theorem2Row {
            u,
            i,
            three_delta,
            bound,
            generic: h_gen.get(i),
        });
    }
    let holds = sequence
        .iter()
        .zip(h_gen.values())
        .all(|(b, g)| *b <= *g as i64);
    Theorem2Verdict {
        rows,
        sequence,
        holds,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryVerdict {
    /// Hypotheses hold and the generic member has `r` independent first partials.
    Holds { count: usize },
    /// Hypotheses hold but the generic count falls short.
    Fails { count: usize },
    /// `H(A)_{j-1} < 2r - 2` or `H(A)_1 < r`; nothing is asserted.
    HypothesesNotMet {
        partials: usize,
        variables: usize,
        count: usize,
    },
}

/// If `F, G` have at least `2r - 2` independent first partials between them and
/// involve all `r` variables, the generic member has `r` first partials.
pub fn verify_corollary_partials(h_a: &HilbertSeq, h_gen: &HilbertSeq) -> CorollaryVerdict {
    let j = h_a.len() - 1;
    let r = h_a.nvars();
    let count = if j == 0 { 0 } else { h_gen.get(j - 1) };
    let partials = if j == 0 { 0 } else { h_a.get(j - 1) };
    let variables = if j == 0 { 0 } else { h_a.get(1) };
    if j == 0 || partials + 2 < 2 * r || variables != r {
        return CorollaryVerdict::HypothesesNotMet {
            partials,
            variables,
            count,
        };
    }
    if count == r {
        CorollaryVerdict::Holds { count }
    } else {
        CorollaryVerdict::Fails { count }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhmsDecomposition {
    pub v_index: usize,
    pub h_b: HilbertSeq,
    pub h_c: HilbertSeq,
    /// `H(C)` read from degree `j` down, trailing zeros dropped.
    pub reversed: Vec<usize>,
    pub o_sequence_ok: bool,
}

/// Splits `H(A) = H(B_V) + H(C)` for `V` spanned by generator `v_index` of a
/// two-dimensional `W`, and tests the reversed `H(C)` for being an O-sequence.
pub fn ghms_decomposition(
    space: &FormSpace,
    v_index: usize,
    action: ActionKind,
) -> Result<GhmsDecomposition> {
    if space.dim() != 2 {
        return Err(Error::NotAPencil(space.dim()));
    }
    if v_index >= space.dim() {
        return Err(Error::GeneratorIndex {
            index: v_index,
            dim: space.dim(),
        });
    }
    let h_a = hilbert_of_space(space, action)?;
    let v = FormSpace::new(vec![space.generators()[v_index].clone()])?;
    let h_b = hilbert_of_space(&v, action)?;
    let diff = h_a.signed_sub(&h_b)?;
    if let Some((degree, &value)) = diff.iter().enumerate().find(|(_, v)| **v < 0) {
        return Err(Error::NegativeEntry { degree, value });
    }
    let values: Vec<usize> = diff.iter().map(|v| *v as usize).collect();
    let mut reversed: Vec<usize> = values.iter().rev().copied().collect();
    while reversed.last() == Some(&0) {
        reversed.pop();
    }
    let o_sequence_ok = is_o_sequence(&reversed).valid;
    Ok(GhmsDecomposition {
        v_index,
        h_b,
        h_c: HilbertSeq::new(values, space.nvars()),
        reversed,
        o_sequence_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhmsBound {
    /// `None` when the candidate does not look like a type-two level
    /// sequence with `H_{j-1} >= 2r - 2` and `H_1 = r`.
    pub bound: Option<HilbertSeq>,
    pub first_violation: Option<usize>,
}

impl GhmsBound {
    pub fn passes(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Necessary condition on a candidate type-two level sequence `H`.
///
/// Choosing `G` in the pencil with `r` first partials gives
/// `H(C)_{j-1} = c = H_{j-1} - r`; the reversed `H(C)` is an O-sequence
/// starting `(1, c)`, so `H(C)_i <= dim K[c vars]_{j-i}`, while `H_G` is at
/// most the compressed Gorenstein sequence. Hence
/// `H <= compressed_bound(r, j, 1) +_h (dim K[c vars]_{j-i})_i`.
pub fn ghms_type_two_bound(candidate: &HilbertSeq) -> GhmsBound {
    let none = GhmsBound {
        bound: None,
        first_violation: None,
    };
    let r = candidate.nvars();
    let Some(j) = candidate.socle_degree() else {
        return none;
    };
    if r < 2 || j < 2 || candidate.get(j) != 2 || candidate.get(1) != r {
        return none;
    }
    let top = candidate.get(j - 1);
    if top + 2 < 2 * r {
        return none;
    }
    let c = top - r;
    let tail = HilbertSeq::new((0..=j).map(|i| graded_dim(c, (j - i) as u32)).collect(), r);
    let bound =
        hplus_sum(&compressed_bound(r, j as u32, 1), &tail).expect("sequences of equal shape");
    let first_violation = (0..=j).find(|&i| candidate.get(i) > bound.get(i));
    GhmsBound {
        bound: Some(bound),
        first_violation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BelowHalfVerdict {
    pub holds: bool,
    /// A degree and the fibers found below `H(A)_i / 2` there, when there are two or more.
    pub witness: Option<(usize, Vec<Lambda>)>,
}

/// No two distinct fibers can both have `(H_λ)_i < H(A)_i / 2`.
pub fn below_half_check(h_a: &HilbertSeq, points: &[PencilPoint]) -> BelowHalfVerdict {
    for i in 0..h_a.len() {
        let low: Vec<Lambda> = points
            .iter()
            .filter(|p| 2 * p.h.get(i) < h_a.get(i))
            .map(|p| p.lambda.clone())
            .collect();
        if low.len() >= 2 {
            return BelowHalfVerdict {
                holds: false,
                witness: Some((i, low)),
            };
        }
    }
    BelowHalfVerdict {
        holds: true,
        witness: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompressionFlags {
    /// `H(A)` is the compressed type-two sequence.
    pub compressed: bool,
    /// `H_gen` is the compressed Gorenstein sequence.
    pub compressed_gorenstein: bool,
}

pub fn compression_flags(h_a: &HilbertSeq, h_gen: &HilbertSeq) -> CompressionFlags {
    let r = h_a.nvars();
    let j = (h_a.len() - 1) as u32;
    CompressionFlags {
        compressed: *h_a == compressed_bound(r, j, 2),
        compressed_gorenstein: *h_gen == compressed_bound(r, j, 1),
    }
}
