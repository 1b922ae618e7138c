//! Golden regression cases: worked examples of type-two level algebras and
//! their pencils, each with its expected Hilbert functions as literals.

use std::fmt::Write as _;

use apolar_core::apolar::{annihilator_component, apply, ActionKind, FormSpace};
use apolar_core::forms::{parse_form, parse_operator, Monomial};
use apolar_core::hilbert::{
    compressed_bound, hilbert_of_form, hplus_sum, is_o_sequence, HilbertSeq,
};
use apolar_core::pencil::{ghms_type_two_bound, sweep, Lambda, PencilReport};
use apolar_core::{Error, FieldSpec, Form, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{CliError, RunConfig};

/// Seeded random forms of the shapes the cases call "general enough".
pub mod constructions {
    use super::*;

    /// Redraws allowed before a construction gives up.
    pub const MAX_ATTEMPTS: usize = 32;

    pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng
    }

    /// A small integer over `Q`, a uniform residue over `GF(p)`.
    pub fn random_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::from_i64(field, rng.gen_range(-9..=9)),
            FieldSpec::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
        }
    }

    pub fn random_linear_form(rng: &mut impl Rng, r: usize, field: FieldSpec) -> Form {
        loop {
            let coeffs: Vec<Scalar> = (0..r).map(|_| random_scalar(rng, field)).collect();
            let l = Form::linear(&coeffs).expect("nonempty coefficient list");
            if !l.is_zero() {
                return l;
            }
        }
    }

    /// `Σ c_k U^k V^(d-k)` with random `c_k`, for linear forms `U, V`.
    pub fn random_binary_form(
        rng: &mut impl Rng,
        u: &Form,
        v: &Form,
        degree: u32,
        field: FieldSpec,
    ) -> Result<Form, Error> {
        let mut acc = Form::zero(u.nvars(), degree, field);
        for k in 0..=degree {
            let term = u.pow(k).mul(&v.pow(degree - k))?;
            acc = acc.add(&term.scale(&random_scalar(rng, field)))?;
        }
        Ok(acc)
    }

    fn var(r: usize, i: usize, field: FieldSpec) -> Form {
        Form::monomial(Monomial::var(r, i), Scalar::one(field))
    }

    fn draw<T>(
        mut attempt: impl FnMut() -> Result<Option<T>, Error>,
        what: &str,
    ) -> Result<T, Error> {
        for _ in 0..MAX_ATTEMPTS {
            if let Some(x) = attempt()? {
                return Ok(x);
            }
        }
        Err(Error::Inconsistent(format!(
            "no {what} found in {MAX_ATTEMPTS} random draws"
        )))
    }

    fn has_hilbert(f: &Form, action: ActionKind, expected: &[usize]) -> Result<bool, Error> {
        Ok(!f.is_zero() && hilbert_of_form(f, action)?.values() == expected)
    }

    /// `F = L_1^8 + ... + L_5^8` in three variables with
    /// `H_F = (1,3,5,5,5,5,5,3,1)`, and `G = X^8 + Y^4 Z^4`.
    pub fn no_minimum_pencil(
        field: FieldSpec,
        seed: u64,
        action: ActionKind,
    ) -> Result<(Form, Form), Error> {
        let mut rng = rng(seed, 24);
        let f = draw(
            || {
                let mut f = Form::zero(3, 8, field);
                for _ in 0..5 {
                    f = f.add(&random_linear_form(&mut rng, 3, field).pow(8))?;
                }
                Ok(has_hilbert(&f, action, &[1, 3, 5, 5, 5, 5, 5, 3, 1])?.then_some(f))
            },
            "sum of five eighth powers",
        )?;
        Ok((f, parse_form("X^8 + Y^4*Z^4", 3, field)?))
    }

    /// `F = A(X,Z) + B(Y,Z)` general with `H_F = (1,3,5,7,5,3,1)`, and
    /// `G = L^6` for a random linear form `L`.
    pub fn distinguishing_pencil_one(
        field: FieldSpec,
        seed: u64,
        action: ActionKind,
    ) -> Result<(Form, Form), Error> {
        let mut rng = rng(seed, 281);
        let (x, y, z) = (var(3, 0, field), var(3, 1, field), var(3, 2, field));
        let f = draw(
            || {
                let f = random_binary_form(&mut rng, &x, &z, 6, field)?
                    .add(&random_binary_form(&mut rng, &y, &z, 6, field)?)?;
                Ok(has_hilbert(&f, action, &[1, 3, 5, 7, 5, 3, 1])?.then_some(f))
            },
            "form annihilated by xy",
        )?;
        let g = random_linear_form(&mut rng, 3, field).pow(6);
        Ok((f, g))
    }

    /// `F'` general in `K[X,Y]_6` and `G'` general in `K[X+Y, Z]_6`, both with
    /// Hilbert function `(1,2,3,4,3,2,1)`.
    pub fn distinguishing_pencil_two(
        field: FieldSpec,
        seed: u64,
        action: ActionKind,
    ) -> Result<(Form, Form), Error> {
        let mut rng = rng(seed, 282);
        let (x, y, z) = (var(3, 0, field), var(3, 1, field), var(3, 2, field));
        let binary = [1, 2, 3, 4, 3, 2, 1];
        let f = draw(
            || {
                let f = random_binary_form(&mut rng, &x, &y, 6, field)?;
                Ok(has_hilbert(&f, action, &binary)?.then_some(f))
            },
            "binary sextic in X, Y",
        )?;
        let sum = x.add(&y)?;
        let g = draw(
            || {
                let g = random_binary_form(&mut rng, &sum, &z, 6, field)?;
                Ok(has_hilbert(&g, action, &binary)?.then_some(g))
            },
            "binary sextic in X+Y, Z",
        )?;
        Ok((f, g))
    }

    /// The compressed type-two pencil whose generic member is not compressed,
    /// with parameters `a, b`.
    pub fn compressed_pencil(field: FieldSpec, a: i64, b: i64) -> Result<(Form, Form), Error> {
        let f = format!("X^3*Y + X^2*Z^2 + {a}*X*Z^3 + {b}*Y*Z^3");
        let g = format!("X^3*Z + X^2*Y^2 + X^2*Y*Z + {}*X*Y^2*Z + {b}*Y^3*Z", 3 * a);
        Ok((parse_form(&f, 3, field)?, parse_form(&g, 3, field)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: &'static str,
    pub status: Status,
}

/// Named boolean checks accumulated by a case.
#[derive(Default)]
struct Checks(Vec<(String, bool)>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, found: T, expected: T) {
        let ok = found == expected;
        let label = if ok {
            what.to_string()
        } else {
            format!("{what}: found {found:?}, expected {expected:?}")
        };
        self.0.push((label, ok));
    }

    fn ok(&mut self, what: &str, ok: bool) {
        self.0.push((what.to_string(), ok));
    }

    fn status(self) -> Status {
        let failed: Vec<String> = self.0.into_iter().filter(|c| !c.1).map(|c| c.0).collect();
        if failed.is_empty() {
            Status::Pass
        } else {
            Status::Fail(failed.join("; "))
        }
    }
}

struct Case {
    name: &'static str,
    degree: u32,
    /// Expected values are stated for the differentiation action.
    needs_differentiation: bool,
    run: fn(&RunConfig, ActionKind) -> Result<Status, CliError>,
}

fn seq(h: &HilbertSeq) -> Vec<usize> {
    h.values().to_vec()
}

fn run_sweep(
    f: &Form,
    g: &Form,
    config: &RunConfig,
    action: ActionKind,
) -> Result<PencilReport, CliError> {
    Ok(sweep(f, g, &config.sweep_config()?, action)?)
}

fn binary_type_two(config: &RunConfig, action: ActionKind) -> Result<Status, CliError> {
    let f = parse_form("X^4", 2, config.field)?;
    let g = parse_form("X*Y^3", 2, config.field)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.eq("H_F", seq(&report.h_f), vec![1, 1, 1, 1, 1]);
    c.eq("H_G", seq(&report.h_g), vec![1, 2, 2, 2, 1]);
    c.eq("H_A", seq(&report.h_a), vec![1, 2, 3, 3, 2]);
    c.eq("H_gen", seq(&report.h_gen), vec![1, 2, 3, 2, 1]);
    c.eq(
        "special fibers",
        report.special_lambdas(),
        vec![Lambda::Finite(Scalar::zero(config.field)), Lambda::Infinity],
    );
    let space = FormSpace::new(vec![f, g])?;
    let ann = annihilator_component(&space, 3, action)?;
    let x2y = parse_operator("x^2*y", 2, config.field)?;
    c.ok(
        "(Ann W)_3 spanned by x^2 y",
        ann.len() == 1
            && ann[0].num_terms() == 1
            && ann[0].coefficient(&Monomial::new(vec![2, 1])) != Scalar::zero(config.field),
    );
    c.ok(
        "x^2 y annihilates W",
        space
            .generators()
            .iter()
            .all(|w| apply(&x2y, w, action).map(|v| v.is_zero()).unwrap_or(false)),
    );
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

fn partials_generic(config: &RunConfig, action: ActionKind) -> Result<Status, CliError> {
    let f = parse_form("X^4 + Y^4", 3, config.field)?;
    let g = parse_form("(X + Y)^4 + Z^4", 3, config.field)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.eq("H(A)_3", report.h_a.get(3), 4);
    c.eq("generic first partials", report.h_gen.get(3), 3);
    let deficient: Vec<Lambda> = report
        .points
        .iter()
        .filter(|p| p.lambda != Lambda::Infinity && p.first_partials() < 3)
        .map(|p| p.lambda.clone())
        .collect();
    c.eq(
        "deficient finite fibers",
        deficient,
        vec![Lambda::Finite(Scalar::zero(config.field))],
    );
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

fn partials_shared_cube(config: &RunConfig, action: ActionKind) -> Result<Status, CliError> {
    let f = parse_form("X*Z^3", 3, config.field)?;
    let g = parse_form("Y*Z^3", 3, config.field)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.ok(
        "every fiber has 2 first partials",
        report.points.iter().all(|p| p.first_partials() == 2),
    );
    c.eq("t_3", report.overlap.t[3], 1);
    c.eq("H(A)_3", report.h_a.get(3), 3);
    let row = report.verdicts.theorem1.rows.iter().find(|r| r.i == 3);
    c.eq("upper bound at i = 3", row.map(|r| r.upper), Some(2));
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

fn no_minimum_fiber(config: &RunConfig, action: ActionKind) -> Result<Status, CliError> {
    let (f, g) = constructions::no_minimum_pencil(config.field, config.seed, action)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.eq("H_F", seq(&report.h_f), vec![1, 3, 5, 5, 5, 5, 5, 3, 1]);
    c.eq("H_G", seq(&report.h_g), vec![1, 3, 4, 5, 6, 5, 4, 3, 1]);
    c.eq("H_A", seq(&report.h_a), vec![1, 3, 6, 10, 11, 10, 9, 6, 2]);
    c.eq(
        "H_A = H_F +_h H_G",
        Some(report.h_a.clone()),
        hplus_sum(&report.h_f, &report.h_g).ok(),
    );
    c.eq(
        "H_gen",
        seq(&report.h_gen),
        vec![1, 3, 6, 10, 11, 10, 6, 3, 1],
    );
    c.ok(
        "H_F and H_G incomparable",
        !report.h_f.le(&report.h_g)? && !report.h_g.le(&report.h_f)?,
    );
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

fn type_two_rejections(_: &RunConfig, _: ActionKind) -> Result<Status, CliError> {
    let mut c = Checks::default();
    for (h, violation) in [
        (vec![1, 3, 6, 8, 4, 2], 3),
        (vec![1, 3, 6, 10, 12, 7, 4, 2], 4),
    ] {
        c.ok(
            &format!("{h:?} passes the growth bound"),
            is_o_sequence(&h).valid,
        );
        let bound = ghms_type_two_bound(&HilbertSeq::new(h.clone(), 3));
        c.eq(
            &format!("{h:?} rejected"),
            bound.first_violation,
            Some(violation),
        );
    }
    let bound = ghms_type_two_bound(&HilbertSeq::new(vec![1, 3, 6, 8, 4, 2], 3));
    let expected = hplus_sum(&compressed_bound(3, 5, 1), &HilbertSeq::new(vec![1; 6], 3))?;
    c.eq("bound", bound.bound, Some(expected));
    Ok(c.status())
}

fn distinguishing_one(config: &RunConfig, action: ActionKind) -> Result<Status, CliError> {
    let (f, g) = constructions::distinguishing_pencil_one(config.field, config.seed, action)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.eq("H_A", seq(&report.h_a), vec![1, 3, 6, 8, 6, 4, 2]);
    c.eq("H_gen", seq(&report.h_gen), vec![1, 3, 6, 8, 6, 3, 1]);
    c.ok(
        "fiber at infinity has H = (1,...,1)",
        report
            .point(&Lambda::Infinity)
            .is_some_and(|p| p.h.values() == [1; 7]),
    );
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

/// Binary sextics in `X, Y` and in `X+Y, Z`. Their planes of linear forms meet
/// in the line of `X+Y`, so `(X+Y)^i` lies in both `R_u∘F` and `R_u∘G` while
/// these fill `K[plane]_i` (`i <= 3`). That forces `d_2 = d_3 = 1` and keeps
/// `H_A` at `(1,3,5,7,6,4,2)` rather than `(1,3,6,8,6,4,2)`.
fn distinguishing_two(config: &RunConfig, action: ActionKind) -> Result<Status, CliError> {
    let (f, g) = constructions::distinguishing_pencil_two(config.field, config.seed, action)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.eq("d", report.overlap.d.clone(), vec![1, 1, 1, 1, 0, 0, 0]);
    c.eq("H_A", seq(&report.h_a), vec![1, 3, 5, 7, 6, 4, 2]);
    c.eq("H_gen", seq(&report.h_gen), vec![1, 3, 5, 7, 5, 3, 1]);
    c.ok(
        "no fiber has H = (1,...,1)",
        !report.points.iter().any(|p| p.h.values() == [1; 7]),
    );
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

fn compressed_not_gorenstein_compressed(
    config: &RunConfig,
    action: ActionKind,
) -> Result<Status, CliError> {
    let field = config.field;
    let (f, g) = constructions::compressed_pencil(field, 1, 1)?;
    let report = run_sweep(&f, &g, config, action)?;
    let mut c = Checks::default();
    c.eq("H_A", seq(&report.h_a), vec![1, 3, 6, 6, 2]);
    c.eq(
        "H_A compressed",
        report.h_a.clone(),
        compressed_bound(3, 4, 2),
    );
    c.eq("H_gen", seq(&report.h_gen), vec![1, 3, 5, 3, 1]);
    c.ok(
        "H_gen not compressed",
        report.h_gen != compressed_bound(3, 4, 1),
    );
    let lambdas: Vec<Scalar> = report
        .points
        .iter()
        .filter_map(|p| match &p.lambda {
            Lambda::Finite(s) if !s.is_zero() => Some(s.clone()),
            _ => None,
        })
        .take(3)
        .collect();
    c.eq("sampled lambdas", lambdas.len(), 3);
    let y2 = parse_operator("y^2", 3, field)?;
    let z2 = parse_operator("z^2", 3, field)?;
    for s in &lambdas {
        let h = y2.sub(&z2.scale(s))?;
        let member = f.add(&g.scale(s))?;
        c.ok(
            &format!("(y^2 - {s} z^2) kills F + {s} G"),
            apply(&h, &member, action)?.is_zero(),
        );
    }
    let row = report
        .verdicts
        .theorem2
        .rows
        .iter()
        .find(|r| r.u == 2 && r.i == 2);
    c.eq(
        "theorem 2 bound at u = i = 2",
        row.map(|r| r.bound),
        Some(4),
    );
    c.ok(
        "bound <= (H_gen)_2",
        row.is_some_and(|r| r.bound <= report.h_gen.get(2) as i64),
    );
    c.ok("all verdicts", report.verdicts.all_pass());
    Ok(c.status())
}

const CASES: [Case; 8] = [
    Case {
        name: "binary-type-two",
        degree: 4,
        needs_differentiation: false,
        run: binary_type_two,
    },
    Case {
        name: "first-partials-generic",
        degree: 4,
        needs_differentiation: true,
        run: partials_generic,
    },
    Case {
        name: "first-partials-shared-cube",
        degree: 4,
        needs_differentiation: false,
        run: partials_shared_cube,
    },
    Case {
        name: "no-minimum-fiber",
        degree: 8,
        needs_differentiation: true,
        run: no_minimum_fiber,
    },
    Case {
        name: "type-two-rejections",
        degree: 0,
        needs_differentiation: false,
        run: type_two_rejections,
    },
    Case {
        name: "distinguishing-pencil-one",
        degree: 6,
        needs_differentiation: true,
        run: distinguishing_one,
    },
    Case {
        name: "distinguishing-pencil-two",
        degree: 6,
        needs_differentiation: true,
        run: distinguishing_two,
    },
    Case {
        name: "compressed-pencil-generic-not-compressed",
        degree: 4,
        needs_differentiation: true,
        run: compressed_not_gorenstein_compressed,
    },
];

/// Runs every case. Over `GF(p)` the cases draw samples and random forms, so
/// `p > 2 * samples` is required up front.
pub fn run(config: &RunConfig) -> Result<Vec<CaseResult>, CliError> {
    if let FieldSpec::Prime(p) = config.field {
        config.check_sample_room(p)?;
    }
    let mut out = Vec::new();
    for case in &CASES {
        let action = config.action_for(case.degree)?;
        let status = if case.needs_differentiation && action == ActionKind::Contraction {
            Status::Skipped(format!(
                "expected values assume differentiation; contraction in use over {}",
                config.field
            ))
        } else {
            match (case.run)(config, action) {
                Ok(s) => s,
                Err(e) => Status::Fail(e.to_string()),
            }
        };
        out.push(CaseResult {
            name: case.name,
            status,
        });
    }
    Ok(out)
}

pub fn render(results: &[CaseResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = match &r.status {
            Status::Pass => writeln!(out, "{:<42}pass", r.name),
            Status::Fail(why) => writeln!(out, "{:<42}FAIL  {why}", r.name),
            Status::Skipped(why) => writeln!(out, "{:<42}skip  {why}", r.name),
        };
    }
    out
}
