//! Serializable views of library results, and their table rendering.

use std::fmt::Write as _;

use apolar_core::apolar::ActionKind;
use apolar_core::pencil::{CorollaryVerdict, PencilReport};
use apolar_core::FieldSpec;
use serde::{Deserialize, Serialize};

/// A pencil analysis as written to JSON. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilJson {
    #[serde(rename = "H_F")]
    pub h_f: Vec<usize>,
    #[serde(rename = "H_G")]
    pub h_g: Vec<usize>,
    #[serde(rename = "H_A")]
    pub h_a: Vec<usize>,
    pub d: Vec<usize>,
    pub t: Vec<usize>,
    #[serde(rename = "H_gen")]
    pub h_gen: Vec<usize>,
    pub special_lambdas: Vec<String>,
    pub verdicts: VerdictsJson,
    pub sampling: SamplingJson,
    pub fibers: Vec<FiberJson>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictsJson {
    pub all_pass: bool,
    pub theorem1: Theorem1Json,
    pub theorem2: Theorem2Json,
    pub corollary: CorollaryJson,
    pub ghms: Vec<GhmsJson>,
    pub below_half: BelowHalfJson,
    pub symmetric_fibers: bool,
    pub compressed: bool,
    pub compressed_gorenstein: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Json {
    pub holds: bool,
    pub rows: Vec<Theorem1RowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1RowJson {
    pub u: usize,
    pub i: usize,
    pub lower: i64,
    pub upper: i64,
    pub generic: usize,
    pub lower_margin: i64,
    pub upper_margin: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Json {
    pub holds: bool,
    pub bounds: Vec<i64>,
    pub rows: Vec<Theorem2RowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2RowJson {
    pub u: usize,
    pub i: usize,
    pub three_delta: i64,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryJson {
    pub status: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhmsJson {
    pub v_index: usize,
    #[serde(rename = "H_B")]
    pub h_b: Vec<usize>,
    #[serde(rename = "H_C")]
    pub h_c: Vec<usize>,
    pub o_sequence_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BelowHalfJson {
    pub holds: bool,
    pub degree: Option<usize>,
    pub lambdas: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingJson {
    pub seed: u64,
    pub samples: usize,
    pub exhaustive: bool,
    pub points: usize,
    pub certified: bool,
    pub sampled_only: bool,
    pub field: String,
    pub action: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberJson {
    pub lambda: String,
    #[serde(rename = "H")]
    pub h: Vec<usize>,
}

pub fn action_name(action: ActionKind) -> &'static str {
    match action {
        ActionKind::Differentiation => "differentiation",
        ActionKind::Contraction => "contraction",
    }
}

impl PencilJson {
    pub fn from_report(report: &PencilReport, field: FieldSpec, action: ActionKind) -> Self {
        let v = &report.verdicts;
        let corollary = match v.corollary {
            CorollaryVerdict::Holds { count } => CorollaryJson {
                status: "holds".into(),
                count,
            },
            CorollaryVerdict::Fails { count } => CorollaryJson {
                status: "fails".into(),
                count,
            },
            CorollaryVerdict::HypothesesNotMet { count, .. } => CorollaryJson {
                status: "hypotheses_not_met".into(),
                count,
            },
        };
        PencilJson {
            h_f: report.h_f.values().to_vec(),
            h_g: report.h_g.values().to_vec(),
            h_a: report.h_a.values().to_vec(),
            d: report.overlap.d.clone(),
            t: report.overlap.t.clone(),
            h_gen: report.h_gen.values().to_vec(),
            special_lambdas: report
                .special_lambdas()
                .iter()
                .map(|l| l.to_string())
                .collect(),
            verdicts: VerdictsJson {
                all_pass: v.all_pass(),
                theorem1: Theorem1Json {
                    holds: v.theorem1.holds,
                    rows: v
                        .theorem1
                        .rows
                        .iter()
                        .map(|r| Theorem1RowJson {
                            u: r.u,
                            i: r.i,
                            lower: r.lower,
                            upper: r.upper,
                            generic: r.generic,
                            lower_margin: r.lower_margin,
                            upper_margin: r.upper_margin,
                        })
                        .collect(),
                },
                theorem2: Theorem2Json {
                    holds: v.theorem2.holds,
                    bounds: v.theorem2.sequence.clone(),
                    rows: v
                        .theorem2
                        .rows
                        .iter()
                        .map(|r| Theorem2RowJson {
                            u: r.u,
                            i: r.i,
                            three_delta: r.three_delta,
                            bound: r.bound,
                        })
                        .collect(),
                },
                corollary,
                ghms: v
                    .ghms
                    .iter()
                    .map(|g| GhmsJson {
                        v_index: g.v_index,
                        h_b: g.h_b.values().to_vec(),
                        h_c: g.h_c.values().to_vec(),
                        o_sequence_ok: g.o_sequence_ok,
                    })
                    .collect(),
                below_half: BelowHalfJson {
                    holds: v.below_half.holds,
                    degree: v.below_half.witness.as_ref().map(|w| w.0),
                    lambdas: v
                        .below_half
                        .witness
                        .as_ref()
                        .map(|w| w.1.iter().map(|l| l.to_string()).collect())
                        .unwrap_or_default(),
                },
                symmetric_fibers: v.symmetric_fibers,
                compressed: v.compression.compressed,
                compressed_gorenstein: v.compression.compressed_gorenstein,
            },
            sampling: SamplingJson {
                seed: report.sampling.seed,
                samples: report.sampling.samples,
                exhaustive: report.sampling.exhaustive,
                points: report.sampling.points,
                certified: report.sampling.certified,
                sampled_only: report.sampling.sampled_only,
                field: field.to_string(),
                action: action_name(action).into(),
            },
            fibers: report
                .points
                .iter()
                .map(|p| FiberJson {
                    lambda: p.lambda.to_string(),
                    h: p.h.values().to_vec(),
                })
                .collect(),
            warnings: report.warnings.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn table(&self) -> String {
        let v = &self.verdicts;
        let mut out = String::new();
        let mut row = |label: &str, value: String| {
            let _ = writeln!(out, "{label:<22}{value}");
        };
        row("H_F", spaced(&self.h_f));
        row("H_G", spaced(&self.h_g));
        row("H_A", spaced(&self.h_a));
        row("d", spaced(&self.d));
        row("t", spaced(&self.t));
        row("H_gen", spaced(&self.h_gen));
        for lambda in &self.special_lambdas {
            let h = self
                .fibers
                .iter()
                .find(|f| &f.lambda == lambda)
                .map(|f| spaced(&f.h))
                .unwrap_or_default();
            row("special", format!("{lambda}: {h}"));
        }
        row("theorem1", pass(v.theorem1.holds));
        row(
            "theorem2",
            format!(
                "{} (bounds {})",
                pass(v.theorem2.holds),
                spaced(&v.theorem2.bounds)
            ),
        );
        row(
            "corollary",
            format!(
                "{} (generic first partials {})",
                v.corollary.status.replace('_', " "),
                v.corollary.count
            ),
        );
        row("ghms", pass(v.ghms.iter().all(|g| g.o_sequence_ok)));
        row("below_half", pass(v.below_half.holds));
        row("symmetric_fibers", pass(v.symmetric_fibers));
        row("compressed", v.compressed.to_string());
        row("compressed_gorenstein", v.compressed_gorenstein.to_string());
        let s = &self.sampling;
        row(
            "sampling",
            format!(
                "field={} action={} seed={} samples={} exhaustive={} points={} certified={}{}",
                s.field,
                s.action,
                s.seed,
                s.samples,
                s.exhaustive,
                s.points,
                s.certified,
                if s.sampled_only { " sampled-only" } else { "" }
            ),
        );
        for w in &self.warnings {
            row("warning", w.clone());
        }
        row("verdict", pass(v.all_pass));
        out
    }
}

fn pass(ok: bool) -> String {
    if ok { "pass" } else { "FAIL" }.to_string()
}

/// `1 3 6 6 2`
pub fn spaced<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfJson {
    #[serde(rename = "H")]
    pub h: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelJson {
    #[serde(rename = "H_A")]
    pub h_a: Vec<usize>,
    pub socle_type: Vec<usize>,
    pub level: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OSequenceJson {
    pub valid: bool,
    pub first_violation: Option<usize>,
}
