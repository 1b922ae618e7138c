//! Subcommand bodies. Each returns the text to print and an exit code; only
//! the exit code carries pass or fail.

use apolar_core::apolar::FormSpace;
use apolar_core::forms::parse_form;
use apolar_core::hilbert::{
    check_level_condition, hilbert_of_form, hilbert_of_space, is_o_sequence, socle_type,
};
use apolar_core::pencil::sweep;
use apolar_core::Error;

use crate::config::{CliError, OutputFormat, RunConfig};
use crate::paperbook::{self, Status};
use crate::report::{spaced, HfJson, LevelJson, OSequenceJson, PencilJson};

#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn verdict(stdout: String, pass: bool) -> Self {
        Outcome {
            stdout,
            code: if pass { 0 } else { 1 },
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn hf(text: &str, r: usize, config: &RunConfig) -> Result<Outcome, CliError> {
    let form = parse_form(text, r, config.field)?;
    let action = config.action_for(form.degree())?;
    let h = hilbert_of_form(&form, action)?;
    Ok(Outcome::ok(match config.output {
        OutputFormat::Table => format!("{}\n", spaced(h.values())),
        OutputFormat::Json => json(&HfJson {
            h: h.values().to_vec(),
        }),
    }))
}

pub fn level(texts: &[String], r: usize, config: &RunConfig) -> Result<Outcome, CliError> {
    let forms = texts
        .iter()
        .map(|t| parse_form(t, r, config.field))
        .collect::<Result<Vec<_>, Error>>()?;
    let space = FormSpace::new(forms)?;
    let action = config.action_for(space.degree())?;
    let report = LevelJson {
        h_a: hilbert_of_space(&space, action)?.values().to_vec(),
        socle_type: socle_type(&space, action)?,
        level: check_level_condition(&space, action)?,
    };
    let stdout = match config.output {
        OutputFormat::Table => format!(
            "{:<12}{}\n{:<12}{}\n{:<12}{}\n",
            "H_A",
            spaced(&report.h_a),
            "socle_type",
            spaced(&report.socle_type),
            "level",
            report.level
        ),
        OutputFormat::Json => json(&report),
    };
    Ok(Outcome::verdict(stdout, report.level))
}

pub fn pencil(f: &str, g: &str, r: usize, config: &RunConfig) -> Result<Outcome, CliError> {
    let f = parse_form(f, r, config.field)?;
    let g = parse_form(g, r, config.field)?;
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch(f.degree(), g.degree()).into());
    }
    let action = config.action_for(f.degree())?;
    let sweep_config = config.sweep_config()?;
    let report = sweep(&f, &g, &sweep_config, action)?;
    let view = PencilJson::from_report(&report, config.field, action);
    let stdout = match config.output {
        OutputFormat::Table => view.table(),
        OutputFormat::Json => json(&view),
    };
    Ok(Outcome::verdict(stdout, view.verdicts.all_pass))
}

/// `1,3,6,8` or `1 3 6 8`.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>().map_err(|_| {
                CliError::Parse(Error::Syntax {
                    position: 0,
                    message: format!("'{s}' is not a non-negative integer"),
                })
            })
        })
        .collect()
}

pub fn osequence(text: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    let h = parse_sequence(text)?;
    let check = is_o_sequence(&h);
    let stdout = match config.output {
        OutputFormat::Table => match check.first_violation {
            None => "true\n".to_string(),
            Some(i) => format!("false at index {i}\n"),
        },
        OutputFormat::Json => json(&OSequenceJson {
            valid: check.valid,
            first_violation: check.first_violation,
        }),
    };
    Ok(Outcome::verdict(stdout, check.valid))
}

pub fn paperbook(config: &RunConfig) -> Result<Outcome, CliError> {
    let results = paperbook::run(config)?;
    let failed = results.iter().find(|r| matches!(r.status, Status::Fail(_)));
    let mut stdout = paperbook::render(&results);
    if let Some(first) = failed {
        stdout.push_str(&format!("first failing case: {}\n", first.name));
    }
    Ok(Outcome::verdict(stdout, failed.is_none()))
}
