//! Run configuration shared by every subcommand.

use apolar_core::apolar::ActionKind;
use apolar_core::pencil::SweepConfig;
use apolar_core::{Error, FieldSpec};

/// Largest prime for which sweeps visit all of `P¹` unless told otherwise.
pub const EXHAUSTIVE_DEFAULT_LIMIT: u64 = 257;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(Error),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Dependent(Error),
    #[error("{0}")]
    Internal(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Config(_) => 3,
            CliError::Dependent(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::Inhomogeneous(_)
            | Error::VariableOutOfRange { .. }
            | Error::ZeroForm
            | Error::DegreeMismatch(..)
            | Error::RingMismatch(..)
            | Error::EmptySpace => CliError::Parse(e),
            Error::NotPrime(_)
            | Error::ActionCharacteristic { .. }
            | Error::InsufficientFieldSize { .. }
            | Error::ExhaustiveOverInfiniteField => CliError::Config(e.to_string()),
            Error::DependentForms => CliError::Dependent(e),
            _ => CliError::Internal(e),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionChoice {
    /// Differentiation when the characteristic is 0 or exceeds the degree,
    /// contraction otherwise.
    Auto,
    Differentiation,
    Contraction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub action: ActionChoice,
    pub samples: usize,
    pub seed: u64,
    /// `None` means exhaustive exactly for `GF(p)` with `p <= 257`.
    pub exhaustive: Option<bool>,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldSpec::Rationals,
            action: ActionChoice::Auto,
            samples: 8,
            seed: 0,
            exhaustive: None,
            output: OutputFormat::Table,
        }
    }
}

/// `q` or `gf:P`.
pub fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    let t = text.trim().to_ascii_lowercase();
    if t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::Config(format!("unknown field '{text}', expected q or gf:P")))?;
    FieldSpec::prime(p).map_err(CliError::from)
}

pub fn parse_action(text: &str) -> Result<ActionChoice, CliError> {
    match text.trim().to_ascii_lowercase().as_str() {
        "auto" => Ok(ActionChoice::Auto),
        "diff" | "differentiation" => Ok(ActionChoice::Differentiation),
        "contract" | "contraction" => Ok(ActionChoice::Contraction),
        _ => Err(CliError::Config(format!(
            "unknown action '{text}', expected diff, contract or auto"
        ))),
    }
}

impl RunConfig {
    /// The action used for forms of the given degree.
    pub fn action_for(&self, degree: u32) -> Result<ActionKind, CliError> {
        let p = self.field.characteristic();
        let safe = p == 0 || p > u64::from(degree);
        match self.action {
            ActionChoice::Contraction => Ok(ActionKind::Contraction),
            ActionChoice::Auto if safe => Ok(ActionKind::Differentiation),
            ActionChoice::Auto => Ok(ActionKind::Contraction),
            ActionChoice::Differentiation if safe => Ok(ActionKind::Differentiation),
            ActionChoice::Differentiation => Err(CliError::Config(format!(
                "differentiation needs characteristic above the degree {degree}, field is {}",
                self.field
            ))),
        }
    }

    pub fn exhaustive(&self) -> bool {
        self.exhaustive.unwrap_or(match self.field {
            FieldSpec::Prime(p) => p <= EXHAUSTIVE_DEFAULT_LIMIT,
            FieldSpec::Rationals => false,
        })
    }

    /// Sweep settings, checked against the field.
    pub fn sweep_config(&self) -> Result<SweepConfig, CliError> {
        let exhaustive = self.exhaustive();
        match self.field {
            FieldSpec::Rationals if exhaustive => {
                return Err(CliError::Config(
                    "exhaustive sweeps need a finite field".to_string(),
                ))
            }
            FieldSpec::Prime(p) if !exhaustive => self.check_sample_room(p)?,
            _ => {}
        }
        Ok(SweepConfig {
            samples: self.samples,
            seed: self.seed,
            exhaustive,
        })
    }

    /// `p > 2 * samples`, leaving room for distinct samples plus `0` and `∞`.
    pub fn check_sample_room(&self, p: u64) -> Result<(), CliError> {
        if p <= 2 * self.samples as u64 {
            return Err(CliError::Config(format!(
                "GF({p}) is too small for {} samples; need p > {}",
                self.samples,
                2 * self.samples
            )));
        }
        Ok(())
    }
}
