use alloc::string::String;
use alloc::vec::Vec;

use crate::scalars::FieldSpec;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("vectors of length {expected} and {found} cannot be compared")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operands live over different fields ({0} vs {1})")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("operands live in different rings ({0} vs {1} variables)")]
    RingMismatch(usize, usize),

    #[error("parse error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("expression is not homogeneous: it has terms of degrees {0:?}")]
    Inhomogeneous(Vec<u32>),

    #[error("variable index {index} is out of range for {vars} variables")]
    VariableOutOfRange { index: usize, vars: usize },

    #[error("the zero polynomial has no defined degree")]
    ZeroForm,

    #[error("differentiation is not faithful in characteristic {characteristic} for degree {degree}; use contraction")]
    ActionCharacteristic { characteristic: u64, degree: u32 },

    #[error("forms must share one degree (found {0} and {1})")]
    DegreeMismatch(u32, u32),

    #[error("the generating forms are linearly dependent")]
    DependentForms,

    #[error("a form space needs at least one generator")]
    EmptySpace,

    #[error("order {order} exceeds the degree {degree}")]
    OrderOutOfRange { order: u32, degree: u32 },

    #[error("sequences have different shapes")]
    ShapeMismatch,

    #[error(
        "the field has {available} points on the projective line but {requested} were requested"
    )]
    InsufficientFieldSize { requested: u64, available: u64 },

    #[error("exhaustive sweeps need a finite field")]
    ExhaustiveOverInfiniteField,

    #[error("a pencil decomposition needs a two-dimensional space, got dimension {0}")]
    NotAPencil(usize),

    #[error("generator index {index} is out of range for a space of dimension {dim}")]
    GeneratorIndex { index: usize, dim: usize },

    #[error("negative entry {value} at degree {degree} in the cokernel Hilbert function")]
    NegativeEntry { degree: usize, value: i64 },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
