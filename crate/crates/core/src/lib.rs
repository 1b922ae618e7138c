#![no_std]

extern crate alloc;

pub mod apolar;
mod error;
pub mod forms;
pub mod hilbert;
pub mod pencil;
pub mod scalars;

pub use error::{Error, Result};
pub use forms::{Form, Monomial, Operator};
pub use scalars::{ExactMatrix, FieldSpec, Scalar};
