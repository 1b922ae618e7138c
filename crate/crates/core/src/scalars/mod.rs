//! Exact field arithmetic over the rationals and GF(p), and the dense linear
//! algebra every Hilbert-function computation reduces to.
//!
//! Ranks over the rationals use fraction-free (Bareiss) elimination on
//! integer-scaled rows; over GF(p) plain Gauss-Jordan. In both cases the pivot
//! is the first nonzero entry of the current column, so results are
//! deterministic.

mod field;
mod matrix;

pub use field::{FieldSpec, Scalar};
pub use matrix::{span_dim, subspace_dims, ExactMatrix, SubspaceDims};
