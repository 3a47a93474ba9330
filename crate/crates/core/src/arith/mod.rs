//! Exact scalars, dense matrices, canonical subspaces and univariate
//! interpolation. Everything else in the crate is built on these.
//!
//! Over Q, rank and determinant use fraction-free (Bareiss) elimination on
//! denominator-cleared rows; over F_p plain Gaussian elimination is used.
//! Subspaces are stored in reduced row echelon form, so equality of
//! subspaces is equality of representations.

mod matrix;
mod mpoly;
mod poly;
mod scalar;
mod subspace;

pub use matrix::{dot, Matrix};
pub use mpoly::MultiPoly;
pub use poly::{interpolate_univariate, UniPoly};
pub use scalar::{is_prime, Field, Fp, Scalar, DEFAULT_PRIME, RATIONAL_SAMPLE_RANGE};
pub use subspace::Subspace;
