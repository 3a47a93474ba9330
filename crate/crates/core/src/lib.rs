//! Exact computations around EPW sextics: the symplectic space of 3-forms on a
//! six-dimensional space, Lagrangian subspaces and their degeneracy loci,
//! webs of quadrics, a formal Chern-class calculator, Schubert calculus on
//! Grassmannians and the Beauville-Bogomolov lattice of K3^[2]-type.
//!
//! No floating point is used anywhere: scalars are arbitrary-precision
//! rationals or elements of a prime field.

pub mod arith;
pub mod bbf;
pub mod chow;
pub mod epw;
pub mod error;
pub mod exterior;
pub mod incidence;
pub mod quadrics;
pub mod schubert;

pub use error::{Error, Result};
