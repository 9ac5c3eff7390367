//! Exact-arithmetic models of 4-dimensional metric Lie algebras carrying a
//! 2-dimensional conformal foliation with minimal leaves, together with the
//! almost Hermitian classification machinery for the adapted structure
//! J(X) = Y, J(Z) = W.
//!
//! All computations run over the rationals or over rational functions of the
//! structure parameters; there is no floating point anywhere and every "is
//! zero" answer is exact.

pub mod exec;
pub mod families;
pub mod geometry;
pub mod hermitian;
pub mod liealg;
pub mod report;
pub mod scalar;

pub use families::{Catalog, FamilySpec, Fault, HermClass};
pub use liealg::{BracketTable, StructureConstants, Vector4};
pub use scalar::{parse_scalar, Rational, Scalar};
