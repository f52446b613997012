//! Exact computational models of adjoint quotients of complexified compact
//! Lie groups: multisymmetric invariant rings, the stratified-symplectic
//! Poisson bracket and its Dirac correction on determinant-one tori,
//! defining relations, semialgebraic membership through positive
//! semidefiniteness of the invariant Gram matrix, stratification by root
//! multiplicities, and the quantization layer (Weyl characters, energy
//! eigenvalues, costratified restrictions).
//!
//! All symbolic computation runs over exact rationals; floating point only
//! enters at explicit evaluation boundaries (point sampling, eigenvalues,
//! root clustering).

pub mod algebra;
pub mod poisson;
pub mod quotient;
pub mod rat;
pub mod symmetry;

mod linalg;
mod numeric;

pub use algebra::{exact_divide, AlgebraError, LaurentPoly, Mono, QuotientIdeal, VariableSet};
pub use rat::Rat;
pub use symmetry::{build_weyl_group, Family, FiniteGroup, GroupElement};

/// Toolkit version, echoed into machine-readable reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
