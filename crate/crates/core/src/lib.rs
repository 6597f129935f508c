//! Exact computations for the affine Hecke algebra of type A acting on
//! tensor space, the resulting affine Schur functor images, and the
//! bijection between multisegments and dominant tuples of Drinfeld
//! polynomials.
//!
//! All arithmetic is exact over ℚ(v) (or a specialization `v ↦ p/q`).

pub mod combinatorics;
pub mod drinfeld;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod scalar;
pub mod schur_functor;
pub mod tensor_space;

pub use error::{Error, Result};
