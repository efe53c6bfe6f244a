//! Exact root systems of Coxeter groups over real cyclotomic fields,
//! Coxeter elements, and the preprojective roots of a Coxeter element.
//!
//! Everything numeric is generic over [`Scalar`]; the exact carrier is
//! [`AlgebraicReal`], with [`num_rational::BigRational`] and `f64` usable for
//! quick experiments on simply-laced or floating systems.

pub mod algebra;
pub mod atilde;
pub mod elements;
pub mod error;
pub mod harness;
pub mod preprojective;
pub mod roots;
pub mod system;

pub use algebra::{AlgebraicReal, FieldContext, Scalar};
pub use error::{CoxeterError, Result};
pub use roots::{GroupElement, Root, RootSign, RootVector, Word};
pub use system::{CoxeterMatrix, CoxeterSystem, Kind, Label};

/// Exact scalar.
pub type Exact = AlgebraicReal;
/// System over the exact real cyclotomic field.
pub type ExactSystem = CoxeterSystem<AlgebraicReal>;
/// System over the rationals (labels 2, 3 and infinity only).
pub type RationalSystem = CoxeterSystem<num_rational::BigRational>;
/// Floating point system, for quick looks.
pub type FloatSystem = CoxeterSystem<f64>;
