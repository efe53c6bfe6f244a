//! Exact arithmetic in real cyclotomic fields and the scalar abstraction.

pub mod field;
mod poly;
pub mod real;
pub mod scalar;

pub use field::FieldContext;
pub use real::AlgebraicReal;
pub use scalar::Scalar;
