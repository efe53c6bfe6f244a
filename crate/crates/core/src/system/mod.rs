//! Coxeter matrices and graphs, the bilinear form, and classification.

pub mod cyclic;
pub mod document;
pub mod form;
pub mod matrix;

pub use cyclic::{detect_cyclic, CyclicSpec};
pub use document::SystemDocument;
pub use form::{BilinearForm, Classification, CoxeterSystem, Kind};
pub use matrix::{CoxeterGraph, CoxeterMatrix, Edge, Label};
