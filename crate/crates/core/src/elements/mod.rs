//! Coxeter elements as acyclic orientations, standard forms on cyclic
//! graphs, and conjugation to standard form.

pub mod conjugation;
pub mod descriptor;
pub mod orientation;
pub mod standard;

pub use conjugation::{ConjugationCertificate, ConjugationStep};
pub use descriptor::CoxeterElementDescriptor;
pub use orientation::{acyclic_orientations, Orientation};
pub use standard::{bracket, standard_positions, StandardForm};
