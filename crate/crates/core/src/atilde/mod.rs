//! Closed forms for type Ã_{n-1} (cyclic graph, every label 3) and for
//! Ã_1, used as independent oracles for the generic engine.

pub mod root;
pub mod verify;

pub use root::{atilde_family, atilde_positive_roots, AtildeImage, AtildeRoot};
pub use verify::{
    atilde1_case, atilde_system, check_reflection_table, verify_partition, Atilde1Report, FamilyMatch,
    FamilyOrientation, PartitionReport,
};
