//! `c`-preprojective roots: enumeration, exact decisions for standard
//! forms, and the per-depth bound.

pub mod bounds;
pub mod decide;
pub mod enumerate;

pub use bounds::LayerBoundReport;
pub use decide::{Certificate, PreprojectiveVerdict, Status};
pub use enumerate::{PreprojectiveEnumeration, DEFAULT_DEPTH_CAP, DEFAULT_MU_MAX};
