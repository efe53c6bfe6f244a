//! Experiments and report emission behind the `coxeter` command line.
//!
//! Every command returns a report value; [`emit`] turns it into JSON or CSV.
//! JSON keys are sorted, roots are listed in lexicographic order of their
//! exact coordinates, and exact numbers are written as coefficient tuples
//! over the power basis of `2cos(pi/N)` next to a decimal approximation.

mod atilde;
mod classify;
mod config;
mod cover;
mod emit;
mod exact;
mod growth;
mod preproj;
mod select;

pub use atilde::{cmd_atilde_verify, AtildeVerifyReport};
pub use classify::{classify_system, cmd_classify, ClassifyReport, SystemSummary};
pub use config::{load_system, ExperimentConfig, Format};
pub use cover::{
    cmd_cover, cover_system, CoverageReport, CoverageStatus, ElementInfo, LayerSummary, RootRecord, INDEFINITE_CHECK_DEPTH,
};
pub use emit::{emit, write_report, Report};
pub use exact::{coord_text, coords_text, parse_coord, scalar_json, vector_json};
pub use growth::{cmd_growth, growth_guarded, growth_of, GrowthReport};
pub use preproj::{cmd_preproj, preproj_of, PreprojTranscript, RootQuery, StandardDiagnostics};
pub use select::{parse_root, ElementSelector};

/// Version of every report layout emitted here.
pub const SCHEMA_VERSION: u32 = 1;

/// Field degree above which reports carry a size warning.
pub const DEGREE_WARNING: usize = 64;
