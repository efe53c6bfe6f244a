use serde_json::{json, Value};

use super::config::{load_system, ExperimentConfig};
use super::emit::Report;
use super::SCHEMA_VERSION;
use crate::atilde::{atilde1_case, check_reflection_table, verify_partition, Atilde1Report, PartitionReport};
use crate::error::{CoxeterError, Result};
use crate::system::Label;

/// Largest `mu` at which the reflection table is compared entry by entry.
const TABLE_MU: u64 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtildeVerifyReport {
    pub depth_bound: u32,
    pub partitions: Vec<PartitionReport>,
    /// `(n, entries compared)`.
    pub reflection_tables: Vec<(usize, usize)>,
    pub rank_two: Option<Atilde1Report>,
}

/// Runs the closed-form oracles. With an input document the system must be
/// of type Ã (an all-3 cycle, or rank 2 with `m = inf`); without one the
/// cycles of length 3 and 4 and the rank-2 case are checked.
pub fn cmd_atilde_verify(config: &ExperimentConfig) -> Result<AtildeVerifyReport> {
    config.validate()?;
    let (cycles, rank_two) = match &config.input {
        None => (vec![3, 4], true),
        Some(path) => {
            let (_, sys) = load_system(path)?;
            if sys.rank() == 2 && sys.matrix().get(0, 1) == Label::Infinite {
                (vec![], true)
            } else {
                match sys.cyclic_spec() {
                    Some(spec) if spec.all_labels_three() => (vec![spec.len()], false),
                    _ => {
                        return Err(CoxeterError::Precondition(
                            "atilde-verify needs an all-3 cycle or rank 2 with m = inf".into(),
                        ))
                    }
                }
            }
        }
    };
    let mut partitions = Vec::new();
    let mut reflection_tables = Vec::new();
    for n in cycles {
        reflection_tables.push((n, check_reflection_table(n, TABLE_MU)?));
        partitions.push(verify_partition(n, config.depth_bound)?);
    }
    let rank_two = rank_two.then(|| atilde1_case(config.depth_bound)).transpose()?;
    Ok(AtildeVerifyReport {
        depth_bound: config.depth_bound,
        partitions,
        reflection_tables,
        rank_two,
    })
}

impl Report for AtildeVerifyReport {
    fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .partitions
            .iter()
            .flat_map(|p| {
                p.families.iter().map(move |f| {
                    json!({
                        "n": p.n,
                        "k": f.k,
                        "standard": f.standard,
                        "orientation": f.orientation,
                        "members": f.members,
                    })
                })
            })
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": "atilde-verify",
            "depth_bound": self.depth_bound,
            "partitions": self.partitions,
            "reflection_tables": self
                .reflection_tables
                .iter()
                .map(|(n, c)| json!({ "n": n, "entries": c }))
                .collect::<Vec<_>>(),
            "rank_two": self.rank_two,
            "records": records,
        })
    }

    fn csv_header(&self) -> Vec<String> {
        ["n", "k", "standard_i", "standard_k", "members"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.partitions
            .iter()
            .flat_map(|p| {
                p.families.iter().map(move |f| {
                    vec![
                        p.n.to_string(),
                        f.k.to_string(),
                        f.standard.0.to_string(),
                        f.standard.1.to_string(),
                        f.members.to_string(),
                    ]
                })
            })
            .collect()
    }
}
