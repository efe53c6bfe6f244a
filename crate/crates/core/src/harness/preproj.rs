use serde_json::{json, Value};

use super::classify::SystemSummary;
use super::config::{load_system, ExperimentConfig};
use super::emit::Report;
use super::exact::{coords_text, vector_json};
use super::select::{parse_root, ElementSelector};
use super::SCHEMA_VERSION;
use crate::algebra::AlgebraicReal;
use crate::error::Result;
use crate::preprojective::{LayerBoundReport, PreprojectiveVerdict};
use crate::roots::{RootVector, Word};
use crate::ExactSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardDiagnostics {
    pub i: usize,
    pub k: usize,
    pub layer_bound: LayerBoundReport,
    /// Every enumerated member is monotone along the poset.
    pub members_monotone: bool,
    /// The coefficient step law holds at every enumerated member.
    pub members_step_law: bool,
}

#[derive(Clone, Debug)]
pub struct RootQuery {
    pub coords: RootVector<AlgebraicReal>,
    pub depth: u32,
    pub verdict: PreprojectiveVerdict,
    /// `(layer, depth)` when the root was enumerated.
    pub located: Option<(usize, u32)>,
    /// Monotone along the poset; only for standard elements.
    pub monotone: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct PreprojTranscript {
    pub system: SystemSummary,
    pub word: Word,
    pub orientation_bits: u64,
    pub mu_max: usize,
    pub depth_cap: u32,
    /// Layer `mu` is `c^-mu` of the seed, as `(coords, depth)`.
    pub layers: Vec<Vec<(RootVector<AlgebraicReal>, u32)>>,
    pub standard: Option<StandardDiagnostics>,
    pub query: Option<RootQuery>,
}

impl PreprojTranscript {
    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Enumerates `P(c)` for the selected element, layers `0..=mu_max`, and
/// optionally decides one root.
pub fn cmd_preproj(
    config: &ExperimentConfig,
    element: &ElementSelector,
    root: Option<&str>,
) -> Result<PreprojTranscript> {
    config.validate()?;
    let (_, sys) = load_system(config.require_input()?)?;
    preproj_of(&sys, config, element, root)
}

pub fn preproj_of(
    sys: &ExactSystem,
    config: &ExperimentConfig,
    element: &ElementSelector,
    root: Option<&str>,
) -> Result<PreprojTranscript> {
    let (system, _) = SystemSummary::of(sys)?;
    let c = element.resolve(sys)?;
    let beta = root.map(|r| parse_root(r, sys)).transpose()?;
    let spec = sys.cyclic_spec();
    let pc = sys.enumerate_preprojective(&c, config.mu_max, config.depth_bound)?;
    let layers = pc
        .layers()
        .iter()
        .map(|l| {
            l.iter()
                .map(|r| (r.vec.clone(), r.depth.expect("enumerated roots carry depths")))
                .collect()
        })
        .collect();

    let sf = match &spec {
        Some(spec) => match sys.has_greatest(&c, spec)? {
            Some((i, k)) => Some((sys.build_standard(spec, i, k)?, spec)),
            None => None,
        },
        None => None,
    };
    let standard = match &sf {
        Some((sf, spec)) => {
            let mut step_law = true;
            let mut monotone = true;
            for r in pc.iter() {
                monotone &= sys.monotone_check(&r.vec, sf);
                step_law &= monotone && sys.lemma_depth_step_check(&r.vec, sf, spec)?;
            }
            Some(StandardDiagnostics {
                i: sf.i,
                k: sf.k,
                layer_bound: sys.layer_bound_check(sf, config.depth_bound)?,
                members_monotone: monotone,
                members_step_law: step_law,
            })
        }
        None => None,
    };

    let query = match beta {
        Some(beta) => Some(RootQuery {
            depth: sys.depth(&beta)?,
            verdict: sys.decide_general(&beta, &c, spec.as_ref(), config.mu_max)?,
            located: pc.locate(&beta),
            monotone: sf.as_ref().map(|(sf, _)| sys.monotone_check(&beta, sf)),
            coords: beta,
        }),
        None => None,
    };

    Ok(PreprojTranscript {
        system,
        word: c.word().clone(),
        orientation_bits: c.orientation().bits(),
        mu_max: config.mu_max,
        depth_cap: config.depth_bound,
        layers,
        standard,
        query,
    })
}

impl Report for PreprojTranscript {
    fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .layers
            .iter()
            .enumerate()
            .flat_map(|(mu, l)| {
                l.iter().map(move |(v, d)| {
                    json!({ "layer": mu, "depth": d, "coords": vector_json(v), "coords_text": coords_text(v) })
                })
            })
            .collect();
        let standard = self.standard.as_ref().map(|s| {
            json!({
                "i": s.i,
                "k": s.k,
                "layer_bound": s.layer_bound,
                "members_monotone": s.members_monotone,
                "members_step_law": s.members_step_law,
            })
        });
        let query = self.query.as_ref().map(|q| {
            json!({
                "coords": vector_json(&q.coords),
                "coords_text": coords_text(&q.coords),
                "depth": q.depth,
                "verdict": q.verdict,
                "located": q.located,
                "monotone": q.monotone,
            })
        });
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": "preproj",
            "system": self.system.json(),
            "element": { "word": self.word, "orientation_bits": self.orientation_bits },
            "config": { "mu_max": self.mu_max, "depth_cap": self.depth_cap },
            "layer_sizes": self.layers.iter().map(Vec::len).collect::<Vec<_>>(),
            "records": records,
            "standard": standard,
            "query": query,
        })
    }

    fn csv_header(&self) -> Vec<String> {
        ["layer", "depth", "coords"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(mu, l)| {
                l.iter()
                    .map(move |(v, d)| vec![mu.to_string(), d.to_string(), coords_text(v)])
            })
            .collect()
    }
}
