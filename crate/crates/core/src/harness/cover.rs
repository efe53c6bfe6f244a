use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::classify::SystemSummary;
use super::config::{load_system, ExperimentConfig};
use super::emit::Report;
use super::exact::{coords_text, vector_json};
use super::SCHEMA_VERSION;
use crate::algebra::AlgebraicReal;
use crate::elements::{bracket, CoxeterElementDescriptor, StandardForm};
use crate::error::{CoxeterError, Result};
use crate::preprojective::{PreprojectiveVerdict, Status};
use crate::roots::{RootSign, RootVector, Word};
use crate::system::{Kind, Label};
use crate::ExactSystem;

/// Depth from which an indefinite system must show an uncovered root.
pub const INDEFINITE_CHECK_DEPTH: u32 = 10;
/// How many No verdicts are re-run by brute force.
const NO_SAMPLE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverageStatus {
    /// Yes for at least one element.
    Covered,
    /// No from every element, so in particular from every standard one.
    UncoveredCertified,
    /// Neither.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct ElementInfo {
    pub id: String,
    pub word: Word,
    pub orientation_bits: u64,
    /// `(i, k)` when the element is `c_i^k`.
    pub standard: Option<(usize, usize)>,
    /// `k` when the element is the family element `c_{[k+1]}^k`.
    pub family: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RootRecord {
    pub coords: RootVector<AlgebraicReal>,
    pub depth: u32,
    /// Aligned with [`CoverageReport::elements`].
    pub verdicts: Vec<PreprojectiveVerdict>,
    pub status: CoverageStatus,
    /// Number of family elements answering Yes.
    pub families_yes: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayerSummary {
    pub depth: u32,
    pub covered: usize,
    pub uncovered_certified: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug)]
pub struct CoverageReport {
    pub system: SystemSummary,
    pub depth_bound: u32,
    pub mu_max: usize,
    pub seed: u64,
    pub elements: Vec<ElementInfo>,
    /// Sorted lexicographically by coordinates.
    pub records: Vec<RootRecord>,
    pub layers: Vec<LayerSummary>,
    /// `None` when the depth is too small to test anything.
    pub consistent: Option<bool>,
    pub consistency_note: String,
    /// Index into `records` of the shallowest root that is not covered,
    /// preferring certified ones.
    pub first_uncovered: Option<usize>,
    pub yes_spot_checks: usize,
    pub no_rechecks: usize,
}

impl CoverageReport {
    pub fn count(&self, status: CoverageStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }
}

fn element_id(word: &Word) -> String {
    word.to_one_based().iter().map(|l| format!("s{l}")).collect()
}

fn is_atilde1(sys: &ExactSystem) -> bool {
    sys.rank() == 2 && sys.matrix().get(0, 1) == Label::Infinite
}

/// Runs every Coxeter element against every positive root of depth at
/// most `config.depth_bound`.
pub fn cmd_cover(config: &ExperimentConfig) -> Result<CoverageReport> {
    config.validate()?;
    let (_, sys) = load_system(config.require_input()?)?;
    cover_system(&sys, config)
}

pub fn cover_system(sys: &ExactSystem, config: &ExperimentConfig) -> Result<CoverageReport> {
    let spec = sys.cyclic_spec();
    if spec.is_none() && !is_atilde1(sys) {
        return Err(CoxeterError::Precondition(
            "cover needs a cyclic graph with n >= 3, or rank 2 with m = inf".into(),
        ));
    }
    let (system, _) = SystemSummary::of(sys)?;
    let n = sys.rank();
    let descriptors = sys.all_coxeter_elements()?;
    let mut forms: Vec<Option<StandardForm<AlgebraicReal>>> = Vec::with_capacity(descriptors.len());
    let mut elements = Vec::with_capacity(descriptors.len());
    for c in &descriptors {
        let (form, family) = match &spec {
            Some(spec) => match sys.has_greatest(c, spec)? {
                Some((i, k)) => {
                    let sf = sys.build_standard(spec, i, k)?;
                    let family = (i == bracket(k as i64 + 1, n)).then_some(k);
                    (Some(sf), family)
                }
                None => (None, None),
            },
            // rank 2: each element is its own family, named by its greatest letter
            None => (None, Some(c.maximal_elements()[0] + 1)),
        };
        elements.push(ElementInfo {
            id: element_id(c.word()),
            word: c.word().clone(),
            orientation_bits: c.orientation().bits(),
            standard: form.as_ref().map(|sf| (sf.i, sf.k)),
            family,
        });
        forms.push(form);
    }

    let layers = sys.enumerate_by_depth(config.depth_bound)?;
    let roots: Vec<(RootVector<AlgebraicReal>, u32)> = layers
        .iter()
        .map(|r| (r.vec.clone(), r.depth.expect("layered")))
        .collect();
    let mut records: Vec<RootRecord> = roots
        .into_par_iter()
        .map(|(beta, depth)| {
            let verdicts = descriptors
                .iter()
                .zip(&forms)
                .map(|(c, sf)| match sf {
                    Some(sf) => sys.decide_standard(&beta, sf),
                    None => sys.decide_general(&beta, c, None, config.mu_max),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(record(beta, depth, verdicts, &elements))
        })
        .collect::<Result<_>>()?;
    records.sort_by(|a, b| a.coords.0.cmp(&b.coords.0));

    let yes_spot_checks = spot_check_yes(&records, &descriptors)?;
    let no_rechecks = recheck_no(&records, &descriptors, config)?;

    let mut summary: Vec<LayerSummary> = (1..=layers.max_depth())
        .map(|depth| LayerSummary {
            depth,
            ..Default::default()
        })
        .collect();
    for r in &records {
        let s = &mut summary[r.depth as usize - 1];
        match r.status {
            CoverageStatus::Covered => s.covered += 1,
            CoverageStatus::UncoveredCertified => s.uncovered_certified += 1,
            CoverageStatus::Unknown => s.unknown += 1,
        }
    }

    let pick = |wanted: &dyn Fn(CoverageStatus) -> bool| {
        records
            .iter()
            .enumerate()
            .filter(|(_, r)| wanted(r.status))
            .min_by_key(|(_, r)| r.depth)
            .map(|(i, _)| i)
    };
    let first_uncovered = pick(&|s| s == CoverageStatus::UncoveredCertified)
        .or_else(|| pick(&|s| s == CoverageStatus::Unknown));

    let all_standard = forms.iter().all(Option::is_some);
    let (consistent, consistency_note) = match system.kind {
        Kind::Affine => {
            let uncovered = records.iter().filter(|r| r.status != CoverageStatus::Covered).count();
            let split = records.iter().filter(|r| r.families_yes != 1).count();
            (
                Some(uncovered == 0 && split == 0),
                format!(
                    "affine: {uncovered} roots not covered, {split} roots not in exactly one family"
                ),
            )
        }
        Kind::Indefinite if config.depth_bound < INDEFINITE_CHECK_DEPTH => (
            None,
            format!("indefinite: not tested below depth {INDEFINITE_CHECK_DEPTH}"),
        ),
        Kind::Indefinite if all_standard => {
            let certified = records
                .iter()
                .filter(|r| r.status == CoverageStatus::UncoveredCertified)
                .count();
            (
                Some(certified > 0),
                format!("indefinite, every element standard: {certified} uncovered-certified roots"),
            )
        }
        Kind::Indefinite => {
            let open = records.iter().filter(|r| r.status != CoverageStatus::Covered).count();
            (Some(open > 0), format!("indefinite: {open} roots not covered"))
        }
        Kind::Finite => (None, "finite: nothing to test".into()),
    };

    Ok(CoverageReport {
        system,
        depth_bound: config.depth_bound,
        mu_max: config.mu_max,
        seed: config.seed,
        elements,
        records,
        layers: summary,
        consistent,
        consistency_note,
        first_uncovered,
        yes_spot_checks,
        no_rechecks,
    })
}

fn record(
    coords: RootVector<AlgebraicReal>,
    depth: u32,
    verdicts: Vec<PreprojectiveVerdict>,
    elements: &[ElementInfo],
) -> RootRecord {
    let yes = |v: &PreprojectiveVerdict| v.status == Status::Yes;
    let status = if verdicts.iter().any(yes) {
        CoverageStatus::Covered
    } else if verdicts.iter().all(|v| v.status == Status::No) {
        CoverageStatus::UncoveredCertified
    } else {
        CoverageStatus::Unknown
    };
    let families_yes = verdicts
        .iter()
        .zip(elements)
        .filter(|(v, e)| e.family.is_some() && yes(v))
        .count();
    RootRecord {
        coords,
        depth,
        verdicts,
        status,
        families_yes,
    }
}

/// Re-derives every Yes from the matrix power `c^mu`: `c^mu(b)` negative
/// and `c^(mu-1)(b)` positive.
fn spot_check_yes(
    records: &[RootRecord],
    descriptors: &[CoxeterElementDescriptor<AlgebraicReal>],
) -> Result<usize> {
    let jobs: Vec<(&RootRecord, usize, usize)> = records
        .iter()
        .flat_map(|r| {
            r.verdicts
                .iter()
                .enumerate()
                .filter_map(move |(e, v)| v.witness_power.map(|mu| (r, e, mu)))
        })
        .collect();
    jobs.par_iter().try_for_each(|&(r, e, mu)| {
        let c = descriptors[e].element();
        let after = c.pow(mu).apply(&r.coords).root_sign()?;
        let before = c.pow(mu - 1).apply(&r.coords).root_sign()?;
        if after != RootSign::Negative || before != RootSign::Positive {
            return Err(CoxeterError::TheoremContradiction(format!(
                "witness {mu} for {:?} under {} does not re-verify",
                r.coords,
                descriptors[e].word()
            )));
        }
        Ok(())
    })?;
    Ok(jobs.len())
}

/// Brute-force check of a seeded sample of No verdicts: the root must stay
/// positive for `mu_max` applications.
fn recheck_no(
    records: &[RootRecord],
    descriptors: &[CoxeterElementDescriptor<AlgebraicReal>],
    config: &ExperimentConfig,
) -> Result<usize> {
    let pairs: Vec<(usize, usize)> = records
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            r.verdicts
                .iter()
                .enumerate()
                .filter(|(_, v)| v.status == Status::No)
                .map(move |(e, _)| (i, e))
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let sample: Vec<&(usize, usize)> = pairs.choose_multiple(&mut rng, NO_SAMPLE).collect();
    sample.par_iter().try_for_each(|&&(i, e)| {
        let c = descriptors[e].element();
        let mut gamma = records[i].coords.clone();
        for mu in 1..=config.mu_max {
            gamma = c.apply(&gamma);
            if gamma.root_sign()? == RootSign::Negative {
                return Err(CoxeterError::TheoremContradiction(format!(
                    "{:?} certified No for {} but c^{mu} makes it negative",
                    records[i].coords,
                    descriptors[e].word()
                )));
            }
        }
        Ok(())
    })?;
    Ok(sample.len())
}

fn verdict_text(v: &PreprojectiveVerdict) -> String {
    match (v.status, v.witness_power) {
        (Status::Yes, Some(mu)) => format!("yes({mu})"),
        (Status::Yes, None) => "yes".into(),
        (Status::No, _) => "no".into(),
        (Status::Unknown, _) => "unknown".into(),
    }
}

impl RootRecord {
    fn json(&self, elements: &[ElementInfo]) -> Value {
        let verdicts: Map<String, Value> = elements
            .iter()
            .zip(&self.verdicts)
            .map(|(e, v)| (e.id.clone(), serde_json::to_value(v).expect("verdict serialises")))
            .collect();
        json!({
            "coords": vector_json(&self.coords),
            "coords_text": coords_text(&self.coords),
            "depth": self.depth,
            "status": self.status,
            "families_yes": self.families_yes,
            "verdicts": verdicts,
        })
    }
}

impl Report for CoverageReport {
    fn to_json(&self) -> Value {
        let elements: Vec<Value> = self
            .elements
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "word": e.word,
                    "orientation_bits": e.orientation_bits,
                    "standard": e.standard,
                    "family": e.family,
                })
            })
            .collect();
        let first = self.first_uncovered.map(|i| {
            let r = &self.records[i];
            json!({ "coords_text": coords_text(&r.coords), "depth": r.depth, "status": r.status })
        });
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": "cover",
            "system": self.system.json(),
            "config": { "depth_bound": self.depth_bound, "mu_max": self.mu_max, "seed": self.seed },
            "elements": elements,
            "records": self.records.iter().map(|r| r.json(&self.elements)).collect::<Vec<_>>(),
            "summary": {
                "layers": self.layers,
                "covered": self.count(CoverageStatus::Covered),
                "uncovered_certified": self.count(CoverageStatus::UncoveredCertified),
                "unknown": self.count(CoverageStatus::Unknown),
            },
            "consistent": self.consistent,
            "consistency_note": self.consistency_note,
            "first_uncovered": first,
            "checks": { "yes_spot_checks": self.yes_spot_checks, "no_rechecks": self.no_rechecks },
        })
    }

    fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = ["coords", "depth", "status", "families_yes"].map(String::from).to_vec();
        h.extend(self.elements.iter().map(|e| e.id.clone()));
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.records
            .iter()
            .map(|r| {
                let mut row = vec![
                    coords_text(&r.coords),
                    r.depth.to_string(),
                    serde_json::to_value(r.status)
                        .ok()
                        .and_then(|v| v.as_str().map(String::from))
                        .unwrap_or_default(),
                    r.families_yes.to_string(),
                ];
                row.extend(r.verdicts.iter().map(verdict_text));
                row
            })
            .collect()
    }
}
