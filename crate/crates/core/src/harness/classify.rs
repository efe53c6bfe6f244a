use serde::Serialize;
use serde_json::{json, Value};

use super::config::{load_system, ExperimentConfig};
use super::emit::Report;
use super::{DEGREE_WARNING, SCHEMA_VERSION};
use crate::error::{CoxeterError, Result};
use crate::system::{Classification, Kind, Label};
use crate::ExactSystem;

/// What every report says about its input system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemSummary {
    pub rank: usize,
    pub matrix: Vec<Vec<Label>>,
    pub kind: Kind,
    /// Cycle labels when the graph is an `n`-cycle, `n >= 3`.
    pub cyclic: Option<Vec<Label>>,
    /// `N` with coordinates in `Q(2cos(pi/N))`.
    pub field_order: u64,
    pub field_degree: usize,
    pub warnings: Vec<String>,
}

impl SystemSummary {
    pub fn of(sys: &ExactSystem) -> Result<(Self, Classification)> {
        let class = sys.classify()?;
        let field = sys.field();
        let mut warnings = Vec::new();
        if field.degree() > DEGREE_WARNING {
            warnings.push(format!(
                "field degree {} exceeds {DEGREE_WARNING}; arithmetic will be slow",
                field.degree()
            ));
        }
        let summary = SystemSummary {
            rank: sys.rank(),
            matrix: sys.matrix().rows().to_vec(),
            kind: class.kind,
            cyclic: sys.cyclic_spec().map(|s| s.labels().to_vec()),
            field_order: field.order(),
            field_degree: field.degree(),
            warnings,
        };
        Ok((summary, class))
    }

    pub fn json(&self) -> Value {
        serde_json::to_value(self).expect("summary serialises")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub system: SystemSummary,
    pub classification: Classification,
    /// For cyclic graphs: whether every label is 3.
    pub all_labels_three: Option<bool>,
}

/// Classifies the input system. For cyclic graphs the result is checked
/// against the label criterion (affine iff all labels are 3).
pub fn cmd_classify(config: &ExperimentConfig) -> Result<ClassifyReport> {
    let (_, sys) = load_system(config.require_input()?)?;
    classify_system(&sys)
}

pub fn classify_system(sys: &ExactSystem) -> Result<ClassifyReport> {
    let (system, classification) = SystemSummary::of(sys)?;
    let all_labels_three = sys.cyclic_spec().map(|s| s.all_labels_three());
    if let Some(three) = all_labels_three {
        if three != (classification.kind == Kind::Affine) {
            return Err(CoxeterError::TheoremContradiction(format!(
                "cyclic system classified {:?} but all-labels-3 is {three}",
                classification.kind
            )));
        }
    }
    Ok(ClassifyReport {
        system,
        classification,
        all_labels_three,
    })
}

impl Report for ClassifyReport {
    fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": "classify",
            "system": self.system.json(),
            "records": [{
                "kind": self.classification.kind,
                "leading_minor_signs": self.classification.leading_minor_signs,
                "corank": self.classification.corank,
                "all_labels_three": self.all_labels_three,
            }],
        })
    }

    fn csv_header(&self) -> Vec<String> {
        ["rank", "kind", "corank", "leading_minor_signs", "cyclic_labels", "all_labels_three"]
            .map(String::from)
            .to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let labels = self
            .system
            .cyclic
            .as_ref()
            .map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        vec![vec![
            self.system.rank.to_string(),
            format!("{:?}", self.classification.kind),
            self.classification.corank.to_string(),
            self.classification
                .leading_minor_signs
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            labels,
            self.all_labels_three.map(|b| b.to_string()).unwrap_or_default(),
        ]]
    }
}
