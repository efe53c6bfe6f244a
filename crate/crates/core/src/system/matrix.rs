use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{CoxeterError, Result};

/// Entry of a Coxeter matrix: a positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u64),
    Infinite,
}

impl Label {
    /// Whether the pair is joined by an edge of the Coxeter graph.
    pub fn is_edge(self) -> bool {
        match self {
            Label::Finite(m) => m > 2,
            Label::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

impl From<u64> for Label {
    fn from(m: u64) -> Self {
        Label::Finite(m)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => serializer.serialize_u64(*m),
            Label::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct LabelVisitor;
        impl Visitor<'_> for LabelVisitor {
            type Value = Label;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a positive integer or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Label, E> {
                Ok(Label::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Label, E> {
                u64::try_from(v)
                    .map(Label::Finite)
                    .map_err(|_| E::custom(format!("negative label {v}")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Label, E> {
                match v {
                    "inf" => Ok(Label::Infinite),
                    other => other
                        .parse::<u64>()
                        .map(Label::Finite)
                        .map_err(|_| E::custom(format!("bad label {other:?}"))),
                }
            }
        }
        deserializer.deserialize_any(LabelVisitor)
    }
}

/// Validated symmetric Coxeter matrix. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<Label>>,
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<Label>>) -> Result<Self> {
        validate(&entries)?;
        Ok(CoxeterMatrix { entries })
    }

    /// Cyclic graph with `labels[j]` on the edge `{j, j+1 mod n}`; every
    /// other distinct pair commutes.
    pub fn cyclic(labels: &[Label]) -> Result<Self> {
        let n = labels.len();
        if n < 3 {
            return Err(CoxeterError::Parse(format!(
                "a cyclic graph needs at least 3 vertices, got {n}"
            )));
        }
        let mut entries = vec![vec![Label::Finite(2); n]; n];
        for (j, &m) in labels.iter().enumerate() {
            if !m.is_edge() {
                return Err(CoxeterError::Parse(format!(
                    "cyclic label {m} at position {} must be at least 3",
                    j + 1
                )));
            }
            let k = (j + 1) % n;
            entries[j][k] = m;
            entries[k][j] = m;
        }
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        Self::new(entries)
    }

    /// Path (linear) diagram with consecutive labels.
    pub fn path(labels: &[Label]) -> Result<Self> {
        let n = labels.len() + 1;
        let mut entries = vec![vec![Label::Finite(2); n]; n];
        for (j, &m) in labels.iter().enumerate() {
            entries[j][j + 1] = m;
            entries[j + 1][j] = m;
        }
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        Self::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Label {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.entries
    }

    /// Finite off-diagonal labels at least 3; these determine the field.
    pub fn finite_edge_labels(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for (i, row) in self.entries.iter().enumerate() {
            for &m in &row[i + 1..] {
                if let Label::Finite(m) = m {
                    if m >= 3 {
                        out.insert(m);
                    }
                }
            }
        }
        out
    }

    /// Simultaneous permutation of rows and columns: new index `p` is old
    /// index `perm[p]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.rank();
        if perm.len() != n {
            return Err(CoxeterError::Precondition("permutation length".into()));
        }
        let entries = (0..n)
            .map(|a| (0..n).map(|b| self.entries[perm[a]][perm[b]]).collect())
            .collect();
        Self::new(entries)
    }

    pub fn graph(&self) -> CoxeterGraph {
        let n = self.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = self.entries[i][j];
                if m.is_edge() {
                    edges.push(Edge { a: i, b: j, label: m });
                }
            }
        }
        CoxeterGraph { vertices: n, edges }
    }
}

/// Check the Coxeter-matrix axioms, reporting the first violation.
pub fn validate(entries: &[Vec<Label>]) -> Result<()> {
    let n = entries.len();
    for (row, r) in entries.iter().enumerate() {
        if r.len() != n {
            return Err(CoxeterError::NotSquare {
                row,
                len: r.len(),
                rank: n,
            });
        }
    }
    for i in 0..n {
        if entries[i][i] != Label::Finite(1) {
            return Err(CoxeterError::BadDiagonal { i });
        }
        for j in 0..n {
            if entries[i][j] != entries[j][i] {
                return Err(CoxeterError::NotSymmetric {
                    i: i.min(j),
                    j: i.max(j),
                });
            }
            if i != j && matches!(entries[i][j], Label::Finite(m) if m < 2) {
                return Err(CoxeterError::BadOffDiagonal { i, j });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Smaller endpoint.
    pub a: usize,
    /// Larger endpoint.
    pub b: usize,
    pub label: Label,
}

/// Labeled Coxeter graph; edges sorted lexicographically by endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    vertices: usize,
    edges: Vec<Edge>,
}

impl CoxeterGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match (e.a == v, e.b == v) {
                (true, _) => Some(e.b),
                (_, true) => Some(e.a),
                _ => None,
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> Vec<Vec<Label>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Label::Finite(x)).collect())
            .collect()
    }

    #[test]
    fn accepts_all_three_triangle() {
        assert!(CoxeterMatrix::new(m(&[&[1, 3, 3], &[3, 1, 3], &[3, 3, 1]])).is_ok());
    }

    #[test]
    fn reports_asymmetry() {
        let err = CoxeterMatrix::new(m(&[&[1, 2, 3], &[3, 1, 3], &[3, 3, 1]])).unwrap_err();
        assert_eq!(err, CoxeterError::NotSymmetric { i: 0, j: 1 });
    }

    #[test]
    fn reports_bad_diagonal() {
        let err = CoxeterMatrix::new(m(&[&[2, 3, 3], &[3, 1, 3], &[3, 3, 1]])).unwrap_err();
        assert_eq!(err, CoxeterError::BadDiagonal { i: 0 });
    }

    #[test]
    fn reports_bad_off_diagonal_and_shape() {
        let err = CoxeterMatrix::new(m(&[&[1, 1], &[1, 1]])).unwrap_err();
        assert_eq!(err, CoxeterError::BadOffDiagonal { i: 0, j: 1 });
        let err = CoxeterMatrix::new(m(&[&[1, 3], &[3]])).unwrap_err();
        assert!(matches!(err, CoxeterError::NotSquare { row: 1, .. }));
    }

    #[test]
    fn cyclic_builder_places_labels_on_the_cycle() {
        let mat = CoxeterMatrix::cyclic(&[3.into(), 3.into(), 3.into(), 5.into()]).unwrap();
        assert_eq!(mat.get(3, 0), Label::Finite(5));
        assert_eq!(mat.get(0, 2), Label::Finite(2));
        assert_eq!(mat.graph().edges().len(), 4);
        assert!(CoxeterMatrix::cyclic(&[3.into(), 2.into(), 3.into()]).is_err());
    }

    #[test]
    fn label_serde() {
        let labels: Vec<Label> = serde_json::from_str(r#"[3, "inf", "4"]"#).unwrap();
        assert_eq!(labels, vec![Label::Finite(3), Label::Infinite, Label::Finite(4)]);
        assert_eq!(serde_json::to_string(&labels).unwrap(), r#"[3,"inf",4]"#);
    }
}
