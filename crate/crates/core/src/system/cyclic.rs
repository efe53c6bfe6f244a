use serde::Serialize;

use super::matrix::{CoxeterMatrix, Label};

/// A Coxeter graph that is a single cycle of length at least 3.
///
/// Positions `0..n` run around the cycle starting at vertex 0 and moving to
/// its smaller-indexed neighbour; `labels[p]` sits on the edge between
/// positions `p` and `p + 1 (mod n)`. For matrices built with
/// [`CoxeterMatrix::cyclic`] positions and vertices coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicSpec {
    order: Vec<usize>,
    labels: Vec<Label>,
}

impl CyclicSpec {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Vertex (generator index) at a cycle position.
    pub fn vertex(&self, position: usize) -> usize {
        self.order[position % self.order.len()]
    }

    /// Cycle position of a vertex.
    pub fn position(&self, vertex: usize) -> usize {
        self.order
            .iter()
            .position(|&v| v == vertex)
            .expect("vertex lies on the cycle")
    }

    /// Position reduced into `0..n` for any integer offset.
    pub fn wrap(&self, position: i64) -> usize {
        position.rem_euclid(self.order.len() as i64) as usize
    }

    pub fn is_natural_order(&self) -> bool {
        self.order.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// The affine case: every cycle label equals 3.
    pub fn all_labels_three(&self) -> bool {
        self.labels.iter().all(|&m| m == Label::Finite(3))
    }
}

/// Recognise a single `n`-cycle (`n >= 3`) with commuting chords.
pub fn detect_cyclic(matrix: &CoxeterMatrix) -> Option<CyclicSpec> {
    let graph = matrix.graph();
    let n = graph.vertex_count();
    if n < 3 || graph.edges().len() != n {
        return None;
    }
    if (0..n).any(|v| graph.neighbours(v).len() != 2) || !graph.is_connected() {
        return None;
    }
    let mut order = vec![0usize];
    let mut prev = 0usize;
    let mut cur = *graph.neighbours(0).iter().min()?;
    while cur != 0 {
        order.push(cur);
        let next = *graph.neighbours(cur).iter().find(|&&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return None;
    }
    let labels = (0..n)
        .map(|p| matrix.get(order[p], order[(p + 1) % n]))
        .collect();
    Some(CyclicSpec { order, labels })
}
