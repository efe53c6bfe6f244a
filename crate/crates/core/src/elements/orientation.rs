use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{CoxeterError, Result};
use crate::roots::Word;
use crate::system::CoxeterGraph;

/// Acyclic orientation of a Coxeter graph: one arrow per edge, listed in the
/// graph's edge order. `s <= t` in the induced poset when there is a directed
/// path from `s` to `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Orientation {
    rank: usize,
    arrows: Vec<(usize, usize)>,
}

impl Orientation {
    /// Arrows from earlier letters to later ones. `word` must use every
    /// generator exactly once.
    pub fn from_word(graph: &CoxeterGraph, word: &Word) -> Result<Self> {
        let n = graph.vertex_count();
        let mut pos = vec![usize::MAX; n];
        for (p, &l) in word.letters().iter().enumerate() {
            if l >= n {
                return Err(CoxeterError::LetterOutOfRange { letter: l, rank: n });
            }
            if pos[l] != usize::MAX {
                return Err(CoxeterError::NotACoxeterWord(word.to_string()));
            }
            pos[l] = p;
        }
        if word.len() != n {
            return Err(CoxeterError::NotACoxeterWord(word.to_string()));
        }
        let arrows = graph
            .edges()
            .iter()
            .map(|e| if pos[e.a] < pos[e.b] { (e.a, e.b) } else { (e.b, e.a) })
            .collect();
        Ok(Orientation { rank: n, arrows })
    }

    /// Bit `j` set means edge `j` points from its smaller to its larger endpoint.
    pub fn from_bits(graph: &CoxeterGraph, bits: u64) -> Result<Self> {
        let m = graph.edges().len();
        if m < 64 && bits >> m != 0 {
            return Err(CoxeterError::Selector(format!(
                "orientation bits {bits:#b} exceed {m} edges"
            )));
        }
        let arrows = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(j, e)| if bits >> j & 1 == 1 { (e.a, e.b) } else { (e.b, e.a) })
            .collect();
        let o = Orientation {
            rank: graph.vertex_count(),
            arrows,
        };
        if o.is_acyclic() {
            Ok(o)
        } else {
            Err(CoxeterError::CyclicOrientation)
        }
    }

    pub fn bits(&self) -> u64 {
        self.arrows
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &(a, b))| if a < b { acc | 1 << j } else { acc })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.0 == v).map(|a| a.1).collect()
    }

    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.1 == v).map(|a| a.0).collect()
    }

    /// Linear extension emitting the smallest-index source each time;
    /// `None` when the orientation has a directed cycle.
    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.rank];
        for &(_, b) in &self.arrows {
            indeg[b] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.rank).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(self.rank);
        while let Some(v) = ready.pop_first() {
            out.push(v);
            for w in self.successors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (out.len() == self.rank).then_some(out)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn canonical_word(&self) -> Word {
        Word::new(self.topological_order().expect("orientation is acyclic"))
    }

    fn reach(&self, start: usize, forward: bool) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let next = if forward {
                self.successors(v)
            } else {
                self.predecessors(v)
            };
            for w in next {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// `s <= t`: a directed path from `s` to `t` (reflexive).
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.reach(s, true).contains(&t)
    }

    /// `{ t : t <= s }`.
    pub fn down_set(&self, s: usize) -> BTreeSet<usize> {
        self.reach(s, false)
    }

    /// `{ t : s <= t }`.
    pub fn up_set(&self, s: usize) -> BTreeSet<usize> {
        self.reach(s, true)
    }

    /// Sinks, ascending.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.rank).filter(|&v| self.successors(v).is_empty()).collect()
    }

    /// Sources, ascending.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.rank).filter(|&v| self.predecessors(v).is_empty()).collect()
    }

    /// All arrows reversed: the orientation of the inverse element.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            rank: self.rank,
            arrows: self.arrows.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Reverse every arrow with exactly one endpoint in `set`.
    pub fn flip_boundary(&self, set: &BTreeSet<usize>) -> Orientation {
        Orientation {
            rank: self.rank,
            arrows: self
                .arrows
                .iter()
                .map(|&(a, b)| {
                    if set.contains(&a) != set.contains(&b) {
                        (b, a)
                    } else {
                        (a, b)
                    }
                })
                .collect(),
        }
    }
}

/// Every acyclic orientation of `graph`, ordered by [`Orientation::bits`].
pub fn acyclic_orientations(graph: &CoxeterGraph) -> Vec<Orientation> {
    let m = graph.edges().len();
    assert!(m < 32, "brute force over 2^{m} orientations");
    (0..1u64 << m)
        .filter_map(|bits| Orientation::from_bits(graph, bits).ok())
        .collect()
}
