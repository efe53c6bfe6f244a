use std::collections::{BTreeMap, HashMap};

use super::vector::{Root, RootVector, VectorKey};
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};
use crate::system::CoxeterSystem;

/// Default depth bound for enumerations.
pub const DEFAULT_DEPTH: u32 = 20;
/// Default cap on the number of roots held by one enumeration.
pub const DEFAULT_ROOT_GUARD: usize = 2_000_000;

/// Positive roots grouped by depth: `layers()[r - 1]` holds `Φ⁺(r)`.
///
/// Each layer is sorted by the exact coordinate key.
#[derive(Clone, Debug)]
pub struct DepthLayers<S: Scalar> {
    layers: Vec<Vec<Root<S>>>,
    index: HashMap<VectorKey<S>, u32>,
}

impl<S: Scalar> DepthLayers<S> {
    pub fn max_depth(&self) -> u32 {
        self.layers.len() as u32
    }

    pub fn layers(&self) -> &[Vec<Root<S>>] {
        &self.layers
    }

    /// Roots of depth exactly `r` (1-based); empty beyond the bound.
    pub fn layer(&self, r: u32) -> &[Root<S>] {
        match r {
            0 => &[],
            r => self.layers.get(r as usize - 1).map_or(&[], Vec::as_slice),
        }
    }

    pub fn counts(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn depth_of(&self, v: &RootVector<S>) -> Option<u32> {
        self.index.get(&v.key()).copied()
    }

    pub fn contains(&self, v: &RootVector<S>) -> bool {
        self.index.contains_key(&v.key())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root<S>> {
        self.layers.iter().flatten()
    }
}

impl<S: Scalar> CoxeterSystem<S> {
    /// `(a_i | v)`.
    pub fn pairing(&self, i: usize, v: &RootVector<S>) -> S {
        self.form().pair_simple(i, &v.0)
    }

    /// Depth of a positive root by greedy descent: reflect in the
    /// smallest-index generator with `(a_i | b) > 0`, each such step lowering
    /// the depth by exactly one, until a simple root remains.
    pub fn depth(&self, beta: &RootVector<S>) -> Result<u32> {
        let mut cur = beta.clone();
        let mut steps = 0u32;
        loop {
            if cur.simple_index().is_some() {
                return Ok(steps + 1);
            }
            let i = (0..self.rank())
                .find(|&i| self.pairing(i, &cur).is_pos())
                .ok_or_else(|| {
                    CoxeterError::Internal(format!("no descending generator for {cur:?}"))
                })?;
            cur = self.reflect(i, &cur);
            steps += 1;
            if !cur.is_positive_root() {
                return Err(CoxeterError::Internal(format!(
                    "descent left the positive roots at {cur:?}"
                )));
            }
        }
    }

    /// Breadth-first layering of the positive roots up to depth `max_depth`.
    pub fn enumerate_by_depth(&self, max_depth: u32) -> Result<DepthLayers<S>> {
        self.enumerate_by_depth_guarded(max_depth, DEFAULT_ROOT_GUARD)
    }

    pub fn enumerate_by_depth_guarded(&self, max_depth: u32, guard: usize) -> Result<DepthLayers<S>> {
        let (layers, truncated) = self.enumerate_by_depth_partial(max_depth, guard);
        if truncated {
            return Err(CoxeterError::Resource(format!(
                "more than {guard} roots below depth {}",
                layers.max_depth() + 1
            )));
        }
        Ok(layers)
    }

    /// Like [`Self::enumerate_by_depth_guarded`], but returns the complete
    /// layers found so far, flagged as truncated, instead of failing.
    pub fn enumerate_by_depth_partial(&self, max_depth: u32, guard: usize) -> (DepthLayers<S>, bool) {
        let n = self.rank();
        let mut index: HashMap<VectorKey<S>, u32> = HashMap::new();
        let mut layers: Vec<Vec<Root<S>>> = Vec::new();
        if max_depth == 0 {
            return (DepthLayers { layers, index }, false);
        }
        let first: Vec<Root<S>> = (0..n)
            .map(|i| Root {
                vec: self.simple_root(i),
                positive: true,
                depth: Some(1),
            })
            .collect();
        for r in &first {
            index.insert(r.key(), 1);
        }
        layers.push(first);
        for depth in 2..=max_depth {
            let mut next: BTreeMap<VectorKey<S>, RootVector<S>> = BTreeMap::new();
            for beta in layers.last().expect("at least one layer") {
                for i in 0..n {
                    if self.pairing(i, &beta.vec).is_neg() {
                        let img = self.reflect(i, &beta.vec);
                        let key = img.key();
                        if !index.contains_key(&key) {
                            next.entry(key).or_insert(img);
                        }
                    }
                }
            }
            if index.len() + next.len() > guard {
                return (DepthLayers { layers, index }, true);
            }
            let layer: Vec<Root<S>> = next
                .into_iter()
                .map(|(key, vec)| {
                    index.insert(key, depth);
                    Root {
                        vec,
                        positive: true,
                        depth: Some(depth),
                    }
                })
                .collect();
            layers.push(layer);
        }
        (DepthLayers { layers, index }, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraicReal;
    use crate::system::Label;

    type Sys = CoxeterSystem<AlgebraicReal>;

    fn cyc(v: &[u64]) -> Sys {
        Sys::cyclic(&v.iter().map(|&m| Label::Finite(m)).collect::<Vec<_>>()).unwrap()
    }

    fn ints(v: &[i64]) -> RootVector<AlgebraicReal> {
        RootVector::from_integers(v)
    }

    #[test]
    fn depth_one_layer_is_simple_roots() {
        let sys = cyc(&[3, 3, 4]);
        let layers = sys.enumerate_by_depth(1).unwrap();
        assert_eq!(layers.counts(), vec![3]);
    }

    #[test]
    fn a2_tilde_second_layer() {
        let sys = cyc(&[3, 3, 3]);
        let layers = sys.enumerate_by_depth(2).unwrap();
        let second: Vec<_> = layers.layer(2).iter().map(|r| r.vec.clone()).collect();
        assert_eq!(second.len(), 3);
        for v in [ints(&[1, 1, 0]), ints(&[0, 1, 1]), ints(&[1, 0, 1])] {
            assert!(second.contains(&v));
        }
    }

    #[test]
    fn greedy_depth_agrees_with_layers() {
        let sys = cyc(&[3, 3, 3]);
        let layers = sys.enumerate_by_depth(8).unwrap();
        for root in layers.iter() {
            assert_eq!(sys.depth(&root.vec).unwrap(), root.depth.unwrap());
        }
        assert_eq!(sys.depth(&ints(&[1, 1, 0])).unwrap(), 2);
        // 2a_1 + a_2 + a_3 = s_1 s_2 (a_3)
        assert_eq!(layers.depth_of(&ints(&[2, 1, 1])), Some(3));
        assert_eq!(sys.depth(&ints(&[2, 1, 1])).unwrap(), 3);
    }

    #[test]
    fn three_three_four_second_layer() {
        // a_1 + a_2 and a_2 + a_3 (each reached from both ends), plus
        // a_1 + sqrt2 a_3 and sqrt2 a_1 + a_3 across the 4-edge
        let sys = cyc(&[3, 3, 4]);
        let layers = sys.enumerate_by_depth(2).unwrap();
        let second = layers.layer(2);
        let mut by_hand = std::collections::HashSet::new();
        for r in layers.layer(1) {
            for i in 0..3 {
                if sys.pairing(i, &r.vec).is_neg() {
                    by_hand.insert(sys.reflect(i, &r.vec).key());
                }
            }
        }
        assert_eq!(second.len(), by_hand.len());
        assert_eq!(second.len(), 4);
    }

    #[test]
    fn layers_are_unit_vectors_for_the_form() {
        let sys = cyc(&[3, 3, 4]);
        let layers = sys.enumerate_by_depth(7).unwrap();
        for root in layers.iter() {
            assert_eq!(sys.form().pair(&root.vec.0, &root.vec.0), AlgebraicReal::from_integer(1));
        }
    }

    #[test]
    fn guard_raises_resource_error() {
        let sys = cyc(&[3, 3, 4]);
        assert!(matches!(
            sys.enumerate_by_depth_guarded(12, 10),
            Err(CoxeterError::Resource(_))
        ));
    }
}
