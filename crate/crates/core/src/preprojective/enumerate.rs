use std::collections::{BTreeMap, HashMap};

use crate::algebra::Scalar;
use crate::elements::CoxeterElementDescriptor;
use crate::error::{CoxeterError, Result};
use crate::roots::{Root, RootVector, VectorKey};
use crate::system::CoxeterSystem;

pub const DEFAULT_MU_MAX: usize = 50;
pub const DEFAULT_DEPTH_CAP: u32 = 20;

/// `P(c)` layer by layer: layer `mu` is `c^{-mu}` of the seed set.
#[derive(Clone, Debug)]
pub struct PreprojectiveEnumeration<S: Scalar> {
    layers: Vec<Vec<Root<S>>>,
    index: HashMap<VectorKey<S>, (usize, u32)>,
}

impl<S: Scalar> PreprojectiveEnumeration<S> {
    pub fn layers(&self) -> &[Vec<Root<S>>] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root<S>> {
        self.layers.iter().flatten()
    }

    pub fn contains(&self, v: &RootVector<S>) -> bool {
        self.index.contains_key(&v.key())
    }

    /// `(layer, depth)` of a member.
    pub fn locate(&self, v: &RootVector<S>) -> Option<(usize, u32)> {
        self.index.get(&v.key()).copied()
    }

    /// Members of depth exactly `r`.
    pub fn at_depth(&self, r: u32) -> Vec<&Root<S>> {
        self.iter().filter(|root| root.depth == Some(r)).collect()
    }

    /// Number of members per depth.
    pub fn depth_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for root in self.iter() {
            *out.entry(root.depth.expect("depth computed")).or_insert(0) += 1;
        }
        out
    }
}

impl<S: Scalar> CoxeterSystem<S> {
    /// `Φ⁺ ∩ c^{-1}(Φ⁻)`, exactly `n` roots.
    pub fn seed_inversions(&self, c: &CoxeterElementDescriptor<S>) -> Result<Vec<Root<S>>> {
        let seed = self.inversion_set(c.word(), true)?;
        if seed.len() != self.rank() {
            return Err(CoxeterError::Internal(format!(
                "{} has {} inversions, expected {}",
                c.word(),
                seed.len(),
                self.rank()
            )));
        }
        Ok(seed)
    }

    /// Layers `0..=mu_max` of `P(c)`, stopping once a whole layer lies
    /// deeper than `depth_cap`.
    pub fn enumerate_preprojective(
        &self,
        c: &CoxeterElementDescriptor<S>,
        mu_max: usize,
        depth_cap: u32,
    ) -> Result<PreprojectiveEnumeration<S>> {
        let c_inv = c.element().inverse();
        let mut index = HashMap::new();
        let mut layers: Vec<Vec<Root<S>>> = Vec::new();
        let mut frontier: Vec<RootVector<S>> =
            self.seed_inversions(c)?.into_iter().map(|r| r.vec).collect();
        for mu in 0..=mu_max {
            let mut layer = Vec::with_capacity(frontier.len());
            for v in &frontier {
                if !v.is_positive_root() {
                    return Err(CoxeterError::Internal(format!(
                        "c^-{mu} of a seed root is negative: {v:?}"
                    )));
                }
                let key = v.key();
                if index.contains_key(&key) {
                    continue;
                }
                let depth = self.depth(v)?;
                index.insert(key, (mu, depth));
                layer.push(Root {
                    vec: v.clone(),
                    positive: true,
                    depth: Some(depth),
                });
            }
            layer.sort_by_cached_key(|r| r.key());
            let done = layer.iter().all(|r| r.depth.is_some_and(|d| d > depth_cap));
            layers.push(layer);
            if done || mu == mu_max {
                break;
            }
            frontier = frontier.iter().map(|v| c_inv.apply(v)).collect();
        }
        Ok(PreprojectiveEnumeration { layers, index })
    }
}
