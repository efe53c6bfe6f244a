use serde::Serialize;

use crate::algebra::Scalar;
use crate::elements::StandardForm;
use crate::error::{CoxeterError, Result};
use crate::roots::RootVector;
use crate::system::{CoxeterSystem, CyclicSpec};

/// `card(P(c_i^k) ∩ Φ⁺(r))` for `r = 1..=r_max`, each at most `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerBoundReport {
    pub i: usize,
    pub k: usize,
    pub rank: usize,
    /// `counts[r - 1]` for depth `r`.
    pub counts: Vec<usize>,
}

impl<S: Scalar> CoxeterSystem<S> {
    pub fn layer_bound_check(&self, sf: &StandardForm<S>, r_max: u32) -> Result<LayerBoundReport> {
        // depths grow strictly along each orbit, so layer mu starts at depth > mu
        let pc = self.enumerate_preprojective(&sf.descriptor, r_max as usize, r_max)?;
        let by_depth = pc.depth_counts();
        let counts: Vec<usize> = (1..=r_max)
            .map(|r| by_depth.get(&r).copied().unwrap_or(0))
            .collect();
        let n = self.rank();
        if let Some(r) = counts.iter().position(|&c| c > n) {
            return Err(CoxeterError::TheoremContradiction(format!(
                "P(c_{}^{}) has {} roots of depth {} > rank {n}",
                sf.i,
                sf.k,
                counts[r],
                r + 1
            )));
        }
        Ok(LayerBoundReport {
            i: sf.i,
            k: sf.k,
            rank: n,
            counts,
        })
    }

    /// For `y >= 0` increasing along `c_i^k`, checks that `z = (c_i^k)^{-1} y`
    /// is again increasing along the poset and that `z_j` dominates `y` at
    /// `j` and at both cycle neighbours of `j`.
    pub fn lemma_depth_step_check(&self, y: &RootVector<S>, sf: &StandardForm<S>, spec: &CyclicSpec) -> Result<bool> {
        if y.0.iter().any(Scalar::is_neg) || self.monotone_violation(y, &sf.descriptor).is_some() {
            return Err(CoxeterError::Precondition(
                "expected a nonnegative vector increasing along the poset".into(),
            ));
        }
        let z = sf.descriptor.element().inverse().apply(y);
        if self.monotone_violation(&z, &sf.descriptor).is_some() {
            return Ok(false);
        }
        let n = spec.len();
        for p in 0..n {
            let j = spec.vertex(p);
            for q in [p + n - 1, p, p + 1] {
                let neighbour = spec.vertex(q % n);
                if (z.0[j].clone() - y.0[neighbour].clone()).is_neg() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
