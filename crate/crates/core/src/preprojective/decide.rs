use serde::Serialize;

use crate::algebra::Scalar;
use crate::elements::{CoxeterElementDescriptor, StandardForm};
use crate::error::{CoxeterError, Result};
use crate::roots::{RootSign, RootVector};
use crate::system::{CoxeterSystem, CyclicSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

/// Why a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `c^witness(b)` is negative.
    Negative,
    /// At iteration `step`, `c` kept the root positive without lowering
    /// its depth (`depth_before -> depth_after`).
    DepthDidNotDrop {
        step: usize,
        depth_before: u32,
        depth_after: u32,
    },
    /// `b_lower > b_upper` although `lower <= upper` in the poset.
    NotMonotone { lower: usize, upper: usize },
    /// No negative image within `mu_max` powers.
    BoundExhausted { mu_max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreprojectiveVerdict {
    pub status: Status,
    pub witness_power: Option<usize>,
    pub certificate: Certificate,
    /// `(i, k)` when decided through the standard form `c_i^k`.
    pub standard: Option<(usize, usize)>,
}

impl PreprojectiveVerdict {
    fn yes(mu: usize, standard: Option<(usize, usize)>) -> Self {
        PreprojectiveVerdict {
            status: Status::Yes,
            witness_power: Some(mu),
            certificate: Certificate::Negative,
            standard,
        }
    }
}

fn require_positive<S: Scalar>(beta: &RootVector<S>) -> Result<()> {
    match beta.root_sign()? {
        RootSign::Positive => Ok(()),
        RootSign::Negative => Err(CoxeterError::Precondition("expected a positive root".into())),
    }
}

impl<S: Scalar> CoxeterSystem<S> {
    /// Exact membership in `P(c_i^k)`. Along `P(c_i^k)`, each application of
    /// `c_i^k` that stays positive lowers the depth strictly; a step that
    /// does not certifies non-membership.
    pub fn decide_standard(&self, beta: &RootVector<S>, sf: &StandardForm<S>) -> Result<PreprojectiveVerdict> {
        require_positive(beta)?;
        let c = sf.descriptor.element();
        let start = self.depth(beta)?;
        let mut depth = start;
        let mut gamma = beta.clone();
        let standard = Some((sf.i, sf.k));
        for step in 1.. {
            if step > start as usize {
                return Err(CoxeterError::Internal(format!(
                    "decision for {beta:?} ran past its depth {start}"
                )));
            }
            gamma = c.apply(&gamma);
            if gamma.root_sign()? == RootSign::Negative {
                return Ok(PreprojectiveVerdict::yes(step, standard));
            }
            let next = self.depth(&gamma)?;
            if next >= depth {
                return Ok(PreprojectiveVerdict {
                    status: Status::No,
                    witness_power: None,
                    certificate: Certificate::DepthDidNotDrop {
                        step,
                        depth_before: depth,
                        depth_after: next,
                    },
                    standard,
                });
            }
            depth = next;
        }
        unreachable!()
    }

    /// First arrow `a -> b` of the poset with `b_a > b_b`, if any.
    pub fn monotone_violation(&self, beta: &RootVector<S>, c: &CoxeterElementDescriptor<S>) -> Option<(usize, usize)> {
        c.orientation()
            .arrows()
            .iter()
            .copied()
            .find(|&(a, b)| (beta.0[b].clone() - beta.0[a].clone()).is_neg())
    }

    /// Coefficients weakly increase along the poset of `c_i^k`; necessary
    /// for membership in `P(c_i^k)`.
    pub fn monotone_check(&self, beta: &RootVector<S>, sf: &StandardForm<S>) -> bool {
        self.monotone_violation(beta, &sf.descriptor).is_none()
    }

    /// Delegates to [`Self::decide_standard`] when `c` is standard; otherwise
    /// iterates `c` at most `mu_max` times and answers Yes or Unknown.
    pub fn decide_general(
        &self,
        beta: &RootVector<S>,
        c: &CoxeterElementDescriptor<S>,
        spec: Option<&CyclicSpec>,
        mu_max: usize,
    ) -> Result<PreprojectiveVerdict> {
        if let Some(spec) = spec {
            if let Some((i, k)) = self.has_greatest(c, spec)? {
                return self.decide_standard(beta, &self.build_standard(spec, i, k)?);
            }
        }
        require_positive(beta)?;
        let mut gamma = beta.clone();
        for mu in 1..=mu_max {
            gamma = c.element().apply(&gamma);
            if gamma.root_sign()? == RootSign::Negative {
                return Ok(PreprojectiveVerdict::yes(mu, None));
            }
        }
        Ok(PreprojectiveVerdict {
            status: Status::Unknown,
            witness_power: None,
            certificate: Certificate::BoundExhausted { mu_max },
            standard: None,
        })
    }
}
