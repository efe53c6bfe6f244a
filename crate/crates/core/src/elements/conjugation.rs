use std::collections::BTreeSet;

use serde::Serialize;

use super::descriptor::CoxeterElementDescriptor;
use super::standard::bracket;
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};
use crate::roots::{GroupElement, Word};
use crate::system::{CoxeterSystem, CyclicSpec};

/// One reduction step `c -> w c w^{-1}` aimed at the maximal element `target`.
///
/// `lambda <= mu <= nu` are 1-based cycle positions (bracketed) such that
/// the down-set of `target` is the arc from `lambda` to `nu` through `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationStep {
    pub target: usize,
    pub lambda: usize,
    pub mu: usize,
    pub nu: usize,
    pub w: Word,
    pub maximal_before: Vec<usize>,
    pub maximal_after: Vec<usize>,
}

/// `w c w^{-1} = c_i^k`, with `w` also given as a reduced word.
#[derive(Clone, Debug)]
pub struct ConjugationCertificate<S: Scalar> {
    pub w: GroupElement<S>,
    pub w_word: Word,
    pub i: usize,
    pub k: usize,
    pub steps: Vec<ConjugationStep>,
}

impl<S: Scalar> CoxeterSystem<S> {
    /// One step: move the arc strictly inside the down-set of `s` to the
    /// front of `c`. Returns the step record, `w` and the new element.
    fn conjugation_step(
        &self,
        c: &CoxeterElementDescriptor<S>,
        spec: &CyclicSpec,
        s: usize,
    ) -> Result<(ConjugationStep, GroupElement<S>, CoxeterElementDescriptor<S>)> {
        let n = spec.len() as i64;
        let down = c.orientation().down_set(s);
        let p = spec.position(s) as i64;
        let inside = |q: i64| down.contains(&spec.vertex(spec.wrap(q)));
        let mut lambda = p;
        while lambda > p - n + 1 && inside(lambda - 1) {
            lambda -= 1;
        }
        let mut nu = p;
        while nu < lambda + n - 1 && inside(nu + 1) {
            nu += 1;
        }
        if (nu - lambda + 1) as usize != down.len() || nu - lambda < 2 {
            return Err(CoxeterError::TheoremContradiction(format!(
                "down-set of {s} in {} is not an arc of length >= 3",
                c.word()
            )));
        }
        let vertex = |q: i64| spec.vertex(spec.wrap(q));
        let mut letters: Vec<usize> = (lambda + 1..p).map(vertex).collect();
        letters.extend((p + 1..nu).rev().map(vertex));
        letters.push(s);
        let w_word = Word::new(letters);
        let inner: BTreeSet<usize> = w_word.letters().iter().copied().collect();

        let next = CoxeterElementDescriptor::from_orientation(self, c.orientation().flip_boundary(&inner))?;
        let w = self.word_to_element(&w_word)?;
        if &c.element().conjugate_by(&w) != next.element() {
            return Err(CoxeterError::Internal(format!(
                "conjugating {} by {} did not give {}",
                c.word(),
                w_word,
                next.word()
            )));
        }
        let maximal_before = c.maximal_elements();
        let maximal_after = next.maximal_elements();
        if !maximal_after.iter().all(|m| maximal_before.contains(m)) {
            return Err(CoxeterError::TheoremContradiction(format!(
                "maximal elements grew from {maximal_before:?} to {maximal_after:?}"
            )));
        }
        let one_based = |q: i64| bracket(spec.wrap(q) as i64 + 1, spec.len());
        let step = ConjugationStep {
            target: s,
            lambda: one_based(lambda),
            mu: one_based(p),
            nu: one_based(nu),
            w: w_word,
            maximal_before,
            maximal_after,
        };
        Ok((step, w, next))
    }

    /// Conjugate `c` to a standard form by repeated reduction steps, always
    /// aiming at the smallest-index maximal element still maximal.
    pub fn conjugate_to_standard(
        &self,
        c: &CoxeterElementDescriptor<S>,
        spec: &CyclicSpec,
    ) -> Result<ConjugationCertificate<S>> {
        let n = spec.len();
        let bound = 4 * n * n;
        let mut cur = c.clone();
        let mut w_total = GroupElement::identity(n);
        let mut steps = Vec::new();
        let mut target: Option<usize> = None;
        loop {
            let maximal = cur.maximal_elements();
            if maximal.len() == 1 {
                break;
            }
            if steps.len() >= bound {
                return Err(CoxeterError::Internal(format!(
                    "no standard form after {bound} reduction steps from {}",
                    c.word()
                )));
            }
            let s = match target {
                Some(s) if maximal.contains(&s) => s,
                _ => maximal[0],
            };
            target = Some(s);
            let (step, w, next) = self.conjugation_step(&cur, spec, s)?;
            w_total = w.mul(&w_total);
            steps.push(step);
            cur = next;
        }
        let (i, k) = self
            .has_greatest(&cur, spec)?
            .ok_or_else(|| CoxeterError::Internal("single maximal element but no greatest".into()))?;
        let standard = self.build_standard(spec, i, k)?;
        if &c.element().conjugate_by(&w_total) != standard.descriptor.element() {
            return Err(CoxeterError::Internal(format!(
                "certificate for {} fails the matrix check",
                c.word()
            )));
        }
        let w_word = self.reduced_word(&w_total)?;
        Ok(ConjugationCertificate {
            w: w_total,
            w_word,
            i,
            k,
            steps,
        })
    }
}
