use super::orientation::{acyclic_orientations, Orientation};
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};
use crate::roots::{GroupElement, Word};
use crate::system::{CoxeterSystem, Kind};

/// A Coxeter element, identified by its orientation of the Coxeter graph.
///
/// `word` is the canonical linear extension (smallest available source
/// first) and `element` its matrix. Equality compares orientations only.
#[derive(Clone, Debug)]
pub struct CoxeterElementDescriptor<S: Scalar> {
    orientation: Orientation,
    word: Word,
    element: GroupElement<S>,
}

impl<S: Scalar> PartialEq for CoxeterElementDescriptor<S> {
    fn eq(&self, other: &Self) -> bool {
        self.orientation == other.orientation
    }
}

impl<S: Scalar> Eq for CoxeterElementDescriptor<S> {}

impl<S: Scalar> CoxeterElementDescriptor<S> {
    pub fn from_orientation(sys: &CoxeterSystem<S>, orientation: Orientation) -> Result<Self> {
        if orientation.rank() != sys.rank() {
            return Err(CoxeterError::Precondition(format!(
                "orientation of rank {} for a system of rank {}",
                orientation.rank(),
                sys.rank()
            )));
        }
        if !orientation.is_acyclic() {
            return Err(CoxeterError::CyclicOrientation);
        }
        let word = orientation.canonical_word();
        let element = sys.word_to_element(&word)?;
        Ok(CoxeterElementDescriptor {
            orientation,
            word,
            element,
        })
    }

    pub fn from_word(sys: &CoxeterSystem<S>, word: &Word) -> Result<Self> {
        Self::from_orientation(sys, Orientation::from_word(sys.graph(), word)?)
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn element(&self) -> &GroupElement<S> {
        &self.element
    }

    /// `c^{-1}`, whose orientation is the reverse of `c`'s.
    pub fn inverse(&self, sys: &CoxeterSystem<S>) -> Result<Self> {
        Self::from_orientation(sys, self.orientation.reversed())
    }

    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.orientation.leq(s, t)
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        self.orientation.maximal_elements()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.orientation.minimal_elements()
    }
}

impl<S: Scalar> CoxeterSystem<S> {
    /// One descriptor per acyclic orientation, ordered by orientation bits.
    pub fn all_coxeter_elements(&self) -> Result<Vec<CoxeterElementDescriptor<S>>> {
        acyclic_orientations(self.graph())
            .into_iter()
            .map(|o| CoxeterElementDescriptor::from_orientation(self, o))
            .collect()
    }

    /// Whether `c^mu` has length `mu * n`; only meaningful for infinite systems.
    pub fn reduced_power_check(&self, c: &CoxeterElementDescriptor<S>, mu: usize) -> Result<bool> {
        if self.classify()?.kind == Kind::Finite {
            return Err(CoxeterError::Precondition(
                "reduced powers of Coxeter elements need an infinite group".into(),
            ));
        }
        let power = self.word_to_element(&c.word().repeated(mu))?;
        Ok(self.length(&power)? == mu * self.rank())
    }
}
