use std::fmt;

use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};

/// Coordinates in the basis of simple roots.
#[derive(Clone, PartialEq)]
pub struct RootVector<S>(pub Vec<S>);

/// Canonical, hashable identity of a vector: one key per coordinate.
pub type VectorKey<S> = Vec<<S as Scalar>::Key>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootSign {
    Positive,
    Negative,
}

impl<S: Scalar> RootVector<S> {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![S::zero(); n])
    }

    pub fn simple(i: usize, n: usize) -> Self {
        let mut v = vec![S::zero(); n];
        v[i] = S::one();
        RootVector(v)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RootVector(coords.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn key(&self) -> VectorKey<S> {
        self.0.iter().map(Scalar::key).collect()
    }

    pub fn negated(&self) -> Self {
        RootVector(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// Index `i` when this is exactly the simple root `a_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || *c != S::one() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    /// Sign of a root. Every root has all coordinates of one sign; anything
    /// else (including the zero vector) is rejected.
    pub fn root_sign(&self) -> Result<RootSign> {
        let mut pos = false;
        let mut neg = false;
        for c in &self.0 {
            match c.sign() {
                std::cmp::Ordering::Greater => pos = true,
                std::cmp::Ordering::Less => neg = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        match (pos, neg) {
            (true, false) => Ok(RootSign::Positive),
            (false, true) => Ok(RootSign::Negative),
            _ => Err(CoxeterError::NotARoot),
        }
    }

    /// Cheap sign test valid for vectors already known to be roots.
    pub fn is_positive_root(&self) -> bool {
        self.0
            .iter()
            .find(|c| !c.is_null())
            .is_some_and(Scalar::is_pos)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(Scalar::to_f64).collect()
    }
}

impl<S: fmt::Debug> fmt::Debug for RootVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// A positive or negative root with its depth when known.
#[derive(Clone, Debug, PartialEq)]
pub struct Root<S> {
    pub vec: RootVector<S>,
    pub positive: bool,
    pub depth: Option<u32>,
}

impl<S: Scalar> Root<S> {
    pub fn key(&self) -> VectorKey<S> {
        self.vec.key()
    }
}
