use std::fmt;

use serde::{Serialize, Serializer};

use super::vector::{RootSign, RootVector};
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};
use crate::system::CoxeterSystem;

/// Sequence of 0-based generator indices. Displayed 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// Word from 1-based letters, as written in the literature.
    pub fn one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| l - 1).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeated(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }
}

/// Serialized 1-based, like the display form.
impl Serialize for Word {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l + 1)?;
        }
        write!(f, ")")
    }
}

/// Element of `W` as its exact matrix on `V`; column `j` is `w(a_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> GroupElement<S> {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|r| (0..n).map(|c| if r == c { S::one() } else { S::zero() }).collect())
            .collect();
        GroupElement { rows }
    }

    /// Wrap a square matrix; no check that it lies in the group.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        GroupElement { rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, x)| if r == c { *x == S::one() } else { x.is_zero() })
        })
    }

    pub fn key(&self) -> Vec<S::Key> {
        self.rows.iter().flatten().map(Scalar::key).collect()
    }

    /// `w(a_j)`.
    pub fn column(&self, j: usize) -> RootVector<S> {
        RootVector(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn apply(&self, v: &RootVector<S>) -> RootVector<S> {
        RootVector(
            self.rows
                .iter()
                .map(|row| {
                    row.iter().zip(&v.0).fold(S::zero(), |acc, (a, b)| {
                        if a.is_zero() || b.is_zero() {
                            acc
                        } else {
                            acc + a.clone() * b.clone()
                        }
                    })
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &GroupElement<S>) -> GroupElement<S> {
        let n = self.rank();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n).fold(S::zero(), |acc, k| {
                            let a = &self.rows[r][k];
                            let b = &other.rows[k][c];
                            if a.is_zero() || b.is_zero() {
                                acc
                            } else {
                                acc + a.clone() * b.clone()
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        GroupElement { rows }
    }

    pub fn pow(&self, e: usize) -> GroupElement<S> {
        let mut out = GroupElement::identity(self.rank());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `self * s_i`: column `c` gains `-2 (a_i | a_c)` times column `i`.
    pub fn mul_reflection(&self, sys: &CoxeterSystem<S>, i: usize) -> GroupElement<S> {
        let form = sys.form();
        let n = self.rank();
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            let pivot = row[i].clone();
            if pivot.is_zero() {
                continue;
            }
            for c in 0..n {
                let b = form.get(i, c);
                if b.is_zero() {
                    continue;
                }
                let v = row[c].clone() - S::from_i64(2) * b.clone() * pivot.clone();
                row[c] = v;
            }
        }
        GroupElement { rows }
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> GroupElement<S> {
        let n = self.rank();
        let mut a = self.rows.clone();
        let mut inv = GroupElement::<S>::identity(n).rows;
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_null())
                .expect("group elements are invertible");
            a.swap(p, col);
            inv.swap(p, col);
            let pivot = a[col][col].clone();
            for c in 0..n {
                a[col][c] = a[col][c].clone() / pivot.clone();
                inv[col][c] = inv[col][c].clone() / pivot.clone();
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = a[r][c].clone() - f.clone() * a[col][c].clone();
                    inv[r][c] = inv[r][c].clone() - f.clone() * inv[col][c].clone();
                }
            }
        }
        GroupElement { rows: inv }
    }

    pub fn conjugate_by(&self, w: &GroupElement<S>) -> GroupElement<S> {
        w.mul(self).mul(&w.inverse())
    }
}

impl<S: Scalar> CoxeterSystem<S> {
    /// `s_i(v) = v - 2(a_i | v) a_i`; only coordinate `i` changes.
    pub fn reflect(&self, i: usize, v: &RootVector<S>) -> RootVector<S> {
        let pairing = self.form().pair_simple(i, &v.0);
        let mut out = v.clone();
        if !pairing.is_zero() {
            out.0[i] = v.0[i].clone() - S::from_i64(2) * pairing;
        }
        out
    }

    /// Apply the word `t_1 ... t_k` to `v`: `t_k` acts first.
    pub fn apply_word(&self, word: &Word, v: &RootVector<S>) -> RootVector<S> {
        word.0
            .iter()
            .rev()
            .fold(v.clone(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn simple_root(&self, i: usize) -> RootVector<S> {
        RootVector::simple(i, self.rank())
    }

    pub fn reflection(&self, i: usize) -> GroupElement<S> {
        GroupElement::identity(self.rank()).mul_reflection(self, i)
    }

    /// Matrix of `t_1 t_2 ... t_k`.
    pub fn word_to_element(&self, word: &Word) -> Result<GroupElement<S>> {
        let n = self.rank();
        let mut g = GroupElement::identity(n);
        for &letter in &word.0 {
            if letter >= n {
                return Err(CoxeterError::LetterOutOfRange { letter, rank: n });
            }
            g = g.mul_reflection(self, letter);
        }
        Ok(g)
    }

    pub fn root_sign(&self, v: &RootVector<S>) -> Result<RootSign> {
        v.root_sign()
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
    fn simple_reflections() {
        let sys = cyc(&[3, 3, 3]);
        assert_eq!(sys.reflect(0, &sys.simple_root(0)), ints(&[-1, 0, 0]));
        assert_eq!(sys.reflect(0, &sys.simple_root(1)), ints(&[1, 1, 0]));
    }

    #[test]
    fn reflection_across_a_four_edge() {
        let sys = cyc(&[4, 3, 3]);
        let img = sys.reflect(0, &sys.simple_root(1));
        let theta_val = 2.0 * (std::f64::consts::PI / 4.0).cos();
        assert_eq!(img.0[1], AlgebraicReal::from_integer(1));
        assert!((img.0[0].to_f64() - theta_val).abs() < 1e-12);
        assert_eq!(img.0[2], AlgebraicReal::from_integer(0));
    }

    #[test]
    fn words_and_elements() {
        let sys = cyc(&[3, 3, 3]);
        assert!(sys.word_to_element(&Word::default()).unwrap().is_identity());
        assert!(sys.word_to_element(&Word::new(vec![0, 0])).unwrap().is_identity());
        // s_1 s_2 (a_3): s_2(a_3) = a_2 + a_3, then s_1 of that by reflect twice
        let w = Word::new(vec![0, 1]);
        let by_reflect = sys.reflect(0, &sys.reflect(1, &sys.simple_root(2)));
        let g = sys.word_to_element(&w).unwrap();
        assert_eq!(g.column(2), by_reflect);
        assert_eq!(sys.apply_word(&w, &sys.simple_root(2)), by_reflect);
        assert_eq!(by_reflect, ints(&[2, 1, 1]));
        assert!(matches!(
            sys.word_to_element(&Word::new(vec![3])),
            Err(CoxeterError::LetterOutOfRange { letter: 3, rank: 3 })
        ));
    }

    #[test]
    fn root_signs() {
        let sys = cyc(&[3, 3, 3]);
        assert_eq!(sys.root_sign(&ints(&[1, 0, 0])).unwrap(), RootSign::Positive);
        assert_eq!(sys.root_sign(&ints(&[-1, 0, 0])).unwrap(), RootSign::Negative);
        assert_eq!(
            sys.root_sign(&sys.reflect(0, &sys.simple_root(1))).unwrap(),
            RootSign::Positive
        );
        assert_eq!(sys.root_sign(&ints(&[1, -1, 0])), Err(CoxeterError::NotARoot));
    }

    #[test]
    fn inverse_and_conjugation() {
        let sys = cyc(&[3, 3, 4]);
        let g = sys.word_to_element(&Word::new(vec![0, 1, 2, 1])).unwrap();
        assert!(g.mul(&g.inverse()).is_identity());
        let h = sys.word_to_element(&Word::new(vec![2, 0])).unwrap();
        let conj = g.conjugate_by(&h);
        assert_eq!(conj, h.mul(&g).mul(&sys.word_to_element(&Word::new(vec![0, 2])).unwrap()));
    }
}
