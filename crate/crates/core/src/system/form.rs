use std::cmp::Ordering;

use serde::Serialize;

use super::cyclic::{detect_cyclic, CyclicSpec};
use super::matrix::{CoxeterGraph, CoxeterMatrix, Label};
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};

/// Symmetric bilinear form `(a_i | a_j) = -cos(pi/m_ij)` on the simple roots.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S> {
    entries: Vec<Vec<S>>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.entries
    }

    /// `(u | v)` for coordinate vectors in the simple-root basis.
    pub fn pair(&self, u: &[S], v: &[S]) -> S {
        let mut acc = S::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.entries[i][j].is_zero() {
                    acc = acc + ui.clone() * vj.clone() * self.entries[i][j].clone();
                }
            }
        }
        acc
    }

    /// `(a_i | v)`.
    pub fn pair_simple(&self, i: usize, v: &[S]) -> S {
        let mut acc = S::zero();
        for (j, vj) in v.iter().enumerate() {
            let b = &self.entries[i][j];
            if !vj.is_zero() && !b.is_zero() {
                acc = acc + b.clone() * vj.clone();
            }
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

/// Type of an irreducible system read off the signature of its form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    /// Sign (-1, 0, 1) of each leading principal minor, sizes 1..=n.
    pub leading_minor_signs: Vec<i8>,
    pub corank: usize,
}

/// A Coxeter system together with its form over the scalar carrier `S`.
#[derive(Clone, Debug)]
pub struct CoxeterSystem<S: Scalar> {
    matrix: CoxeterMatrix,
    graph: CoxeterGraph,
    field: S::Field,
    form: BilinearForm<S>,
}

impl<S: Scalar> CoxeterSystem<S> {
    /// Builds the exact form over the field generated by the finite labels.
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        let field = S::field_for_labels(&matrix.finite_edge_labels())?;
        let n = matrix.rank();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let m = match matrix.get(i, j) {
                    Label::Finite(m) => Some(m),
                    Label::Infinite => None,
                };
                row.push(S::minus_cos(m, &field)?);
            }
            entries.push(row);
        }
        let graph = matrix.graph();
        Ok(CoxeterSystem {
            matrix,
            graph,
            field,
            form: BilinearForm { entries },
        })
    }

    pub fn cyclic(labels: &[Label]) -> Result<Self> {
        Self::new(CoxeterMatrix::cyclic(labels)?)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn form(&self) -> &BilinearForm<S> {
        &self.form
    }

    pub fn cyclic_spec(&self) -> Option<CyclicSpec> {
        detect_cyclic(&self.matrix)
    }

    pub fn require_cyclic(&self) -> Result<CyclicSpec> {
        self.cyclic_spec().ok_or(CoxeterError::NotCyclic)
    }

    /// Finite / affine / indefinite by exact principal minors.
    pub fn classify(&self) -> Result<Classification> {
        if !self.graph.is_connected() {
            return Err(CoxeterError::Reducible);
        }
        let n = self.rank();
        let rows = self.form.rows();
        let leading_minor_signs: Vec<i8> = (1..=n)
            .map(|k| {
                let block: Vec<Vec<S>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
                match determinant(block).sign() {
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                    Ordering::Greater => 1,
                }
            })
            .collect();
        let corank = n - rank_of(rows.to_vec());
        let kind = if leading_minor_signs.iter().all(|&s| s > 0) {
            Kind::Finite
        } else if leading_minor_signs[n - 1] == 0
            && leading_minor_signs[..n - 1].iter().all(|&s| s > 0)
            && corank == 1
        {
            Kind::Affine
        } else {
            Kind::Indefinite
        };
        Ok(Classification {
            kind,
            leading_minor_signs,
            corank,
        })
    }
}

/// Determinant by elimination with nonzero pivot search.
pub(crate) fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    let mut det = S::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_null()) else {
            return S::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_null() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            for c in col..n {
                let v = m[r][c].clone() - factor.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    det
}

pub(crate) fn rank_of<S: Scalar>(mut m: Vec<Vec<S>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_null()) else {
            continue;
        };
        m.swap(p, rank);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_null() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            for c in col..cols {
                let v = m[r][c].clone() - factor.clone() * m[rank][c].clone();
                m[r][c] = v;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraicReal;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Exact = CoxeterSystem<AlgebraicReal>;

    fn labels(v: &[u64]) -> Vec<Label> {
        v.iter().map(|&m| Label::Finite(m)).collect()
    }

    fn half() -> AlgebraicReal {
        AlgebraicReal::rational(BigRational::new((-1).into(), 2.into()))
    }

    #[test]
    fn gram_of_a2_tilde() {
        let sys = Exact::cyclic(&labels(&[3, 3, 3])).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { AlgebraicReal::from_integer(1) } else { half() };
                assert_eq!(sys.form().get(i, j), &expected);
            }
        }
    }

    #[test]
    fn gram_special_labels() {
        let mat = CoxeterMatrix::path(&[Label::Infinite, 2.into()]).unwrap();
        let sys = Exact::new(mat).unwrap();
        assert_eq!(sys.form().get(0, 1), &AlgebraicReal::from_integer(-1));
        assert!(sys.form().get(0, 2).is_zero());
    }

    #[test]
    fn classify_examples() {
        let a2t = Exact::cyclic(&labels(&[3, 3, 3])).unwrap().classify().unwrap();
        assert_eq!(a2t.kind, Kind::Affine);
        assert_eq!(a2t.corank, 1);
        let c334 = Exact::cyclic(&labels(&[3, 3, 4])).unwrap().classify().unwrap();
        assert_eq!(c334.kind, Kind::Indefinite);
        assert_eq!(c334.leading_minor_signs, vec![1, 1, -1]);
        let a3 = Exact::new(CoxeterMatrix::path(&labels(&[3, 3])).unwrap())
            .unwrap()
            .classify()
            .unwrap();
        assert_eq!(a3.kind, Kind::Finite);
        assert_eq!(a3.leading_minor_signs, vec![1, 1, 1]);
    }

    #[test]
    fn a3_leading_minors_are_one_three_quarters_one_half() {
        let sys = Exact::new(CoxeterMatrix::path(&labels(&[3, 3])).unwrap()).unwrap();
        let rows = sys.form().rows();
        let expected = [(1, 1), (3, 4), (1, 2)];
        for (k, (p, q)) in (1..=3).zip(expected) {
            let block: Vec<Vec<AlgebraicReal>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
            assert_eq!(
                determinant(block),
                AlgebraicReal::rational(BigRational::new(p.into(), q.into()))
            );
        }
    }

    #[test]
    fn a1_tilde_is_affine() {
        let sys = Exact::new(CoxeterMatrix::path(&[Label::Infinite]).unwrap()).unwrap();
        assert_eq!(sys.classify().unwrap().kind, Kind::Affine);
    }

    #[test]
    fn reducible_is_rejected() {
        let sys = Exact::new(CoxeterMatrix::path(&labels(&[3, 2])).unwrap()).unwrap();
        assert_eq!(sys.classify(), Err(CoxeterError::Reducible));
    }

    #[test]
    fn float_and_rational_carriers_classify_alike() {
        let mat = CoxeterMatrix::cyclic(&labels(&[3, 3, 3, 3])).unwrap();
        let r = CoxeterSystem::<BigRational>::new(mat.clone()).unwrap().classify().unwrap();
        let f = CoxeterSystem::<f64>::new(mat).unwrap().classify().unwrap();
        assert_eq!(r, f);
        assert_eq!(r.kind, Kind::Affine);
    }
}
