use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::action::{GroupElement, Word};
use super::vector::{Root, RootSign, VectorKey};
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};
use crate::system::CoxeterSystem;

/// Default radius of the ball enumeration.
pub const DEFAULT_RADIUS: u32 = 10;
/// Largest radius accepted without an explicit override.
pub const RADIUS_GUARD: u32 = 12;
/// Cap on the number of group elements held per sphere.
pub const DEFAULT_SPHERE_GUARD: usize = 1_000_000;

/// Sphere sizes `card(W_r)` for `r = 0..=R` and the root test `card(W_R)^(1/R)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallSizes {
    pub sphere_sizes: Vec<usize>,
    pub growth_estimate: f64,
    /// True when the sphere guard stopped the enumeration early.
    pub truncated: bool,
}

impl<S: Scalar> CoxeterSystem<S> {
    /// `Φ⁺ ∩ w⁻¹(Φ⁻)` by the telescoping list
    /// `a_{t_k}, t_k(a_{t_{k-1}}), ..., t_k ... t_2(a_{t_1})`.
    ///
    /// For a non-reduced word some entries of the list are negative or
    /// repeated; those are dropped, or rejected when `require_reduced`.
    pub fn inversion_set(&self, word: &Word, require_reduced: bool) -> Result<Vec<Root<S>>> {
        let n = self.rank();
        if let Some(&letter) = word.0.iter().find(|&&l| l >= n) {
            return Err(CoxeterError::LetterOutOfRange { letter, rank: n });
        }
        let k = word.len();
        let mut seen: HashSet<VectorKey<S>> = HashSet::new();
        let mut out = Vec::with_capacity(k);
        for j in (0..k).rev() {
            // t_k ... t_{j+2} applied to a_{t_{j+1}} (0-based j)
            let mut v = self.simple_root(word.0[j]);
            for &letter in &word.0[j + 1..] {
                v = self.reflect(letter, &v);
            }
            match v.root_sign()? {
                RootSign::Positive => {
                    if seen.insert(v.key()) {
                        out.push(Root {
                            vec: v,
                            positive: true,
                            depth: None,
                        });
                    } else if require_reduced {
                        return Err(CoxeterError::NotReduced);
                    }
                }
                RootSign::Negative if require_reduced => return Err(CoxeterError::NotReduced),
                RootSign::Negative => {}
            }
        }
        Ok(out)
    }

    /// Reduced word by right descents: while some `g(a_i)` is negative,
    /// replace `g` by `g s_i`. The recorded letters, reversed, spell `g`.
    pub fn reduced_word(&self, g: &GroupElement<S>) -> Result<Word> {
        self.reduced_word_bounded(g, 10_000)
    }

    pub fn reduced_word_bounded(&self, g: &GroupElement<S>, max_steps: usize) -> Result<Word> {
        let n = self.rank();
        let mut cur = g.clone();
        let mut letters = Vec::new();
        loop {
            let descent = (0..n).find(|&i| !cur.column(i).is_positive_root());
            match descent {
                None => break,
                Some(i) => {
                    if letters.len() >= max_steps {
                        return Err(CoxeterError::NotAGroupElement(max_steps));
                    }
                    cur = cur.mul_reflection(self, i);
                    letters.push(i);
                }
            }
        }
        if !cur.is_identity() {
            return Err(CoxeterError::NotAGroupElement(letters.len()));
        }
        letters.reverse();
        Ok(Word(letters))
    }

    pub fn length(&self, g: &GroupElement<S>) -> Result<usize> {
        self.reduced_word(g).map(|w| w.len())
    }

    /// Spheres `W_0, ..., W_R` of the word metric, by right multiplication
    /// with exact matrix deduplication. Stops early (truncated) when a
    /// sphere would exceed `guard` elements.
    pub fn spheres(&self, radius: u32, guard: usize) -> (Vec<Vec<GroupElement<S>>>, bool) {
        let n = self.rank();
        let mut spheres = vec![vec![GroupElement::identity(n)]];
        for _ in 0..radius {
            let mut next: HashMap<Vec<S::Key>, GroupElement<S>> = HashMap::new();
            for g in spheres.last().expect("nonempty") {
                for i in 0..n {
                    // length goes up exactly when g(a_i) is positive
                    if g.column(i).is_positive_root() {
                        let h = g.mul_reflection(self, i);
                        next.entry(h.key()).or_insert(h);
                    }
                }
                if next.len() > guard {
                    return (spheres, true);
                }
            }
            let mut sphere: Vec<(Vec<S::Key>, GroupElement<S>)> = next.into_iter().collect();
            sphere.sort_by(|a, b| a.0.cmp(&b.0));
            spheres.push(sphere.into_iter().map(|(_, g)| g).collect());
        }
        (spheres, false)
    }

    pub fn ball_sizes(&self, radius: u32) -> Result<BallSizes> {
        if radius > RADIUS_GUARD {
            return Err(CoxeterError::Resource(format!(
                "radius {radius} exceeds the guard {RADIUS_GUARD}"
            )));
        }
        Ok(self.ball_sizes_unguarded(radius, DEFAULT_SPHERE_GUARD))
    }

    pub fn ball_sizes_unguarded(&self, radius: u32, guard: usize) -> BallSizes {
        let (spheres, truncated) = self.spheres(radius, guard);
        let sphere_sizes: Vec<usize> = spheres.iter().map(Vec::len).collect();
        let last = sphere_sizes.len() - 1;
        let growth_estimate = if last == 0 {
            1.0
        } else {
            (sphere_sizes[last] as f64).powf(1.0 / last as f64)
        };
        BallSizes {
            sphere_sizes,
            growth_estimate,
            truncated,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraicReal;
    use crate::system::{CoxeterMatrix, Label};

    type Sys = CoxeterSystem<AlgebraicReal>;

    fn cyc(v: &[u64]) -> Sys {
        Sys::cyclic(&v.iter().map(|&m| Label::Finite(m)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn single_letter_inversion() {
        let sys = cyc(&[3, 3, 3]);
        let inv = sys.inversion_set(&Word::new(vec![0]), true).unwrap();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].vec, sys.simple_root(0));
    }

    #[test]
    fn coxeter_word_has_n_inversions() {
        let sys = cyc(&[3, 3, 4]);
        let inv = sys.inversion_set(&Word::new(vec![2, 0, 1]), true).unwrap();
        assert_eq!(inv.len(), 3);
    }

    #[test]
    fn non_reduced_word_is_rejected() {
        let sys = cyc(&[3, 3, 3]);
        assert_eq!(
            sys.inversion_set(&Word::new(vec![0, 0]), true),
            Err(CoxeterError::NotReduced)
        );
        assert!(sys.inversion_set(&Word::new(vec![0, 0]), false).unwrap().len() <= 1);
    }

    #[test]
    fn lengths() {
        let sys = cyc(&[3, 3, 3]);
        let id = GroupElement::identity(3);
        assert_eq!(sys.length(&id).unwrap(), 0);
        assert!(sys.reduced_word(&id).unwrap().is_empty());
        assert_eq!(sys.reduced_word(&sys.reflection(1)).unwrap(), Word::new(vec![1]));
        let c = sys.word_to_element(&Word::new(vec![0, 1, 2])).unwrap();
        assert_eq!(sys.length(&c).unwrap(), 3);
        let w = Word::new(vec![0, 1, 0, 2, 1, 1, 2]);
        let g = sys.word_to_element(&w).unwrap();
        let red = sys.reduced_word(&g).unwrap();
        assert!(red.len() <= w.len());
        assert_eq!(sys.word_to_element(&red).unwrap(), g);
    }

    #[test]
    fn non_group_matrices_are_rejected() {
        let sys = cyc(&[3, 3, 3]);
        let scaled = |k: i64| {
            GroupElement::from_rows(
                (0..3)
                    .map(|r| (0..3).map(|c| AlgebraicReal::from_integer(if r == c { k } else { 0 })).collect())
                    .collect(),
            )
        };
        // no descents, yet not the identity
        assert_eq!(sys.reduced_word(&scaled(2)), Err(CoxeterError::NotAGroupElement(0)));
        // -1 is not in the infinite group W(A~2): descents never run out
        assert_eq!(
            sys.reduced_word_bounded(&scaled(-1), 50),
            Err(CoxeterError::NotAGroupElement(50))
        );
    }

    #[test]
    fn small_spheres() {
        let sys = cyc(&[3, 3, 3]);
        let sizes = sys.ball_sizes(4).unwrap();
        assert_eq!(sizes.sphere_sizes[0], 1);
        assert_eq!(sizes.sphere_sizes[1], 3);
        // finite A_3 = S_4 has 24 elements and longest length 6
        let a3 = Sys::new(CoxeterMatrix::path(&[3.into(), 3.into()]).unwrap()).unwrap();
        let sizes = a3.ball_sizes(7).unwrap();
        assert_eq!(sizes.sphere_sizes.iter().sum::<usize>(), 24);
        assert_eq!(sizes.sphere_sizes[6], 1);
        assert_eq!(sizes.sphere_sizes[7], 0);
    }

    #[test]
    fn radius_guard() {
        let sys = cyc(&[3, 3, 3]);
        assert!(matches!(sys.ball_sizes(13), Err(CoxeterError::Resource(_))));
    }

    #[test]
    fn infinite_label_rank_two() {
        let sys = Sys::new(CoxeterMatrix::path(&[Label::Infinite]).unwrap()).unwrap();
        let sizes = sys.ball_sizes(6).unwrap();
        assert_eq!(sizes.sphere_sizes, vec![1, 2, 2, 2, 2, 2, 2]);
    }
}
