use super::descriptor::CoxeterElementDescriptor;
use crate::algebra::Scalar;
use crate::error::{CoxeterError, Result};
use crate::roots::Word;
use crate::system::{CoxeterSystem, CyclicSpec};

/// `[mu]`: the representative of `mu` modulo `n` in `1..=n`.
pub fn bracket(mu: i64, n: usize) -> usize {
    assert!(n >= 1);
    let n = n as i64;
    ((mu - 1).rem_euclid(n) + 1) as usize
}

/// The standard Coxeter element `c_i^k` of a cyclic graph. `i` and `k` are
/// 1-based cycle positions; its poset has least element at `i` and greatest
/// at `k`.
#[derive(Clone, Debug)]
pub struct StandardForm<S: Scalar> {
    pub i: usize,
    pub k: usize,
    /// The defining word, letter by letter.
    pub word: Word,
    pub descriptor: CoxeterElementDescriptor<S>,
}

/// Cycle positions (1-based) of `c_i^k`, letter by letter.
pub fn standard_positions(i: usize, k: usize, n: usize) -> Result<Vec<usize>> {
    if i == k {
        return Err(CoxeterError::InvalidStandardForm(i));
    }
    if !(1..=n).contains(&i) || !(1..=n).contains(&k) {
        return Err(CoxeterError::Selector(format!(
            "standard form indices ({i}, {k}) outside 1..={n}"
        )));
    }
    let (i, n) = (i as i64, n as i64);
    let k = if k as i64 > i { k as i64 } else { k as i64 + n };
    let mut out = vec![i];
    out.extend(i + 1..k);
    out.extend((k + 1..=i + n - 1).rev());
    out.push(k);
    Ok(out.into_iter().map(|p| bracket(p, n as usize)).collect())
}

impl<S: Scalar> CoxeterSystem<S> {
    pub fn build_standard(&self, spec: &CyclicSpec, i: usize, k: usize) -> Result<StandardForm<S>> {
        let n = spec.len();
        let word = Word::new(
            standard_positions(i, k, n)?
                .into_iter()
                .map(|p| spec.vertex(p - 1))
                .collect(),
        );
        let descriptor = CoxeterElementDescriptor::from_word(self, &word)?;
        let least = spec.vertex(i - 1);
        let greatest = spec.vertex(k - 1);
        if descriptor.minimal_elements() != vec![least] || descriptor.maximal_elements() != vec![greatest] {
            return Err(CoxeterError::Internal(format!(
                "c_{i}^{k} does not have least {least} and greatest {greatest}"
            )));
        }
        Ok(StandardForm {
            i,
            k,
            word,
            descriptor,
        })
    }

    /// All `n(n-1)` standard forms, ordered by `(i, k)`.
    pub fn all_standard(&self, spec: &CyclicSpec) -> Result<Vec<StandardForm<S>>> {
        let n = spec.len();
        let mut out = Vec::with_capacity(n * (n - 1));
        for i in 1..=n {
            for k in (1..=n).filter(|&k| k != i) {
                out.push(self.build_standard(spec, i, k)?);
            }
        }
        Ok(out)
    }

    /// `(i, k)` when `c` has a greatest element, i.e. `c = c_i^k`.
    pub fn has_greatest(
        &self,
        c: &CoxeterElementDescriptor<S>,
        spec: &CyclicSpec,
    ) -> Result<Option<(usize, usize)>> {
        let (max, min) = (c.maximal_elements(), c.minimal_elements());
        if max.len() != 1 {
            return Ok(None);
        }
        if min.len() != 1 {
            return Err(CoxeterError::TheoremContradiction(format!(
                "greatest element {} but minimal elements {:?}",
                max[0], min
            )));
        }
        let (i, k) = (spec.position(min[0]) + 1, spec.position(max[0]) + 1);
        let sf = self.build_standard(spec, i, k)?;
        if &sf.descriptor != c {
            return Err(CoxeterError::TheoremContradiction(format!(
                "{} has greatest element but differs from c_{i}^{k}",
                c.word()
            )));
        }
        Ok(Some((i, k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraicReal;
    use crate::elements::Orientation;
    use crate::system::{CoxeterMatrix, Label};

    type Sys = CoxeterSystem<AlgebraicReal>;

    fn cyc(v: &[u64]) -> Sys {
        Sys::cyclic(&v.iter().map(|&m| Label::Finite(m)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(4, 4), 4);
        assert_eq!(bracket(0, 4), 4);
        assert_eq!(bracket(5, 4), 1);
        assert_eq!(bracket(-1, 4), 3);
        assert_eq!(bracket(-4, 4), 4);
    }

    #[test]
    fn literal_words() {
        assert_eq!(standard_positions(1, 3, 4).unwrap(), vec![1, 2, 4, 3]);
        assert_eq!(standard_positions(2, 1, 3).unwrap(), vec![2, 3, 1]);
        assert_eq!(standard_positions(1, 2, 3).unwrap(), vec![1, 3, 2]);
        assert_eq!(standard_positions(3, 2, 5).unwrap(), vec![3, 4, 5, 1, 2]);
        assert_eq!(standard_positions(2, 2, 3), Err(CoxeterError::InvalidStandardForm(2)));
    }

    #[test]
    fn greatest_and_least() {
        let sys = cyc(&[3, 3, 4, 3]);
        let spec = sys.require_cyclic().unwrap();
        let sf = sys.build_standard(&spec, 1, 3).unwrap();
        assert_eq!(sf.word, Word::one_based(&[1, 2, 4, 3]));
        assert_eq!(sf.descriptor.maximal_elements(), vec![2]);
        assert_eq!(sf.descriptor.orientation().down_set(2).len(), 4);
        assert_eq!(sys.has_greatest(&sf.descriptor, &spec).unwrap(), Some((1, 3)));
    }

    #[test]
    fn inverse_law() {
        let sys = cyc(&[3, 4, 5, 3]);
        let spec = sys.require_cyclic().unwrap();
        for i in 1..=4 {
            for k in (1..=4).filter(|&k| k != i) {
                let a = sys.build_standard(&spec, i, k).unwrap();
                let b = sys.build_standard(&spec, k, i).unwrap();
                assert!(a.descriptor.element().mul(b.descriptor.element()).is_identity());
            }
        }
    }

    #[test]
    fn two_sources_have_no_greatest() {
        let sys = cyc(&[3, 3, 3, 3]);
        let spec = sys.require_cyclic().unwrap();
        // 1->2<-3->4<-1
        let c = CoxeterElementDescriptor::from_word(&sys, &Word::one_based(&[1, 3, 2, 4])).unwrap();
        assert_eq!(sys.has_greatest(&c, &spec).unwrap(), None);
    }

    #[test]
    fn every_triangle_element_is_standard() {
        let sys = cyc(&[3, 3, 4]);
        let spec = sys.require_cyclic().unwrap();
        let all = sys.all_coxeter_elements().unwrap();
        let mut seen = Vec::new();
        for c in &all {
            seen.push(sys.has_greatest(c, &spec).unwrap().expect("standard"));
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn relabelled_cycle_uses_positions() {
        // cycle 0 - 2 - 1 - 3 - 0
        let l = |m: u64| Label::Finite(m);
        let m = CoxeterMatrix::new(vec![
            vec![l(1), l(2), l(3), l(3)],
            vec![l(2), l(1), l(3), l(3)],
            vec![l(3), l(3), l(1), l(2)],
            vec![l(3), l(3), l(2), l(1)],
        ])
        .unwrap();
        let sys = Sys::new(m).unwrap();
        let spec = sys.require_cyclic().unwrap();
        let sf = sys.build_standard(&spec, 1, 3).unwrap();
        let o: &Orientation = sf.descriptor.orientation();
        assert_eq!(o.minimal_elements(), vec![spec.vertex(0)]);
        assert_eq!(o.maximal_elements(), vec![spec.vertex(2)]);
    }
}
