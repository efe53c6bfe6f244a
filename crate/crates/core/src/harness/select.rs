use std::str::FromStr;

use crate::algebra::{AlgebraicReal, Scalar};
use crate::elements::{CoxeterElementDescriptor, Orientation};
use crate::error::{CoxeterError, Result};
use crate::roots::{RootVector, Word};
use crate::ExactSystem;

use super::exact::parse_coord;

/// Greedy descent steps allowed before a vector is declared not a root.
const ROOT_CHECK_STEPS: usize = 100_000;

/// Which Coxeter element a command acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSelector {
    /// `std:i,k`, the standard element `c_i^k` (cycle positions, 1-based).
    Standard(usize, usize),
    /// `orient:bits`, an acyclic orientation.
    Orientation(u64),
    /// `word:1,2,3`, a word using every generator once.
    Word(Vec<usize>),
}

fn selector(e: impl ToString) -> CoxeterError {
    CoxeterError::Selector(e.to_string())
}

fn numbers<T: FromStr>(list: &str) -> Result<Vec<T>> {
    list.split(',')
        .map(|t| t.trim().parse().map_err(|_| selector(format!("bad number {t:?}"))))
        .collect()
}

impl FromStr for ElementSelector {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| selector(format!("{s:?}: expected std:i,k, orient:bits or word:...")))?;
        match kind {
            "std" => match numbers::<usize>(rest)?.as_slice() {
                &[i, k] => Ok(ElementSelector::Standard(i, k)),
                _ => Err(selector(format!("{s:?}: std needs two indices"))),
            },
            "orient" => rest
                .trim()
                .parse()
                .map(ElementSelector::Orientation)
                .map_err(|_| selector(format!("{s:?}: bad orientation bits"))),
            "word" => Ok(ElementSelector::Word(numbers(rest)?)),
            _ => Err(selector(format!("{s:?}: unknown selector kind {kind:?}"))),
        }
    }
}

impl ElementSelector {
    pub fn resolve(&self, sys: &ExactSystem) -> Result<CoxeterElementDescriptor<AlgebraicReal>> {
        let as_selector = |e: CoxeterError| match e {
            CoxeterError::Selector(_) => e,
            other => selector(other),
        };
        match self {
            ElementSelector::Standard(i, k) => {
                let spec = sys.require_cyclic().map_err(as_selector)?;
                Ok(sys.build_standard(&spec, *i, *k).map_err(as_selector)?.descriptor)
            }
            ElementSelector::Orientation(bits) => {
                let o = Orientation::from_bits(sys.graph(), *bits).map_err(as_selector)?;
                CoxeterElementDescriptor::from_orientation(sys, o).map_err(as_selector)
            }
            ElementSelector::Word(letters) => {
                if letters.contains(&0) {
                    return Err(selector("word letters are 1-based"));
                }
                CoxeterElementDescriptor::from_word(sys, &Word::one_based(letters)).map_err(as_selector)
            }
        }
    }
}

/// Parses `c_1,c_2,...` (see [`super::coord_text`]) and checks that the
/// vector is a positive root.
pub fn parse_root(text: &str, sys: &ExactSystem) -> Result<RootVector<AlgebraicReal>> {
    let coords = text
        .split(',')
        .map(|c| parse_coord(c, sys.field()))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != sys.rank() {
        return Err(selector(format!(
            "root {text:?} has {} coordinates, rank is {}",
            coords.len(),
            sys.rank()
        )));
    }
    let v = RootVector(coords);
    if !is_positive_root(sys, &v) {
        return Err(selector(format!("{text:?} is not a positive root")));
    }
    Ok(v)
}

fn is_positive_root(sys: &ExactSystem, v: &RootVector<AlgebraicReal>) -> bool {
    let mut cur = v.clone();
    for _ in 0..ROOT_CHECK_STEPS {
        if !cur.is_positive_root() {
            return false;
        }
        if cur.simple_index().is_some() {
            return true;
        }
        match (0..sys.rank()).find(|&i| sys.pairing(i, &cur).is_pos()) {
            Some(i) => cur = sys.reflect(i, &cur),
            None => return false,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::Label;

    fn a2() -> ExactSystem {
        ExactSystem::cyclic(&[Label::Finite(3); 3]).unwrap()
    }

    #[test]
    fn element_selectors() {
        let sys = a2();
        let a: ElementSelector = "std:2,1".parse().unwrap();
        let b: ElementSelector = "word:2,3,1".parse().unwrap();
        assert_eq!(a.resolve(&sys).unwrap(), b.resolve(&sys).unwrap());
        for bad in ["std:1,1", "std:1", "orient:5", "orient:8", "word:1,1,2", "word:0,1,2", "nope:1", "std"] {
            let err = bad
                .parse::<ElementSelector>()
                .and_then(|s| s.resolve(&sys))
                .unwrap_err();
            assert_eq!(err.exit_code(), 2, "{bad}: {err}");
        }
    }

    #[test]
    fn root_selector() {
        let sys = a2();
        assert_eq!(parse_root("2,1,1", &sys).unwrap(), RootVector::from_integers(&[2, 1, 1]));
        for bad in ["1,1,1", "2,0,0", "1,-1,0", "1,1", "a,b,c"] {
            assert_eq!(parse_root(bad, &sys).unwrap_err().exit_code(), 2, "{bad}");
        }
    }
}
