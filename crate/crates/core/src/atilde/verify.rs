use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::root::{atilde_family, atilde_positive_roots, AtildeImage, AtildeRoot};
use crate::algebra::AlgebraicReal;
use crate::elements::CoxeterElementDescriptor;
use crate::error::{CoxeterError, Result};
use crate::roots::{RootVector, Word};
use crate::system::{CoxeterMatrix, CoxeterSystem, Label};

type Sys = CoxeterSystem<AlgebraicReal>;

/// Which standard element reproduced a closed-form family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyOrientation {
    /// Least element `[k+1]`, greatest `k`.
    LeastNextGreatestK,
    /// Least element `k`, greatest `[k+1]`.
    LeastKGreatestNext,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMatch {
    pub k: usize,
    /// `(i, k)` of the standard element whose enumeration equals the family.
    pub standard: (usize, usize),
    pub orientation: FamilyOrientation,
    pub members: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub n: usize,
    pub depth_bound: u32,
    /// BFS roots per depth, `1..=depth_bound`.
    pub roots_per_depth: Vec<usize>,
    pub families: Vec<FamilyMatch>,
    /// Largest number of one family's members at a single depth.
    pub max_family_members_per_depth: usize,
}

fn contradiction(msg: String) -> CoxeterError {
    CoxeterError::TheoremContradiction(msg)
}

fn to_ints(v: &RootVector<AlgebraicReal>) -> Result<Vec<i64>> {
    v.0.iter()
        .map(|c| {
            c.as_rational()
                .filter(|q| q.is_integer())
                .and_then(|q| num_traits::ToPrimitive::to_i64(&q.to_integer()))
                .ok_or_else(|| contradiction(format!("non-integral coordinate in {v:?}")))
        })
        .collect()
}

/// The system Ã_{n-1}: an `n`-cycle with every label 3.
pub fn atilde_system(n: usize) -> Result<Sys> {
    Sys::cyclic(&vec![Label::Finite(3); n])
}

/// Checks the closed-form reflection table against the generic reflection
/// on every closed-form root with `mu <= mu_bound`.
pub fn check_reflection_table(n: usize, mu_bound: u64) -> Result<usize> {
    let sys = atilde_system(n)?;
    let mut checked = 0;
    for r in atilde_positive_roots(n, mu_bound) {
        let v = RootVector::<AlgebraicReal>::from_integers(&r.coords(n));
        for i in 1..=n {
            let generic = to_ints(&sys.reflect(i - 1, &v))?;
            let closed = match r.reflect(n, i) {
                AtildeImage::Positive(img) => img.coords(n),
                AtildeImage::NegativeSimple(j) => {
                    let mut e = vec![0; n];
                    e[j - 1] = -1;
                    e
                }
            };
            if generic != closed {
                return Err(contradiction(format!(
                    "s_{i} of {r:?}: table gives {closed:?}, action gives {generic:?}"
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Closed-form roots of depth `<= depth_bound`, keyed by coordinates.
fn closed_form_up_to(n: usize, depth_bound: u32) -> BTreeMap<Vec<i64>, (AtildeRoot, u64)> {
    // depth >= mu (n - 1) + 1
    let mu_bound = u64::from(depth_bound) / (n as u64 - 1);
    atilde_positive_roots(n, mu_bound)
        .into_iter()
        .filter(|r| r.depth(n) <= u64::from(depth_bound))
        .map(|r| (r.coords(n), (r, r.depth(n))))
        .collect()
}

/// Closed-form Φ⁺ and families against breadth-first and preprojective
/// enumeration, up to `depth_bound`.
pub fn verify_partition(n: usize, depth_bound: u32) -> Result<PartitionReport> {
    if n < 3 {
        return Err(CoxeterError::Precondition("verify_partition needs n >= 3".into()));
    }
    let sys = atilde_system(n)?;
    let spec = sys.require_cyclic()?;
    let layers = sys.enumerate_by_depth(depth_bound)?;
    let closed = closed_form_up_to(n, depth_bound);

    // closed-form root set with depths == BFS layers
    let mut bfs: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for root in layers.iter() {
        bfs.insert(to_ints(&root.vec)?, u64::from(root.depth.expect("layered")));
    }
    let closed_depths: BTreeMap<Vec<i64>, u64> = closed.iter().map(|(k, v)| (k.clone(), v.1)).collect();
    if bfs != closed_depths {
        let missing = bfs.keys().find(|k| !closed_depths.contains_key(*k));
        let extra = closed_depths.keys().find(|k| !bfs.contains_key(*k));
        return Err(contradiction(format!(
            "closed form differs from BFS: first BFS-only {missing:?}, first closed-only {extra:?}"
        )));
    }

    // every root in exactly one family
    let mu_bound = u64::from(depth_bound) / (n as u64 - 1);
    let families: Vec<BTreeSet<Vec<i64>>> = (1..=n)
        .map(|k| {
            atilde_family(k, n, mu_bound)
                .into_iter()
                .filter(|r| r.depth(n) <= u64::from(depth_bound))
                .map(|r| r.coords(n))
                .collect()
        })
        .collect();
    for coords in bfs.keys() {
        let hits = families.iter().filter(|f| f.contains(coords)).count();
        if hits != 1 {
            return Err(contradiction(format!("{coords:?} lies in {hits} families")));
        }
    }

    // each family equals P of a standard element; try both orientations
    let mut matches = Vec::with_capacity(n);
    let mut max_per_depth = 0;
    for k in 1..=n {
        let next = k % n + 1;
        let family = &families[k - 1];
        let mut found = None;
        for (i, g, orientation) in [
            (next, k, FamilyOrientation::LeastNextGreatestK),
            (k, next, FamilyOrientation::LeastKGreatestNext),
        ] {
            let sf = sys.build_standard(&spec, i, g)?;
            let pc = sys.enumerate_preprojective(&sf.descriptor, depth_bound as usize, depth_bound)?;
            let mut members = BTreeSet::new();
            for root in pc.iter().filter(|r| r.depth.is_some_and(|d| d <= depth_bound)) {
                members.insert(to_ints(&root.vec)?);
            }
            if &members == family {
                found = Some(FamilyMatch {
                    k,
                    standard: (i, g),
                    orientation,
                    members: members.len(),
                });
                break;
            }
        }
        let m = found.ok_or_else(|| contradiction(format!("family {k} matches neither standard element")))?;
        let mut per_depth: BTreeMap<u64, usize> = BTreeMap::new();
        for coords in family {
            *per_depth.entry(closed[coords].1).or_insert(0) += 1;
        }
        max_per_depth = max_per_depth.max(per_depth.values().copied().max().unwrap_or(0));
        matches.push(m);
    }

    Ok(PartitionReport {
        n,
        depth_bound,
        roots_per_depth: layers.counts(),
        families: matches,
        max_family_members_per_depth: max_per_depth,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atilde1Report {
    pub depth_bound: u32,
    pub roots: usize,
    /// Members of `P(s_1 s_2)` and `P(s_2 s_1)` up to the bound.
    pub family_sizes: (usize, usize),
}

/// The rank-2 system with `m = inf`, checked against its closed forms:
/// `s_i(a_j) = a_j + 2a_i`, `Φ⁺ = {a_j + (mu)_2}`, `P(s_1 s_2) = {a_2 + (mu)_2}`
/// and `P(s_2 s_1) = {a_1 + (mu)_2}`.
pub fn atilde1_case(depth_bound: u32) -> Result<Atilde1Report> {
    let sys = Sys::new(CoxeterMatrix::path(&[Label::Infinite])?)?;
    for (i, j) in [(0, 1), (1, 0)] {
        let img = to_ints(&sys.reflect(i, &sys.simple_root(j)))?;
        let mut expected = vec![0, 0];
        expected[j] = 1;
        expected[i] = 2;
        if img != expected {
            return Err(contradiction(format!("s_{}(a_{}) = {img:?}", i + 1, j + 1)));
        }
    }
    let closed = |j: usize, mu: i64| -> Vec<i64> {
        let mut v = vec![mu, mu];
        v[j] += 1;
        v
    };
    let layers = sys.enumerate_by_depth(depth_bound)?;
    for root in layers.iter() {
        let v = to_ints(&root.vec)?;
        let mu = i64::from(root.depth.expect("layered")) - 1;
        if v != closed(0, mu) && v != closed(1, mu) {
            return Err(contradiction(format!("{v:?} at depth {} is not a_j + ({mu})_2", mu + 1)));
        }
    }
    if layers.counts().iter().any(|&c| c != 2) {
        return Err(contradiction(format!("layer sizes {:?}", layers.counts())));
    }
    let mut sizes = [0usize; 2];
    for (slot, (word, j)) in [([1, 2], 1usize), ([2, 1], 0usize)].into_iter().enumerate() {
        let c = CoxeterElementDescriptor::from_word(&sys, &Word::one_based(&word))?;
        let pc = sys.enumerate_preprojective(&c, depth_bound as usize, depth_bound)?;
        let got: BTreeSet<Vec<i64>> = pc
            .iter()
            .filter(|r| r.depth.is_some_and(|d| d <= depth_bound))
            .map(|r| to_ints(&r.vec))
            .collect::<Result<_>>()?;
        let want: BTreeSet<Vec<i64>> = (0..i64::from(depth_bound)).map(|mu| closed(j, mu)).collect();
        if got != want {
            return Err(contradiction(format!("P({}) differs from its closed form", c.word())));
        }
        sizes[slot] = got.len();
    }
    Ok(Atilde1Report {
        depth_bound,
        roots: layers.len(),
        family_sizes: (sizes[0], sizes[1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_table_matches_action() {
        for n in 3..=5 {
            assert!(check_reflection_table(n, 4).unwrap() > 0);
        }
    }

    #[test]
    fn partition_small() {
        let r = verify_partition(3, 9).unwrap();
        assert_eq!(r.roots_per_depth, vec![3; 9]);
        assert!(r.max_family_members_per_depth <= 3);
        assert!(r
            .families
            .iter()
            .all(|f| f.orientation == FamilyOrientation::LeastNextGreatestK));
        verify_partition(4, 8).unwrap();
    }

    #[test]
    fn rank_two() {
        let r = atilde1_case(10).unwrap();
        assert_eq!(r.roots, 20);
        assert_eq!(r.family_sizes, (10, 10));
    }
}
