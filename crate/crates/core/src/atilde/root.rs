use serde::Serialize;

use crate::elements::bracket;

/// A positive root of type Ã_{n-1} in closed form: `(mu)_n` plus the sum of
/// the simple roots on the cyclic interval `lambda, lambda+1, ..., nu`.
///
/// `lambda` is in `1..=n` and `lambda <= nu <= lambda + n - 2` (positions
/// beyond `n` wrap), so every coordinate is `mu` or `mu + 1` and the
/// interval never covers the whole cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AtildeRoot {
    pub mu: u64,
    pub lambda: usize,
    pub nu: usize,
}

/// Image of a closed-form root under a simple reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AtildeImage {
    Positive(AtildeRoot),
    /// `-a_i`, the only negative image of a positive root under `s_i`.
    NegativeSimple(usize),
}

impl AtildeRoot {
    pub fn new(n: usize, mu: u64, lambda: i64, nu: i64) -> Self {
        assert!(lambda <= nu && nu - lambda <= n as i64 - 2, "interval [{lambda}, {nu}] on a {n}-cycle");
        let l = bracket(lambda, n);
        AtildeRoot {
            mu,
            lambda: l,
            nu: l + (nu - lambda) as usize,
        }
    }

    pub fn simple(n: usize, i: usize) -> Self {
        Self::new(n, 0, i as i64, i as i64)
    }

    pub fn interval_len(&self) -> usize {
        self.nu - self.lambda + 1
    }

    /// Last position of the interval, in `1..=n`.
    pub fn end(&self, n: usize) -> usize {
        bracket(self.nu as i64, n)
    }

    fn on_interval(&self, n: usize, j: usize) -> bool {
        (j + n - self.lambda) % n < self.interval_len()
    }

    /// Coordinates in the simple-root basis, `coords[j - 1]` for `a_j`.
    pub fn coords(&self, n: usize) -> Vec<i64> {
        (1..=n)
            .map(|j| self.mu as i64 + i64::from(self.on_interval(n, j)))
            .collect()
    }

    /// Inverse of [`Self::coords`]; `None` unless the vector has this shape.
    pub fn from_coords(coords: &[i64]) -> Option<Self> {
        let n = coords.len();
        let mu = *coords.iter().min()?;
        if mu < 0 || coords.iter().any(|&c| c > mu + 1) {
            return None;
        }
        let high: Vec<bool> = coords.iter().map(|&c| c == mu + 1).collect();
        let len = high.iter().filter(|&&h| h).count();
        if len == 0 || len == n {
            return None;
        }
        // the interval starts right after a low coordinate
        let start = (0..n).find(|&p| high[p] && !high[(p + n - 1) % n])?;
        if (0..len).any(|t| !high[(start + t) % n]) {
            return None;
        }
        let lambda = start as i64 + 1;
        Some(Self::new(n, mu as u64, lambda, lambda + len as i64 - 1))
    }

    /// Depth in closed form, `mu (n - 1) + interval length`; checked
    /// against the generic depth by the verification routines.
    pub fn depth(&self, n: usize) -> u64 {
        self.mu * (n as u64 - 1) + self.interval_len() as u64
    }

    /// `s_i` of this root by the case table: `(mu)_n` is fixed, the interval
    /// shrinks at an end equal to `i`, grows by a neighbour equal to `i`, or
    /// wraps through `(mu +- 1)_n`.
    pub fn reflect(&self, n: usize, i: usize) -> AtildeImage {
        let (l, v) = (self.lambda as i64, self.nu as i64);
        let len = self.interval_len();
        let is = |p: i64| bracket(p, n) == i;
        if len == 1 && is(l) {
            // (mu)_n - a_i
            return match self.mu {
                0 => AtildeImage::NegativeSimple(i),
                mu => AtildeImage::Positive(Self::new(n, mu - 1, l + 1, l + n as i64 - 1)),
            };
        }
        if len == n - 1 && is(l - 1) {
            // i = [lambda - 1] = [nu + 1]: (mu + 1)_n + a_i
            return AtildeImage::Positive(Self::new(n, self.mu + 1, l - 1, l - 1));
        }
        let out = if is(l) {
            Self::new(n, self.mu, l + 1, v)
        } else if is(v) {
            Self::new(n, self.mu, l, v - 1)
        } else if is(l - 1) {
            Self::new(n, self.mu, l - 1, v)
        } else if is(v + 1) {
            Self::new(n, self.mu, l, v + 1)
        } else {
            *self
        };
        AtildeImage::Positive(out)
    }
}

/// Every closed-form positive root with `mu <= mu_bound`, ordered by
/// `(mu, lambda, nu)`.
pub fn atilde_positive_roots(n: usize, mu_bound: u64) -> Vec<AtildeRoot> {
    assert!(n >= 3);
    let mut out = Vec::new();
    for mu in 0..=mu_bound {
        for lambda in 1..=n as i64 {
            for len in 1..n as i64 {
                out.push(AtildeRoot::new(n, mu, lambda, lambda + len - 1));
            }
        }
    }
    out
}

/// The family of roots whose interval ends at `k`, for `mu <= mu_bound`.
pub fn atilde_family(k: usize, n: usize, mu_bound: u64) -> Vec<AtildeRoot> {
    assert!(n >= 3 && (1..=n).contains(&k));
    let mut out = Vec::new();
    for mu in 0..=mu_bound {
        for lambda in 0..=n as i64 - 2 {
            out.push(AtildeRoot::new(n, mu, k as i64 - lambda, k as i64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_round_trip() {
        for n in 3..=6 {
            for r in atilde_positive_roots(n, 2) {
                assert_eq!(AtildeRoot::from_coords(&r.coords(n)), Some(r));
            }
            assert_eq!(AtildeRoot::from_coords(&vec![1; n]), None);
        }
        assert_eq!(AtildeRoot::from_coords(&[1, 0, 1, 0]), None);
        assert_eq!(AtildeRoot::from_coords(&[2, 0, 1]), None);
    }

    #[test]
    fn small_cases() {
        let roots = atilde_positive_roots(3, 0);
        assert_eq!(roots.len(), 6);
        let r = AtildeRoot::new(3, 1, 1, 1);
        assert_eq!(r.coords(3), vec![2, 1, 1]);
        assert!(atilde_positive_roots(3, 1).contains(&r));
        let fam: Vec<_> = atilde_family(1, 3, 0).iter().map(|r| r.coords(3)).collect();
        assert_eq!(fam, vec![vec![1, 0, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn reflection_table() {
        let n = 5;
        let a = |i| AtildeRoot::simple(n, i);
        assert_eq!(a(2).reflect(n, 2), AtildeImage::NegativeSimple(2));
        assert_eq!(a(2).reflect(n, 4), AtildeImage::Positive(a(2)));
        assert_eq!(a(1).reflect(n, 5), AtildeImage::Positive(AtildeRoot::new(n, 0, 0, 1)));
        // i = [lambda - 1] = [nu + 1]
        let b = AtildeRoot::new(n, 0, 2, 5);
        assert_eq!(
            b.reflect(n, 1),
            AtildeImage::Positive(AtildeRoot::new(n, 1, 1, 1))
        );
        let c = AtildeRoot::new(n, 2, 4, 4);
        assert_eq!(c.reflect(n, 4), AtildeImage::Positive(AtildeRoot::new(n, 1, 5, 8)));
    }

    #[test]
    fn families_are_disjoint() {
        let n = 4;
        let mut all: Vec<_> = (1..=n).flat_map(|k| atilde_family(k, n, 3)).collect();
        let total = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), total);
        assert_eq!(total, atilde_positive_roots(n, 3).len());
    }
}
