use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, Poly};
use crate::error::{CoxeterError, Result};

/// Width below which the stored isolating interval is considered refined.
const STORED_WIDTH_BITS: u32 = 96;

/// Beyond this degree the field is still built, but callers are warned that
/// arithmetic will be slow.
pub const DEGREE_WARNING: usize = 64;

/// The real cyclotomic field `Q(theta)` with `theta = 2cos(pi/N)`.
///
/// Immutable once built. Elements refer to it through an `Arc`.
#[derive(Clone)]
pub struct FieldContext {
    order: u64,
    minpoly: Poly,
    lo: BigRational,
    hi: BigRational,
    // Sign of minpoly at `lo`; used to bisect without re-deriving it.
    minpoly_sign_lo: bool,
    // theta^(d + e) mod minpoly for e in 0..d-1, each of length d.
    reductions: Vec<Vec<BigRational>>,
    // Integer copies of `minpoly` and `reductions` (minpoly is monic integral).
    int_minpoly: Vec<BigInt>,
    int_reductions: Vec<Vec<BigInt>>,
    // theta^j as floats, j in 0..d; for the fast sign filter.
    theta_powers: Vec<f64>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("order", &self.order)
            .field("degree", &self.degree())
            .finish()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}
impl Eq for FieldContext {}

impl FieldContext {
    /// Field for a set of finite Coxeter labels (each at least 3); `N` is
    /// their lcm, or 1 for the empty set.
    pub fn from_labels(labels: &BTreeSet<u64>) -> Result<Self> {
        let mut order = 1u64;
        for &m in labels {
            if m < 3 {
                return Err(CoxeterError::InvalidLabel(m));
            }
            order = order.lcm(&m);
        }
        Ok(Self::for_order(order))
    }

    /// Field `Q(2cos(pi/order))`.
    pub fn for_order(order: u64) -> Self {
        assert!(order >= 1, "field order must be positive");
        let (minpoly, lo, hi) = match order {
            1 => (vec![poly::int(2), poly::int(1)], poly::int(-3), poly::int(-1)),
            _ => {
                let g = poly::palindromic_trace_form(&poly::cyclotomic(2 * order));
                let (lo, hi) = isolate(&g, order);
                (g, lo, hi)
            }
        };
        let minpoly_sign_lo = poly::eval(&minpoly, &lo).is_positive();
        let mut ctx = FieldContext {
            order,
            minpoly,
            lo,
            hi,
            minpoly_sign_lo,
            reductions: Vec::new(),
            int_minpoly: Vec::new(),
            int_reductions: Vec::new(),
            theta_powers: Vec::new(),
        };
        ctx.reductions = ctx.build_reductions();
        ctx.int_minpoly = to_integers(&ctx.minpoly);
        ctx.int_reductions = ctx.reductions.iter().map(|r| to_integers(r)).collect();
        let theta = ((&ctx.lo + &ctx.hi) / poly::int(2)).to_f64().expect("theta is finite");
        ctx.theta_powers = std::iter::successors(Some(1.0f64), |p| Some(p * theta))
            .take(ctx.degree())
            .collect();
        ctx
    }

    fn build_reductions(&self) -> Vec<Vec<BigRational>> {
        let d = self.degree();
        if d == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(d.saturating_sub(1));
        let mut x_pow: Poly = vec![BigRational::zero(); d];
        // theta^d = -(lower coefficients), minpoly monic
        for (j, c) in self.minpoly[..d].iter().enumerate() {
            x_pow[j] = -c.clone();
        }
        for _ in 0..d.saturating_sub(1) {
            out.push(padded(&x_pow, d));
            // multiply by theta and reduce
            let mut shifted = vec![BigRational::zero()];
            shifted.extend(x_pow.iter().cloned());
            x_pow = poly::rem(&shifted, &self.minpoly);
            x_pow.resize(d, BigRational::zero());
        }
        out
    }

    /// `N` in `theta = 2cos(pi/N)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree `d` of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Minimal polynomial of `theta`, lowest coefficient first, monic.
    pub fn minpoly(&self) -> &[BigRational] {
        &self.minpoly
    }

    /// Rational interval isolating `theta` among the real roots of the
    /// minimal polynomial.
    pub fn isolating_interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub(crate) fn theta_powers(&self) -> &[f64] {
        &self.theta_powers
    }

    /// Reduce a coefficient vector of any length modulo the minimal polynomial.
    pub(crate) fn reduce(&self, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        poly::trim(&mut coeffs);
        if coeffs.len() <= d {
            return coeffs;
        }
        if coeffs.len() > 2 * d - 1 {
            let mut r = poly::rem(&coeffs, &self.minpoly);
            poly::trim(&mut r);
            return r;
        }
        let high: Vec<BigRational> = coeffs.drain(d..).collect();
        for (e, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.reductions[e].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[j] += c * r;
                }
            }
        }
        poly::trim(&mut coeffs);
        coeffs
    }

    /// Integer analogue of [`Self::reduce`]; stays integral since the
    /// minimal polynomial is monic with integer coefficients.
    pub(crate) fn reduce_int(&self, mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        trim_int(&mut coeffs);
        if coeffs.len() <= d {
            return coeffs;
        }
        if coeffs.len() > 2 * d - 1 {
            // synthetic division by the monic minimal polynomial
            for top in (d..coeffs.len()).rev() {
                let c = std::mem::take(&mut coeffs[top]);
                if c.is_zero() {
                    continue;
                }
                for (j, m) in self.int_minpoly[..d].iter().enumerate() {
                    if !m.is_zero() {
                        coeffs[top - d + j] -= &c * m;
                    }
                }
            }
            coeffs.truncate(d);
            trim_int(&mut coeffs);
            return coeffs;
        }
        let high: Vec<BigInt> = coeffs.drain(d..).collect();
        for (e, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.int_reductions[e].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[j] += c * r;
                }
            }
        }
        trim_int(&mut coeffs);
        coeffs
    }

    /// Split the isolating interval in half, keeping the half containing theta.
    pub(crate) fn bisect(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mid = (lo + hi) / poly::int(2);
        let v = poly::eval(&self.minpoly, &mid);
        if v.is_zero() {
            return (mid.clone(), mid);
        }
        if v.is_positive() == self.minpoly_sign_lo {
            (mid, hi.clone())
        } else {
            (lo.clone(), mid)
        }
    }

    /// Coefficients of `2cos(k pi / N)` in the power basis of theta.
    pub(crate) fn two_cos_multiple(&self, k: u64) -> Vec<BigRational> {
        // p_0 = 2, p_1 = theta, p_{j+1} = theta p_j - p_{j-1}
        let theta: Poly = vec![BigRational::zero(), BigRational::one()];
        let mut prev: Poly = vec![poly::int(2)];
        if k == 0 {
            return prev;
        }
        let mut cur = self.reduce(theta.clone());
        for _ in 1..k {
            let next = poly::sub(&poly::mul(&theta, &cur), &prev);
            prev = cur;
            cur = self.reduce(next);
        }
        cur
    }
}

pub(crate) fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn to_integers(p: &[BigRational]) -> Vec<BigInt> {
    p.iter()
        .map(|c| {
            assert!(c.is_integer(), "minimal polynomial has integer coefficients");
            c.to_integer()
        })
        .collect()
}

fn padded(p: &[BigRational], d: usize) -> Vec<BigRational> {
    let mut v = p.to_vec();
    v.resize(d, BigRational::zero());
    v
}

/// Rational interval around `2cos(pi/order)` containing exactly one root of `g`.
fn isolate(g: &Poly, order: u64) -> (BigRational, BigRational) {
    let approx = 2.0 * (std::f64::consts::PI / order as f64).cos();
    let centre = BigRational::from_float(approx).expect("finite approximation");
    let chain = poly::sturm_chain(g);
    let mut radius = BigRational::new(1.into(), (1u64 << 20).into());
    let (mut lo, mut hi) = loop {
        let lo = &centre - &radius;
        let hi = &centre + &radius;
        match poly::count_roots(&chain, &lo, &hi) {
            1 => break (lo, hi),
            0 => radius *= poly::int(2),
            _ => radius /= poly::int(16),
        }
    };
    let sign_lo = poly::eval(g, &lo).is_positive();
    let target = BigRational::new(1.into(), num_bigint::BigInt::one() << STORED_WIDTH_BITS);
    while &hi - &lo > target {
        let mid = (&lo + &hi) / poly::int(2);
        let v = poly::eval(g, &mid);
        if v.is_zero() {
            return (mid.clone(), mid);
        }
        if v.is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    fn to_f64(q: &BigRational) -> f64 {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap()
    }

    #[test]
    fn label_three_is_rational() {
        let ctx = FieldContext::from_labels(&labels(&[3])).unwrap();
        assert_eq!(ctx.order(), 3);
        assert_eq!(ctx.degree(), 1);
        assert_eq!(ctx.minpoly(), &[poly::int(-1), poly::int(1)][..]);
    }

    #[test]
    fn label_four_gives_sqrt_two() {
        let ctx = FieldContext::from_labels(&labels(&[4])).unwrap();
        assert_eq!(ctx.order(), 4);
        assert_eq!(ctx.degree(), 2);
        assert_eq!(ctx.minpoly(), &[poly::int(-2), poly::int(0), poly::int(1)][..]);
        let (lo, hi) = ctx.isolating_interval();
        assert!((to_f64(lo) - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!((to_f64(hi) - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn labels_three_and_four_give_degree_four() {
        let ctx = FieldContext::from_labels(&labels(&[3, 4])).unwrap();
        assert_eq!(ctx.order(), 12);
        assert_eq!(ctx.degree(), 4);
        let theta = 2.0 * (std::f64::consts::PI / 12.0).cos();
        let (lo, _) = ctx.isolating_interval();
        assert!((to_f64(lo) - theta).abs() < 1e-12);
    }

    #[test]
    fn empty_label_set_is_the_rationals() {
        let ctx = FieldContext::from_labels(&BTreeSet::new()).unwrap();
        assert_eq!(ctx.order(), 1);
        assert_eq!(ctx.degree(), 1);
    }

    #[test]
    fn rejects_small_labels() {
        assert_eq!(
            FieldContext::from_labels(&labels(&[2])).unwrap_err(),
            CoxeterError::InvalidLabel(2)
        );
    }

    #[test]
    fn degree_matches_totient() {
        fn totient(m: u64) -> u64 {
            (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
        }
        for n in 2..=30u64 {
            let ctx = FieldContext::for_order(n);
            assert_eq!(ctx.degree() as u64, totient(2 * n) / 2, "N = {n}");
            let theta = 2.0 * (std::f64::consts::PI / n as f64).cos();
            let (lo, hi) = ctx.isolating_interval();
            assert!(to_f64(lo) <= theta + 1e-12 && theta - 1e-12 <= to_f64(hi));
        }
    }
}
