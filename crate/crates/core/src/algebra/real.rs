use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{trim_int, FieldContext};
use super::poly;
use crate::error::{CoxeterError, Result};

/// Exact element of `Q(2cos(pi/N))`: integer coordinates in the power basis
/// `1, theta, ..., theta^(d-1)` over one positive common denominator.
///
/// Kept normalized (trailing zeros trimmed, denominator coprime to the
/// coordinate content, zero is `[] / 1`), so equal numbers have equal
/// representations. Rational constants (including those produced by
/// `Zero`/`One`) may carry no context; they combine with elements of any field.
#[derive(Clone)]
pub struct AlgebraicReal {
    num: Vec<BigInt>,
    den: BigInt,
    field: Option<Arc<FieldContext>>,
}

impl AlgebraicReal {
    fn normalized(mut num: Vec<BigInt>, mut den: BigInt, field: Option<Arc<FieldContext>>) -> Self {
        trim_int(&mut num);
        if num.is_empty() {
            return AlgebraicReal {
                num,
                den: BigInt::one(),
                field,
            };
        }
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                for c in &mut num {
                    *c = &*c / &g;
                }
                den /= g;
            }
        }
        AlgebraicReal { num, den, field }
    }

    pub fn rational(q: BigRational) -> Self {
        let (n, d) = q.into_raw();
        Self::normalized(vec![n], d, None)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::normalized(vec![BigInt::from(v)], BigInt::one(), None)
    }

    /// Element with the given power-basis coordinates; reduced modulo the
    /// minimal polynomial.
    pub fn from_coeffs(coeffs: Vec<BigRational>, field: &Arc<FieldContext>) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalized(field.reduce_int(num), den, Some(Arc::clone(field)))
    }

    /// The generator `theta = 2cos(pi/N)` of the field.
    pub fn theta(field: &Arc<FieldContext>) -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()], field)
    }

    /// `2cos(k pi / N)`.
    pub fn two_cos_multiple(k: u64, field: &Arc<FieldContext>) -> Self {
        Self::from_coeffs(field.two_cos_multiple(k), field)
    }

    /// Exact `-cos(pi/m)`: 0 for `m = 2`, `-1` for `m = inf` (`None`), and
    /// for finite `m >= 3` an element of the field, which must satisfy `m | N`.
    pub fn minus_cos(m: Option<u64>, field: &Arc<FieldContext>) -> Result<Self> {
        match m {
            None => Ok(Self::from_integer(-1)),
            Some(1) => Ok(Self::from_integer(1)),
            Some(2) => Ok(Self::zero()),
            Some(0) => Err(CoxeterError::InvalidLabel(0)),
            Some(m) => {
                if !field.order().is_multiple_of(m) {
                    return Err(CoxeterError::ContextMismatch(format!(
                        "label {m} does not divide N = {}",
                        field.order()
                    )));
                }
                let two_cos = Self::two_cos_multiple(field.order() / m, field);
                Ok(two_cos * Self::rational(BigRational::new((-1).into(), 2.into())))
            }
        }
    }

    /// Power-basis coordinates, trailing zeros trimmed (empty for zero).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Coordinates padded to the field degree.
    pub fn padded_coeffs(&self) -> Vec<BigRational> {
        let d = self.field.as_ref().map_or(1, |f| f.degree()).max(self.num.len());
        let mut out = self.coeffs();
        out.resize(d, BigRational::zero());
        out
    }

    /// Integer coordinates and the common denominator; canonical.
    pub fn integer_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub fn field(&self) -> Option<&Arc<FieldContext>> {
        self.field.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    fn merge_field(&self, other: &Self) -> Result<Option<Arc<FieldContext>>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) if !Arc::ptr_eq(a, b) && a.order() != b.order() => {
                Err(CoxeterError::ContextMismatch(format!(
                    "N = {} vs N = {}",
                    a.order(),
                    b.order()
                )))
            }
            (Some(a), _) => Ok(Some(Arc::clone(a))),
            (None, b) => Ok(b.clone()),
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Result<Self> {
        let field = self.merge_field(other)?;
        let len = self.num.len().max(other.num.len());
        let mut num = Vec::with_capacity(len);
        let zero = BigInt::zero();
        let at = |v: &[BigInt], j: usize| v.get(j).cloned().unwrap_or_else(|| zero.clone());
        if self.den == other.den {
            for j in 0..len {
                let b = at(&other.num, j);
                num.push(if negate { at(&self.num, j) - b } else { at(&self.num, j) + b });
            }
            return Ok(Self::normalized(num, self.den.clone(), field));
        }
        for j in 0..len {
            let a = at(&self.num, j) * &other.den;
            let b = at(&other.num, j) * &self.den;
            num.push(if negate { a - b } else { a + b });
        }
        Ok(Self::normalized(num, &self.den * &other.den, field))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.add_signed(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.add_signed(other, true)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let field = self.merge_field(other)?;
        if self.num.is_empty() || other.num.is_empty() {
            return Ok(AlgebraicReal {
                num: Vec::new(),
                den: BigInt::one(),
                field,
            });
        }
        let den = &self.den * &other.den;
        if self.is_rational() || other.is_rational() {
            let (q, v) = if self.is_rational() {
                (&self.num[0], &other.num)
            } else {
                (&other.num[0], &self.num)
            };
            let num = v.iter().map(|c| c * q).collect();
            return Ok(Self::normalized(num, den, field));
        }
        let mut product = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    product[i + j] += a * b;
                }
            }
        }
        let field_ref = field
            .as_ref()
            .expect("irrational elements always carry their field");
        let num = field_ref.reduce_int(product);
        Ok(Self::normalized(num, den, field))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn inverse(&self) -> Result<Self> {
        if self.num.is_empty() {
            return Err(CoxeterError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::normalized(
                vec![self.den.clone()],
                self.num[0].clone(),
                self.field.clone(),
            ));
        }
        let field = self.field.as_ref().expect("irrational element has a field");
        // invariant: s * self == r (mod minpoly)
        let mut r0 = field.minpoly().to_vec();
        let mut r1 = self.coeffs();
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while poly::degree(&r1).is_some_and(|d| d > 0) {
            let (q, r) = poly::div_rem(&r0, &r1);
            let s = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // minpoly is irreducible, so the last nonzero remainder is a constant
        let c = r1
            .first()
            .cloned()
            .ok_or_else(|| CoxeterError::Internal("minimal polynomial is reducible".into()))?;
        let inv = poly::scale(&s1, &c.recip());
        Ok(AlgebraicReal::from_coeffs(inv, field))
    }

    /// Rational enclosure of the value, no wider than `2^-bits` unless the
    /// element is rational (then exact).
    pub fn enclose(&self, bits: u32) -> (BigRational, BigRational) {
        if let Some(q) = self.as_rational() {
            return (q.clone(), q);
        }
        let field = self.field.as_ref().expect("irrational element has a field");
        let (mut lo, mut hi) = {
            let (l, h) = field.isolating_interval();
            (l.clone(), h.clone())
        };
        let target = BigRational::new(self.den.clone(), BigInt::one() << bits);
        loop {
            let (a, b) = self.eval_numerator(&lo, &hi);
            if &b - &a <= target {
                let den = BigRational::from_integer(self.den.clone());
                return (a / &den, b / den);
            }
            (lo, hi) = field.bisect(&lo, &hi);
        }
    }

    /// Interval enclosure of the numerator polynomial for theta in
    /// `[lo, hi]`, assuming `lo >= 0` (true for every field of degree at
    /// least two).
    fn eval_numerator(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut acc_lo = BigRational::zero();
        let mut acc_hi = BigRational::zero();
        let mut p_lo = BigRational::one();
        let mut p_hi = BigRational::one();
        for c in &self.num {
            let c = BigRational::from_integer(c.clone());
            if c.is_positive() {
                acc_lo += &c * &p_lo;
                acc_hi += &c * &p_hi;
            } else if c.is_negative() {
                acc_lo += &c * &p_hi;
                acc_hi += &c * &p_lo;
            }
            p_lo *= lo;
            p_hi *= hi;
        }
        (acc_lo, acc_hi)
    }

    /// Exact sign. A float evaluation settles it when the value is clearly
    /// away from zero; otherwise interval evaluation on successively
    /// bisected isolating intervals, which terminates because a nonzero
    /// element is nonzero at theta.
    pub fn sign(&self) -> Ordering {
        if self.num.len() <= 1 {
            return self.num.first().map_or(Ordering::Equal, |c| c.sign().cmp_zero());
        }
        let field = self.field.as_ref().expect("irrational element has a field");
        if let Some((v, bound)) = self.eval_f64(field) {
            // rounding error is far below 1e-9 of the absolute sum at any sane degree
            if v.abs() > bound * 1e-9 {
                return if v > 0.0 { Ordering::Greater } else { Ordering::Less };
            }
        }
        let (l, h) = field.isolating_interval();
        let (mut lo, mut hi) = (l.clone(), h.clone());
        loop {
            let (a, b) = self.eval_numerator(&lo, &hi);
            if a.is_positive() {
                return Ordering::Greater;
            }
            if b.is_negative() {
                return Ordering::Less;
            }
            (lo, hi) = field.bisect(&lo, &hi);
        }
    }

    /// Float value of the numerator and the sum of its absolute terms,
    /// when every term is finite.
    fn eval_f64(&self, field: &FieldContext) -> Option<(f64, f64)> {
        let mut v = 0.0;
        let mut bound = 0.0;
        for (c, p) in self.num.iter().zip(field.theta_powers()) {
            let t = c.to_f64()? * p;
            v += t;
            bound += t.abs();
        }
        bound.is_finite().then_some((v, bound))
    }

    /// Hardware-float approximation; diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclose(64);
        ((lo + hi) / poly::int(2)).to_f64().unwrap_or(f64::NAN)
    }
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}
impl Eq for AlgebraicReal {}

impl Hash for AlgebraicReal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order of the real numbers represented.
impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self.clone() - other.clone()).sign()
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})θ")?,
                _ => write!(f, "({c})θ^{j}")?,
            }
        }
        Ok(())
    }
}

impl Zero for AlgebraicReal {
    fn zero() -> Self {
        AlgebraicReal {
            num: Vec::new(),
            den: BigInt::one(),
            field: None,
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for AlgebraicReal {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for AlgebraicReal {
            type Output = AlgebraicReal;
            fn $method(self, rhs: AlgebraicReal) -> AlgebraicReal {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $trait<&'a AlgebraicReal> for &'a AlgebraicReal {
            type Output = AlgebraicReal;
            fn $method(self, rhs: &'a AlgebraicReal) -> AlgebraicReal {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for AlgebraicReal {
    type Output = AlgebraicReal;
    fn neg(mut self) -> AlgebraicReal {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &AlgebraicReal {
    type Output = AlgebraicReal;
    fn neg(self) -> AlgebraicReal {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn field(labels: &[u64]) -> Arc<FieldContext> {
        let set: BTreeSet<u64> = labels.iter().copied().collect();
        Arc::new(FieldContext::from_labels(&set).unwrap())
    }

    fn half() -> AlgebraicReal {
        AlgebraicReal::rational(BigRational::new(1.into(), 2.into()))
    }

    #[test]
    fn theta_squared_is_two_for_n4() {
        let f = field(&[4]);
        let t = AlgebraicReal::theta(&f);
        assert_eq!(&t * &t, AlgebraicReal::from_integer(2));
    }

    #[test]
    fn identities() {
        let f = field(&[4]);
        let t = AlgebraicReal::theta(&f);
        assert_eq!(t.clone() + AlgebraicReal::zero(), t);
        assert_eq!(half() / half(), AlgebraicReal::one());
        assert_eq!(t.clone() / t.clone(), AlgebraicReal::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            AlgebraicReal::one().checked_div(&AlgebraicReal::zero()),
            Err(CoxeterError::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let a = AlgebraicReal::theta(&field(&[4]));
        let b = AlgebraicReal::theta(&field(&[5]));
        assert!(matches!(a.checked_add(&b), Err(CoxeterError::ContextMismatch(_))));
    }

    #[test]
    fn signs() {
        let f = field(&[4]);
        assert_eq!(AlgebraicReal::zero().sign(), Ordering::Equal);
        let t = AlgebraicReal::theta(&f);
        assert_eq!((t - AlgebraicReal::one()).sign(), Ordering::Greater);
        let f3 = field(&[3]);
        let m = AlgebraicReal::minus_cos(Some(3), &f3).unwrap();
        assert_eq!(m, -half());
        assert_eq!(m.sign(), Ordering::Less);
    }

    #[test]
    fn minus_cos_special_labels() {
        let f = field(&[3, 4]);
        assert_eq!(AlgebraicReal::minus_cos(Some(2), &f).unwrap(), AlgebraicReal::zero());
        assert_eq!(AlgebraicReal::minus_cos(Some(3), &f).unwrap(), -half());
        assert_eq!(
            AlgebraicReal::minus_cos(None, &f).unwrap(),
            AlgebraicReal::from_integer(-1)
        );
        assert!(matches!(
            AlgebraicReal::minus_cos(Some(5), &f),
            Err(CoxeterError::ContextMismatch(_))
        ));
    }

    #[test]
    fn minus_cos_matches_numeric_cosine() {
        for labels in [vec![3u64, 4], vec![5], vec![3, 4, 5], vec![7], vec![6, 4]] {
            let f = field(&labels);
            for &m in &labels {
                let v = AlgebraicReal::minus_cos(Some(m), &f).unwrap();
                let expected = -(std::f64::consts::PI / m as f64).cos();
                assert!((v.to_f64() - expected).abs() < 1e-12, "m = {m}");
                // 4 (-cos(pi/m))^2 = 2 + 2cos(2pi/m)
                let lhs = AlgebraicReal::from_integer(4) * v.clone() * v;
                let rhs = AlgebraicReal::from_integer(2)
                    + AlgebraicReal::two_cos_multiple(2 * f.order() / m, &f);
                assert_eq!(lhs, rhs, "m = {m}");
            }
        }
    }

    #[test]
    fn inverse_times_self_is_one() {
        let f = field(&[3, 4, 5]);
        let t = AlgebraicReal::theta(&f);
        let x = &(&t * &t) - &AlgebraicReal::from_integer(3) + t.clone();
        assert_eq!(&x * &x.inverse().unwrap(), AlgebraicReal::one());
    }

    #[test]
    fn order_is_numeric() {
        let f = field(&[4]);
        let t = AlgebraicReal::theta(&f);
        assert!(t > AlgebraicReal::one());
        assert!(t < AlgebraicReal::rational(BigRational::new(3.into(), 2.into())));
    }
}
