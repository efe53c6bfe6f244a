//! Dense univariate polynomials over the rationals, coefficients stored
//! lowest degree first. Only what the field construction needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

#[cfg(test)]
pub(crate) fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &Poly, k: &BigRational) -> Poly {
    let mut out: Poly = a.iter().map(|c| c * k).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let factor = &rem[dr] / &lead;
        let shift = dr - db;
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &factor * c;
        }
        quot[shift] += factor;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem(a: &Poly, b: &Poly) -> Poly {
    div_rem(a, b).1
}

pub(crate) fn derivative(p: &Poly) -> Poly {
    let mut out: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * int(i as i64))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// `x^m - 1` divided by every cyclotomic factor of proper divisors of `m`.
pub(crate) fn cyclotomic(m: u64) -> Poly {
    let mut p: Poly = vec![BigRational::zero(); m as usize + 1];
    p[0] = int(-1);
    p[m as usize] = BigRational::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = div_rem(&p, &cyclotomic(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

/// For a palindromic `p` of even degree `2d`, the unique `g` of degree `d`
/// with `p(x) = x^d g(x + 1/x)`.
pub(crate) fn palindromic_trace_form(p: &Poly) -> Poly {
    let two_d = degree(p).expect("zero polynomial");
    assert!(two_d.is_multiple_of(2), "palindromic reduction needs even degree");
    let d = two_d / 2;
    // Laurent coefficients c[d + e] for exponents e in -d..=d.
    let mut laurent = p.clone();
    laurent.resize(two_d + 1, BigRational::zero());
    let mut g = vec![BigRational::zero(); d + 1];
    for k in (0..=d).rev() {
        let coeff = laurent[d + k].clone();
        if coeff.is_zero() {
            continue;
        }
        // (x + 1/x)^k = sum_j binom(k, j) x^(k - 2j)
        let mut binom = BigInt::one();
        for j in 0..=k {
            let e = d + k - 2 * j;
            laurent[e] -= &coeff * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        g[k] = coeff;
    }
    debug_assert!(laurent.iter().all(Zero::is_zero));
    trim(&mut g);
    g
}

/// Sturm chain of a squarefree polynomial.
pub(crate) fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let r = rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub(crate) fn count_roots(chain: &[Poly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes(chain, lo) - sign_changes(chain, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Poly {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn trace_form_of_phi8_is_x2_minus_2() {
        assert_eq!(palindromic_trace_form(&cyclotomic(8)), ints(&[-2, 0, 1]));
        assert_eq!(palindromic_trace_form(&cyclotomic(6)), ints(&[-1, 1]));
        // 2cos(pi/12): y^4 - 4y^2 + 1
        assert_eq!(
            palindromic_trace_form(&cyclotomic(24)),
            ints(&[1, 0, -4, 0, 1])
        );
    }

    #[test]
    fn division_roundtrip() {
        let a = ints(&[3, -1, 4, 1, -5, 9]);
        let b = ints(&[2, 7, 1]);
        let (q, r) = div_rem(&a, &b);
        assert_eq!(add(&mul(&q, &b), &r), a);
        assert!(degree(&r).is_none_or(|d| d < 2));
    }

    #[test]
    fn sturm_counts_roots_of_x2_minus_2() {
        let chain = sturm_chain(&ints(&[-2, 0, 1]));
        assert_eq!(count_roots(&chain, &int(-10), &int(10)), 2);
        assert_eq!(count_roots(&chain, &int(0), &int(10)), 1);
        assert_eq!(count_roots(&chain, &int(2), &int(10)), 0);
    }
}
