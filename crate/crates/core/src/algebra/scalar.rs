//! The scalar abstraction the root engine is generic over.
//!
//! Three carriers are provided:
//!
//! * [`AlgebraicReal`]: exact, any labels. The default everywhere.
//! * [`BigRational`]: exact, but only for labels in {2, 3, inf}
//!   (crystallographic simply-laced systems such as type Ã).
//! * `f64`: approximate, with a fixed tolerance; for quick diagnostics.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::field::FieldContext;
use super::real::AlgebraicReal;
use crate::error::{CoxeterError, Result};

/// Tolerance used by the `f64` carrier for sign decisions.
pub const F64_TOLERANCE: f64 = 1e-9;

/// An ordered field in which every bilinear-form entry of the systems at
/// hand can be represented.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Shared data needed to construct form entries (e.g. the cyclotomic field).
    type Field: Clone + Debug + Send + Sync;
    /// Hashable, totally ordered identity used for deduplication and
    /// canonical ordering.
    type Key: Clone + Debug + Eq + Hash + Ord + Send + Sync;

    /// Build the field for a set of finite labels, each at least 3.
    fn field_for_labels(labels: &BTreeSet<u64>) -> Result<Self::Field>;

    /// `-cos(pi/m)`, with `None` standing for `m = inf`.
    fn minus_cos(m: Option<u64>, field: &Self::Field) -> Result<Self>;

    fn from_i64(v: i64) -> Self;

    fn sign(&self) -> Ordering;

    fn key(&self) -> Self::Key;

    fn to_f64(&self) -> f64;

    fn is_pos(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Zero in the sense of `sign`; exact types agree with `Zero::is_zero`.
    fn is_null(&self) -> bool {
        self.sign() == Ordering::Equal
    }
}

impl Scalar for AlgebraicReal {
    type Field = Arc<FieldContext>;
    type Key = (Vec<BigInt>, BigInt);

    fn field_for_labels(labels: &BTreeSet<u64>) -> Result<Self::Field> {
        Ok(Arc::new(FieldContext::from_labels(labels)?))
    }

    fn minus_cos(m: Option<u64>, field: &Self::Field) -> Result<Self> {
        AlgebraicReal::minus_cos(m, field)
    }

    fn from_i64(v: i64) -> Self {
        AlgebraicReal::from_integer(v)
    }

    fn sign(&self) -> Ordering {
        AlgebraicReal::sign(self)
    }

    fn key(&self) -> Self::Key {
        let (num, den) = self.integer_parts();
        (num.to_vec(), den.clone())
    }

    fn to_f64(&self) -> f64 {
        AlgebraicReal::to_f64(self)
    }
}

impl Scalar for BigRational {
    type Field = ();
    type Key = BigRational;

    fn field_for_labels(labels: &BTreeSet<u64>) -> Result<Self::Field> {
        match labels.iter().find(|&&m| m != 3) {
            Some(&m) if m < 3 => Err(CoxeterError::InvalidLabel(m)),
            Some(&m) => Err(CoxeterError::Unrepresentable(format!(
                "-cos(pi/{m}) is irrational"
            ))),
            None => Ok(()),
        }
    }

    fn minus_cos(m: Option<u64>, _field: &()) -> Result<Self> {
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        match m {
            None => Ok(int(-1)),
            Some(1) => Ok(int(1)),
            Some(2) => Ok(int(0)),
            Some(3) => Ok(BigRational::new((-1).into(), 2.into())),
            Some(m) => Err(CoxeterError::Unrepresentable(format!(
                "-cos(pi/{m}) is irrational"
            ))),
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sign(&self) -> Ordering {
        self.cmp(&BigRational::zero())
    }

    fn key(&self) -> Self::Key {
        self.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    type Field = ();
    /// Value quantised to the tolerance.
    type Key = i64;

    fn field_for_labels(labels: &BTreeSet<u64>) -> Result<Self::Field> {
        match labels.iter().find(|&&m| m < 3) {
            Some(&m) => Err(CoxeterError::InvalidLabel(m)),
            None => Ok(()),
        }
    }

    fn minus_cos(m: Option<u64>, _field: &()) -> Result<Self> {
        Ok(match m {
            None => -1.0,
            Some(2) => 0.0,
            Some(m) => -(std::f64::consts::PI / m as f64).cos(),
        })
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn sign(&self) -> Ordering {
        if *self > F64_TOLERANCE {
            Ordering::Greater
        } else if *self < -F64_TOLERANCE {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn key(&self) -> Self::Key {
        (self / F64_TOLERANCE / 10.0).round() as i64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_carrier_rejects_irrational_labels() {
        let labels: BTreeSet<u64> = [3, 4].into_iter().collect();
        assert!(matches!(
            <BigRational as Scalar>::field_for_labels(&labels),
            Err(CoxeterError::Unrepresentable(_))
        ));
        let labels: BTreeSet<u64> = [3].into_iter().collect();
        assert!(<BigRational as Scalar>::field_for_labels(&labels).is_ok());
    }

    #[test]
    fn carriers_agree_on_minus_cos_three() {
        let exact = AlgebraicReal::minus_cos(Some(3), &Arc::new(FieldContext::for_order(3))).unwrap();
        let rational = <BigRational as Scalar>::minus_cos(Some(3), &()).unwrap();
        let float = <f64 as Scalar>::minus_cos(Some(3), &()).unwrap();
        assert_eq!(exact.as_rational().unwrap(), rational);
        assert!((float + 0.5).abs() < 1e-15);
        assert!(Scalar::is_neg(&rational));
    }
}
