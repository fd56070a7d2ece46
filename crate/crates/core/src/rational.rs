//! Exact rationals and the `(D(1), D'(1))` evaluation pair.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Reduced fraction with a positive denominator.
///
/// Reduction happens on construction, so `==` is value equality. Ordering is
/// exact; no floating point is involved.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Fixed-point decimal rendering with `digits` places, truncated.
    pub fn decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = (self.numer().abs() * &scale) / self.denom();
        let int = &scaled / &scale;
        let frac = &scaled % &scale;
        let sign = if self.numer().is_negative() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>digits$}")
        }
    }
}

impl std::ops::Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl std::ops::Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::integer(0), |acc, r| &acc + &r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Serialized as `{"num": "...", "den": "..."}`.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &self.numer().to_string())?;
        st.serialize_field("den", &self.denom().to_string())?;
        st.end()
    }
}

/// `D(1)` (number of dominating sets) and `D'(1)` (sum of their sizes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPair {
    pub d1: BigUint,
    pub dp1: BigUint,
}

impl EvalPair {
    /// `D'(1) / D(1)`. Panics on `D(1) = 0`, which no graph produces.
    pub fn avd(&self) -> Rational {
        assert!(!self.d1.is_zero(), "a graph always has a dominating set");
        Rational::new(
            BigInt::from(self.dp1.clone()),
            BigInt::from(self.d1.clone()),
        )
    }
}

impl Serialize for EvalPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EvalPair", 2)?;
        st.serialize_field("d1", &self.d1.to_string())?;
        st.serialize_field("dp1", &self.dp1.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let r = Rational::new(24, 9);
        assert_eq!((r.numer().clone(), r.denom().clone()), (8.into(), 3.into()));
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
        assert_eq!(r.to_string(), "8/3");
    }

    #[test]
    fn exact_ordering() {
        assert!(Rational::new(24, 9) > Rational::new(23, 9));
        assert!(Rational::new(12, 7) < Rational::integer(2));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(4, 3).decimal(6), "1.333333");
        assert_eq!(Rational::new(1, 20).decimal(2), "0.05");
        assert_eq!(Rational::integer(3).decimal(0), "3");
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            serde_json::to_string(&Rational::new(4, 3)).unwrap(),
            r#"{"num":"4","den":"3"}"#
        );
    }
}
