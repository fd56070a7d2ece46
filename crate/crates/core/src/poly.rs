//! Dense polynomials with arbitrary-precision nonnegative coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::EvalPair;

/// `coeffs[k]` is the number of dominating sets of size `k`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has no
/// coefficients and equality is coefficientwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DomPolynomial {
    coeffs: Vec<BigUint>,
}

impl DomPolynomial {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DomPolynomial { coeffs }
    }

    pub fn from_counts<I: IntoIterator<Item = u64>>(counts: I) -> Self {
        Self::new(counts.into_iter().map(BigUint::from).collect())
    }

    pub fn zero() -> Self {
        DomPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        DomPolynomial { coeffs }
    }

    /// `(1 + x)^k`.
    pub fn one_plus_x_pow(k: usize) -> Self {
        let mut row = vec![BigUint::one()];
        for _ in 0..k {
            let mut next = vec![BigUint::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        DomPolynomial { coeffs: row }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_term(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DomPolynomial { coeffs }
    }

    /// `(D(1), D'(1))`.
    pub fn eval_pair(&self) -> EvalPair {
        let mut d1 = BigUint::zero();
        let mut dp1 = BigUint::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            d1 += c;
            dp1 += c * BigUint::from(k);
        }
        EvalPair { d1, dp1 }
    }

    /// Plain rendering, e.g. `[0,0,4,4,1]`.
    pub fn to_plain(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for DomPolynomial {
    /// Human-readable form such as `x^4 + 4x^3 + 4x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_one() && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Add for &DomPolynomial {
    type Output = DomPolynomial;

    fn add(self, rhs: &DomPolynomial) -> DomPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        DomPolynomial::new(coeffs)
    }
}

impl Add for DomPolynomial {
    type Output = DomPolynomial;

    fn add(self, rhs: DomPolynomial) -> DomPolynomial {
        &self + &rhs
    }
}

impl Mul for &DomPolynomial {
    type Output = DomPolynomial;

    fn mul(self, rhs: &DomPolynomial) -> DomPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DomPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        DomPolynomial::new(coeffs)
    }
}

impl Mul for DomPolynomial {
    type Output = DomPolynomial;

    fn mul(self, rhs: DomPolynomial) -> DomPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for DomPolynomial {
    fn product<I: Iterator<Item = DomPolynomial>>(iter: I) -> Self {
        iter.fold(DomPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for DomPolynomial {
    fn sum<I: Iterator<Item = DomPolynomial>>(iter: I) -> Self {
        iter.fold(DomPolynomial::zero(), |acc, p| &acc + &p)
    }
}

/// JSON array of decimal strings, index = cardinality.
impl Serialize for DomPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for DomPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DomPolynomial::new(coeffs))
    }
}
