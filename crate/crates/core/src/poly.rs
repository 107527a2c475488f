//! Dense integer polynomials in `t`, constant term first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::numbers::json_int;

/// Exact integer polynomial. Trailing zero coefficients are always trimmed,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    #[serde(with = "json_int::vec")]
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// `(1 + t)^n`
    pub fn one_plus_t_pow(n: u32) -> Self {
        let base = Self::from_i64s(&[1, 1]);
        (0..n).fold(Self::one(), |acc, _| &acc * &base)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add_scaled(&mut self, other: &IntPolynomial, c: &BigInt) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
        self.trim();
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `t^d * p(1/t)`. Requires `d >= degree`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.coeffs.len() <= d + 1, "reversal degree below polynomial degree");
        Self::new((0..=d).rev().map(|i| self.coeff(i)).collect())
    }

    /// `t^d * p(1/t) == p(t)`
    pub fn is_palindromic(&self, d: usize) -> bool {
        if self.coeffs.len() > d + 1 {
            return false;
        }
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Weakly increasing up to some index, then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        i + 1 >= c.len()
    }

    /// `c_i c_j >= c_{i-1} c_{j+1}` for all `1 <= i <= j <= d - 1`.
    pub fn is_strongly_log_concave(&self) -> bool {
        let Some(d) = self.degree() else {
            return true;
        };
        for i in 1..d {
            for j in i..d {
                let lhs = self.coeff(i) * self.coeff(j);
                let rhs = self.coeff(i - 1) * self.coeff(j + 1);
                if lhs < rhs {
                    return false;
                }
            }
        }
        true
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        json_int::vec::deserialize(d).map(IntPolynomial::new)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic_and_trim() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert!((&p(&[1, 2]) - &p(&[1, 2])).is_zero());
        assert_eq!(IntPolynomial::one_plus_t_pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[2, 3]).shift(2), p(&[0, 0, 2, 3]));
        assert_eq!(p(&[1, -3, 2]).eval(&BigInt::from(1)), BigInt::zero());
    }

    #[test]
    fn shape_predicates() {
        assert!(p(&[2, 3, 2]).is_palindromic(2));
        assert!(!p(&[2, 3, 2]).is_palindromic(3));
        assert!(IntPolynomial::zero().is_palindromic(4));
        assert!(p(&[1, 3, 3, 1]).is_unimodal());
        assert!(!p(&[1, 0, 1]).is_unimodal());
        assert!(p(&[1, 3, 3, 1]).is_strongly_log_concave());
        assert!(!p(&[1, 1, 3]).is_strongly_log_concave());
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[2, -1, 0, 1]).to_string(), "2 - t + t^3");
        assert_eq!(serde_json::to_string(&p(&[2, 3, 2])).unwrap(), "[2,3,2]");
        let q: IntPolynomial = serde_json::from_str("[1,\"5\",0]").unwrap();
        assert_eq!(q, p(&[1, 5]));
    }
}
