//! Dense polynomials with unbounded integer coefficients.

mod bipoly;
mod gamma;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use bipoly::BiPoly;
pub use gamma::{gamma_contract, gamma_expand, GammaVector};

/// A univariate polynomial `c_0 + c_1 t + ...`.
///
/// The coefficient vector never has a trailing zero, except that the zero
/// polynomial is stored as `[0]`, so `degree()` is `len - 1` in all cases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly { coeffs: vec![c] }
    }

    /// `c * t^d`.
    pub fn monomial(c: BigInt, d: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPoly::from_coeffs(coeffs)
    }

    /// The linear polynomial `1 + t`.
    pub fn one_plus_t() -> IntPoly {
        IntPoly::from_i64s(&[1, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients in increasing degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `t^m`.
    pub fn shift(&self, m: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// The terms of degree strictly below `m`.
    pub fn truncate_below(&self, m: usize) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().take(m).cloned().collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `t^d f(1/t)`.
    pub fn reverse(&self, d: usize) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if d < self.degree() {
            return Err(Error::DegreeTooSmall {
                degree: self.degree(),
                d,
            });
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    pub fn is_palindromic(&self, d: usize) -> bool {
        self.reverse(d).is_ok_and(|r| &r == self)
    }

    /// Coefficients rise weakly to a peak and then fall weakly.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i - 1] <= c[i] {
            i += 1;
        }
        while i < c.len() && c[i - 1] >= c[i] {
            i += 1;
        }
        i >= c.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Every coefficient of `self` is at most the matching one of `other`.
    pub fn dominated_by(&self, other: &IntPoly) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i) <= other.coeff(i))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Composition `self(g(t))`.
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// Add `c * other * t^shift` in place, without intermediate allocation of the product.
    pub(crate) fn add_scaled_shifted(&mut self, other: &IntPoly, c: &BigInt, shift: usize) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, x) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += x * c;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Default for IntPoly {
    fn default() -> Self {
        IntPoly::zero()
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
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
        IntPoly::from_coeffs(coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled_shifted(rhs, &BigInt::one(), 0);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled_shifted(rhs, &-BigInt::one(), 0);
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    /// Renders as `1 + 3t + t^2`, lowest degree first.
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
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
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

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Serializes a big integer as a plain JSON number of any size.
pub(crate) fn bigint_to_json(x: &BigInt) -> serde_json::Value {
    let number: serde_json::Number = x
        .to_string()
        .parse()
        .expect("integer literal is a JSON number");
    serde_json::Value::Number(number)
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.to_string().parse().ok(),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl IntPoly {
    /// Degree-ascending coefficient array.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(bigint_to_json).collect())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|v| {
                bigint_from_json(v)
                    .ok_or_else(|| serde::de::Error::custom("coefficient is not an integer"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}
