use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

/// A polynomial in `x` and `y`; `coeffs[i][j]` is the coefficient of `x^i y^j`.
///
/// Rows carry no trailing zeros and there is no trailing empty row, so the
/// zero polynomial has no rows at all.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<Vec<BigInt>>) -> BiPoly {
        for row in coeffs.iter_mut() {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// Build from `(i, j, c)` triples meaning `c x^i y^j`; repeated monomials add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, i64)>>(terms: I) -> BiPoly {
        let mut coeffs: Vec<Vec<BigInt>> = Vec::new();
        for (i, j, c) in terms {
            if coeffs.len() <= i {
                coeffs.resize(i + 1, Vec::new());
            }
            if coeffs[i].len() <= j {
                coeffs[i].resize(j + 1, BigInt::zero());
            }
            coeffs[i][j] += c;
        }
        BiPoly::from_coeffs(coeffs)
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn x_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs
            .iter()
            .map(|r| r.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for row in self.coeffs.iter().rev() {
            let mut inner = BigInt::zero();
            for c in row.iter().rev() {
                inner = inner * y + c;
            }
            acc = acc * x + inner;
        }
        acc
    }

    /// Substitute univariate polynomials for both variables.
    pub fn substitute(&self, x: &IntPoly, y: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for row in self.coeffs.iter().rev() {
            let mut inner = IntPoly::zero();
            for c in row.iter().rev() {
                inner = &(&inner * y) + &IntPoly::constant(c.clone());
            }
            acc = &(&acc * x) + &inner;
        }
        acc
    }

    fn zip_with(&self, other: &BiPoly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> BiPoly {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            let a = self.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
            let b = other.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
            let cols = a.len().max(b.len());
            let zero = BigInt::zero();
            out.push(
                (0..cols)
                    .map(|j| f(a.get(j).unwrap_or(&zero), b.get(j).unwrap_or(&zero)))
                    .collect(),
            );
        }
        BiPoly::from_coeffs(out)
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Vec::<BigInt>::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (i2, r2) in rhs.coeffs.iter().enumerate() {
                if r1.is_empty() || r2.is_empty() {
                    continue;
                }
                let row = &mut out[i1 + i2];
                if row.len() < r1.len() + r2.len() - 1 {
                    row.resize(r1.len() + r2.len() - 1, BigInt::zero());
                }
                for (j1, a) in r1.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        row[j1 + j2] += a * b;
                    }
                }
            }
        }
        BiPoly::from_coeffs(out)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let sign = if c.is_negative() { "-" } else { "+" };
                if first {
                    if c.is_negative() {
                        f.write_str("-")?;
                    }
                } else {
                    write!(f, " {sign} ")?;
                }
                first = false;
                let mag = c.abs();
                if (i == 0 && j == 0) || !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                for (var, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => f.write_str(var)?,
                        _ => write!(f, "{var}^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl BiPoly {
    /// Nested arrays indexed by x-degree then y-degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|row| {
                    serde_json::Value::Array(row.iter().map(super::bigint_to_json).collect())
                })
                .collect(),
        )
    }
}
