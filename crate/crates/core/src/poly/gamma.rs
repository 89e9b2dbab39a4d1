use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::IntPoly;
use crate::error::{Error, Result};

/// Coefficients `γ_0 .. γ_{⌊d/2⌋}` with `f(t) = Σ γ_i t^i (1+t)^{d-2i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub d: usize,
    pub gammas: Vec<BigInt>,
}

impl Serialize for GammaVector {
    /// `{"d": .., "gammas": [..]}` with integer coefficients.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let gammas: Vec<serde_json::Value> =
            self.gammas.iter().map(super::bigint_to_json).collect();
        serde_json::json!({ "d": self.d, "gammas": gammas }).serialize(serializer)
    }
}

impl GammaVector {
    /// Pads or validates `gammas` to the `⌊d/2⌋ + 1` slots implied by `d`.
    pub fn new(d: usize, mut gammas: Vec<BigInt>) -> Result<GammaVector> {
        let slots = d / 2 + 1;
        if gammas.len() > slots {
            if gammas[slots..].iter().any(|g| !g.is_zero()) {
                return Err(Error::BadParameters(format!(
                    "gamma vector has {} entries, degree {d} allows {slots}",
                    gammas.len()
                )));
            }
            gammas.truncate(slots);
        }
        gammas.resize(slots, BigInt::zero());
        Ok(GammaVector { d, gammas })
    }

    pub fn zero(d: usize) -> GammaVector {
        GammaVector {
            d,
            gammas: vec![BigInt::zero(); d / 2 + 1],
        }
    }

    /// The gamma polynomial `Σ γ_i t^i`.
    pub fn as_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.gammas.clone())
    }

    pub fn is_gamma_positive(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }
}

/// Expand a palindromic `f` of declared degree `d` in the basis `t^i (1+t)^{d-2i}`.
///
/// Works from the lowest degree up: the coefficient of `t^i` in what remains
/// is exactly `γ_i`, which is then subtracted off.
pub fn gamma_expand(f: &IntPoly, d: usize) -> Result<GammaVector> {
    if f.is_zero() {
        return Ok(GammaVector::zero(d));
    }
    if !f.is_palindromic(d) {
        return Err(Error::NotPalindromic(d));
    }
    let mut rest = f.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            let basis = IntPoly::one_plus_t().pow(d - 2 * i);
            rest.add_scaled_shifted(&basis, &-g.clone(), i);
        }
        gammas.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::Inconsistency(format!(
            "gamma elimination left remainder {rest}"
        )));
    }
    Ok(GammaVector { d, gammas })
}

/// Inverse of [`gamma_expand`].
pub fn gamma_contract(g: &GammaVector) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (i, gi) in g.gammas.iter().enumerate() {
        if gi.is_zero() {
            continue;
        }
        acc.add_scaled_shifted(&IntPoly::one_plus_t().pow(g.d - 2 * i), gi, i);
    }
    acc
}
