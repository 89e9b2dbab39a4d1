//! Tutte, characteristic and beta invariants, and the Kazhdan–Lusztig family.

mod kl;
mod tutte;

pub use kl::{gamma, kl_invariants, kl_p, kl_q, kl_z, KlCache, KlInvariants};
pub use tutte::{characteristic_from_tutte, tutte, tutte_with_cap, TUTTE_CAP};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::poly::IntPoly;

/// Characteristic polynomial through the Möbius function, cross-checked against
/// `(-1)^k T(1-t, 0)` whenever the Tutte expansion is within its cap.
pub fn characteristic(m: &Matroid) -> Result<IntPoly> {
    let chi = KlCache::new(m).chi();
    if m.n() <= TUTTE_CAP {
        let via_tutte = characteristic_from_tutte(&tutte(m)?, m.rank());
        if via_tutte != chi {
            return Err(Error::Inconsistency(format!(
                "characteristic polynomial: Möbius gives {chi}, Tutte gives {via_tutte}"
            )));
        }
    }
    Ok(chi)
}

/// Coefficient of `x^1 y^0` in the Tutte polynomial. Above the Tutte cap it is
/// read off the characteristic polynomial as `(-1)^{k+1} χ'(1)`.
pub fn beta(m: &Matroid) -> Result<BigInt> {
    if m.n() <= TUTTE_CAP {
        Ok(tutte(m)?.coeff(1, 0))
    } else {
        Ok(beta_from_characteristic(&KlCache::new(m).chi(), m.rank()))
    }
}

pub fn beta_from_characteristic(chi: &IntPoly, k: usize) -> BigInt {
    let d = chi.derivative().eval(&BigInt::from(1));
    if k % 2 == 1 {
        d
    } else {
        -d
    }
}
