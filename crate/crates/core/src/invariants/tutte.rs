use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::matroid::{Matroid, RANK_TABLE_MAX};
use crate::poly::{BiPoly, IntPoly};
use crate::subset::Subset;

/// Default ground-set cap for the `2^n` subset expansion.
pub const TUTTE_CAP: usize = RANK_TABLE_MAX;

pub fn tutte(m: &Matroid) -> Result<BiPoly> {
    tutte_with_cap(m, TUTTE_CAP)
}

/// `T(x, y) = Σ_A (x-1)^{k - rk A} (y-1)^{|A| - rk A}`.
pub fn tutte_with_cap(m: &Matroid, cap: usize) -> Result<BiPoly> {
    let n = m.n();
    if n > cap {
        return Err(Error::GroundSetTooLarge { n, cap });
    }
    let k = m.rank();
    // counts[i][j]: subsets with corank i and nullity j
    let mut counts = vec![vec![0u64; n + 1]; k + 1];
    for a in Subset::full(n).subsets() {
        let r = m.rank_of(a);
        counts[k - r][a.len() - r] += 1;
    }
    let mut coeffs = vec![vec![BigInt::zero(); n + 1]; k + 1];
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = BigInt::from(c);
            // (x-1)^i (y-1)^j
            for (xa, cx) in coeffs.iter_mut().enumerate().take(i + 1) {
                let sx = if (i - xa) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                let fx = &c * binomial(i as i64, xa as i64) * sx;
                for (yb, cell) in cx.iter_mut().enumerate().take(j + 1) {
                    let sy = if (j - yb) % 2 == 0 { 1 } else { -1 };
                    *cell += &fx * binomial(j as i64, yb as i64) * sy;
                }
            }
        }
    }
    Ok(BiPoly::from_coeffs(coeffs))
}

/// `(-1)^k T(1 - t, 0)`.
pub fn characteristic_from_tutte(t: &BiPoly, k: usize) -> IntPoly {
    let chi = t.substitute(&IntPoly::from_i64s(&[1, -1]), &IntPoly::zero());
    if k.is_multiple_of(2) {
        chi
    } else {
        -&chi
    }
}
