//! Exact binomial coefficients from a shared, lazily grown Pascal triangle.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

static PASCAL: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = PASCAL.read().expect("pascal lock poisoned");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = PASCAL.write().expect("pascal lock poisoned");
    while rows.len() <= n {
        let next = match rows.last() {
            None => vec![BigInt::one()],
            Some(prev) => {
                let mut row = Vec::with_capacity(prev.len() + 1);
                row.push(BigInt::one());
                for w in prev.windows(2) {
                    row.push(&w[0] + &w[1]);
                }
                row.push(BigInt::one());
                row
            }
        };
        rows.push(next);
    }
    rows[n][k].clone()
}

/// `C(n, k)` as a machine integer, for small enumeration bounds.
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
