use crate::error::{Error, Result};

/// `GF(q)` for the small prime powers used by projective geometries.
///
/// Elements are `0..q`, read as base-`p` digit vectors of polynomials modulo a
/// fixed irreducible: `x^2+x+1` for 4, `x^3+x+1` for 8, `x^2+1` for 9.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: u32) -> Result<FiniteField> {
        // (p, m, modulus coefficients of x^0..x^{m-1}, i.e. x^m = -Σ c_i x^i)
        let (p, m, modulus): (usize, usize, &[usize]) = match q {
            2 => (2, 1, &[0]),
            3 => (3, 1, &[0]),
            5 => (5, 1, &[0]),
            7 => (7, 1, &[0]),
            4 => (2, 2, &[1, 1]),
            8 => (2, 3, &[1, 1, 0]),
            9 => (3, 2, &[1, 0]),
            _ => return Err(Error::UnsupportedFieldOrder(q)),
        };
        let q = q as usize;
        let digits = |x: usize| -> Vec<usize> { (0..m).map(|i| x / p.pow(i as u32) % p).collect() };
        let number =
            |d: &[usize]| -> usize { d.iter().enumerate().map(|(i, v)| v * p.pow(i as u32)).sum() };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = number(&sum) as u8;
                let mut prod = vec![0usize; 2 * m];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (m..2 * m).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, mc) in modulus.iter().enumerate() {
                        // x^m ≡ -Σ mc_i x^i
                        prod[deg - m + i] = (prod[deg - m + i] + c * (p - mc % p)) % p;
                    }
                }
                mul[a * q + b] = number(&prod[..m]) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .expect("field element has an inverse") as u8;
        }
        Ok(FiniteField {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// Rank of a list of vectors by Gaussian elimination.
    pub fn rank(&self, vectors: &[&[u8]]) -> usize {
        let mut rows: Vec<Vec<u8>> = vectors.iter().map(|v| v.to_vec()).collect();
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = self.inv(rows[rank][c]);
            for x in rows[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..rows.len() {
                if r != rank && rows[r][c] != 0 {
                    let factor = self.neg(rows[r][c]);
                    for j in 0..cols {
                        let delta = self.mul(factor, rows[rank][j]);
                        rows[r][j] = self.add(rows[r][j], delta);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            let q = q as u8;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if a != 0 && b != 0 {
                        assert_ne!(f.mul(a, b), 0, "zero divisor in GF({q})");
                    }
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_orders() {
        for q in [0u32, 1, 6, 10, 16] {
            assert!(matches!(
                FiniteField::new(q),
                Err(Error::UnsupportedFieldOrder(_))
            ));
        }
    }

    #[test]
    fn rank_by_elimination() {
        let f = FiniteField::new(2).unwrap();
        let v: [&[u8]; 3] = [&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]];
        assert_eq!(f.rank(&v), 2);
    }
}
