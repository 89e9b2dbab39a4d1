use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Above this many `k`-subsets the generator samples instead of shuffling them all.
const SHUFFLE_LIMIT: u64 = 1 << 20;

/// A sparse paving matroid given by its circuit-hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsePavingSpec {
    pub k: usize,
    pub n: usize,
    pub circuit_hyperplanes: Vec<Subset>,
    pub seed: u64,
}

impl SparsePavingSpec {
    pub fn lambda(&self) -> usize {
        self.circuit_hyperplanes.len()
    }

    /// Bases: every `k`-subset except the circuit-hyperplanes.
    pub fn matroid(&self) -> Matroid {
        let bases: Vec<Subset> = Subset::full(self.n)
            .k_subsets(self.k)
            .filter(|s| !self.circuit_hyperplanes.contains(s))
            .collect();
        Matroid::from_bases(self.n, bases).expect("pairwise-far k-subsets leave a matroid")
    }

    /// Every two circuit-hyperplanes share at most `k - 2` elements.
    pub fn pairwise_bound_holds(&self) -> bool {
        let c = &self.circuit_hyperplanes;
        (0..c.len()).all(|i| (i + 1..c.len()).all(|j| (c[i] & c[j]).len() + 2 <= self.k))
    }
}

/// `⌊C(n,k) / (max(k, n-k) + 1)⌋`, an upper bound on the number of circuit-hyperplanes.
pub fn lambda_bound(k: usize, n: usize) -> Result<BigInt> {
    if k < 1 || k + 1 > n {
        return Err(Error::BadParameters(format!(
            "need 1 <= k <= n-1, got k={k}, n={n}"
        )));
    }
    Ok(binomial(n as i64, k as i64) / BigInt::from(k.max(n - k) + 1))
}

/// Greedy random choice of up to `target_lambda` `k`-subsets, pairwise meeting in at most
/// `k - 2` elements, seeded by ChaCha8. May return fewer than requested.
pub fn random_sparse_paving(
    k: usize,
    n: usize,
    target_lambda: u64,
    seed: u64,
) -> Result<SparsePavingSpec> {
    if k < 2 || k + 2 > n || n > 64 {
        return Err(Error::BadParameters(format!(
            "need 2 <= k <= n-2 and n <= 64, got k={k}, n={n}"
        )));
    }
    let bound = lambda_bound(k, n)?;
    if BigInt::from(target_lambda) > bound {
        return Err(Error::BadParameters(format!(
            "target {target_lambda} exceeds the bound {bound}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = binomial(n as i64, k as i64).to_u64().unwrap_or(u64::MAX);
    let mut chosen: Vec<Subset> = Vec::new();
    let fits = |chosen: &[Subset], s: Subset| chosen.iter().all(|c| (*c & s).len() + 2 <= k);
    if target_lambda > 0 && total <= SHUFFLE_LIMIT {
        let mut all: Vec<Subset> = Subset::full(n).k_subsets(k).collect();
        all.shuffle(&mut rng);
        for s in all {
            if chosen.len() as u64 >= target_lambda {
                break;
            }
            if fits(&chosen, s) {
                chosen.push(s);
            }
        }
    } else {
        let attempts = target_lambda.saturating_mul(64);
        let elems: Vec<usize> = (0..n).collect();
        for _ in 0..attempts {
            if chosen.len() as u64 >= target_lambda {
                break;
            }
            let s = Subset::from_elements(elems.choose_multiple(&mut rng, k).copied());
            if !chosen.contains(&s) && fits(&chosen, s) {
                chosen.push(s);
            }
        }
    }
    chosen.sort_unstable();
    Ok(SparsePavingSpec {
        k,
        n,
        circuit_hyperplanes: chosen,
        seed,
    })
}

/// `count` sparse paving matroids with `4 <= n <= n_max`, `2 <= k <= n-2` and a random
/// target `λ` up to the bound. Sample `s` uses seed `seed + s`.
pub fn sparse_paving_corpus(
    count: usize,
    n_max: usize,
    seed: u64,
) -> Result<Vec<SparsePavingSpec>> {
    if n_max < 4 {
        return Err(Error::BadParameters(format!(
            "sparse paving corpus needs n_max >= 4, got {n_max}"
        )));
    }
    (0..count as u64)
        .map(|s| {
            let sample_seed = seed.wrapping_add(s);
            let mut rng = ChaCha8Rng::seed_from_u64(sample_seed ^ 0x5eed_5eed_5eed_5eed);
            let n = rng.gen_range(4..=n_max);
            let k = rng.gen_range(2..=n - 2);
            let bound = lambda_bound(k, n)?.to_u64().unwrap_or(u64::MAX);
            let target = rng.gen_range(0..=bound);
            random_sparse_paving(k, n, target, sample_seed)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(lambda_bound(2, 4).unwrap(), BigInt::from(2));
        assert_eq!(lambda_bound(3, 7).unwrap(), BigInt::from(7));
        assert!(lambda_bound(0, 4).is_err());
        assert!(lambda_bound(4, 4).is_err());
    }

    #[test]
    fn zero_target_is_uniform() {
        let s = random_sparse_paving(3, 6, 0, 1).unwrap();
        assert_eq!(s.matroid(), crate::matroid::uniform(3, 6).unwrap());
    }

    #[test]
    fn generated_matroids_are_sparse_paving() {
        for seed in 0..20 {
            let s = random_sparse_paving(3, 7, 7, seed).unwrap();
            assert!(s.pairwise_bound_holds());
            let m = s.matroid();
            assert!(m.is_sparse_paving());
            assert!(BigInt::from(s.lambda()) <= lambda_bound(3, 7).unwrap());
            assert_eq!(random_sparse_paving(3, 7, 7, seed).unwrap(), s);
        }
    }

    #[test]
    fn target_above_bound_is_rejected() {
        assert!(matches!(
            random_sparse_paving(2, 4, 3, 0),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            random_sparse_paving(1, 4, 0, 0),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = sparse_paving_corpus(10, 9, 42).unwrap();
        let b = sparse_paving_corpus(10, 9, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.n <= 9 && s.pairwise_bound_holds()));
    }
}
