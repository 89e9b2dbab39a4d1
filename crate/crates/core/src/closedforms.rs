//! Closed formulas: uniform matroids, relaxation deltas and paving matroids.
//!
//! The delta polynomials `p_{k,h}`, `q_{k,h}`, `z_{k,h}`, `g_{k,h}` are each built twice,
//! once as a difference of uniform values and once from barred tableau counts, and the
//! two results must agree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::poly::{gamma_expand, GammaVector, IntPoly};
use crate::tableaux::{bskyt, bsyt, skyt, syt};

/// Rank, size, and the number of stressed hyperplanes of each size `h >= k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PavingProfile {
    pub k: usize,
    pub n: usize,
    pub lambda: BTreeMap<usize, u64>,
}

impl PavingProfile {
    /// Zero counts are dropped. Every `(k-1)`-subset spans exactly one hyperplane in a
    /// paving matroid, so `Σ λ_h C(h, k-1) <= C(n, k-1)` is required.
    pub fn new(k: usize, n: usize, mut lambda: BTreeMap<usize, u64>) -> Result<PavingProfile> {
        if k > n {
            return Err(Error::BadProfile(format!("rank {k} exceeds size {n}")));
        }
        lambda.retain(|_, c| *c > 0);
        if let Some((&h, _)) = lambda.iter().find(|(&h, _)| h < k || h >= n) {
            return Err(Error::BadProfile(format!(
                "hyperplane size {h} outside {k}..{n}"
            )));
        }
        if k >= 1 {
            let covered: BigInt = lambda
                .iter()
                .map(|(&h, &c)| binomial(h as i64, k as i64 - 1) * c)
                .sum();
            if covered > binomial(n as i64, k as i64 - 1) {
                return Err(Error::BadProfile(format!(
                    "hyperplanes cover {covered} subsets of size {}, more than C({n},{})",
                    k - 1,
                    k - 1
                )));
            }
        }
        Ok(PavingProfile { k, n, lambda })
    }

    pub fn uniform(k: usize, n: usize) -> Result<PavingProfile> {
        PavingProfile::new(k, n, BTreeMap::new())
    }

    /// Sparse paving: `λ` circuit-hyperplanes.
    pub fn sparse(k: usize, n: usize, lambda: u64) -> Result<PavingProfile> {
        PavingProfile::new(k, n, BTreeMap::from([(k, lambda)]))
    }
}

fn check_kn(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::BadParameters(format!(
            "need k <= n, got k={k}, n={n}"
        )));
    }
    Ok(())
}

fn check_kh(k: usize, h: usize) -> Result<()> {
    if k < 1 || k > h {
        return Err(Error::BadParameters(format!(
            "need 1 <= k <= h, got k={k}, h={h}"
        )));
    }
    Ok(())
}

fn from_terms(terms: impl IntoIterator<Item = (usize, BigInt)>) -> IntPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (d, c) in terms {
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigInt::zero());
        }
        coeffs[d] += c;
    }
    IntPoly::from_coeffs(coeffs)
}

fn agree(what: &str, a: IntPoly, b: IntPoly) -> Result<IntPoly> {
    if a != b {
        return Err(Error::Inconsistency(format!(
            "{what}: difference route {a}, tableau route {b}"
        )));
    }
    Ok(a)
}

/// `Σ_i skyt(n-k+1, i, k-2i+1) t^i`.
pub fn p_uniform(k: usize, n: usize) -> Result<IntPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Ok(if n == 0 {
            IntPoly::one()
        } else {
            IntPoly::zero()
        });
    }
    let (a, k) = ((n - k + 1) as i64, k as i64);
    Ok(from_terms(
        (0..=(k - 1) / 2).map(|i| (i as usize, skyt(a, i, k - 2 * i + 1))),
    ))
}

/// `Σ_i syt(n-k+1, i, k-2i-1) t^i`.
pub fn q_uniform(k: usize, n: usize) -> Result<IntPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Ok(if n == 0 {
            IntPoly::one()
        } else {
            IntPoly::zero()
        });
    }
    let (a, k) = ((n - k + 1) as i64, k as i64);
    Ok(from_terms(
        (0..=(k - 1) / 2).map(|i| (i as usize, syt(a, i, k - 2 * i - 1))),
    ))
}

/// `t^k + Σ_{j<k} Σ_i C(n,j) skyt(n-k+1, i, k-j-2i+1) t^{i+j}`.
pub fn z_uniform(k: usize, n: usize) -> Result<IntPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Ok(IntPoly::one());
    }
    let a = (n - k + 1) as i64;
    let mut terms = vec![(k, BigInt::one())];
    for j in 0..k {
        let cj = binomial(n as i64, j as i64);
        for i in 0..=(k - j) / 2 {
            let s = skyt(a, i as i64, (k - j - 2 * i + 1) as i64);
            if !s.is_zero() {
                terms.push((i + j, &cj * s));
            }
        }
    }
    Ok(from_terms(terms))
}

/// Gamma vector of `Z_{U_{k,n}}` with
/// `γ_i = C(k-i, i)/(k-i) · Σ_{j=i}^{k-1} (k-j) C(j-1, i-1) C(n-k+j-1, j)` for `i >= 1`.
pub fn gamma_uniform(k: usize, n: usize) -> Result<GammaVector> {
    check_kn(k, n)?;
    let mut gammas = vec![BigInt::one()];
    let (ki, ni) = (k as i64, n as i64);
    for i in 1..=ki / 2 {
        let sum: BigInt = (i..ki)
            .map(|j| BigInt::from(ki - j) * binomial(j - 1, i - 1) * binomial(ni - ki + j - 1, j))
            .sum();
        let num = binomial(ki - i, i) * sum;
        let (q, r) = num.div_rem(&BigInt::from(ki - i));
        if !r.is_zero() {
            return Err(Error::Inconsistency(format!(
                "gamma coefficient {i} of U({k},{n}) is not integral"
            )));
        }
        gammas.push(q);
    }
    GammaVector::new(k, gammas)
}

/// `P_{U_{k,h+1}} - P_{U_{k-1,h}}`, checked against `Σ_i bskyt(h-k+2, i, k-2i+1) t^i`.
pub fn p_kh(k: usize, h: usize) -> Result<IntPoly> {
    check_kh(k, h)?;
    let diff = &p_uniform(k, h + 1)? - &p_uniform(k - 1, h)?;
    let (a, k) = ((h - k + 2) as i64, k as i64);
    let tab = from_terms((0..=(k - 1) / 2).map(|i| (i as usize, bskyt(a, i, k - 2 * i + 1))));
    agree("p_kh", diff, tab)
}

/// `Q_{U_{k,h+1}} - Q_{U_{k-1,h}}`, checked against `Σ_i bsyt(h-k+2, i, k-2i-1) t^i`.
pub fn q_kh(k: usize, h: usize) -> Result<IntPoly> {
    check_kh(k, h)?;
    let diff = &q_uniform(k, h + 1)? - &q_uniform(k - 1, h)?;
    let (a, k) = ((h - k + 2) as i64, k as i64);
    let tab = from_terms((0..=(k - 1) / 2).map(|i| (i as usize, bsyt(a, i, k - 2 * i - 1))));
    agree("q_kh", diff, tab)
}

/// `Z_{U_{k,h+1}} - (1+t) Z_{U_{k-1,h}}`, checked against
/// `[C(h,k-1) - 1] t^{k-1} + Σ_{j<=k-2} Σ_{i>=1} C(h,j) bskyt(h-k+2, i, k-j-2i+1) t^{i+j}`.
pub fn z_kh(k: usize, h: usize) -> Result<IntPoly> {
    check_kh(k, h)?;
    let diff = &z_uniform(k, h + 1)? - &(&IntPoly::one_plus_t() * &z_uniform(k - 1, h)?);
    let a = (h - k + 2) as i64;
    let mut terms = vec![(k - 1, binomial(h as i64, k as i64 - 1) - 1)];
    for j in 0..k.saturating_sub(1) {
        let cj = binomial(h as i64, j as i64);
        for i in 1..=(k - j) / 2 {
            terms.push((i + j, &cj * bskyt(a, i as i64, (k - j - 2 * i + 1) as i64)));
        }
    }
    agree("z_kh", diff, from_terms(terms))
}

/// `γ_{U_{k,h+1}} - γ_{U_{k-1,h}}`, checked against the gamma expansion of `z_{k,h}` in degree `k`.
pub fn g_kh(k: usize, h: usize) -> Result<IntPoly> {
    check_kh(k, h)?;
    let diff = &gamma_uniform(k, h + 1)?.as_poly() - &gamma_uniform(k - 1, h)?.as_poly();
    let via_z = gamma_expand(&z_kh(k, h)?, k)?.as_poly();
    if diff != via_z {
        return Err(Error::Inconsistency(format!(
            "g_kh: difference route {diff}, expansion of z_kh {via_z}"
        )));
    }
    Ok(diff)
}

/// `g_{k,k} = Σ_{i>=1} 2 C(k-i-1, i-1) C(k-1, i) / (i+1) · t^i`.
///
/// This equals `2/(k-i-1) · C(k-i-1, i-1) C(k-1, i+1)` wherever `k-i-1 > 0`, and
/// stays defined at `k = 2`, `i = 1`.
pub fn g_kk(k: usize) -> Result<IntPoly> {
    check_kh(k, k)?;
    let ki = k as i64;
    let mut terms = Vec::new();
    for i in 1..=ki / 2 {
        let num = BigInt::from(2) * binomial(ki - i - 1, i - 1) * binomial(ki - 1, i);
        let (q, r) = num.div_rem(&BigInt::from(i + 1));
        if !r.is_zero() {
            return Err(Error::Inconsistency(format!(
                "coefficient {i} of g_kk({k}) is not integral"
            )));
        }
        terms.push((i as usize, q));
    }
    Ok(from_terms(terms))
}

fn paving_sum(
    prof: &PavingProfile,
    uniform: IntPoly,
    delta: fn(usize, usize) -> Result<IntPoly>,
) -> Result<IntPoly> {
    let mut out = uniform;
    for (&h, &c) in &prof.lambda {
        out -= &delta(prof.k, h)?.scale(&BigInt::from(c));
    }
    Ok(out)
}

pub fn paving_p(prof: &PavingProfile) -> Result<IntPoly> {
    paving_sum(prof, p_uniform(prof.k, prof.n)?, p_kh)
}

pub fn paving_q(prof: &PavingProfile) -> Result<IntPoly> {
    paving_sum(prof, q_uniform(prof.k, prof.n)?, q_kh)
}

pub fn paving_z(prof: &PavingProfile) -> Result<IntPoly> {
    paving_sum(prof, z_uniform(prof.k, prof.n)?, z_kh)
}

pub fn paving_gamma(prof: &PavingProfile) -> Result<GammaVector> {
    let g = paving_sum(prof, gamma_uniform(prof.k, prof.n)?.as_poly(), g_kh)?;
    GammaVector::new(prof.k, g.coeffs().to_vec())
}

/// Whether the paving P, Q and Z are coefficient-wise at most the uniform values.
pub fn domination_check(prof: &PavingProfile) -> bool {
    let (k, n) = (prof.k, prof.n);
    let pairs = [
        (paving_p(prof), p_uniform(k, n)),
        (paving_q(prof), q_uniform(k, n)),
        (paving_z(prof), z_uniform(k, n)),
    ];
    pairs
        .into_iter()
        .all(|pair| matches!(pair, (Ok(m), Ok(u)) if m.dominated_by(&u)))
}

fn check_thagomizer(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParameters("thagomizer needs n >= 1".into()));
    }
    Ok(())
}

/// `1 + t Σ_{k=1}^n C(n,k) P_{U_{k-1,k}}`; the `k = 1` term vanishes since `U_{0,1}` is a loop.
pub fn thagomizer_p(n: usize) -> Result<IntPoly> {
    check_thagomizer(n)?;
    let mut sum = IntPoly::zero();
    for k in 1..=n {
        sum += &p_uniform(k - 1, k)?.scale(&binomial(n as i64, k as i64));
    }
    Ok(&IntPoly::one() + &sum.shift(1))
}

/// `1 + t Σ_{k=1}^n C(n,k) γ_{U_{k-1,k}}` in degree `n + 1`.
pub fn thagomizer_gamma(n: usize) -> Result<GammaVector> {
    check_thagomizer(n)?;
    let mut sum = IntPoly::zero();
    for k in 1..=n {
        sum += &gamma_uniform(k - 1, k)?
            .as_poly()
            .scale(&binomial(n as i64, k as i64));
    }
    let g = &IntPoly::one() + &sum.shift(1);
    GammaVector::new(n + 1, g.coeffs().to_vec())
}
