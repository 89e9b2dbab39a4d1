//! Kazhdan–Lusztig, inverse Kazhdan–Lusztig and Z-polynomials by lattice recursion.
//!
//! Every minor that appears is an interval of the root lattice: the contraction
//! `M_F` is `[F, E]` and the localization `M^F` is `[cl(∅), F]`, so all memo tables
//! are indexed by flats of the root.
//!
//! Möbius values and characteristic coefficients are accumulated in `i128`.
//! On at most 64 elements `|μ|` is bounded by a count of bases and each
//! characteristic coefficient by a count of independent sets, both below `2^64`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matroid::{FlatLattice, Matroid};
use crate::poly::{gamma_expand, GammaVector, IntPoly};

pub struct KlCache {
    lattice: FlatLattice,
    loopless: bool,
    /// For each flat `F`: `(G, μ(F, G))` over `G ⊇ F`, in rank order.
    up: Vec<Vec<(u32, i128)>>,
    /// `P` of the contraction at each flat.
    p: Vec<IntPoly>,
    /// `Q` of the localization at each flat (for the loopless part of the root).
    q: OnceLock<Vec<IntPoly>>,
}

fn int(x: i128) -> BigInt {
    BigInt::from(x)
}

impl KlCache {
    pub fn new(m: &Matroid) -> KlCache {
        let lattice = m.flats();
        let up = mobius_up_sets(&lattice);
        let mut cache = KlCache {
            lattice,
            loopless: m.is_loopless(),
            up,
            p: Vec::new(),
            q: OnceLock::new(),
        };
        cache.p = cache.compute_p();
        cache
    }

    pub fn lattice(&self) -> &FlatLattice {
        &self.lattice
    }

    fn rank_of(&self, i: usize) -> usize {
        self.lattice.rank_of_index(i)
    }

    fn top(&self) -> usize {
        self.lattice.len() - 1
    }

    /// `μ(F_lo, F_hi)`, zero when not comparable.
    pub fn mobius(&self, lo: usize, hi: usize) -> i128 {
        self.up[lo]
            .iter()
            .find(|(g, _)| *g as usize == hi)
            .map_or(0, |(_, mu)| *mu)
    }

    /// Coefficients of `χ_{[lo,hi]}(t) = Σ_{G ∈ [lo,hi]} μ(lo, G) t^{rk hi - rk G}`.
    fn chi_coeffs(&self, lo: usize, hi: usize) -> Vec<i128> {
        let top_rank = self.rank_of(hi);
        let base = self.rank_of(lo);
        let hi_set = self.lattice.flat(hi);
        let mut c = vec![0i128; top_rank - base + 1];
        for &(g, mu) in &self.up[lo] {
            let g = g as usize;
            let rg = self.rank_of(g);
            if rg > top_rank {
                break;
            }
            if self.lattice.flat(g).is_subset_of(hi_set) {
                c[top_rank - rg] += mu;
            }
        }
        c
    }

    /// Characteristic polynomial of the interval `[lo, hi]`.
    pub fn chi_interval(&self, lo: usize, hi: usize) -> IntPoly {
        if !self.lattice.flat(lo).is_subset_of(self.lattice.flat(hi)) {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.chi_coeffs(lo, hi).into_iter().map(int).collect())
    }

    /// `t^r P_F(1/t) - P_F(t) = Σ_{G > F} χ_{[F,G]}(t) P_G(t)`; `P_F` is minus the part of
    /// the right side below degree `r/2`.
    fn compute_p(&self) -> Vec<IntPoly> {
        let len = self.lattice.len();
        let top = self.top();
        let top_rank = self.rank_of(top);
        let mut p = vec![IntPoly::zero(); len];
        p[top] = IntPoly::one();
        for f in (0..top).rev() {
            let r = top_rank - self.rank_of(f);
            let mut rhs = IntPoly::zero();
            for &(g, _) in &self.up[f][1..] {
                let g = g as usize;
                let chi = self.chi_interval(f, g);
                rhs += &(&chi * &p[g]);
            }
            p[f] = -&rhs.truncate_below(r.div_ceil(2));
        }
        p
    }

    /// `(-1)^r [t^r Q_F(1/t) - Q_F(t)] = Σ_{G < F} (-1)^{rk G} Q_G(t) Σ_{G' ∈ [G,F]} μ(G,G') t^{rk G' - rk G}`;
    /// `Q_F` is `(-1)^{r+1}` times the part of the right side below degree `r/2`.
    fn compute_q(&self) -> Vec<IntPoly> {
        let len = self.lattice.len();
        let mut q = vec![IntPoly::zero(); len];
        q[0] = IntPoly::one();
        for f in 1..len {
            let r = self.rank_of(f);
            let f_set = self.lattice.flat(f);
            let mut s = IntPoly::zero();
            for g in 0..f {
                let rg = self.rank_of(g);
                if rg >= r || !self.lattice.flat(g).is_subset_of(f_set) || q[g].is_zero() {
                    continue;
                }
                let mut rev = vec![0i128; r - rg + 1];
                for &(g2, mu) in &self.up[g] {
                    let g2 = g2 as usize;
                    let r2 = self.rank_of(g2);
                    if r2 > r {
                        break;
                    }
                    if self.lattice.flat(g2).is_subset_of(f_set) {
                        rev[r2 - rg] += mu;
                    }
                }
                let rev = IntPoly::from_coeffs(rev.into_iter().map(int).collect());
                let sign = if rg.is_multiple_of(2) {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                s.add_scaled_shifted(&(&q[g] * &rev), &sign, 0);
            }
            let low = s.truncate_below(r.div_ceil(2));
            q[f] = if r % 2 == 1 { low } else { -&low };
        }
        q
    }

    fn q_table(&self) -> &[IntPoly] {
        self.q.get_or_init(|| self.compute_q())
    }

    /// `P` of the contraction `M_F` at flat index `f`.
    pub fn p_contraction(&self, f: usize) -> &IntPoly {
        &self.p[f]
    }

    /// `Q` of the localization `M^F` at flat index `f`; zero when the root has loops.
    pub fn q_localization(&self, f: usize) -> IntPoly {
        if self.loopless {
            self.q_table()[f].clone()
        } else {
            IntPoly::zero()
        }
    }

    /// `χ` of the localization `M^F`; zero when the root has loops.
    pub fn chi_localization(&self, f: usize) -> IntPoly {
        if self.loopless {
            self.chi_interval(0, f)
        } else {
            IntPoly::zero()
        }
    }

    pub fn p(&self) -> IntPoly {
        if self.loopless {
            self.p[0].clone()
        } else {
            IntPoly::zero()
        }
    }

    pub fn q(&self) -> IntPoly {
        self.q_localization(self.top())
    }

    /// `Z = Σ_F t^{rk F} P_{M_F}`.
    pub fn z(&self) -> IntPoly {
        let mut z = IntPoly::zero();
        for (f, pf) in self.p.iter().enumerate() {
            z.add_scaled_shifted(pf, &BigInt::one(), self.rank_of(f));
        }
        z
    }

    /// Characteristic polynomial through the Möbius function.
    pub fn chi(&self) -> IntPoly {
        self.chi_localization(self.top())
    }

    pub fn gamma(&self) -> Result<GammaVector> {
        gamma_expand(&self.z(), self.lattice.rank())
    }

    /// Alternative route: `Q_M = -Σ_{F ≠ E} (-1)^{k - rk F} Q_{M^F} P_{M_F}` for nonempty loopless `M`.
    pub fn q_by_convolution(&self) -> IntPoly {
        if !self.loopless {
            return IntPoly::zero();
        }
        let top = self.top();
        if top == 0 {
            return IntPoly::one();
        }
        let k = self.rank_of(top);
        let mut acc = IntPoly::zero();
        for f in 0..top {
            let sign = if (k - self.rank_of(f)).is_multiple_of(2) {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            acc.add_scaled_shifted(&(&self.q_table()[f] * &self.p[f]), &sign, 0);
        }
        acc
    }

    /// Substitute the computed values back into the defining identities and check
    /// degree bounds, Z-palindromicity and non-negativity.
    pub fn verify(&self) -> Result<()> {
        let k = self.lattice.rank();
        let top = self.top();
        let (p, q, z) = (self.p(), self.q(), self.z());
        let fail = |what: &str| Err(Error::Inconsistency(what.to_string()));

        let mut rhs = IntPoly::zero();
        for f in 0..=top {
            rhs += &(&self.chi_localization(f) * &self.p[f]);
        }
        if p.reverse(k).map_or(true, |lhs| lhs != rhs) {
            return fail("P does not satisfy its defining identity");
        }

        let mut rhs = IntPoly::zero();
        for f in 0..=top {
            let rf = self.rank_of(f);
            // t^{k - rk F} χ_{M_F}(1/t) is the reversal of χ_{[F,E]} to degree k - rk F.
            let chi_rev = self
                .chi_interval(f, top)
                .reverse(k - rf)
                .expect("degree of χ equals the rank");
            let term = &self.q_localization(f) * &chi_rev;
            let sign = if rf.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            rhs.add_scaled_shifted(&term, &sign, 0);
        }
        let lhs = q.reverse(k).map(|r| if k.is_multiple_of(2) { r } else { -&r });
        if lhs.map_or(true, |lhs| lhs != rhs) {
            return fail("Q does not satisfy its defining identity");
        }

        if k > 0 && (2 * p.degree() >= k || 2 * q.degree() >= k) {
            return fail("degree bound violated");
        }
        if !z.is_palindromic(k) || z.degree() != k {
            return fail("Z is not palindromic of degree rank");
        }
        if !(p.is_nonnegative() && q.is_nonnegative() && z.is_nonnegative()) {
            return fail("negative coefficient in P, Q or Z");
        }
        Ok(())
    }
}

/// Möbius function on each principal up-set, computed in rank order.
fn mobius_up_sets(lat: &FlatLattice) -> Vec<Vec<(u32, i128)>> {
    (0..lat.len())
        .map(|f| {
            let ups = lat.up_set(f);
            let mut out: Vec<(u32, i128)> = Vec::with_capacity(ups.len());
            for &g in &ups {
                let mu = if g == f {
                    1
                } else {
                    let gs = lat.flat(g);
                    let rg = lat.rank_of_index(g);
                    -out.iter()
                        .take_while(|(h, _)| lat.rank_of_index(*h as usize) < rg)
                        .filter(|(h, _)| lat.flat(*h as usize).is_subset_of(gs))
                        .map(|(_, m)| *m)
                        .sum::<i128>()
                };
                out.push((g as u32, mu));
            }
            out
        })
        .collect()
}

/// P, Q, Z and gamma from one shared cache.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlInvariants {
    pub p: IntPoly,
    pub q: IntPoly,
    pub z: IntPoly,
    pub gamma: GammaVector,
}

/// Compute and self-check all four invariants.
pub fn kl_invariants(m: &Matroid) -> Result<KlInvariants> {
    let cache = KlCache::new(m);
    cache.verify()?;
    Ok(KlInvariants {
        p: cache.p(),
        q: cache.q(),
        z: cache.z(),
        gamma: cache.gamma()?,
    })
}

fn checked(m: &Matroid) -> KlCache {
    let cache = KlCache::new(m);
    if let Err(e) = cache.verify() {
        panic!("Kazhdan-Lusztig self-check failed on {m:?}: {e}");
    }
    cache
}

/// Kazhdan–Lusztig polynomial. Panics if the computed values fail their own identities.
pub fn kl_p(m: &Matroid) -> IntPoly {
    checked(m).p()
}

/// Inverse Kazhdan–Lusztig polynomial.
pub fn kl_q(m: &Matroid) -> IntPoly {
    checked(m).q()
}

pub fn kl_z(m: &Matroid) -> IntPoly {
    checked(m).z()
}

/// Gamma expansion of `Z` with respect to the rank.
pub fn gamma(m: &Matroid) -> Result<GammaVector> {
    checked(m).gamma()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{boolean, figure_one, uniform};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rank_one_and_boolean() {
        for n in 1..6 {
            let u = uniform(1, n).unwrap();
            assert_eq!(kl_p(&u), IntPoly::one());
            assert_eq!(kl_q(&u), IntPoly::one());
            assert_eq!(kl_z(&u), p(&[1, 1]));
            let b = boolean(n);
            assert_eq!(kl_p(&b), IntPoly::one());
            assert_eq!(kl_q(&b), IntPoly::one());
        }
    }

    #[test]
    fn empty_and_rank_zero() {
        let empty = uniform(0, 0).unwrap();
        assert_eq!(kl_p(&empty), IntPoly::one());
        assert_eq!(kl_q(&empty), IntPoly::one());
        assert_eq!(kl_z(&empty), IntPoly::one());
        let loops = uniform(0, 3).unwrap();
        assert_eq!(kl_p(&loops), IntPoly::zero());
        assert_eq!(kl_q(&loops), IntPoly::zero());
        assert_eq!(kl_z(&loops), IntPoly::one());
    }

    #[test]
    fn known_uniform_values() {
        // U_{2,n}: Q = n - 1
        for n in 2..7 {
            assert_eq!(kl_q(&uniform(2, n).unwrap()), p(&[n as i64 - 1]));
        }
        assert_eq!(kl_p(&uniform(3, 4).unwrap()), p(&[1, 2]));
        assert_eq!(
            gamma(&uniform(2, 3).unwrap()).unwrap().gammas,
            vec![BigInt::from(1), BigInt::from(1)]
        );
    }

    #[test]
    fn loops_do_not_change_z() {
        let m = figure_one();
        let looped = m.direct_sum(&uniform(0, 2).unwrap()).unwrap();
        assert_eq!(kl_z(&looped), kl_z(&m));
        assert_eq!(kl_p(&looped), IntPoly::zero());
    }

    #[test]
    fn convolution_route_agrees() {
        for m in [
            figure_one(),
            uniform(3, 6).unwrap(),
            crate::matroid::projective_geometry(2, 2).unwrap(),
        ] {
            let c = KlCache::new(&m);
            assert_eq!(c.q_by_convolution(), c.q());
        }
    }
}
