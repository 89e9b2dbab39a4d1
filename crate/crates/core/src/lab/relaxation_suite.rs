use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::CheckRecord;
use crate::binomial::binomial;
use crate::closedforms::{g_kh, p_kh, q_kh, z_kh};
use crate::error::Result;
use crate::invariants::{beta, characteristic, tutte, KlCache, TUTTE_CAP};
use crate::matroid::Matroid;
use crate::poly::{BiPoly, IntPoly};
use crate::relaxation::{free_subsets, relax, stressed_hyperplanes, unrelax};
use crate::subset::Subset;

/// `(x + y - xy) Σ_{j=k}^{h} C(h,j) (y-1)^{j-k}`.
fn tutte_delta(k: usize, h: usize) -> BiPoly {
    let front = BiPoly::from_terms([(1, 0, 1), (0, 1, 1), (1, 1, -1)]);
    let y_minus_one = BiPoly::from_terms([(0, 1, 1), (0, 0, -1)]);
    let mut sum = BiPoly::zero();
    for j in k..=h {
        let mut term = BiPoly::from_coeffs(vec![vec![binomial(h as i64, j as i64)]]);
        for _ in k..j {
            term = &term * &y_minus_one;
        }
        sum = &sum + &term;
    }
    &front * &sum
}

fn poly_pair(label: &str, got: &IntPoly, want: &IntPoly) -> Option<Value> {
    (got != want).then(
        || json!({ "quantity": label, "measured": got.to_json(), "expected": want.to_json() }),
    )
}

struct Ctx<'a> {
    m: &'a Matroid,
    r: &'a Matroid,
    h_set: Subset,
    k: usize,
    h: usize,
    out: Vec<CheckRecord>,
}

impl Ctx<'_> {
    fn push(&mut self, check: &str, ok: bool, witness: Option<Value>) {
        let params = json!({ "n": self.m.n(), "k": self.k, "h": self.h, "hyperplane": self.h_set });
        self.out.push(CheckRecord::new(
            check,
            params,
            ok,
            if ok { None } else { witness },
        ));
    }

    fn push_result(&mut self, check: &str, res: Result<Option<Value>>) {
        match res {
            Ok(w) => self.push(check, w.is_none(), w),
            Err(e) => self.push(check, false, Some(json!({ "error": e.to_string() }))),
        }
    }

    fn rank_function(&mut self) {
        let (m, r, h, k) = (self.m, self.r, self.h_set, self.k);
        let mut witness = None;
        if m.n() <= TUTTE_CAP {
            for a in m.ground().subsets() {
                let bump = usize::from(a.is_subset_of(h) && a.len() >= k);
                if r.rank_of(a) != m.rank_of(a) + bump {
                    witness =
                        Some(json!({ "subset": a, "before": m.rank_of(a), "after": r.rank_of(a) }));
                    break;
                }
            }
        }
        let ok = r.rank() == k && witness.is_none();
        self.push(
            "relaxation_rank_function",
            ok,
            witness.or(Some(json!({ "rank": r.rank() }))),
        );
    }

    fn flats(&mut self) {
        let before: BTreeSet<Subset> = self.m.flats().all().iter().copied().collect();
        let after: BTreeSet<Subset> = self.r.flats().all().iter().copied().collect();
        let mut expect: BTreeSet<Subset> =
            before.into_iter().filter(|f| *f != self.h_set).collect();
        expect.extend(self.h_set.k_subsets(self.k - 1));
        let ok = after == expect;
        let witness = json!({
            "missing": expect.difference(&after).collect::<Vec<_>>(),
            "unexpected": after.difference(&expect).collect::<Vec<_>>(),
        });
        self.push("relaxation_flats", ok, Some(witness));
    }

    fn tutte_and_beta(&mut self) {
        let (k, h) = (self.k, self.h);
        let res = (|| {
            if self.m.n() > TUTTE_CAP {
                return Ok(None);
            }
            let d = &tutte(self.r)? - &tutte(self.m)?;
            let want = tutte_delta(k, h);
            Ok((d != want).then(|| json!({ "measured": d.to_json(), "expected": want.to_json() })))
        })();
        self.push_result("relaxation_tutte_delta", res);

        let res = (|| {
            let d = beta(self.r)? - beta(self.m)?;
            let want = binomial(h as i64 - 1, k as i64 - 1);
            Ok((d != want)
                .then(|| json!({ "measured": d.to_string(), "expected": want.to_string() })))
        })();
        self.push_result("relaxation_beta_delta", res);
        self.push(
            "relaxation_connected",
            self.r.is_connected(),
            Some(json!({ "components": self.r.components() })),
        );
    }

    fn characteristic(&mut self) {
        let (k, h) = (self.k, self.h);
        let res = (|| {
            let d = &characteristic(self.r)? - &characteristic(self.m)?;
            let c = binomial(h as i64 - 1, k as i64 - 1);
            let c = if k % 2 == 0 { c } else { -c };
            let want = IntPoly::from_coeffs(vec![c.clone(), -c]);
            Ok(poly_pair("chi", &d, &want))
        })();
        self.push_result("relaxation_characteristic_delta", res);
    }

    fn kl(&mut self, before: &KlCache, after: &KlCache) {
        let (k, h) = (self.k, self.h);
        let res = (|| -> Result<Option<Value>> {
            let checks = [
                ("P", &after.p() - &before.p(), p_kh(k, h)?),
                ("Q", &after.q() - &before.q(), q_kh(k, h)?),
                ("Z", &after.z() - &before.z(), z_kh(k, h)?),
                (
                    "gamma",
                    &after.gamma()?.as_poly() - &before.gamma()?.as_poly(),
                    g_kh(k, h)?,
                ),
            ];
            Ok(checks
                .iter()
                .find_map(|(l, got, want)| poly_pair(l, got, want)))
        })();
        self.push_result("relaxation_kl_deltas", res);
    }

    fn round_trip(&mut self) {
        let free = free_subsets(self.r);
        let listed = free.contains(&self.h_set);
        let back = unrelax(self.r, self.h_set);
        let ok = listed && back.as_ref().is_ok_and(|b| b == self.m);
        let witness =
            json!({ "listed_as_free": listed, "unrelax": back.err().map(|e| e.to_string()) });
        self.push("relaxation_round_trip", ok, Some(witness));
    }
}

/// For every stressed hyperplane of size at least the rank: rank function, flats, Tutte,
/// beta, connectivity, characteristic and Kazhdan–Lusztig deltas, and the round trip.
pub fn relaxation_theorem_suite(m: &Matroid) -> Vec<CheckRecord> {
    let k = m.rank();
    let stressed = stressed_hyperplanes(m);
    let mut out = Vec::new();

    let pair_witness = stressed.iter().enumerate().find_map(|(i, a)| {
        stressed[i + 1..]
            .iter()
            .find(|b| (*a & **b).len() + 2 > k)
            .map(|b| json!([a, b]))
    });
    out.push(CheckRecord::new(
        "stressed_hyperplanes_pairwise_intersection",
        json!({ "n": m.n(), "k": k, "stressed": stressed.len() }),
        pair_witness.is_none(),
        pair_witness,
    ));

    let before = KlCache::new(m);
    for &h_set in stressed.iter().filter(|h| h.len() >= k && k >= 1) {
        let r = relax(m, h_set).expect("stressed hyperplanes relax");
        let mut ctx = Ctx {
            m,
            r: &r,
            h_set,
            k,
            h: h_set.len(),
            out: Vec::new(),
        };
        ctx.rank_function();
        ctx.flats();
        ctx.tutte_and_beta();
        ctx.characteristic();
        ctx.kl(&before, &KlCache::new(&r));
        ctx.round_trip();
        out.extend(ctx.out);
    }
    out
}
