//! Binomial identities and inequalities used for gamma-positivity of sparse paving
//! matroids, checked in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use super::CheckRecord;
use crate::binomial::binomial;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn qb(b: BigInt) -> Q {
    Q::from_integer(b)
}

fn frac(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// `max(k, n-k) + 1`.
fn ckn(k: i64, n: i64) -> i64 {
    k.max(n - k) + 1
}

/// Collects instances of one check and folds them into a single record.
struct Tally {
    name: &'static str,
    range: &'static str,
    n_max: i64,
    instances: u64,
    failure: Option<serde_json::Value>,
}

impl Tally {
    fn new(name: &'static str, range: &'static str, n_max: i64) -> Tally {
        Tally {
            name,
            range,
            n_max,
            instances: 0,
            failure: None,
        }
    }

    fn le(&mut self, params: (i64, i64, i64), lhs: Q, rhs: Q) {
        self.record(params, lhs <= rhs, "<=", lhs, rhs);
    }

    fn ge(&mut self, params: (i64, i64, i64), lhs: Q, rhs: Q) {
        self.record(params, lhs >= rhs, ">=", lhs, rhs);
    }

    fn eq(&mut self, params: (i64, i64, i64), lhs: Q, rhs: Q) {
        self.record(params, lhs == rhs, "==", lhs, rhs);
    }

    fn record(&mut self, (i, k, n): (i64, i64, i64), ok: bool, rel: &str, lhs: Q, rhs: Q) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(json!({
                "i": i, "k": k, "n": n, "relation": rel,
                "lhs": lhs.to_string(), "rhs": rhs.to_string(),
            }));
        }
    }

    fn finish(self) -> CheckRecord {
        let params =
            json!({ "n_max": self.n_max, "range": self.range, "instances": self.instances });
        let ok = self.failure.is_none();
        CheckRecord::new(self.name, params, ok, self.failure)
    }
}

/// `Σ_{j=i}^{k-1} (k-j) C(j-1,i-1) C(n-k+j-1,j)`.
fn weighted_sum(i: i64, k: i64, n: i64) -> BigInt {
    (i..k)
        .map(|j| BigInt::from(k - j) * c(j - 1, i - 1) * c(n - k + j - 1, j))
        .sum()
}

/// `k(n-2)(n-k) / ((k-1)(n-1))`.
fn common_rhs(k: i64, n: i64) -> Q {
    frac(k * (n - 2) * (n - k), (k - 1) * (n - 1))
}

/// Every check over all valid `(i, k, n)` with `n <= n_max`, one record per check.
pub fn verify_appendix(n_max: usize) -> Vec<CheckRecord> {
    let nm = n_max as i64;
    let mut a = Tally::new("elementary_bound_linear", "1<=k<=n-1", nm);
    let mut b = Tally::new("elementary_bound_n_ge_7", "2<=k<=n-1, n>=7", nm);
    let mut cc = Tally::new("elementary_bound_n_ge_15", "2<=k<=n-1, n>=15", nm);
    let mut id1 = Tally::new("weighted_binomial_sum_identity", "1<=i<=k<=n-1", nm);
    let mut id2 = Tally::new("shifted_binomial_sum_identity", "1<=i<=k<=n-1", nm);
    let mut lb = Tally::new("binomial_sum_lower_bound", "1<=i<=k<=n-1, k>=2", nm);
    let mut rb = Tally::new("ratio_bound", "3<=i<=k/2, k<=n-1; i=2 with n>=15", nm);
    let mut key2 = Tally::new(
        "gamma_key_inequality_i_ge_2",
        "2<=i<=floor(k/2), k<=n-1",
        nm,
    );
    let mut key1 = Tally::new("gamma_key_inequality_i_eq_1", "1<=k<=n-1", nm);
    let mut lin = Tally::new("linear_coefficient_identities", "1<=k<=n-1", nm);

    for n in 2..=nm {
        for k in 1..n {
            let cn = ckn(k, n);
            let binom_n1k1 = c(n - 1, k - 1);

            // (n/(k c) + (n-k)/(n-k+1)) (k-1) <= k - k / C(n-1,k-1)
            let lhs = (frac(n, k * cn) + frac(n - k, n - k + 1)) * q(k - 1);
            let rhs = q(k) - Q::new(BigInt::from(k), binom_n1k1.clone());
            a.le((0, k, n), lhs, rhs);

            if k >= 2 && n >= 7 {
                // 1/(n - k/2) = 2/(2n - k)
                let lhs =
                    frac(n * (n - k + 2), 2 * k * cn) + q(n - k) * (q(1) - frac(2, 2 * n - k));
                b.le((0, k, n), lhs, common_rhs(k, n));
            }
            if k >= 2 && n >= 15 {
                let lhs =
                    frac(2 * n * (n - k + 1), 3 * k * cn) + frac((n - k) * (n - k + 1), n - k + 2);
                cc.le((0, k, n), lhs, common_rhs(k, n));
            }

            // linear coefficient: the sum side and its two closed pieces
            let s0: BigInt = (1..k).map(|j| c(n - k + j - 1, j)).sum();
            let s1: BigInt = (1..k).map(|j| BigInt::from(j) * c(n - k + j - 1, j)).sum();
            let want1 = frac(2 * (n - k), n * (n - k + 1)) * qb(c(k, 2) * c(n, k));
            lin.eq((0, k, n), qb(s1), want1);
            lin.eq((0, k, n), qb(s0), qb(&binom_n1k1 - 1));
            let lhs = frac(2, k * cn) * qb(c(n, k) * c(k, 2));
            key1.le((1, k, n), lhs, qb(weighted_sum(1, k, n)));

            for i in 1..=k {
                let binoms = qb(&binom_n1k1 * c(k - 1, i));
                let s: BigInt = (i..k)
                    .map(|j| BigInt::from(j) * c(j - 1, i - 1) * c(n - k + j - 1, j))
                    .sum();
                id1.eq(
                    (i, k, n),
                    qb(s),
                    frac(i * (n - k), n + i - k) * binoms.clone(),
                );

                let s: BigInt = (i..k)
                    .map(|j| c(j - 1, i - 1) * c(n - k + j - 2, j - 1))
                    .sum();
                id2.eq(
                    (i, k, n),
                    qb(s),
                    frac(i * (n - k), (n - 1) * (n + i - k - 1)) * binoms.clone(),
                );

                if k >= 2 {
                    let s: BigInt = (i..k).map(|j| c(j - 1, i - 1) * c(n - k + j - 1, j)).sum();
                    let rhs =
                        frac((n - 2) * i * (n - k), (k - 1) * (n - 1) * (n + i - k - 1)) * binoms;
                    lb.ge((i, k, n), qb(s), rhs);
                }

                if 2 * i <= k && (i >= 3 || (i == 2 && n >= 15)) {
                    let lhs = frac(2 * n * (n + i - k - 1), k * (i + 1) * cn)
                        + frac((n - k) * (n + i - k - 1), n + i - k);
                    rb.le((i, k, n), lhs, common_rhs(k, n));
                }

                if i >= 2 && 2 * i <= k {
                    let lhs = frac(2 * i, k * cn) * qb(c(n, k) * c(k, i + 1));
                    key2.le((i, k, n), lhs, qb(weighted_sum(i, k, n)));
                }
            }
        }
    }
    let mut out: Vec<CheckRecord> = [a, b, cc, id1, id2, lb, rb, key2, key1, lin]
        .into_iter()
        .map(Tally::finish)
        .collect();
    out.push(alternating_binomial_check(30));
    out
}

/// `Σ_{j=k}^{h} (-1)^{j-k} C(h,j) = C(h-1,k-1)` for `1 <= k <= h <= h_max`.
pub fn alternating_binomial_check(h_max: usize) -> CheckRecord {
    let mut t = Tally::new("alternating_binomial_identity", "1<=k<=h", h_max as i64);
    for h in 1..=h_max as i64 {
        for k in 1..=h {
            let s: BigInt = (k..=h)
                .map(|j| if (j - k) % 2 == 0 { c(h, j) } else { -c(h, j) })
                .sum();
            t.eq((0, k, h), qb(s), qb(c(h - 1, k - 1)));
        }
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_to_twenty() {
        for r in verify_appendix(20) {
            assert!(r.passed(), "{}", r.to_json_line());
        }
    }

    #[test]
    fn tally_reports_first_failure() {
        let mut t = Tally::new("demo", "", 3);
        t.le((1, 2, 3), q(2), q(1));
        t.le((1, 2, 4), q(3), q(1));
        let r = t.finish();
        assert!(!r.passed());
        assert_eq!(r.witness.unwrap()["n"], 3);
    }
}
