//! Tableau identities: skew-to-straight alternating sum, barred differences, the
//! bijections behind them and the degenerate-parameter conventions.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use super::CheckRecord;
use crate::binomial::binomial;
use crate::tableaux::{bskyt, bsyt, count, enumerate_fillings, skyt, syt, Filling, TableauShape};

/// Shapes up to this many cells are also walked filling by filling.
pub const ENUMERATION_LIMIT: usize = 13;

struct Tally {
    name: &'static str,
    params: serde_json::Value,
    instances: u64,
    failure: Option<serde_json::Value>,
}

impl Tally {
    fn new(name: &'static str, params: serde_json::Value) -> Tally {
        Tally {
            name,
            params,
            instances: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(mut self) -> CheckRecord {
        if let serde_json::Value::Object(m) = &mut self.params {
            m.insert("instances".into(), self.instances.into());
        }
        CheckRecord::new(self.name, self.params, self.failure.is_none(), self.failure)
    }
}

/// `syt(a,i,b-2i-1) = Σ_{j=0}^{b} (-1)^{j+1} C(a+b-1, b-j) skyt(a,i,j-2i+1)`.
fn skew_to_straight(max_cells: i64) -> CheckRecord {
    let mut t = Tally::new(
        "skew_to_straight_alternating_sum",
        json!({ "max_cells": max_cells }),
    );
    for a in 2..=max_cells {
        for i in 0..=max_cells / 2 {
            // the straight shape has a + b - 1 cells and dominates every skew term
            for b in 2 * i + 1..=max_cells + 1 - a {
                let lhs = syt(a, i, b - 2 * i - 1);
                let rhs: BigInt = (0..=b)
                    .map(|j| {
                        let term = binomial(a + b - 1, b - j) * skyt(a, i, j - 2 * i + 1);
                        if j % 2 == 1 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum();
                t.check(lhs == rhs, || json!({ "a": a, "i": i, "b": b, "lhs": lhs.to_string(), "rhs": rhs.to_string() }));
            }
        }
    }
    t.finish()
}

/// `barred(a,i,b) = plain(a,i,b) - plain(a,i,b-1)` for both shape kinds, including
/// degenerate parameters.
fn barred_differences(max_cells: i64) -> Vec<CheckRecord> {
    let mut skew = Tally::new("barred_skew_difference", json!({ "max_cells": max_cells }));
    let mut straight = Tally::new(
        "barred_straight_difference",
        json!({ "max_cells": max_cells }),
    );
    for a in 0..=max_cells {
        for i in 0..=max_cells / 2 {
            for b in 0..=max_cells + 2 {
                if a + 2 * i + b - 2 <= max_cells {
                    let (l, r) = (bskyt(a, i, b), skyt(a, i, b) - skyt(a, i, b - 1));
                    skew.check(l == r, || json!({ "a": a, "i": i, "b": b, "barred": l.to_string(), "difference": r.to_string() }));
                }
                if a + 2 * i + b <= max_cells {
                    let (l, r) = (bsyt(a, i, b), syt(a, i, b) - syt(a, i, b - 1));
                    straight.check(l == r, || json!({ "a": a, "i": i, "b": b, "barred": l.to_string(), "difference": r.to_string() }));
                }
            }
        }
    }
    vec![skew.finish(), straight.finish()]
}

/// Values shifted up by one, rows down by one, and 1 placed on top of column `i`.
fn prepend_top(f: &Filling, i: usize) -> Filling {
    let mut cells = vec![(0, i)];
    cells.extend(f.cells.iter().map(|&(r, c)| (r + 1, c)));
    Filling { cells }
}

/// A new cell holding the maximum at the right end of row 0.
fn append_right(f: &Filling, col: usize) -> Filling {
    let mut cells = f.cells.clone();
    cells.push((0, col));
    Filling { cells }
}

/// Explicit bijections: `Skyt(a,i,b-1)` onto the skew fillings with 1 on top of the
/// right-most column, and `Syt(a,i,b-1)` onto the straight fillings with the maximum
/// at the end of row 0. Both images must be legal, injective, outside the barred
/// family, and exactly fill the complement of the barred family.
fn bijections(max_cells: i64) -> Vec<CheckRecord> {
    let limit = max_cells.min(ENUMERATION_LIMIT as i64);
    let mut skew = Tally::new(
        "skew_top_insertion_bijection",
        json!({ "max_cells": limit }),
    );
    let mut straight = Tally::new("straight_row_end_bijection", json!({ "max_cells": limit }));
    for a in 2..=limit {
        for i in 1..=limit / 2 {
            for b in 3..=limit + 2 - a - 2 * i {
                let target = TableauShape::skyt(a, i, b);
                let barred_min = (b as usize - 2, 0usize);
                let images: Vec<Filling> = fillings(&TableauShape::skyt(a, i, b - 1))
                    .map(|f| prepend_top(&f, i as usize))
                    .collect();
                let ok = bijection_ok(&target, &images, |g| g.cells[0] != barred_min);
                skew.check(ok, || json!({ "a": a, "i": i, "b": b }));
            }
        }
        for i in 0..=limit / 2 {
            for b in 1..=limit - a - 2 * i {
                let target = TableauShape::syt(a, i, b);
                let end = (i + b) as usize;
                let images: Vec<Filling> = fillings(&TableauShape::syt(a, i, b - 1))
                    .map(|f| append_right(&f, end))
                    .collect();
                let ok = bijection_ok(&target, &images, |g| {
                    *g.cells.last().expect("non-empty") == (0, end)
                });
                straight.check(ok, || json!({ "a": a, "i": i, "b": b }));
            }
        }
    }
    vec![skew.finish(), straight.finish()]
}

fn fillings(shape: &TableauShape) -> impl Iterator<Item = Filling> {
    enumerate_fillings(shape).expect("within the enumeration limit")
}

/// Images are legal, distinct, satisfy `in_case`, and number exactly the fillings of
/// `target` satisfying `in_case`.
fn bijection_ok(
    target: &TableauShape,
    images: &[Filling],
    in_case: impl Fn(&Filling) -> bool,
) -> bool {
    let distinct: HashSet<&Filling> = images.iter().collect();
    let legal = images.iter().all(|g| g.is_legal(target) && in_case(g));
    let case_count = fillings(target).filter(|g| in_case(g)).count();
    legal && distinct.len() == images.len() && case_count == images.len()
}

/// Every count agrees with a full walk of the fillings.
fn enumeration(max_cells: i64) -> CheckRecord {
    let limit = max_cells.min(ENUMERATION_LIMIT as i64);
    let mut t = Tally::new("count_matches_enumeration", json!({ "max_cells": limit }));
    for a in 0..=limit {
        for i in 0..=limit / 2 {
            for b in 0..=limit + 2 {
                for base in [TableauShape::syt(a, i, b), TableauShape::skyt(a, i, b)] {
                    for shape in [base, base.barred()] {
                        if shape.cell_count() as i64 > limit {
                            continue;
                        }
                        let walked = BigInt::from(fillings(&shape).count());
                        let counted = count(&shape);
                        t.check(walked == counted, || {
                            json!({ "shape": shape, "walked": walked.to_string(), "counted": counted.to_string() })
                        });
                    }
                }
            }
        }
    }
    t.finish()
}

/// `skyt(a,0,b) = 1` for `b >= 2`; `skyt = 0` when `i > 0` and `a < 2` or `b < 2`;
/// `bskyt(a,0,b) = 0` for `b != 2`.
fn conventions(max_cells: i64) -> CheckRecord {
    let mut t = Tally::new("degenerate_conventions", json!({ "max_cells": max_cells }));
    for a in 1..=max_cells {
        for b in 0..=max_cells {
            let v = skyt(a, 0, b);
            let want = if b >= 2 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            t.check(
                v == want,
                || json!({ "a": a, "i": 0, "b": b, "skyt": v.to_string() }),
            );
            if b != 2 {
                let v = bskyt(a, 0, b);
                t.check(
                    v.is_zero(),
                    || json!({ "a": a, "i": 0, "b": b, "bskyt": v.to_string() }),
                );
            }
        }
    }
    for i in 1..=max_cells / 2 {
        for a in -1..=max_cells {
            for b in -1..=max_cells {
                if a < 2 || b < 2 {
                    let v = skyt(a, i, b);
                    t.check(
                        v.is_zero(),
                        || json!({ "a": a, "i": i, "b": b, "skyt": v.to_string() }),
                    );
                }
            }
        }
    }
    t.finish()
}

/// All tableau checks over shapes with at most `max_cells` cells.
pub fn tableaux_identity_suite(max_cells: usize) -> Vec<CheckRecord> {
    let m = max_cells as i64;
    let mut out = vec![skew_to_straight(m)];
    out.extend(barred_differences(m));
    out.extend(bijections(m));
    out.push(enumeration(m));
    out.push(conventions(m));
    out
}
