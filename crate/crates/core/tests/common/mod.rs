//! Brute-force oracles shared by the integration tests. They use only bases, rank
//! queries, restriction and contraction, never the flat lattice or the recursion tables.

#![allow(dead_code)]

use std::collections::HashMap;

use matroid_kl::tableaux::{TableauKind, TableauShape};
use matroid_kl::{BiPoly, IntPoly, Matroid, Subset};
use num_bigint::BigInt;

type Key = (usize, Vec<u64>);

fn key(m: &Matroid) -> Key {
    (m.n(), m.bases().iter().map(|b| b.bits()).collect())
}

/// Flats found as closures of every subset.
pub fn flats(m: &Matroid) -> Vec<Subset> {
    let mut out: Vec<Subset> = m.ground().subsets().map(|a| m.closure(a)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whitney's subset expansion `Σ_A (-1)^{|A|} t^{k - r(A)}`.
pub fn characteristic(m: &Matroid) -> IntPoly {
    let k = m.rank();
    let mut c = vec![BigInt::from(0); k + 1];
    for a in m.ground().subsets() {
        let d = k - m.rank_of(a);
        if a.len() % 2 == 0 {
            c[d] += 1;
        } else {
            c[d] -= 1;
        }
    }
    IntPoly::from_coeffs(c)
}

/// Tutte polynomial by deletion and contraction of the least element.
pub fn tutte(m: &Matroid) -> BiPoly {
    fn go(m: &Matroid, memo: &mut HashMap<Key, BiPoly>) -> BiPoly {
        if m.n() == 0 {
            return BiPoly::from_terms([(0, 0, 1)]);
        }
        if let Some(t) = memo.get(&key(m)) {
            return t.clone();
        }
        let e = Subset::singleton(0);
        let x = BiPoly::from_terms([(1, 0, 1)]);
        let y = BiPoly::from_terms([(0, 1, 1)]);
        let out = if m.loops().contains(0) {
            &y * &go(&m.delete(e), memo)
        } else if m.coloops().contains(0) {
            &x * &go(&m.contract(e), memo)
        } else {
            &go(&m.delete(e), memo) + &go(&m.contract(e), memo)
        };
        memo.insert(key(m), out.clone());
        out
    }
    go(m, &mut HashMap::new())
}

#[derive(Default)]
pub struct KlOracle {
    p: HashMap<Key, IntPoly>,
    q: HashMap<Key, IntPoly>,
}

impl KlOracle {
    /// `t^k P(1/t) - P(t) = Σ_{F ≠ ∅} χ_{M|F}(t) P_{M/F}(t)`, and `deg P < k/2`.
    pub fn p(&mut self, m: &Matroid) -> IntPoly {
        if !m.is_loopless() {
            return IntPoly::zero();
        }
        let k = m.rank();
        if k == 0 {
            return IntPoly::one();
        }
        if let Some(v) = self.p.get(&key(m)) {
            return v.clone();
        }
        let mut rhs = IntPoly::zero();
        for f in flats(m).into_iter().filter(|f| !f.is_empty()) {
            rhs += &(&characteristic(&m.restrict(f)) * &self.p(&m.contract(f)));
        }
        let out = -&rhs
            .coeffs()
            .iter()
            .take(k.div_ceil(2))
            .cloned()
            .collect::<Vec<_>>()
            .into_poly();
        self.p.insert(key(m), out.clone());
        out
    }

    /// `Σ_F (-1)^{rk F} P_{M|F}(t) Q_{M/F}(t) = 0` for positive rank, solved for `Q_M`.
    pub fn q(&mut self, m: &Matroid) -> IntPoly {
        if !m.is_loopless() {
            return IntPoly::zero();
        }
        if m.rank() == 0 {
            return IntPoly::one();
        }
        if let Some(v) = self.q.get(&key(m)) {
            return v.clone();
        }
        let mut sum = IntPoly::zero();
        for f in flats(m).into_iter().filter(|f| !f.is_empty()) {
            let term = &self.p(&m.restrict(f)) * &self.q(&m.contract(f));
            if m.rank_of(f).is_multiple_of(2) {
                sum += &term;
            } else {
                sum -= &term;
            }
        }
        let out = -&sum;
        self.q.insert(key(m), out.clone());
        out
    }

    /// `Σ_F t^{rk F} P_{M/F}(t)`; with loops, the loops are contracted first.
    pub fn z(&mut self, m: &Matroid) -> IntPoly {
        let m = m.contract(m.loops());
        let mut out = IntPoly::zero();
        for f in flats(&m) {
            out += &self.p(&m.contract(f)).shift(m.rank_of(f));
        }
        out
    }
}

trait IntoPoly {
    fn into_poly(self) -> IntPoly;
}

impl IntoPoly for Vec<BigInt> {
    fn into_poly(self) -> IntPoly {
        IntPoly::from_coeffs(self)
    }
}

/// Count fillings by trying every assignment of values to cells (only for tiny shapes).
pub fn brute_count(shape: &TableauShape) -> u64 {
    let cells = shape.cells();
    let n = cells.len();
    if n == 0 {
        return 0;
    }
    let index: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut values: Vec<usize> = (1..=n).collect();
    let mut total = 0;
    permute(&mut values, 0, &mut |vals| {
        let legal = cells.iter().enumerate().all(|(i, &(r, c))| {
            let up = r.checked_sub(1).and_then(|r0| index.get(&(r0, c)));
            let left = c.checked_sub(1).and_then(|c0| index.get(&(r, c0)));
            up.is_none_or(|&j| vals[j] < vals[i]) && left.is_none_or(|&j| vals[j] < vals[i])
        });
        if legal && bar_ok(shape, &cells, vals) {
            total += 1;
        }
    });
    total
}

fn bar_ok(shape: &TableauShape, cells: &[(usize, usize)], vals: &[usize]) -> bool {
    if !shape.barred {
        return true;
    }
    let at = |v: usize| cells[vals.iter().position(|&x| x == v).expect("value present")];
    match shape.kind {
        TableauKind::Skyt => at(1) == ((shape.b - 2) as usize, 0),
        TableauKind::Syt => {
            let (r, c) = at(cells.len());
            let bottom = |col: usize| cells.iter().filter(|x| x.1 == col).map(|x| x.0).max();
            (c == 0 || c == shape.i as usize) && Some(r) == bottom(c)
        }
    }
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}
