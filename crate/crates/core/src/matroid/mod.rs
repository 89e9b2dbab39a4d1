//! Matroids given by their bases over ground sets of at most 64 elements.

mod families;
mod field;
mod graph;
mod json;
mod lattice;

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

pub use families::{
    boolean, complete_bipartite_2n, complete_bipartite_2n_graph, fan, fan_graph, figure_one,
    projective_geometry, thagomizer, thagomizer_graph, uniform, v_matroid, wheel, wheel_graph,
    wheel_rim, whirl,
};
pub use field::FiniteField;
pub use graph::{graphic, GraphSpec};
pub use json::MatroidJson;
pub use lattice::FlatLattice;

/// Ground sets up to this size get a full rank table over all subsets.
pub const RANK_TABLE_MAX: usize = 20;

/// A matroid on `{0, .., n-1}` stored as its sorted, duplicate-free family of bases.
pub struct Matroid {
    n: usize,
    k: usize,
    bases: Vec<Subset>,
    rank_table: OnceLock<Option<Arc<[u8]>>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            k: self.k,
            bases: self.bases.clone(),
            rank_table: self.rank_table.clone(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, k={}, bases={:?})",
            self.n, self.k, self.bases
        )
    }
}

impl Matroid {
    /// Validate a family of bases: non-empty, equicardinal, inside the ground set,
    /// and closed under basis exchange.
    pub fn from_bases<I: IntoIterator<Item = Subset>>(n: usize, bases: I) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                cap: MAX_ELEMENTS,
            });
        }
        let mut family: Vec<Subset> = bases.into_iter().collect();
        let Some(first) = family.first().copied() else {
            return Err(Error::EmptyFamily);
        };
        let k = first.len();
        let ground = Subset::full(n);
        for b in &family {
            if b.len() != k {
                return Err(Error::MixedCardinality {
                    expected: k,
                    found: b.len(),
                });
            }
            if !b.is_subset_of(ground) {
                let element = (*b - ground).min_element().unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
        }
        family.sort_unstable();
        family.dedup();
        let m = Matroid::from_sorted_unchecked(n, family);
        m.check_exchange()?;
        Ok(m)
    }

    /// Build from element lists, e.g. parsed JSON.
    pub fn from_base_lists(n: usize, bases: &[Vec<usize>]) -> Result<Matroid> {
        let mut family = Vec::with_capacity(bases.len());
        for b in bases {
            let mut s = Subset::EMPTY;
            for &e in b {
                if e >= n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
                if s.contains(e) {
                    return Err(Error::Parse(format!("basis {b:?} repeats element {e}")));
                }
                s = s.with(e);
            }
            family.push(s);
        }
        Matroid::from_bases(n, family)
    }

    /// For families already known to be matroid bases; sorts and deduplicates.
    pub(crate) fn from_bases_unchecked(n: usize, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        Matroid::from_sorted_unchecked(n, bases)
    }

    fn from_sorted_unchecked(n: usize, bases: Vec<Subset>) -> Matroid {
        debug_assert!(!bases.is_empty());
        let k = bases[0].len();
        Matroid {
            n,
            k,
            bases,
            rank_table: OnceLock::new(),
        }
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for a in b1.iter() {
                let rest = b1.without(a);
                // All b that repair B1 - a.
                let repair: Subset = (Subset::full(self.n) - b1)
                    .iter()
                    .filter(|&b| self.is_basis(rest.with(b)))
                    .collect();
                for &b2 in &self.bases {
                    if !b2.contains(a) && (b2 - b1).is_disjoint(repair) {
                        return Err(Error::ExchangeViolation { b1, b2, a });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, a: Subset) -> bool {
        self.bases.binary_search(&a).is_ok()
    }

    fn rank_table(&self) -> Option<&[u8]> {
        self.rank_table
            .get_or_init(|| (self.n <= RANK_TABLE_MAX).then(|| self.build_rank_table()))
            .as_deref()
    }

    fn build_rank_table(&self) -> Arc<[u8]> {
        let size = 1usize << self.n;
        let mut indep = vec![false; size];
        for b in &self.bases {
            indep[b.bits() as usize] = true;
        }
        // Supersets have larger codes, so a descending sweep sees them first.
        for a in (0..size).rev() {
            if indep[a] {
                continue;
            }
            let mut free = !(a as u64) & (size as u64 - 1);
            while free != 0 {
                let x = free & free.wrapping_neg();
                if indep[a | x as usize] {
                    indep[a] = true;
                    break;
                }
                free &= free - 1;
            }
        }
        let mut rank = vec![0u8; size];
        for a in 1..size {
            if indep[a] {
                rank[a] = (a as u64).count_ones() as u8;
            } else {
                let mut bits = a as u64;
                let mut best = 0u8;
                while bits != 0 {
                    let x = bits & bits.wrapping_neg();
                    best = best.max(rank[a & !(x as usize)]);
                    bits &= bits - 1;
                }
                rank[a] = best;
            }
        }
        rank.into()
    }

    /// `rk(A) = max |A ∩ B|` over bases `B`.
    pub fn rank_of(&self, a: Subset) -> usize {
        let a = a & self.ground();
        if let Some(t) = self.rank_table() {
            return t[a.bits() as usize] as usize;
        }
        let cap = a.len().min(self.k);
        let mut best = 0;
        for b in &self.bases {
            best = best.max((a & *b).len());
            if best == cap {
                break;
            }
        }
        best
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn is_circuit(&self, c: Subset) -> bool {
        !c.is_empty()
            && !self.is_independent(c)
            && c.iter().all(|x| self.is_independent(c.without(x)))
    }

    /// Smallest flat containing `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        let a = a & self.ground();
        let r = self.rank_of(a);
        let mut out = a;
        for x in (self.ground() - a).iter() {
            if self.rank_of(a.with(x)) == r {
                out = out.with(x);
            }
        }
        out
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        a.is_subset_of(self.ground()) && self.closure(a) == a
    }

    pub fn is_hyperplane(&self, a: Subset) -> bool {
        self.k > 0 && self.rank_of(a) == self.k - 1 && self.is_flat(a)
    }

    pub fn loops(&self) -> Subset {
        let covered = self.bases.iter().fold(Subset::EMPTY, |acc, b| acc | *b);
        self.ground() - covered
    }

    pub fn coloops(&self) -> Subset {
        self.bases.iter().fold(self.ground(), |acc, b| acc & *b)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// Every independent set, each once.
    pub fn independent_sets(&self) -> Vec<Subset> {
        if let Some(t) = self.rank_table() {
            return (0..1u64 << self.n)
                .filter(|&a| t[a as usize] as u32 == a.count_ones())
                .map(Subset)
                .collect();
        }
        let mut seen = HashSet::new();
        for b in &self.bases {
            for s in b.subsets() {
                seen.insert(s);
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// All circuits, as the union over bases `B` of the fundamental circuits `C(e, B)`.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut seen = HashSet::new();
        for &b in &self.bases {
            for e in (self.ground() - b).iter() {
                let mut c = Subset::singleton(e);
                for x in b.iter() {
                    if self.is_basis(b.without(x).with(e)) {
                        c = c.with(x);
                    }
                }
                seen.insert(c);
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_unstable_by_key(|c| (c.len(), *c));
        out
    }

    pub fn flats(&self) -> FlatLattice {
        FlatLattice::new(self)
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        if self.k == 0 {
            return Vec::new();
        }
        self.flats().flats_of_rank(self.k - 1).to_vec()
    }

    pub fn dual(&self) -> Matroid {
        let e = self.ground();
        Matroid::from_bases_unchecked(self.n, self.bases.iter().map(|b| e - *b).collect())
    }

    /// Disjoint union; elements of `other` are shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                cap: MAX_ELEMENTS,
            });
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for b1 in &self.bases {
            for b2 in &other.bases {
                bases.push(*b1 | b2.shifted(self.n));
            }
        }
        Ok(Matroid::from_bases_unchecked(n, bases))
    }

    /// Restriction to `a`, relabelled to `0..|a|` in increasing order.
    pub fn restrict(&self, a: Subset) -> Matroid {
        let a = a & self.ground();
        let r = self.rank_of(a);
        let bases = self
            .bases
            .iter()
            .map(|b| *b & a)
            .filter(|s| s.len() == r)
            .map(|s| s.compress(a))
            .collect();
        Matroid::from_bases_unchecked(a.len(), bases)
    }

    /// Contraction by `a`, on `E \ a` relabelled in increasing order.
    pub fn contract(&self, a: Subset) -> Matroid {
        let a = a & self.ground();
        let r = self.rank_of(a);
        let rest = self.ground() - a;
        let bases = self
            .bases
            .iter()
            .filter(|b| (**b & a).len() == r)
            .map(|b| (*b - a).compress(rest))
            .collect();
        Matroid::from_bases_unchecked(rest.len(), bases)
    }

    /// Delete `a`: restriction to the complement.
    pub fn delete(&self, a: Subset) -> Matroid {
        self.restrict(self.ground() - a)
    }

    /// The localization `M^F` at a flat: the restriction to `F`.
    pub fn localization(&self, f: Subset) -> Result<Matroid> {
        if !self.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
        Ok(self.restrict(f))
    }

    /// The contraction `M_F` by a flat.
    pub fn contraction(&self, f: Subset) -> Result<Matroid> {
        if !self.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
        Ok(self.contract(f))
    }

    /// Parallel classes of the non-loop elements, each sorted, ordered by least element.
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let loops = self.loops();
        let mut assigned = loops;
        let mut classes = Vec::new();
        for x in (self.ground() - loops).iter() {
            if assigned.contains(x) {
                continue;
            }
            let mut class = Subset::singleton(x);
            for y in (self.ground() - assigned).iter().filter(|&y| y > x) {
                if self.rank_of(Subset::from_elements([x, y])) == 1 {
                    class = class.with(y);
                }
            }
            assigned = assigned | class;
            classes.push(class);
        }
        classes
    }

    /// Remove loops and keep the least element of each parallel class.
    pub fn simplify(&self) -> Matroid {
        let reps: Subset = self
            .parallel_classes()
            .iter()
            .filter_map(|c| c.min_element())
            .collect();
        self.restrict(reps)
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_classes().len() == self.n
    }

    /// Every circuit has at least `rank` elements.
    pub fn is_paving(&self) -> bool {
        if self.k == 0 {
            return true;
        }
        self.circuits().iter().all(|c| c.len() >= self.k)
    }

    pub fn is_sparse_paving(&self) -> bool {
        self.is_paving() && self.dual().is_paving()
    }

    /// Connected components: elements sharing a circuit lie in the same component.
    pub fn components(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for c in self.circuits() {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for x in it {
                    let (rx, rf) = (find(&mut parent, x), find(&mut parent, first));
                    parent[rx] = rf;
                }
            }
        }
        let mut comps: Vec<Subset> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n];
        for x in 0..self.n {
            let r = find(&mut parent, x);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(Subset::EMPTY);
            }
            let idx = root_of[r];
            comps[idx] = comps[idx].with(x);
        }
        comps
    }

    /// At most one component; the empty matroid counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matroid of rank {} on {} elements with {} bases",
            self.k,
            self.n,
            self.bases.len()
        )
    }
}
