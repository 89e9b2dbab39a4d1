use std::collections::{HashMap, HashSet};

use super::Matroid;
use crate::subset::Subset;

/// All flats of a matroid, grouped by rank (ties broken by bitmask order).
#[derive(Clone, Debug)]
pub struct FlatLattice {
    n: usize,
    rank: usize,
    flats: Vec<Subset>,
    ranks: Vec<usize>,
    starts: Vec<usize>,
    index: HashMap<Subset, usize>,
}

impl FlatLattice {
    /// Close every independent set and deduplicate.
    pub fn new(m: &Matroid) -> FlatLattice {
        let mut seen = HashSet::new();
        for a in m.independent_sets() {
            seen.insert(m.closure(a));
        }
        let mut flats: Vec<(usize, Subset)> = seen.into_iter().map(|f| (m.rank_of(f), f)).collect();
        flats.sort_unstable();
        let rank = m.rank();
        let mut starts = vec![0; rank + 2];
        for &(r, _) in &flats {
            starts[r + 1] += 1;
        }
        for r in 0..=rank {
            starts[r + 1] += starts[r];
        }
        let ranks = flats.iter().map(|(r, _)| *r).collect();
        let flats: Vec<Subset> = flats.into_iter().map(|(_, f)| f).collect();
        let index = flats.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        FlatLattice {
            n: m.n(),
            rank,
            flats,
            ranks,
            starts,
            index,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Flats in rank order.
    pub fn all(&self) -> &[Subset] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Subset {
        self.flats[i]
    }

    pub fn rank_of_index(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Index range of the flats of rank `r`.
    pub fn rank_range(&self, r: usize) -> std::ops::Range<usize> {
        if r > self.rank {
            return 0..0;
        }
        self.starts[r]..self.starts[r + 1]
    }

    pub fn flats_of_rank(&self, r: usize) -> &[Subset] {
        &self.flats[self.rank_range(r)]
    }

    pub fn hyperplanes(&self) -> &[Subset] {
        if self.rank == 0 {
            return &[];
        }
        self.flats_of_rank(self.rank - 1)
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.index.contains_key(&f)
    }

    /// Closure of the empty set.
    pub fn bottom(&self) -> Subset {
        self.flats[0]
    }

    pub fn top(&self) -> Subset {
        *self.flats.last().expect("a lattice has a top")
    }

    /// Indices of the flats covering flat `i`.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        let f = self.flats[i];
        self.rank_range(self.ranks[i] + 1)
            .filter(|&j| f.is_subset_of(self.flats[j]))
            .collect()
    }

    /// Indices of flats `G ⊇ F_i`, in rank order, starting with `i` itself.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        let f = self.flats[i];
        (self.starts[self.ranks[i]]..self.flats.len())
            .filter(|&j| f.is_subset_of(self.flats[j]))
            .collect()
    }

    pub fn atoms(&self) -> &[Subset] {
        self.flats_of_rank(1)
    }

    /// Number of flats of each rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        (0..=self.rank).map(|r| self.rank_range(r).len()).collect()
    }

    /// Decide lattice isomorphism by matching atoms; a flat is the join of the atoms below it.
    pub fn is_isomorphic(&self, other: &FlatLattice) -> bool {
        if self.rank_counts() != other.rank_counts() {
            return false;
        }
        let a = AtomView::new(self);
        let b = AtomView::new(other);
        if a.atom_count != b.atom_count {
            return false;
        }
        let mut sig_a = a.signatures.clone();
        let mut sig_b = b.signatures.clone();
        sig_a.sort();
        sig_b.sort();
        if sig_a != sig_b {
            return false;
        }
        let targets: HashSet<u64> = b.sets.iter().copied().collect();
        let mut map = vec![usize::MAX; a.atom_count];
        let mut used = vec![false; a.atom_count];
        backtrack(0, &a, &b, &targets, &mut map, &mut used)
    }
}

/// Each flat as a bitmask over atom indices.
struct AtomView {
    atom_count: usize,
    sets: Vec<u64>,
    ranks: Vec<usize>,
    signatures: Vec<Vec<usize>>,
}

impl AtomView {
    fn new(lat: &FlatLattice) -> AtomView {
        let atoms = lat.atoms();
        assert!(
            atoms.len() <= 64,
            "isomorphism test supports at most 64 atoms"
        );
        let sets: Vec<u64> = lat
            .all()
            .iter()
            .map(|f| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.is_subset_of(*f))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let signatures = (0..atoms.len())
            .map(|i| {
                let mut sig = vec![0usize; lat.rank() + 1];
                for (s, r) in sets.iter().zip(&lat.ranks) {
                    if s >> i & 1 == 1 {
                        sig[*r] += 1;
                    }
                }
                sig
            })
            .collect();
        AtomView {
            atom_count: atoms.len(),
            sets,
            ranks: lat.ranks.clone(),
            signatures,
        }
    }
}

fn image(set: u64, map: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut bits = set;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        out |= 1 << map[i];
        bits &= bits - 1;
    }
    out
}

fn backtrack(
    i: usize,
    a: &AtomView,
    b: &AtomView,
    targets: &HashSet<u64>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == a.atom_count {
        return a.sets.iter().all(|s| targets.contains(&image(*s, map)));
    }
    let assigned = if i + 1 == 64 {
        u64::MAX
    } else {
        (1u64 << (i + 1)) - 1
    };
    for j in 0..b.atom_count {
        if used[j] || a.signatures[i] != b.signatures[j] {
            continue;
        }
        map[i] = j;
        used[j] = true;
        // Flats of rank 2 whose atoms are all assigned must map to flats.
        let ok = a.sets.iter().zip(&a.ranks).all(|(s, r)| {
            *r != 2 || s >> i & 1 == 0 || s & !assigned != 0 || targets.contains(&image(*s, map))
        });
        if ok && backtrack(i + 1, a, b, targets, map, used) {
            return true;
        }
        used[j] = false;
        map[i] = usize::MAX;
    }
    false
}
