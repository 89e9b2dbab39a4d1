//! Subsets of a ground set of at most 64 elements, stored as one machine word.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., 63}` encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of {n} elements exceeds {MAX_ELEMENTS}"
        );
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        let mut bits = 0u64;
        for e in elems {
            assert!(e < MAX_ELEMENTS, "element {e} out of range");
            bits |= 1u64 << e;
        }
        Subset(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element plus one, or 0 for the empty set.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` elements, in increasing bit order.
    pub fn k_subsets(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> SubMasks {
        SubMasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Relabel: keep only elements of `domain` and compress them to `0..|domain|` in order.
    pub fn compress(self, domain: Subset) -> Subset {
        let mut out = 0u64;
        for (pos, e) in domain.iter().enumerate() {
            if self.contains(e) {
                out |= 1u64 << pos;
            }
        }
        Subset(out)
    }

    /// Inverse of [`compress`](Self::compress): map position `p` to the `p`-th element of `domain`.
    pub fn expand(self, domain: Subset) -> Subset {
        let mut out = 0u64;
        for (pos, e) in domain.iter().enumerate() {
            if self.contains(pos) {
                out |= 1u64 << e;
            }
        }
        Subset(out)
    }

    /// Shift every element up by `offset`.
    pub fn shifted(self, offset: usize) -> Subset {
        if self.0 != 0 {
            assert!(
                self.span() + offset <= MAX_ELEMENTS,
                "shift overflows 64 elements"
            );
        }
        Subset(self.0.checked_shl(offset as u32).unwrap_or(0))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl serde::Serialize for Subset {
    /// Serializes as the sorted element list.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Enumerates the `k`-element subsets of a mask via Gosper's hack on positions.
pub struct KSubsets {
    domain: Subset,
    contiguous: bool,
    m: usize,
    state: Option<u64>,
}

impl KSubsets {
    fn new(domain: Subset, k: usize) -> KSubsets {
        let m = domain.len();
        let state = if k > m {
            None
        } else if k == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << k) - 1)
        };
        let contiguous = domain == Subset::full(m);
        KSubsets {
            domain,
            contiguous,
            m,
            state,
        }
    }
}

impl Iterator for KSubsets {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.state?;
        let item = if self.contiguous {
            Subset(cur)
        } else {
            Subset(cur).expand(self.domain)
        };
        self.state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                if self.m < 64 && next >> self.m != 0 {
                    None
                } else {
                    Some(next)
                }
            }
        };
        Some(item)
    }
}

pub struct SubMasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubMasks {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Subset(cur))
    }
}
