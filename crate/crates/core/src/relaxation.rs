//! Stressed hyperplanes, their relaxation, free subsets and the inverse operation.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::closedforms::PavingProfile;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// One relaxation: the `k`-subsets of `hyperplane` become bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelaxationStep {
    pub hyperplane: Subset,
    pub h: usize,
    pub k: usize,
    pub added_bases: Vec<Subset>,
}

/// First `k`-subset of `h` that is not a circuit, if any.
fn unstressed_witness(m: &Matroid, h: Subset) -> Option<Subset> {
    h.k_subsets(m.rank()).find(|s| !m.is_circuit(*s))
}

/// Hyperplanes all of whose rank-sized subsets are circuits (vacuous when `|H| < k`).
pub fn stressed_hyperplanes(m: &Matroid) -> Vec<Subset> {
    m.hyperplanes()
        .into_iter()
        .filter(|h| unstressed_witness(m, *h).is_none())
        .collect()
}

pub fn is_stressed_hyperplane(m: &Matroid, h: Subset) -> bool {
    m.is_hyperplane(h) && unstressed_witness(m, h).is_none()
}

/// Relax a stressed hyperplane, also reporting what was added.
pub fn relax_step(m: &Matroid, h: Subset) -> Result<(Matroid, RelaxationStep)> {
    if !m.is_hyperplane(h) {
        return Err(Error::NotAHyperplane(h));
    }
    if let Some(subset) = unstressed_witness(m, h) {
        return Err(Error::NotStressed {
            hyperplane: h,
            subset,
        });
    }
    let k = m.rank();
    let added: Vec<Subset> = h.k_subsets(k).collect();
    let step = RelaxationStep {
        hyperplane: h,
        h: h.len(),
        k,
        added_bases: added.clone(),
    };
    if added.is_empty() {
        return Ok((m.clone(), step));
    }
    let mut bases = m.bases().to_vec();
    bases.extend(added);
    Ok((Matroid::from_bases_unchecked(m.n(), bases), step))
}

/// Bases of the result: the old bases plus every `k`-subset of `h`.
pub fn relax(m: &Matroid, h: Subset) -> Result<Matroid> {
    relax_step(m, h).map(|(r, _)| r)
}

/// Check the free-subset conditions for `a`, given that every `k`-subset of `a` is a basis.
fn free_given_bases(m: &Matroid, a: Subset) -> bool {
    let k = m.rank();
    if k == 0 || a == m.ground() || a.len() < k {
        return false;
    }
    // Not every basis may lie inside `a`.
    if m.bases().iter().all(|b| b.is_subset_of(a)) {
        return false;
    }
    // B' ∪ {x} is a circuit for every k-subset B' ⊆ A and x ∉ A exactly when
    // (B' - b) + x is a basis for all b; the sets B' - b range over the (k-1)-subsets of A.
    let outside = m.ground() - a;
    a.k_subsets(k - 1)
        .all(|s| outside.iter().all(|x| m.is_basis(s.with(x))))
}

/// All `k`-subsets of `a` are bases.
fn all_k_subsets_are_bases(m: &Matroid, a: Subset) -> bool {
    a.len() >= m.rank() && a.k_subsets(m.rank()).all(|s| m.is_basis(s))
}

pub fn is_free_subset(m: &Matroid, a: Subset) -> bool {
    a.is_subset_of(m.ground()) && all_k_subsets_are_bases(m, a) && free_given_bases(m, a)
}

/// Every free subset, found by growing bases one larger element at a time:
/// the property "all `k`-subsets are bases" passes to subsets of size at least `k`,
/// so each qualifying set is reached through its sorted prefixes exactly once.
pub fn free_subsets(m: &Matroid) -> Vec<Subset> {
    let k = m.rank();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut stack: Vec<Subset> = m.bases().to_vec();
    while let Some(a) = stack.pop() {
        if free_given_bases(m, a) {
            out.push(a);
        }
        for x in a.span()..m.n() {
            if a.k_subsets(k - 1).all(|s| m.is_basis(s.with(x))) {
                stack.push(a.with(x));
            }
        }
    }
    out.sort_unstable_by_key(|a| (a.len(), *a));
    out
}

/// Inverse of relaxation: drop the `k`-subsets of a free subset from the bases.
pub fn unrelax(m: &Matroid, a: Subset) -> Result<Matroid> {
    if !is_free_subset(m, a) {
        return Err(Error::NotAFreeSubset(a));
    }
    let bases = m
        .bases()
        .iter()
        .copied()
        .filter(|b| !b.is_subset_of(a))
        .collect();
    Ok(Matroid::from_bases_unchecked(m.n(), bases))
}

/// Hyperplanes of size at least `k` of a paving matroid, counted by size.
pub fn paving_profile(m: &Matroid) -> Result<PavingProfile> {
    if !m.is_paving() {
        return Err(Error::NotPaving);
    }
    let k = m.rank();
    let mut lambda = BTreeMap::new();
    for h in m.hyperplanes() {
        if h.len() >= k {
            *lambda.entry(h.len()).or_insert(0u64) += 1;
        }
    }
    PavingProfile::new(k, m.n(), lambda)
}

/// Relax every hyperplane of size at least `k` (largest first, then lexicographic),
/// ending at `U_{k,n}`.
pub fn relax_all(m: &Matroid) -> Result<(Matroid, PavingProfile)> {
    if !m.is_paving() {
        return Err(Error::NotPaving);
    }
    let k = m.rank();
    let mut order: Vec<Subset> = m
        .hyperplanes()
        .into_iter()
        .filter(|h| h.len() >= k)
        .collect();
    order.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.to_vec().cmp(&b.to_vec()))
    });
    let mut current = m.clone();
    let mut lambda = BTreeMap::new();
    for h in order {
        current = relax(&current, h)?;
        debug_assert!(current.is_paving());
        *lambda.entry(h.len()).or_insert(0u64) += 1;
    }
    let expect = Subset::full(m.n()).k_subsets(k).count();
    if current.num_bases() != expect {
        return Err(Error::Inconsistency(format!(
            "relaxing all hyperplanes left {} bases, expected {expect}",
            current.num_bases()
        )));
    }
    Ok((current, PavingProfile::new(k, m.n(), lambda)?))
}
