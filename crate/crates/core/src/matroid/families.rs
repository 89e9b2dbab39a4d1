//! Named matroid families.
//!
//! Edge labelling of the graphic families (the order edges are listed in):
//! - `thagomizer(n)`: vertices `a = 0`, `b = 1`, `c_j = 2 + j`; edge 0 is `ab`,
//!   then `a c_j` and `b c_j` are edges `2j + 1` and `2j + 2`.
//! - `complete_bipartite_2n(n)`: sides `{0, 1}` and `{2, .., n+1}`; edges `2j`, `2j + 1`
//!   join vertex `2 + j` to 0 and to 1.
//! - `fan(n)`: hub 0, path `1..=n`; spokes are edges `0..n`, path edges follow.
//! - `wheel(n)`: hub 0, rim cycle `1..=n`; spokes are edges `0..n`, rim edges are `n..2n`
//!   with edge `n + j` joining rim vertices `j + 1` and `(j + 1) % n + 1`.

use super::field::FiniteField;
use super::graph::{graphic, GraphSpec};
use super::Matroid;
use crate::binomial::binomial_u128;
use crate::error::{Error, Result};
use crate::relaxation::relax;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Refuse families whose basis list would not fit comfortably in memory.
const MAX_BASES: u128 = 5_000_000;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameters(msg.into())
}

/// `U_{k,n}`: every `k`-subset is a basis.
pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
    if k > n {
        return Err(bad(format!("uniform needs k <= n, got k={k}, n={n}")));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n,
            cap: MAX_ELEMENTS,
        });
    }
    if binomial_u128(n, k) > MAX_BASES {
        return Err(bad(format!("U_{{{k},{n}}} has too many bases to list")));
    }
    Ok(Matroid::from_bases_unchecked(
        n,
        Subset::full(n).k_subsets(k).collect(),
    ))
}

/// `B_n = U_{n,n}`.
pub fn boolean(n: usize) -> Matroid {
    assert!(
        n <= MAX_ELEMENTS,
        "boolean matroid on {n} elements exceeds the cap"
    );
    Matroid::from_bases_unchecked(n, vec![Subset::full(n)])
}

/// `V_{k,h,n} = U_{k-1,h} ⊕ U_{1,n-h}`; the `U_{k-1,h}` block is `{0, .., h-1}`.
pub fn v_matroid(k: usize, h: usize, n: usize) -> Result<Matroid> {
    if k == 0 || h + 1 < k || h >= n {
        return Err(bad(format!(
            "V_{{k,h,n}} needs 1 <= k, k-1 <= h < n; got k={k}, h={h}, n={n}"
        )));
    }
    uniform(k - 1, h)?.direct_sum(&uniform(1, n - h)?)
}

/// The rank-3 matroid on 7 points with a 4-point line `{0,1,2,3}`, a line
/// `{0,4,5,6}`, and the parallel pair `{5,6}`.
pub fn figure_one() -> Matroid {
    let line1 = Subset::from_elements([0, 1, 2, 3]);
    let line2 = Subset::from_elements([0, 4, 5, 6]);
    let pair = Subset::from_elements([5, 6]);
    let bases = Subset::full(7)
        .k_subsets(3)
        .filter(|b| !b.is_subset_of(line1) && !b.is_subset_of(line2) && !pair.is_subset_of(*b))
        .collect();
    Matroid::from_bases_unchecked(7, bases)
}

pub fn thagomizer_graph(n: usize) -> Result<GraphSpec> {
    if n == 0 {
        return Err(bad("thagomizer needs n >= 1"));
    }
    let mut edges = vec![[0, 1]];
    for j in 0..n {
        edges.push([0, 2 + j]);
        edges.push([1, 2 + j]);
    }
    GraphSpec::new(n + 2, edges)
}

/// Graphic matroid of `K_{1,1,n}`.
pub fn thagomizer(n: usize) -> Result<Matroid> {
    graphic(&thagomizer_graph(n)?)
}

pub fn complete_bipartite_2n_graph(n: usize) -> Result<GraphSpec> {
    if n == 0 {
        return Err(bad("K_{2,n} needs n >= 1"));
    }
    let mut edges = Vec::new();
    for j in 0..n {
        edges.push([0, 2 + j]);
        edges.push([1, 2 + j]);
    }
    GraphSpec::new(n + 2, edges)
}

/// Graphic matroid of `K_{2,n}`.
pub fn complete_bipartite_2n(n: usize) -> Result<Matroid> {
    graphic(&complete_bipartite_2n_graph(n)?)
}

pub fn fan_graph(n: usize) -> Result<GraphSpec> {
    if n == 0 {
        return Err(bad("fan needs n >= 1"));
    }
    let mut edges: Vec<[usize; 2]> = (1..=n).map(|v| [0, v]).collect();
    edges.extend((1..n).map(|v| [v, v + 1]));
    GraphSpec::new(n + 1, edges)
}

/// Fan with `n` spokes: rank `n`, `2n - 1` elements.
pub fn fan(n: usize) -> Result<Matroid> {
    graphic(&fan_graph(n)?)
}

pub fn wheel_graph(n: usize) -> Result<GraphSpec> {
    if n < 3 {
        return Err(bad("wheel needs n >= 3"));
    }
    let mut edges: Vec<[usize; 2]> = (1..=n).map(|v| [0, v]).collect();
    edges.extend((0..n).map(|j| [j + 1, (j + 1) % n + 1]));
    GraphSpec::new(n + 1, edges)
}

/// Wheel with `n` spokes: rank `n`, `2n` elements, rim `{n, .., 2n-1}`.
pub fn wheel(n: usize) -> Result<Matroid> {
    graphic(&wheel_graph(n)?)
}

/// The rim of `wheel(n)`, its only circuit-hyperplane.
pub fn wheel_rim(n: usize) -> Subset {
    Subset::full(2 * n) - Subset::full(n)
}

/// Wheel with its rim relaxed.
pub fn whirl(n: usize) -> Result<Matroid> {
    relax(&wheel(n)?, wheel_rim(n))
}

/// `PG(r, q)`: normalised nonzero vectors of `GF(q)^{r+1}` (first nonzero entry 1)
/// in lexicographic order, with linear rank.
pub fn projective_geometry(r: usize, q: u32) -> Result<Matroid> {
    let field = FiniteField::new(q)?;
    let dim = r + 1;
    let qs = q as usize;
    let total = (qs as u128)
        .checked_pow(dim as u32)
        .ok_or_else(|| bad("projective space too large"))?;
    let points_count = (total - 1) / (qs as u128 - 1);
    if points_count > MAX_ELEMENTS as u128 {
        return Err(bad(format!(
            "PG({r},{q}) has {points_count} points, above {MAX_ELEMENTS}"
        )));
    }
    if binomial_u128(points_count as usize, dim) > 4 * MAX_BASES {
        return Err(bad(format!("PG({r},{q}) has too many candidate bases")));
    }
    let mut points: Vec<Vec<u8>> = Vec::new();
    for code in 0..total as usize {
        let mut v = vec![0u8; dim];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = (c % qs) as u8;
            c /= qs;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            points.push(v);
        }
    }
    let n = points.len();
    let bases: Vec<Subset> = Subset::full(n)
        .k_subsets(dim)
        .filter(|s| {
            let vecs: Vec<&[u8]> = s.iter().map(|e| points[e].as_slice()).collect();
            field.rank(&vecs) == dim
        })
        .collect();
    Ok(Matroid::from_bases_unchecked(n, bases))
}
