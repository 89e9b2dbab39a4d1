use serde::{Deserialize, Serialize};

use super::Matroid;
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A multigraph; edge `i` becomes element `i` of the graphic matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphSpec {
    pub fn new(vertices: usize, edges: Vec<[usize; 2]>) -> Result<GraphSpec> {
        let g = GraphSpec { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.edges.len() > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n: self.edges.len(),
                cap: MAX_ELEMENTS,
            });
        }
        for (i, [u, v]) in self.edges.iter().enumerate() {
            if *u >= self.vertices || *v >= self.vertices {
                return Err(Error::BadParameters(format!(
                    "edge {i} = ({u},{v}) has an endpoint outside 0..{}",
                    self.vertices
                )));
            }
        }
        Ok(())
    }

    /// Number of connected components of `(V, A)`.
    pub fn components(&self, a: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        let mut comps = self.vertices;
        for e in a.iter() {
            let [u, v] = self.edges[e];
            if uf.union(u, v) {
                comps -= 1;
            }
        }
        comps
    }

    fn is_forest(&self, a: Subset) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        a.iter().all(|e| {
            let [u, v] = self.edges[e];
            uf.union(u, v)
        })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// Merge; false if already joined (the edge closes a cycle).
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Cycle matroid: bases are the spanning forests.
pub fn graphic(g: &GraphSpec) -> Result<Matroid> {
    g.validate()?;
    let m = g.edges.len();
    let all = Subset::full(m);
    let r = g.vertices - g.components(all);
    let bases: Vec<Subset> = all.k_subsets(r).filter(|a| g.is_forest(*a)).collect();
    Ok(Matroid::from_bases_unchecked(m, bases))
}
