//! Matroids in exact arithmetic: stressed-hyperplane relaxation, Tutte and characteristic
//! polynomials, Kazhdan–Lusztig `P`, `Q`, `Z` and gamma polynomials by lattice recursion,
//! closed formulas for uniform and paving matroids, and tableau counts.

pub mod binomial;
pub mod closedforms;
pub mod error;
pub mod invariants;
pub mod lab;
pub mod matroid;
pub mod poly;
pub mod relaxation;
pub mod subset;
pub mod tableaux;

pub use closedforms::PavingProfile;
pub use error::{Error, Result};
pub use invariants::{beta, characteristic, gamma, kl_p, kl_q, kl_z, tutte, KlCache};
pub use matroid::{FlatLattice, GraphSpec, Matroid, MatroidJson};
pub use poly::{gamma_contract, gamma_expand, BiPoly, GammaVector, IntPoly};
pub use relaxation::{
    free_subsets, relax, relax_all, stressed_hyperplanes, unrelax, RelaxationStep,
};
pub use subset::Subset;
pub use tableaux::{TableauKind, TableauShape};
