use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a matroid needs at least one basis")]
    EmptyFamily,
    #[error("bases have mixed cardinalities ({expected} and {found})")]
    MixedCardinality { expected: usize, found: usize },
    #[error("basis exchange fails: removing {a} from {b1} cannot be repaired from {b2}")]
    ExchangeViolation { b1: Subset, b2: Subset, a: usize },
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("{0} is not a flat")]
    NotAFlat(Subset),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unsupported field order {0} (supported: 2, 3, 4, 5, 7, 8, 9)")]
    UnsupportedFieldOrder(u32),
    #[error("{0} is not a hyperplane")]
    NotAHyperplane(Subset),
    #[error("hyperplane {hyperplane} is not stressed: its subset {subset} is not a circuit")]
    NotStressed { hyperplane: Subset, subset: Subset },
    #[error("{0} is not a free subset")]
    NotAFreeSubset(Subset),
    #[error("matroid is not paving")]
    NotPaving,
    #[error("reverse needs d >= deg f (deg f = {degree}, d = {d})")]
    DegreeTooSmall { degree: usize, d: usize },
    #[error("polynomial is not palindromic with respect to degree {0}")]
    NotPalindromic(usize),
    #[error("ground set of {n} elements exceeds the cap of {cap}")]
    GroundSetTooLarge { n: usize, cap: usize },
    #[error("shape has {cells} cells, above the enumeration cap of {cap}")]
    ShapeTooLarge { cells: usize, cap: usize },
    #[error("bad profile: {0}")]
    BadProfile(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
