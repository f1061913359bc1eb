use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("empty generator list")]
    NoGenerators,
    #[error("degree {0} exceeds the supported maximum of {1}")]
    DegreeTooLarge(usize, usize),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("group too large: order {order} exceeds enumeration cap {cap}")]
    GroupTooLarge { order: String, cap: usize },
    #[error("graph too large: {0} vertices exceeds the bound {1}")]
    GraphTooLarge(usize, usize),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a normal subgroup")]
    NotNormal,
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("group does not preserve the edge set")]
    NotInvariant,
    #[error("vacuous: the graph has no {0}-arcs")]
    Vacuous(usize),
    #[error("tuple orbit exceeds the cap of {0} tuples")]
    TupleCap(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
