use thiserror::Error;

/// Errors raised while building or validating a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    Empty,
    #[error("table row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("not closed: cell ({row}, {col}) holds {value}, which is out of range or repeats in its row/column")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch { index: usize, found: usize, expected: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation table does not match composition at ({row}, {col})")]
    PermutationMismatch { row: usize, col: usize },
    #[error("unknown group descriptor: {0}")]
    UnknownDescriptor(String),
    #[error("malformed group input: {0}")]
    Parse(String),
}

/// Errors from subgroup-lattice construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("group order {order} exceeds lattice cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("subgroup count exceeded cap {cap}")]
    SubgroupCap { cap: usize },
}

/// Errors from the alternating-group division theory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlternatingError {
    #[error("cycle type {0:?} belongs to odd permutations")]
    NotEvenClass(Vec<usize>),
    #[error("cycle type {0:?} does not split in the alternating group")]
    NotSplitClass(Vec<usize>),
    #[error("permutations have different cycle types or degrees: {0:?} vs {1:?}")]
    TypeMismatch(Vec<usize>, Vec<usize>),
}

/// Errors from reading structure back out of a division graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("malformed division graph: {0}")]
    MalformedGraph(String),
    #[error("canonicalization search exceeded budget of {budget} nodes")]
    CanonicalizationBudgetExceeded { budget: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
