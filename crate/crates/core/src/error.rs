use thiserror::Error;

/// Everything that can go wrong while building or checking the algebraic
/// objects in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty table: a group needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("associativity fails at ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("dot identity {dot} differs from circle identity {circle}")]
    IdentityMismatch { dot: usize, circle: usize },
    #[error("brace relation fails at x={x}, y={y}, z={z}")]
    BraceRelationFails { x: usize, y: usize, z: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("permutations are not closed under composition")]
    NotClosed,
    #[error("permutation group is not regular")]
    NotRegular,
    #[error("permutation group is not G-stable")]
    NotGStable,
    #[error("subgroup is not an ideal")]
    NotAnIdeal,
    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
