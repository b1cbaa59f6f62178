//! Finite skew left braces and the combinatorics around them: the opposite
//! brace, the Yang-Baxter solutions a brace induces, ideals and
//! quasi-ideals, and the translation between braces and regular `G`-stable
//! subgroups of `Perm(G)`.
//!
//! Everything is stored as dense tables over `0..n` and checked
//! exhaustively.

pub mod brace;
pub mod error;
pub mod format;
pub mod group;
pub mod ideals;
pub mod iso;
pub mod perm;
pub mod subgroup_expr;
pub mod translation;
pub mod ybe;

pub use brace::SkewBrace;
pub use error::{Error, Result};
pub use group::{named_group, named_group_with_labels, ElementSet, GroupTable, NamedGroup};
pub use iso::{find_isomorphism, is_homomorphism, BraceMorphism};
pub use perm::{left_regular, right_regular, PermSubgroup, Permutation};
pub use ybe::{compose, inverse_solution, is_inverse_pair, ybe_from_brace, YbeSolution};
