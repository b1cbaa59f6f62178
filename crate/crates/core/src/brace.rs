//! Skew left braces as a pair of group tables on one index set.

use crate::error::{Error, Result};
use crate::group::{named_group, GroupTable};

/// A finite skew left brace `(B, ., o)`.
///
/// Both operations share the identity and satisfy
/// `x o (y . z) = (x o y) . x^-1 . (x o z)` for every triple. Every public
/// constructor checks this exhaustively.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    dot: GroupTable,
    circle: GroupTable,
    /// (dot order, circle order) per element
    profile: Vec<(usize, usize)>,
}

impl SkewBrace {
    pub fn from_tables(dot: GroupTable, circle: GroupTable) -> Result<Self> {
        if dot.order() != circle.order() {
            return Err(Error::OrderMismatch { left: dot.order(), right: circle.order() });
        }
        if dot.identity() != circle.identity() {
            return Err(Error::IdentityMismatch { dot: dot.identity(), circle: circle.identity() });
        }
        if let Some((x, y, z)) = brace_relation_failure(&dot, &circle) {
            return Err(Error::BraceRelationFails { x, y, z });
        }
        Ok(Self::from_tables_unchecked(dot, circle))
    }

    /// For constructions whose output is a brace by proof (opposites,
    /// products, relabellings).
    pub(crate) fn from_tables_unchecked(dot: GroupTable, circle: GroupTable) -> Self {
        debug_assert!(brace_relation_failure(&dot, &circle).is_none());
        let profile = dot.element_orders().into_iter().zip(circle.element_orders()).collect();
        SkewBrace { dot, circle, profile }
    }

    /// `(G, ., .)`.
    pub fn trivial(g: &GroupTable) -> Self {
        Self::from_tables(g.clone(), g.clone()).expect("trivial brace")
    }

    /// `(G, ., o)` with `x o y = y . x`.
    pub fn almost_trivial(g: &GroupTable) -> Self {
        Self::from_tables(g.clone(), g.opposite()).expect("almost trivial brace")
    }

    /// The order-8 brace with dot group `D4` (labelled `eta^i pi^j` at
    /// `4j + i`) and
    /// `eta^i pi^j o eta^k pi^l = eta^(k + (-1)^l i + 2jl) pi^(j + l)`,
    /// whose circle group is quaternion.
    pub fn dihedral_quaternion() -> Self {
        let dot = named_group("D4").expect("D4");
        let idx = |i: i64, j: i64| (4 * j.rem_euclid(2) + i.rem_euclid(4)) as usize;
        let mut mul = Vec::with_capacity(64);
        for x in 0..8i64 {
            for y in 0..8i64 {
                let (i, j, k, l) = (x % 4, x / 4, y % 4, y / 4);
                let sign = if l == 0 { 1 } else { -1 };
                mul.push(idx(k + sign * i + 2 * j * l, j + l));
            }
        }
        let circle = GroupTable::from_flat(8, mul).expect("circle operation is a group");
        Self::from_tables(dot, circle).expect("brace relation holds")
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    pub fn dot_table(&self) -> &GroupTable {
        &self.dot
    }

    pub fn circle_table(&self) -> &GroupTable {
        &self.circle
    }

    pub fn identity(&self) -> usize {
        self.dot.identity()
    }

    #[inline]
    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.dot.mul(x, y)
    }

    #[inline]
    pub fn circle(&self, x: usize, y: usize) -> usize {
        self.circle.mul(x, y)
    }

    /// Inverse in the dot group.
    #[inline]
    pub fn dot_inv(&self, x: usize) -> usize {
        self.dot.inv(x)
    }

    /// Inverse in the circle group.
    #[inline]
    pub fn circle_inv(&self, x: usize) -> usize {
        self.circle.inv(x)
    }

    /// Per element `(dot order, circle order)`.
    pub fn order_profile(&self) -> &[(usize, usize)] {
        &self.profile
    }

    /// Number of triples the brace relation was checked on.
    pub fn triple_count(&self) -> usize {
        self.order().pow(3)
    }

    /// `(B, .', o)` with `x .' y = y . x`.
    pub fn opposite(&self) -> SkewBrace {
        Self::from_tables_unchecked(self.dot.opposite(), self.circle.clone())
    }

    /// True iff the brace equals its opposite, i.e. the dot group is abelian.
    pub fn is_dot_abelian(&self) -> bool {
        self.dot.is_abelian()
    }

    /// Componentwise operations, `(x, y)` stored at `x * |other| + y`.
    pub fn direct_product(&self, other: &SkewBrace) -> SkewBrace {
        Self::from_tables_unchecked(self.dot.direct_product(&other.dot), self.circle.direct_product(&other.circle))
    }

    /// Transports both tables along the bijection `map` (old to new index).
    pub fn relabel(&self, map: &[usize]) -> SkewBrace {
        Self::from_tables_unchecked(self.dot.relabel(map), self.circle.relabel(map))
    }

    /// Re-runs the exhaustive brace relation scan.
    pub fn verify(&self) -> Result<()> {
        match brace_relation_failure(&self.dot, &self.circle) {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::BraceRelationFails { x, y, z }),
        }
    }
}

/// First triple (lexicographic) where `x o (y z) != (x o y) x^-1 (x o z)`.
fn brace_relation_failure(dot: &GroupTable, circle: &GroupTable) -> Option<(usize, usize, usize)> {
    let n = dot.order();
    for x in 0..n {
        let xi = dot.inv(x);
        for y in 0..n {
            let left = dot.mul(circle.mul(x, y), xi);
            for z in 0..n {
                if circle.mul(x, dot.mul(y, z)) != dot.mul(left, circle.mul(x, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}
