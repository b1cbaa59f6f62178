use serde::Serialize;

use crate::brace::SkewBrace;
use crate::iso::find_isomorphism;

/// Counts of L-pairs (`x o y = x y`) and R-pairs (`x o y = y x`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCensus {
    pub l_count: usize,
    pub r_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_pairs: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_pairs: Option<Vec<(usize, usize)>>,
}

pub fn pair_census(b: &SkewBrace, with_lists: bool) -> PairCensus {
    let n = b.order();
    let mut l = Vec::new();
    let mut r = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = b.circle(x, y);
            if c == b.dot(x, y) {
                l.push((x, y));
            }
            if c == b.dot(y, x) {
                r.push((x, y));
            }
        }
    }
    PairCensus {
        l_count: l.len(),
        r_count: r.len(),
        l_pairs: with_lists.then_some(l),
        r_pairs: with_lists.then_some(r),
    }
}

/// Why a brace is not isomorphic to its opposite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonIsoCertificate {
    /// Isomorphisms to the opposite send L-pairs to R-pairs.
    PairCounts {
        l_count: usize,
        r_count: usize,
    },
    OrderProfiles,
    ExhaustedSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SelfOpposite {
    Equal,
    Isomorphic { map: Vec<usize> },
    No { certificate: NonIsoCertificate },
}

/// Tries, in order: table equality, the pair-count obstruction, the order
/// profile obstruction, then a full isomorphism search.
pub fn is_self_opposite(b: &SkewBrace) -> SelfOpposite {
    let opp = b.opposite();
    if opp == *b {
        return SelfOpposite::Equal;
    }
    let pairs = pair_census(b, false);
    if pairs.l_count != pairs.r_count {
        return SelfOpposite::No {
            certificate: NonIsoCertificate::PairCounts { l_count: pairs.l_count, r_count: pairs.r_count },
        };
    }
    let mut p = b.order_profile().to_vec();
    let mut q = opp.order_profile().to_vec();
    p.sort_unstable();
    q.sort_unstable();
    if p != q {
        return SelfOpposite::No { certificate: NonIsoCertificate::OrderProfiles };
    }
    match find_isomorphism(b, &opp) {
        Some(m) => SelfOpposite::Isomorphic { map: m.map },
        None => SelfOpposite::No { certificate: NonIsoCertificate::ExhaustedSearch },
    }
}
