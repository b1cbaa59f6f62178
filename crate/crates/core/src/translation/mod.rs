//! Moving between regular `G`-stable subgroups of `Perm(G)` and braces.
//!
//! A regular `N` is indexed by its own element list. The bijection
//! `a(eta) = eta[1_G]` turns `N` into a brace with dot = composition in `N`
//! and `eta o pi = a^-1(a(eta) a(pi))`. In the other direction a brace
//! acts on its circle group by `eta_x[y] = x . y`.

mod enumerate;
mod selfopp;

pub use enumerate::{enumerate_braces, Enumeration, DEFAULT_ENUMERATION_BOUND};
pub use selfopp::{is_self_opposite, pair_census, NonIsoCertificate, PairCensus, SelfOpposite};

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{named_group, ElementSet, GroupTable};
use crate::iso::is_homomorphism;
use crate::perm::{left_mult, right_mult, PermSubgroup, Permutation};
use crate::ybe::ybe_from_brace;

/// A regular, `G`-stable subgroup together with its brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationRecord {
    pub subgroup: PermSubgroup,
    /// `a[i] = eta_i[1_G]`.
    pub a: Vec<usize>,
    pub brace: SkewBrace,
}

impl TranslationRecord {
    pub fn group(&self) -> &GroupTable {
        self.subgroup.ambient()
    }
}

/// Builds `B(N)`. Element `i` of the brace is element `i` of `N`.
pub fn brace_from_regular_subgroup(n: &PermSubgroup) -> Result<TranslationRecord> {
    if !n.is_regular() {
        return Err(Error::NotRegular);
    }
    if !n.is_g_stable() {
        return Err(Error::NotGStable);
    }
    let g = n.ambient();
    let a: Vec<usize> = n.elements().iter().map(|p| p.apply(g.identity())).collect();
    let a_inv = n.evaluation_inverse()?;
    let m = n.order();
    let circle: Vec<usize> = (0..m * m).map(|p| a_inv[g.mul(a[p / m], a[p % m])]).collect();
    let circle = GroupTable::from_flat(m, circle)?;
    let brace = SkewBrace::from_tables(n.cayley().clone(), circle)?;
    // a is an isomorphism (N, o) -> G
    debug_assert!((0..m).all(|x| (0..m).all(|y| a[brace.circle(x, y)] == g.mul(a[x], a[y]))));
    Ok(TranslationRecord { subgroup: n.clone(), a, brace })
}

/// `N = {eta_x}` acting on the circle group of `b`, with `eta_x` at index `x`.
pub fn regular_subgroup_from_brace(b: &SkewBrace) -> TranslationRecord {
    let g = b.circle_table();
    let etas: Vec<Permutation> = (0..b.order())
        .map(|x| Permutation::new((0..b.order()).map(|y| b.dot(x, y)).collect()).expect("row of a group table"))
        .collect();
    let n = PermSubgroup::from_elements(g, etas).expect("left dot translations form a group");
    assert!(n.is_regular(), "translation subgroup must be regular");
    for x in 0..b.order() {
        for y in 0..b.order() {
            // ^y eta_x = eta_{(y o x) y^-1}
            let conj = n.conjugate_by(y, n.element(x));
            assert_eq!(&conj, n.element(b.dot(b.circle(y, x), b.dot_inv(y))), "G-stability identity");
        }
    }
    let a = n.elements().iter().map(|p| p.apply(g.identity())).collect();
    TranslationRecord { subgroup: n, a, brace: b.clone() }
}

/// The record for `N' = Cent(N)`, whose brace is the opposite of `B(N)`
/// under the identity index map `phi_eta -> eta`.
pub fn opposite_record(rec: &TranslationRecord) -> Result<TranslationRecord> {
    let cent = rec.subgroup.centralizer_regular()?;
    let out = brace_from_regular_subgroup(&cent)?;
    let identity: Vec<usize> = (0..out.brace.order()).collect();
    assert!(
        is_homomorphism(&out.brace, &rec.brace.opposite(), &identity),
        "phi_eta -> eta is not an isomorphism onto the opposite brace"
    );
    Ok(out)
}

/// Elements `y` whose translation `eta_y` is fixed by the action of the
/// circle group, i.e. `(x o y) x^-1 = y` for all `x`.
///
/// Computed from the inverse solution, where the condition reads
/// `pr1 R_B'(x, y) = y`, and again from the formula; the two must agree.
pub fn group_like_elements(b: &SkewBrace) -> ElementSet {
    let n = b.order();
    let inv = ybe_from_brace(&b.opposite());
    let via_solution = ElementSet::new(n, (0..n).filter(|&y| (0..n).all(|x| inv.apply(x, y).0 == y)));
    let via_fixed = ElementSet::new(n, (0..n).filter(|&y| (0..n).all(|x| b.dot(b.circle(x, y), b.dot_inv(x)) == y)));
    assert_eq!(via_solution, via_fixed, "group-like computations disagree");
    via_solution
}

/// Elements `y` with `pr2 R_B(x, y) = x` for all `x`.
///
/// Agrees with [`group_like_elements`] on trivial and almost trivial braces
/// and on the D4/Q8 example, but not in general: the smallest
/// disagreements are at order 6.
pub fn second_projection_fixed(b: &SkewBrace) -> ElementSet {
    let n = b.order();
    let r = ybe_from_brace(b);
    ElementSet::new(n, (0..n).filter(|&y| (0..n).all(|x| r.apply(x, y).1 == x)))
}

/// `[eta^i pi^j]` stored at `m*j + i`, where `m` is the order of `eta`.
pub fn dihedral_labeled(ambient: &GroupTable, eta: &Permutation, pi: &Permutation) -> Result<PermSubgroup> {
    let n = ambient.order();
    let mut powers = vec![Permutation::identity(n)];
    loop {
        let next = powers.last().expect("nonempty").compose(eta);
        if next.is_identity() {
            break;
        }
        powers.push(next);
    }
    let mut elements = powers.clone();
    elements.extend(powers.iter().map(|p| p.compose(pi)));
    PermSubgroup::from_elements(ambient, elements)
}

/// One of the six dihedral regular subgroups of `Perm(Q8)`.
#[derive(Debug, Clone)]
pub struct NamedSubgroup {
    pub name: &'static str,
    pub subgroup: PermSubgroup,
}

/// `N_{x,rho}` and `N_{x,lambda}` for `x` in `{s, t, st}` over `Q8`,
/// each labelled `eta^i pi^j` from its two listed generators.
pub fn q8_d4_subgroups() -> Vec<NamedSubgroup> {
    let g = named_group("Q8").expect("Q8");
    let (s, t) = (1, 4);
    let st = g.mul(s, t);
    let lam = |x| left_mult(&g, x);
    let rho = |x| right_mult(&g, x);
    let specs: [(&'static str, Permutation, Permutation); 6] = [
        ("N_{s,rho}", rho(s), lam(s).compose(&rho(t))),
        ("N_{t,rho}", rho(t), lam(t).compose(&rho(s))),
        ("N_{st,rho}", rho(st), lam(st).compose(&rho(t))),
        ("N_{s,lambda}", lam(s), lam(t).compose(&rho(s))),
        ("N_{t,lambda}", lam(t), lam(s).compose(&rho(t))),
        ("N_{st,lambda}", lam(st), lam(t).compose(&rho(st))),
    ];
    specs
        .into_iter()
        .map(|(name, eta, pi)| {
            let subgroup = dihedral_labeled(&g, &eta, &pi).expect("dihedral subgroup");
            assert!(subgroup.order() == 8 && subgroup.is_regular() && subgroup.is_g_stable(), "{name}");
            NamedSubgroup { name, subgroup }
        })
        .collect()
}
