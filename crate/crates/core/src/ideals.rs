//! Quasi-ideals, ideals and circle-stable subgroups of a brace.

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable};

/// Classification of one subset of a brace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub subject: ElementSet,
    pub flags: IdealFlags,
    /// First `(x, y)` with `x^-1 (x o y)` outside the subject.
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub is_subgroup_dot: bool,
    pub is_quasi_ideal: bool,
    pub is_dot_qi: bool,
    pub is_circle_qi: bool,
    pub is_ideal: bool,
    pub is_circle_stable: bool,
}

impl IdealReport {
    /// Which kind of intermediate field the subgroup classifies.
    pub fn annotation(&self) -> Option<&'static str> {
        let f = &self.flags;
        match (f.is_quasi_ideal, f.is_dot_qi, f.is_circle_qi) {
            (false, ..) => None,
            (true, true, true) => Some("both"),
            (true, true, false) => Some("realizable + HG tower"),
            (true, false, true) => Some("realizable + Galois"),
            (true, false, false) => Some("realizable"),
        }
    }
}

fn require_dot_subgroup(b: &SkewBrace, i: &ElementSet) -> Result<()> {
    if b.dot_table().is_subgroup(i) {
        Ok(())
    } else {
        Err(Error::NotASubgroup)
    }
}

/// `Ok(None)` when `x^-1 (x o y)` lies in `i` for all `x` and all `y` in
/// `i`; otherwise the lexicographically first violating pair.
pub fn quasi_ideal_witness(b: &SkewBrace, i: &ElementSet) -> Result<Option<(usize, usize)>> {
    require_dot_subgroup(b, i)?;
    for x in 0..b.order() {
        let xi = b.dot_inv(x);
        for y in i.iter() {
            if !i.contains(b.dot(xi, b.circle(x, y))) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn is_quasi_ideal(b: &SkewBrace, i: &ElementSet) -> Result<bool> {
    Ok(quasi_ideal_witness(b, i)?.is_none())
}

/// `(x o y) x^-1` lies in `c` for every `x` and every `y` in `c`.
pub fn is_circle_stable(b: &SkewBrace, c: &ElementSet) -> Result<bool> {
    require_dot_subgroup(b, c)?;
    Ok((0..b.order()).all(|x| {
        let xi = b.dot_inv(x);
        c.iter().all(|y| c.contains(b.dot(b.circle(x, y), xi)))
    }))
}

fn normal_in(g: &GroupTable, i: &ElementSet) -> bool {
    g.is_normal(i).unwrap_or(false)
}

pub fn classify_subgroup(b: &SkewBrace, i: &ElementSet) -> IdealReport {
    let mut flags = IdealFlags::default();
    if i.ambient_order() != b.order() || !b.dot_table().is_subgroup(i) {
        return IdealReport { subject: i.clone(), flags, witness: None };
    }
    flags.is_subgroup_dot = true;
    let witness = quasi_ideal_witness(b, i).expect("checked subgroup");
    flags.is_quasi_ideal = witness.is_none();
    flags.is_circle_stable = is_circle_stable(b, i).expect("checked subgroup");
    if flags.is_quasi_ideal {
        debug_assert!(b.circle_table().is_subgroup(i), "quasi-ideals are circle subgroups");
        flags.is_dot_qi = normal_in(b.dot_table(), i);
        flags.is_circle_qi = normal_in(b.circle_table(), i);
        flags.is_ideal = flags.is_dot_qi && flags.is_circle_qi;
    }
    IdealReport { subject: i.clone(), flags, witness }
}

/// A report for every subgroup of the dot group, in subgroup order.
pub fn census(b: &SkewBrace) -> Vec<IdealReport> {
    b.dot_table().subgroups().iter().map(|i| classify_subgroup(b, i)).collect()
}

/// Per-class totals over a census.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub subgroups: usize,
    pub quasi_ideals: usize,
    pub dot_qis: usize,
    pub circle_qis: usize,
    pub ideals: usize,
    pub circle_stable: usize,
}

pub fn summarize(reports: &[IdealReport]) -> CensusSummary {
    let mut s = CensusSummary::default();
    for r in reports {
        let f = &r.flags;
        s.subgroups += f.is_subgroup_dot as usize;
        s.quasi_ideals += f.is_quasi_ideal as usize;
        s.dot_qis += f.is_dot_qi as usize;
        s.circle_qis += f.is_circle_qi as usize;
        s.ideals += f.is_ideal as usize;
        s.circle_stable += f.is_circle_stable as usize;
    }
    s
}

/// The quotient `B/I`, the sub-brace `I`, and the projection `B -> B/I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub quotient: SkewBrace,
    pub sub: SkewBrace,
    /// Coset index of each element of `B`.
    pub projection: Vec<usize>,
    /// Minimal element of each coset, in coset order.
    pub representatives: Vec<usize>,
}

/// Cosets are numbered in order of their minimal element.
pub fn quotient_brace(b: &SkewBrace, i: &ElementSet) -> Result<Quotient> {
    if !classify_subgroup(b, i).flags.is_ideal {
        return Err(Error::NotAnIdeal);
    }
    let n = b.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let label = representatives.len();
        representatives.push(x);
        for y in i.iter() {
            projection[b.dot(x, y)] = label;
        }
    }
    let m = representatives.len();
    let induced = |op: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        let mut mul = Vec::with_capacity(m * m);
        for &x in &representatives {
            for &y in &representatives {
                mul.push(projection[op(x, y)]);
            }
        }
        mul
    };
    let dot = GroupTable::from_flat(m, induced(&|x, y| b.dot(x, y)))?;
    let circle = GroupTable::from_flat(m, induced(&|x, y| b.circle(x, y)))?;
    let quotient = SkewBrace::from_tables(dot, circle)?;

    let members = i.members();
    let pos = |x: usize| members.binary_search(&x).expect("closed under both operations");
    let k = members.len();
    let mut sdot = Vec::with_capacity(k * k);
    let mut scirc = Vec::with_capacity(k * k);
    for &x in members {
        for &y in members {
            sdot.push(pos(b.dot(x, y)));
            scirc.push(pos(b.circle(x, y)));
        }
    }
    let sub = SkewBrace::from_tables(GroupTable::from_flat(k, sdot)?, GroupTable::from_flat(k, scirc)?)?;
    Ok(Quotient { quotient, sub, projection, representatives })
}
