//! Finite groups stored as dense multiplication tables.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A finite group on the index set `0..n`.
///
/// Row-major `mul[x * n + y]` holds `x * y`. Values are immutable once
/// validated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl GroupTable {
    /// Validates a raw table and derives identity and inverses.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut mul = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: r, col: c, value: v });
                }
            }
            mul.extend_from_slice(row);
        }
        Self::from_flat(n, mul)
    }

    /// Same as [`GroupTable::from_rows`] for an already flattened table.
    pub fn from_flat(n: usize, mul: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        assert_eq!(mul.len(), n * n, "flat table has wrong length");
        if let Some(p) = mul.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange { row: p / n, col: p % n, value: mul[p] });
        }
        let identity =
            (0..n).find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x)).ok_or(Error::NoIdentity)?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mul[x * n + y] == identity && mul[y * n + x] == identity)
                .ok_or(Error::NoInverse { element: x })?;
            inv.push(y);
        }
        let g = GroupTable { n, mul, identity, inv };
        if let Some((x, y, z)) = g.associativity_failure() {
            return Err(Error::NotAssociative { x, y, z });
        }
        Ok(g)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat(&self) -> &[usize] {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|x| (x..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Order of `x`, the least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != self.identity {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.element_order(x)).collect()
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// The group with reversed multiplication, `x *' y = y * x`.
    pub fn opposite(&self) -> GroupTable {
        let n = self.n;
        let mul = (0..n * n).map(|p| self.mul(p % n, p / n)).collect();
        GroupTable { n, mul, identity: self.identity, inv: self.inv.clone() }
    }

    /// Componentwise product on pairs, `(a, b)` stored at `a * |other| + b`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (n, m) = (self.n, other.n);
        let size = n * m;
        let mut mul = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                mul.push(self.mul(x / m, y / m) * m + other.mul(x % m, y % m));
            }
        }
        GroupTable {
            n: size,
            mul,
            identity: self.identity * m + other.identity,
            inv: (0..size).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect(),
        }
    }

    /// Transports the table along the bijection `map` (old index to new index).
    pub fn relabel(&self, map: &[usize]) -> GroupTable {
        let n = self.n;
        let mut back = vec![0; n];
        for (old, &new) in map.iter().enumerate() {
            back[new] = old;
        }
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                mul.push(map[self.mul(back[x], back[y])]);
            }
        }
        GroupTable { n, mul, identity: map[self.identity], inv: (0..n).map(|x| map[self.inv(back[x])]).collect() }
    }

    /// Subgroup generated by `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> ElementSet {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        ElementSet::from_mask(&seen)
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        if h.ambient_order() != self.n || !h.contains(self.identity) {
            return false;
        }
        h.iter().all(|x| h.contains(self.inv(x)) && h.iter().all(|y| h.contains(self.mul(x, y))))
    }

    /// True iff `g h g^-1` stays in `h` for every `g`.
    pub fn is_normal(&self, h: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.elements().all(|g| {
            let gi = self.inv(g);
            h.iter().all(|x| h.contains(self.mul(self.mul(g, x), gi)))
        }))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::new(self.n, self.elements().filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z))))
    }

    /// Every subgroup, sorted by size and then lexicographically.
    ///
    /// Starts from the cyclic subgroups and repeatedly joins a known subgroup
    /// with a cyclic one until nothing new appears.
    pub fn subgroups(&self) -> Vec<ElementSet> {
        let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
        let mut seen_cyclic = BTreeSet::new();
        for g in self.elements() {
            let c = self.generated_by(&[g]);
            if seen_cyclic.insert(c.members.clone()) {
                cyclic.push((g, c));
            }
        }

        let mut found: BTreeSet<Vec<usize>> = seen_cyclic;
        let mut work: Vec<ElementSet> = cyclic.iter().map(|(_, c)| c.clone()).collect();
        let mut i = 0;
        while i < work.len() {
            let h = work[i].clone();
            i += 1;
            for (g, c) in &cyclic {
                if h.contains(*g) || c.len() == 1 {
                    continue;
                }
                let mut gens: Vec<usize> = h.members.clone();
                gens.push(*g);
                let j = self.generated_by(&gens);
                if found.insert(j.members.clone()) {
                    work.push(j);
                }
            }
        }

        let mut out: Vec<ElementSet> = found.into_iter().map(|members| ElementSet { members, n: self.n }).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    /// A small generating set chosen greedily by descending element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = self.generated_by(&[]);
        for x in by_order {
            if span.len() == self.n {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.generated_by(&gens);
            }
        }
        gens
    }
}

/// Sorted, deduplicated subset of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<usize>,
    n: usize,
}

impl ElementSet {
    /// # Panics
    /// If a member is not below `n`.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&max) = members.iter().next_back() {
            assert!(max < n, "element {max} out of range for order {n}");
        }
        ElementSet { members: members.into_iter().collect(), n }
    }

    pub fn try_new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&max) = members.iter().next_back() {
            if max >= n {
                return Err(Error::EntryOutOfRange { row: 0, col: 0, value: max });
            }
        }
        Ok(ElementSet { members: members.into_iter().collect(), n })
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        ElementSet { members: mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect(), n: mask.len() }
    }

    pub fn full(n: usize) -> Self {
        ElementSet { members: (0..n).collect(), n }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn ambient_order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }
}

impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde::Serialize::serialize(self.members(), s)
    }
}

/// Element labels and generator names attached to a named group.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub table: GroupTable,
    pub labels: Vec<String>,
    /// Generator symbol and the element it denotes.
    pub generators: Vec<(String, usize)>,
}

/// Builds one of the built-in groups.
///
/// Recognised names: `Cn` (cyclic, `g^i` at index `i`), `Dn` (dihedral of
/// order `2n`, `eta^i pi^j` at index `n*j + i` with `pi eta = eta^-1 pi`),
/// `Q8` (`s^i t^j` at index `4j + i` with `s^4 = 1`, `t^2 = s^2`,
/// `t s = s^-1 t`), and direct products written `AxB` or `AxBxC`, stored
/// row-major.
pub fn named_group(name: &str) -> Result<GroupTable> {
    named_group_with_labels(name).map(|g| g.table)
}

/// Largest order `named_group` will build.
pub const NAMED_GROUP_MAX_ORDER: usize = 1024;

pub fn named_group_with_labels(name: &str) -> Result<NamedGroup> {
    let factors: Vec<&str> = name.trim().split(['x', 'X', '×']).collect();
    if factors.len() == 1 {
        return single_factor(factors[0]).ok_or_else(|| Error::UnknownName(name.to_string()));
    }
    let mut parts = Vec::with_capacity(factors.len());
    for f in &factors {
        parts.push(single_factor(f).ok_or_else(|| Error::UnknownName(name.to_string()))?);
    }
    let order: usize =
        parts.iter().map(|p| p.table.order()).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX);
    if order > NAMED_GROUP_MAX_ORDER {
        return Err(Error::BoundExceeded { order, bound: NAMED_GROUP_MAX_ORDER });
    }
    let mut table = parts[0].table.clone();
    for p in &parts[1..] {
        table = table.direct_product(&p.table);
    }
    let mut labels = Vec::with_capacity(table.order());
    let sizes: Vec<usize> = parts.iter().map(|p| p.table.order()).collect();
    for idx in 0..table.order() {
        let coords = mixed_radix(idx, &sizes);
        let inner: Vec<&str> = coords.iter().zip(&parts).map(|(&c, p)| p.labels[c].as_str()).collect();
        labels.push(format!("({})", inner.join(",")));
    }
    let mut generators = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        for (sym, g) in &p.generators {
            let mut coords: Vec<usize> = parts.iter().map(|q| q.table.identity()).collect();
            coords[k] = *g;
            let idx = coords.iter().zip(&sizes).fold(0, |acc, (&c, &s)| acc * s + c);
            generators.push((format!("{sym}{}", k + 1), idx));
        }
    }
    Ok(NamedGroup { table, labels, generators })
}

fn mixed_radix(mut idx: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &s) in out.iter_mut().zip(sizes).rev() {
        *slot = idx % s;
        idx /= s;
    }
    out
}

fn power_label(sym: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{k}"),
    }
}

fn word_label(parts: &[String]) -> String {
    let parts: Vec<&str> = parts.iter().filter(|s| !s.is_empty()).map(String::as_str).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn single_factor(name: &str) -> Option<NamedGroup> {
    let name = name.trim();
    if name == "Q8" {
        let idx = |i: i64, j: i64| (4 * j.rem_euclid(2) + i.rem_euclid(4)) as usize;
        let mut mul = Vec::with_capacity(64);
        for x in 0..8i64 {
            for y in 0..8i64 {
                let (i, j, k, l) = (x % 4, x / 4, y % 4, y / 4);
                let sign = if j == 0 { 1 } else { -1 };
                mul.push(idx(i + sign * k + 2 * j * l, j + l));
            }
        }
        let labels = (0..8).map(|x| word_label(&[power_label("s", x % 4), power_label("t", x / 4)])).collect();
        return Some(NamedGroup {
            table: GroupTable::from_flat(8, mul).ok()?,
            labels,
            generators: vec![("s".into(), 1), ("t".into(), 4)],
        });
    }
    let mut chars = name.chars();
    let kind = chars.next()?.to_string();
    let m: usize = chars.as_str().parse().ok()?;
    if m > NAMED_GROUP_MAX_ORDER {
        return None;
    }
    match kind.as_str() {
        "C" if m >= 1 => {
            let mul = (0..m * m).map(|p| (p / m + p % m) % m).collect();
            let labels = (0..m).map(|i| word_label(&[power_label("g", i)])).collect();
            let generators = if m > 1 { vec![("g".into(), 1)] } else { Vec::new() };
            Some(NamedGroup { table: GroupTable::from_flat(m, mul).ok()?, labels, generators })
        }
        "D" if m >= 1 && 2 * m <= NAMED_GROUP_MAX_ORDER => {
            let n = 2 * m;
            let mi = m as i64;
            let idx = |i: i64, j: i64| (mi * j.rem_euclid(2) + i.rem_euclid(mi)) as usize;
            let mut mul = Vec::with_capacity(n * n);
            for x in 0..n as i64 {
                for y in 0..n as i64 {
                    let (i, j, k, l) = (x % mi, x / mi, y % mi, y / mi);
                    let sign = if j == 0 { 1 } else { -1 };
                    mul.push(idx(i + sign * k, j + l));
                }
            }
            let labels = (0..n).map(|x| word_label(&[power_label("eta", x % m), power_label("pi", x / m)])).collect();
            Some(NamedGroup {
                table: GroupTable::from_flat(n, mul).ok()?,
                labels,
                generators: vec![("eta".into(), 1 % m), ("pi".into(), m)],
            })
        }
        _ => None,
    }
}

/// Names of one representative per isomorphism type, for each order up to 8.
pub fn library_names(order: usize) -> &'static [&'static str] {
    match order {
        1 => &["C1"],
        2 => &["C2"],
        3 => &["C3"],
        4 => &["C4", "C2xC2"],
        5 => &["C5"],
        6 => &["C6", "D3"],
        7 => &["C7"],
        8 => &["C8", "C4xC2", "C2xC2xC2", "D4", "Q8"],
        _ => &[],
    }
}
