use std::collections::BTreeMap;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{library_names, named_group, GroupTable};
use crate::iso::find_isomorphism;

pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Every brace on a fixed circle table, sorted by dot table.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub braces: Vec<SkewBrace>,
    /// Index into `braces` of the first member of each isomorphism class.
    pub class_representatives: Vec<usize>,
}

impl Enumeration {
    pub fn iso_class_count(&self) -> usize {
        self.class_representatives.len()
    }
}

/// All braces whose circle table is exactly `circle`.
///
/// Each candidate dot group is transported along every bijection that
/// sends its identity to the circle identity; the transported table is kept
/// when the brace relation holds. Without explicit candidates, the built-in
/// library of all groups of the given order is used.
pub fn enumerate_braces(
    circle: &GroupTable,
    dot_candidates: Option<&[GroupTable]>,
    bound: usize,
) -> Result<Enumeration> {
    let n = circle.order();
    if n > bound {
        return Err(Error::BoundExceeded { order: n, bound });
    }
    let library: Vec<GroupTable>;
    let candidates = match dot_candidates {
        Some(c) => c,
        None => {
            library = library_names(n).iter().map(|name| named_group(name)).collect::<Result<_>>()?;
            if library.is_empty() {
                return Err(Error::BoundExceeded { order: n, bound: DEFAULT_ENUMERATION_BOUND });
            }
            &library
        }
    };

    let mut found: BTreeMap<Vec<usize>, GroupTable> = BTreeMap::new();
    for d in candidates.iter().filter(|d| d.order() == n) {
        let rest: Vec<usize> = (0..n).filter(|&x| x != circle.identity()).collect();
        let sources: Vec<usize> = (0..n).filter(|&x| x != d.identity()).collect();
        let mut perm = rest.clone();
        loop {
            // map[old] = new, with the identities matched up
            let mut map = vec![0; n];
            map[d.identity()] = circle.identity();
            for (&src, &dst) in sources.iter().zip(&perm) {
                map[src] = dst;
            }
            let dot = d.relabel(&map);
            if !found.contains_key(dot.flat()) && satisfies_brace_relation(&dot, circle) {
                found.insert(dot.flat().to_vec(), dot);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }

    let braces: Vec<SkewBrace> =
        found.into_values().map(|dot| SkewBrace::from_tables_unchecked(dot, circle.clone())).collect();
    let mut class_representatives: Vec<usize> = Vec::new();
    for (i, b) in braces.iter().enumerate() {
        if !class_representatives.iter().any(|&r| find_isomorphism(&braces[r], b).is_some()) {
            class_representatives.push(i);
        }
    }
    Ok(Enumeration { braces, class_representatives })
}

fn satisfies_brace_relation(dot: &GroupTable, circle: &GroupTable) -> bool {
    let n = dot.order();
    (0..n).all(|x| {
        let xi = dot.inv(x);
        (0..n).all(|y| {
            let left = dot.mul(circle.mul(x, y), xi);
            (0..n).all(|z| circle.mul(x, dot.mul(y, z)) == dot.mul(left, circle.mul(x, z)))
        })
    })
}

/// Lexicographic successor; false once the last permutation is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
