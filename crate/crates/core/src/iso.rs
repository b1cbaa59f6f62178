//! Brace homomorphisms and isomorphism search.
//!
//! The search fixes a generating set of the source circle group and
//! backtracks over candidate images for each generator. Candidates must
//! match the generator's (dot order, circle order) profile. After each
//! choice the map is extended over the circle subgroup generated so far
//! and checked for consistency, injectivity, and the dot law.

use std::collections::VecDeque;

use crate::brace::SkewBrace;

/// A map between two braces, given by target indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceMorphism<'a> {
    pub source: &'a SkewBrace,
    pub target: &'a SkewBrace,
    pub map: Vec<usize>,
}

impl BraceMorphism<'_> {
    pub fn is_homomorphism(&self) -> bool {
        is_homomorphism(self.source, self.target, &self.map)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && is_bijection(&self.map, self.target.order())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective() && self.is_homomorphism()
    }

    /// The inverse map, when bijective.
    pub fn inverse(&self) -> Option<BraceMorphism<'_>> {
        if !self.is_bijective() {
            return None;
        }
        let mut back = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            back[y] = x;
        }
        Some(BraceMorphism { source: self.target, target: self.source, map: back })
    }
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    map.len() == n && map.iter().all(|&y| y < n && !std::mem::replace(&mut hit[y], true))
}

/// True iff `map` preserves both operations on every pair.
pub fn is_homomorphism(b: &SkewBrace, c: &SkewBrace, map: &[usize]) -> bool {
    if map.len() != b.order() || map.iter().any(|&y| y >= c.order()) {
        return false;
    }
    let n = b.order();
    (0..n).all(|x| {
        (0..n).all(|y| map[b.dot(x, y)] == c.dot(map[x], map[y]) && map[b.circle(x, y)] == c.circle(map[x], map[y]))
    })
}

/// First isomorphism `b -> c` in backtracking order, if any.
pub fn find_isomorphism<'a>(b: &'a SkewBrace, c: &'a SkewBrace) -> Option<BraceMorphism<'a>> {
    let n = b.order();
    if n != c.order() {
        return None;
    }
    let mut pb: Vec<_> = b.order_profile().to_vec();
    let mut pc: Vec<_> = c.order_profile().to_vec();
    pb.sort_unstable();
    pc.sort_unstable();
    if pb != pc {
        return None;
    }
    let gens = b.circle_table().generating_set();
    let mut search = Search { b, c, gens: &gens, images: Vec::with_capacity(gens.len()) };
    let map = search.run()?;
    let m = BraceMorphism { source: b, target: c, map };
    debug_assert!(m.is_isomorphism());
    Some(m)
}

struct Search<'s> {
    b: &'s SkewBrace,
    c: &'s SkewBrace,
    gens: &'s [usize],
    images: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<Vec<usize>> {
        let k = self.images.len();
        if k == self.gens.len() {
            let map = self.extend()?;
            return map.iter().all(Option::is_some).then(|| map.into_iter().flatten().collect());
        }
        let want = self.b.order_profile()[self.gens[k]];
        for cand in 0..self.c.order() {
            if self.c.order_profile()[cand] != want || self.images.contains(&cand) {
                continue;
            }
            self.images.push(cand);
            if self.extend().is_some() {
                if let Some(found) = self.run() {
                    return Some(found);
                }
            }
            self.images.pop();
        }
        None
    }

    /// Extends the current generator images over the circle subgroup they
    /// generate. `None` on any inconsistency.
    fn extend(&self) -> Option<Vec<Option<usize>>> {
        let (b, c) = (self.b, self.c);
        let n = b.order();
        let mut map: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        map[b.identity()] = Some(c.identity());
        used[c.identity()] = true;
        let mut domain = vec![b.identity()];
        let mut queue = VecDeque::from([b.identity()]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x].expect("queued elements are mapped");
            for (&g, &h) in self.gens.iter().zip(&self.images) {
                let y = b.circle(x, g);
                let fy = c.circle(fx, h);
                match map[y] {
                    Some(prev) if prev != fy => return None,
                    Some(_) => {}
                    None => {
                        if std::mem::replace(&mut used[fy], true) {
                            return None;
                        }
                        map[y] = Some(fy);
                        domain.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        for &x in &domain {
            let fx = map[x]?;
            for &y in &domain {
                if let Some(fxy) = map[b.dot(x, y)] {
                    if fxy != c.dot(fx, map[y]?) {
                        return None;
                    }
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    #[test]
    fn identity_map_on_trivial_c4() {
        let b = SkewBrace::trivial(&named_group("C4").unwrap());
        let m = find_isomorphism(&b, &b).unwrap();
        assert_eq!(m.map, vec![0, 1, 2, 3]);
        assert!(m.is_isomorphism());
    }

    #[test]
    fn example_is_not_isomorphic_to_its_opposite() {
        let b = SkewBrace::dihedral_quaternion();
        let o = b.opposite();
        assert!(find_isomorphism(&b, &o).is_none());
        assert!(find_isomorphism(&b, &b).is_some());
    }

    #[test]
    fn relabelled_braces_are_found() {
        let b = SkewBrace::dihedral_quaternion();
        let map = [0, 3, 2, 1, 6, 7, 4, 5];
        let r = b.relabel(&map);
        let m = find_isomorphism(&b, &r).unwrap();
        assert!(m.is_isomorphism());
        assert!(m.inverse().unwrap().is_isomorphism());
        assert!(is_homomorphism(&b, &r, &map));
    }

    #[test]
    fn different_circle_groups_are_rejected() {
        let d4 = named_group("D4").unwrap();
        // an isomorphism would force the dot group to be abelian
        assert!(find_isomorphism(&SkewBrace::trivial(&d4), &SkewBrace::almost_trivial(&d4)).is_none());
        let q8 = named_group("Q8").unwrap();
        assert!(find_isomorphism(&SkewBrace::trivial(&d4), &SkewBrace::trivial(&q8)).is_none());
    }

    #[test]
    fn homomorphisms_survive_taking_opposites() {
        // projection of a product onto its first factor
        let b = SkewBrace::dihedral_quaternion();
        let c2 = SkewBrace::trivial(&named_group("C2").unwrap());
        let p = b.direct_product(&c2);
        let proj: Vec<usize> = (0..16).map(|x| x / 2).collect();
        assert!(is_homomorphism(&p, &b, &proj));
        assert!(is_homomorphism(&p.opposite(), &b.opposite(), &proj));
        assert!(!is_homomorphism(&p, &b.opposite(), &proj));
        assert!(!is_homomorphism(&p, &b, &proj[..8]));
    }
}
