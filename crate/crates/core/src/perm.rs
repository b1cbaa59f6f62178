//! Permutations of a group's elements and the regular subgroups among them.
//!
//! Composition reads right to left: `(p * q)[g] = p[q[g]]`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut hit[v], true) {
                return Err(Error::NotAPermutation(format!("{image:?}")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&g| self.image[g]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (g, &h) in self.image.iter().enumerate() {
            image[h] = g;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(g, &h)| g == h)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `lambda(g)[h] = g h`.
pub fn left_mult(g: &GroupTable, x: usize) -> Permutation {
    Permutation { image: g.elements().map(|h| g.mul(x, h)).collect() }
}

/// `rho(g)[h] = h g^-1`.
pub fn right_mult(g: &GroupTable, x: usize) -> Permutation {
    let xi = g.inv(x);
    Permutation { image: g.elements().map(|h| g.mul(h, xi)).collect() }
}

/// A subgroup of `Perm(G)` for a fixed ambient group `G`, with its own
/// Cayley table over the stored element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSubgroup {
    ambient: GroupTable,
    elements: Vec<Permutation>,
    cayley: GroupTable,
    regular: bool,
}

impl PermSubgroup {
    /// Takes the elements in the given order; they must form a group.
    pub fn from_elements(ambient: &GroupTable, elements: Vec<Permutation>) -> Result<Self> {
        let n = ambient.order();
        if let Some(p) = elements.iter().find(|p| p.degree() != n) {
            return Err(Error::NotAPermutation(format!("degree {} on {n} points", p.degree())));
        }
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != elements.len() || elements.is_empty() {
            return Err(Error::NotClosed);
        }
        let m = elements.len();
        let mut mul = Vec::with_capacity(m * m);
        for p in &elements {
            for q in &elements {
                mul.push(*index.get(&p.compose(q)).ok_or(Error::NotClosed)?);
            }
        }
        let cayley = GroupTable::from_flat(m, mul).map_err(|_| Error::NotClosed)?;
        let regular = Self::check_regular(ambient, &elements);
        Ok(PermSubgroup { ambient: ambient.clone(), elements, cayley, regular })
    }

    /// The subgroup generated by `gens`, listed breadth-first: identity,
    /// then each new product `x * gen` in generator order.
    pub fn generated_by(ambient: &GroupTable, gens: &[Permutation]) -> Result<Self> {
        Ok(Self::generated_with_words(ambient, gens)?.0)
    }

    /// Like [`PermSubgroup::generated_by`], also returning for each element
    /// the generator indices of its breadth-first word.
    pub fn generated_with_words(ambient: &GroupTable, gens: &[Permutation]) -> Result<(Self, Vec<Vec<usize>>)> {
        let n = ambient.order();
        if let Some(p) = gens.iter().find(|p| p.degree() != n) {
            return Err(Error::NotAPermutation(format!("degree {} on {n} points", p.degree())));
        }
        let id = Permutation::identity(n);
        let mut seen: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        let mut words = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let p = elements[i].compose(g);
                if !seen.contains_key(&p) {
                    seen.insert(p.clone(), elements.len());
                    let mut w = words[i].clone();
                    w.push(k);
                    words.push(w);
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        Ok((Self::from_elements(ambient, elements)?, words))
    }

    fn check_regular(ambient: &GroupTable, elements: &[Permutation]) -> bool {
        if elements.len() != ambient.order() {
            return false;
        }
        let mut hit = vec![false; ambient.order()];
        elements.iter().all(|p| !std::mem::replace(&mut hit[p.apply(ambient.identity())], true))
    }

    pub fn ambient(&self) -> &GroupTable {
        &self.ambient
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn cayley(&self) -> &GroupTable {
        &self.cayley
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// True iff `|N| = |G|` and `eta -> eta[1_G]` is injective.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    /// Same elements, ignoring the order they are listed in.
    pub fn same_elements(&self, other: &PermSubgroup) -> bool {
        let mut a = self.elements.clone();
        let mut b = other.elements.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// `^g eta = lambda(g) eta lambda(g^-1)`.
    pub fn conjugate_by(&self, g: usize, eta: &Permutation) -> Permutation {
        let lam = left_mult(&self.ambient, g);
        let lam_inv = left_mult(&self.ambient, self.ambient.inv(g));
        lam.compose(eta).compose(&lam_inv)
    }

    /// True iff every `^g eta` lies in the subgroup.
    pub fn is_g_stable(&self) -> bool {
        self.ambient.elements().all(|g| self.elements.iter().all(|eta| self.contains(&self.conjugate_by(g, eta))))
    }

    /// Index of the unique `mu_g` with `mu_g[1_G] = g`, for every `g`.
    pub(crate) fn evaluation_inverse(&self) -> Result<Vec<usize>> {
        if !self.regular {
            return Err(Error::NotRegular);
        }
        let mut back = vec![0; self.ambient.order()];
        for (i, p) in self.elements.iter().enumerate() {
            back[p.apply(self.ambient.identity())] = i;
        }
        Ok(back)
    }

    /// The centralizer of a regular subgroup in `Perm(G)`, built element by
    /// element as `phi_eta[g] = mu_g[eta[1_G]]`.
    ///
    /// Element `i` of the result is `phi` of element `i` of `self`, so the
    /// identity index map realises `N' ~ N^opp`.
    pub fn centralizer_regular(&self) -> Result<PermSubgroup> {
        let mu = self.evaluation_inverse()?;
        let e = self.ambient.identity();
        let phis: Vec<Permutation> = self
            .elements
            .iter()
            .map(|eta| {
                let at = eta.apply(e);
                Permutation { image: self.ambient.elements().map(|g| self.elements[mu[g]].apply(at)).collect() }
            })
            .collect();
        for phi in &phis {
            for eta in &self.elements {
                assert_eq!(phi.compose(eta), eta.compose(phi), "centralizer element fails to commute");
            }
        }
        let out = PermSubgroup::from_elements(&self.ambient, phis)?;
        assert!(out.is_regular(), "centralizer of a regular subgroup must be regular");
        Ok(out)
    }
}

/// `lambda(G)`, with `lambda(g)` stored at index `g`.
pub fn left_regular(g: &GroupTable) -> PermSubgroup {
    PermSubgroup::from_elements(g, g.elements().map(|x| left_mult(g, x)).collect())
        .expect("left regular representation is a group")
}

/// `rho(G)`, with `rho(g)` stored at index `g`.
pub fn right_regular(g: &GroupTable) -> PermSubgroup {
    PermSubgroup::from_elements(g, g.elements().map(|x| right_mult(g, x)).collect())
        .expect("right regular representation is a group")
}
