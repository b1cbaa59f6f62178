//! Set-theoretic Yang-Baxter solutions, stored as explicit pair tables.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};

/// A map `B x B -> B x B`; the image of `(x, y)` sits at `x * n + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeSolution {
    n: usize,
    table: Vec<(usize, usize)>,
    verified: bool,
}

impl YbeSolution {
    /// Wraps an arbitrary total pair map. Not yet checked against the braid
    /// relation.
    pub fn from_table(n: usize, table: Vec<(usize, usize)>) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::OrderMismatch { left: table.len(), right: n * n });
        }
        if let Some(p) = table.iter().position(|&(u, v)| u >= n || v >= n) {
            let (u, v) = table[p];
            return Err(Error::EntryOutOfRange { row: p / n, col: p % n, value: u.max(v) });
        }
        Ok(YbeSolution { n, table, verified: false })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let table = (0..n * n).map(|p| f(p / n, p % n)).collect();
        YbeSolution { n, table, verified: false }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[(usize, usize)] {
        &self.table
    }

    /// Whether the braid relation has been confirmed on every triple.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// `R12 R23 R12 = R23 R12 R23` on all `n^3` triples.
    pub fn verify_braid(&self) -> bool {
        let n = self.n;
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (u, v) = self.apply(x, y);
            (u, v, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (u, v) = self.apply(y, z);
            (x, u, v)
        };
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| r12(r23(r12((x, y, z)))) == r23(r12(r23((x, y, z)))))))
    }

    /// Every `f_x: y -> pr1 R(x, y)` and `g_y: x -> pr2 R(x, y)` is a bijection.
    pub fn is_nondegenerate(&self) -> bool {
        let n = self.n;
        let bijective = |f: &dyn Fn(usize) -> usize| {
            let mut hit = vec![false; n];
            (0..n).all(|i| !std::mem::replace(&mut hit[f(i)], true))
        };
        (0..n).all(|x| bijective(&|y| self.apply(x, y).0)) && (0..n).all(|y| bijective(&|x| self.apply(x, y).1))
    }

    /// `R(R(x, y)) = (x, y)` for all pairs.
    pub fn is_involutive(&self) -> bool {
        self.table.iter().enumerate().all(|(p, &(u, v))| {
            let back = self.apply(u, v);
            back == (p / self.n, p % self.n)
        })
    }
}

/// The pair map `R after S`.
pub fn compose(r: &YbeSolution, s: &YbeSolution) -> Result<Vec<(usize, usize)>> {
    if r.n != s.n {
        return Err(Error::OrderMismatch { left: r.n, right: s.n });
    }
    Ok(s.table.iter().map(|&(u, v)| r.apply(u, v)).collect())
}

fn is_identity_pairs(n: usize, pairs: &[(usize, usize)]) -> bool {
    pairs.iter().enumerate().all(|(p, &q)| q == (p / n, p % n))
}

/// True iff `R S` and `S R` are both the identity on pairs.
pub fn is_inverse_pair(r: &YbeSolution, s: &YbeSolution) -> Result<bool> {
    Ok(is_identity_pairs(r.n, &compose(r, s)?) && is_identity_pairs(r.n, &compose(s, r)?))
}

/// `R_B(x, y) = (x^-1 (x o y), bar(x^-1 (x o y)) o x o y)`.
///
/// # Panics
/// If the braid relation fails, which would mean the brace tables are
/// corrupt.
pub fn ybe_from_brace(b: &SkewBrace) -> YbeSolution {
    let mut r = YbeSolution::from_fn(b.order(), |x, y| {
        let xy = b.circle(x, y);
        let u = b.dot(b.dot_inv(x), xy);
        (u, b.circle(b.circle_inv(u), xy))
    });
    assert!(r.verify_braid(), "brace solution fails the braid relation");
    r.verified = true;
    r
}

/// The solution of the opposite brace, checked to be the two-sided
/// inverse of [`ybe_from_brace`].
pub fn inverse_solution(b: &SkewBrace) -> YbeSolution {
    let inv = ybe_from_brace(&b.opposite());
    assert!(is_inverse_pair(&ybe_from_brace(b), &inv).expect("same order"), "opposite solution is not inverse");
    inv
}
