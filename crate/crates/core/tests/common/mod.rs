#![allow(dead_code)]

use bracekit::group::library_names;
use bracekit::translation::enumerate_braces;
use bracekit::{named_group, GroupTable, SkewBrace};

pub fn group(name: &str) -> GroupTable {
    named_group(name).unwrap()
}

/// Hand-picked braces: trivial and almost trivial on every library group,
/// the D4/Q8 example, its opposite, and a few products.
pub fn named_fixtures() -> Vec<(String, SkewBrace)> {
    let mut out = Vec::new();
    for order in 1..=8 {
        for name in library_names(order) {
            let g = group(name);
            out.push((format!("trivial({name})"), SkewBrace::trivial(&g)));
            out.push((format!("almost_trivial({name})"), SkewBrace::almost_trivial(&g)));
        }
    }
    let b = SkewBrace::dihedral_quaternion();
    out.push(("example".into(), b.clone()));
    out.push(("example'".into(), b.opposite()));
    let c2 = SkewBrace::trivial(&group("C2"));
    out.push(("example x C2".into(), b.direct_product(&c2)));
    out.push(("almost_trivial(D4) x C2".into(), SkewBrace::almost_trivial(&group("D4")).direct_product(&c2)));
    out
}

/// Every brace whose circle table is one of the library groups of order
/// at most `max_order`.
pub fn enumerated_fixtures(max_order: usize) -> Vec<(String, SkewBrace)> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        for name in library_names(order) {
            let e = enumerate_braces(&group(name), None, 8).unwrap();
            for (i, b) in e.braces.into_iter().enumerate() {
                out.push((format!("circle {name} #{i}"), b));
            }
        }
    }
    out
}

/// Every multiplication table on `0..n` with identity 0 that is a group
/// and satisfies the brace relation against `circle`. Written against raw
/// tables so it shares no code with the library's enumeration.
pub fn brute_force_dot_tables(circle: &GroupTable) -> std::collections::BTreeSet<Vec<usize>> {
    let n = circle.order();
    assert_eq!(circle.identity(), 0);
    let circ: Vec<usize> = circle.rows().concat();
    let free = (n - 1) * (n - 1);
    let total = n.pow(free as u32);
    let mut out = std::collections::BTreeSet::new();
    let mut t = vec![0usize; n * n];
    for code in 0..total {
        let mut c = code;
        for x in 0..n {
            t[x] = x;
            t[x * n] = x;
        }
        for x in 1..n {
            for y in 1..n {
                t[x * n + y] = c % n;
                c /= n;
            }
        }
        if is_group(&t, n) && brace_relation(&t, &circ, n) {
            out.insert(t.clone());
        }
    }
    out
}

/// Latin square with identity 0 plus associativity.
pub fn is_group(t: &[usize], n: usize) -> bool {
    for x in 0..n {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for y in 0..n {
            if std::mem::replace(&mut row[t[x * n + y]], true) || std::mem::replace(&mut col[t[y * n + x]], true) {
                return false;
            }
        }
    }
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

pub fn brace_relation(dot: &[usize], circ: &[usize], n: usize) -> bool {
    let inv = |x: usize| (0..n).find(|&y| dot[x * n + y] == 0).unwrap();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| circ[x * n + dot[y * n + z]] == dot[dot[circ[x * n + y] * n + inv(x)] * n + circ[x * n + z]])
        })
    })
}

/// All permutations of `0..n` fixing 0.
pub fn identity_fixing_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..n).collect(), &mut out);
    out
}

/// Number of isomorphism classes among braces on a common index set with
/// identity 0, by trying every identity-fixing bijection.
pub fn brute_force_class_count(braces: &[SkewBrace]) -> usize {
    let Some(first) = braces.first() else { return 0 };
    let n = first.order();
    let perms = identity_fixing_perms(n);
    let iso = |b: &SkewBrace, c: &SkewBrace, f: &[usize]| {
        (0..n).all(|x| (0..n).all(|y| f[b.dot(x, y)] == c.dot(f[x], f[y]) && f[b.circle(x, y)] == c.circle(f[x], f[y])))
    };
    let mut reps: Vec<&SkewBrace> = Vec::new();
    for b in braces {
        if !reps.iter().any(|r| perms.iter().any(|f| iso(r, b, f))) {
            reps.push(b);
        }
    }
    reps.len()
}

/// Subgroups by scanning every subset that contains the identity.
pub fn subgroups_by_subset_scan(g: &GroupTable) -> Vec<bracekit::ElementSet> {
    let n = g.order();
    assert!(n <= 16);
    let e = g.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut member = vec![false; n];
        member[e] = true;
        for (k, &x) in others.iter().enumerate() {
            if mask >> k & 1 == 1 {
                member[x] = true;
            }
        }
        let elems: Vec<usize> = (0..n).filter(|&x| member[x]).collect();
        // finite and closed under the product is enough for a subgroup
        if elems.iter().all(|&x| elems.iter().all(|&y| member[g.mul(x, y)])) {
            out.push(bracekit::ElementSet::new(n, elems));
        }
    }
    out
}

/// Normality by conjugating every member.
pub fn is_normal_by_conjugation(g: &GroupTable, h: &bracekit::ElementSet) -> bool {
    (0..g.order()).all(|x| h.iter().all(|y| h.contains(g.mul(g.mul(x, y), g.inv(x)))))
}
