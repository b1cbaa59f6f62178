//! Exhaustive sweeps of the structural invariants over every fixture.

mod common;

use std::sync::OnceLock;

use bracekit::ideals::{census, classify_subgroup, is_circle_stable, is_quasi_ideal, quotient_brace};
use bracekit::perm::{left_mult, right_mult};
use bracekit::translation::{
    brace_from_regular_subgroup, enumerate_braces, group_like_elements, is_self_opposite, opposite_record, pair_census,
    q8_d4_subgroups, regular_subgroup_from_brace, SelfOpposite,
};
use bracekit::{find_isomorphism, inverse_solution, is_homomorphism, is_inverse_pair, ybe_from_brace, SkewBrace};
use common::{group, subgroups_by_subset_scan};

fn fixtures() -> &'static [(String, SkewBrace)] {
    static F: OnceLock<Vec<(String, SkewBrace)>> = OnceLock::new();
    F.get_or_init(|| {
        let mut all = common::named_fixtures();
        all.extend(common::enumerated_fixtures(8));
        all
    })
}

const GROUPS_UP_TO_16: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "C8",
    "C9",
    "C10",
    "C11",
    "C12",
    "C13",
    "C14",
    "C15",
    "C16",
    "C2xC2",
    "C4xC2",
    "C2xC2xC2",
    "C3xC3",
    "C2xC6",
    "C4xC4",
    "C2xC2xC2xC2",
    "C8xC2",
    "D3",
    "D4",
    "D5",
    "D6",
    "D7",
    "D8",
    "Q8",
    "D4xC2",
    "Q8xC2",
    "D3xC2",
];

#[test]
fn library_groups_are_associative_and_subgroups_match_subset_scan() {
    for name in GROUPS_UP_TO_16 {
        let g = group(name);
        let n = g.order();
        assert!(n <= 16, "{name}");
        assert!(common::is_group(&g.rows().concat(), n) || g.identity() != 0, "{name}");
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)), "{name}");
                }
            }
        }
        let mut fast = g.subgroups();
        let mut slow = subgroups_by_subset_scan(&g);
        fast.sort_by(|a, b| a.members().cmp(b.members()));
        slow.sort_by(|a, b| a.members().cmp(b.members()));
        assert_eq!(fast, slow, "{name}");
        for h in &fast {
            assert!(h.iter().all(|x| h.contains(g.inv(x))), "{name}");
        }
    }
}

#[test]
fn regular_representations_are_homomorphisms() {
    for name in GROUPS_UP_TO_16 {
        let g = group(name);
        for x in 0..g.order() {
            for y in 0..g.order() {
                let xy = g.mul(x, y);
                assert_eq!(left_mult(&g, x).compose(&left_mult(&g, y)), left_mult(&g, xy));
                assert_eq!(right_mult(&g, x).compose(&right_mult(&g, y)), right_mult(&g, xy));
            }
        }
    }
}

#[test]
fn brace_level_invariants() {
    for (name, b) in fixtures() {
        assert!(b.verify().is_ok(), "{name}");
        assert_eq!(b.dot_table().identity(), b.circle_table().identity(), "{name}");
        let o = b.opposite();
        assert_eq!(&o.opposite(), b, "{name}");
        for x in 0..b.order() {
            assert_eq!(o.dot_inv(x), b.dot_inv(x), "{name}");
            assert_eq!(o.circle_inv(x), b.circle_inv(x), "{name}");
        }
    }
}

#[test]
fn solutions_of_all_fixtures() {
    for (name, b) in fixtures() {
        let r = ybe_from_brace(b);
        assert!(r.verify_braid(), "{name}");
        assert!(r.is_nondegenerate(), "{name}");
        assert_eq!(r.is_involutive(), b.is_dot_abelian(), "{name}");
        let inv = inverse_solution(b);
        assert!(is_inverse_pair(&r, &inv).unwrap(), "{name}");
        if b.is_dot_abelian() {
            assert_eq!(inv, r, "{name}");
        }
    }
}

#[test]
fn trivial_and_almost_trivial_closed_forms() {
    for name in GROUPS_UP_TO_16 {
        let g = group(name);
        let t = ybe_from_brace(&SkewBrace::trivial(&g));
        let a = ybe_from_brace(&SkewBrace::almost_trivial(&g));
        for x in 0..g.order() {
            for y in 0..g.order() {
                let conj = g.mul(g.mul(g.inv(y), x), y);
                assert_eq!(t.apply(x, y), (y, conj), "{name}");
                let conj = g.mul(g.mul(g.inv(x), y), x);
                assert_eq!(a.apply(x, y), (conj, x), "{name}");
            }
        }
    }
}

#[test]
fn ideal_lattice_and_duality() {
    for (name, b) in fixtures() {
        let opp = b.opposite();
        let mine = census(b);
        let theirs = census(&opp);
        assert_eq!(mine.len(), theirs.len(), "{name}");
        for (r, s) in mine.iter().zip(&theirs) {
            assert_eq!(r.subject, s.subject, "{name}");
            let f = r.flags;
            assert!(f.is_subgroup_dot);
            assert_eq!(f.is_ideal, f.is_dot_qi && f.is_circle_qi, "{name}");
            assert!(!f.is_dot_qi || f.is_quasi_ideal, "{name}");
            assert!(!f.is_circle_qi || f.is_quasi_ideal, "{name}");
            assert_eq!(f.is_quasi_ideal, r.witness.is_none(), "{name}");
            // quasi-ideals of B are the circle-stable subgroups of B' and back
            assert_eq!(f.is_quasi_ideal, s.flags.is_circle_stable, "{name} {:?}", r.subject.members());
            assert_eq!(f.is_circle_stable, s.flags.is_quasi_ideal, "{name} {:?}", r.subject.members());
            if f.is_quasi_ideal {
                let i = &r.subject;
                for x in i.iter() {
                    assert!(i.contains(b.circle_inv(x)), "{name}");
                    for y in i.iter() {
                        assert!(i.contains(b.circle(x, y)), "{name}");
                    }
                }
            }
            if let Some((x, y)) = r.witness {
                assert!(!r.subject.contains(b.dot(b.dot_inv(x), b.circle(x, y))), "{name}");
            }
            if f.is_ideal {
                let q = quotient_brace(b, &r.subject).unwrap();
                assert!(q.quotient.verify().is_ok(), "{name}");
                assert!(is_homomorphism(b, &q.quotient, &q.projection), "{name}");
                let e = q.projection[b.identity()];
                let kernel: Vec<usize> = (0..b.order()).filter(|&x| q.projection[x] == e).collect();
                assert_eq!(kernel, r.subject.members(), "{name}");
            } else {
                assert!(quotient_brace(b, &r.subject).is_err(), "{name}");
            }
        }
    }
}

#[test]
fn group_likes_form_a_dot_subgroup() {
    for (name, b) in fixtures() {
        let gl = group_like_elements(b);
        assert!(b.dot_table().is_subgroup(&gl), "{name}: {:?}", gl.members());
    }
}

#[test]
fn translation_records() {
    for (name, b) in fixtures() {
        let rec = regular_subgroup_from_brace(b);
        let g = rec.group();
        // a is an isomorphism (N, o) -> G
        for x in 0..b.order() {
            for y in 0..b.order() {
                assert_eq!(rec.a[b.circle(x, y)], g.mul(rec.a[x], rec.a[y]), "{name}");
            }
        }
        let back = brace_from_regular_subgroup(&rec.subgroup).unwrap();
        assert_eq!(&back.brace, b, "{name}");
        let opp = opposite_record(&back).unwrap();
        assert_eq!(opp.brace, b.opposite(), "{name}");
        let cc = opp.subgroup.centralizer_regular().unwrap();
        assert!(cc.same_elements(&rec.subgroup), "{name}: double centralizer");
        // phi_eta phi_pi = phi_(pi eta)
        let n = &rec.subgroup;
        let c = &opp.subgroup;
        for i in 0..n.order() {
            for j in 0..n.order() {
                let k = n.index_of(&n.element(j).compose(n.element(i))).unwrap();
                assert_eq!(c.element(i).compose(c.element(j)), *c.element(k), "{name}");
            }
        }
    }
}

#[test]
fn isomorphisms_to_the_opposite_send_l_pairs_to_r_pairs() {
    let mut witnessed = 0;
    let mut cases: Vec<SkewBrace> = fixtures().iter().map(|(_, b)| b.clone()).collect();
    let ex = SkewBrace::dihedral_quaternion();
    cases.push(ex.direct_product(&ex.opposite()));
    let d3 = SkewBrace::trivial(&group("D3"));
    cases.push(d3.direct_product(&d3.opposite()));
    for b in &cases {
        let pairs = pair_census(b, true);
        let verdict = is_self_opposite(b);
        if pairs.l_count != pairs.r_count {
            assert!(matches!(verdict, SelfOpposite::No { .. }));
        }
        let map = match verdict {
            SelfOpposite::Equal => (0..b.order()).collect(),
            SelfOpposite::Isomorphic { map } => map,
            SelfOpposite::No { .. } => continue,
        };
        witnessed += 1;
        let r: std::collections::BTreeSet<_> = pairs.r_pairs.unwrap().into_iter().collect();
        for (x, y) in pairs.l_pairs.unwrap() {
            assert!(r.contains(&(map[x], map[y])));
        }
    }
    assert!(witnessed > 10);
}

#[test]
fn six_subgroups_of_perm_q8() {
    let six = q8_d4_subgroups();
    let recs: Vec<_> = six.iter().map(|s| brace_from_regular_subgroup(&s.subgroup).unwrap()).collect();
    // N_{x,rho} and N_{x,lambda} centralize each other
    for k in 0..3 {
        let (r, l) = (&six[k].subgroup, &six[k + 3].subgroup);
        for p in r.elements() {
            for q in l.elements() {
                assert_eq!(p.compose(q), q.compose(p), "{}", six[k].name);
            }
        }
        assert!(r.centralizer_regular().unwrap().same_elements(l));
        assert!(l.centralizer_regular().unwrap().same_elements(r));
    }
    // the rho row gives one isomorphism class, the lambda row its opposite
    for k in 1..3 {
        assert!(find_isomorphism(&recs[0].brace, &recs[k].brace).is_some());
        assert!(find_isomorphism(&recs[3].brace, &recs[3 + k].brace).is_some());
    }
    assert!(find_isomorphism(&recs[3].brace, &recs[0].brace.opposite()).is_some());
    assert!(find_isomorphism(&recs[0].brace, &recs[3].brace).is_none());
}

#[test]
fn q8_enumeration_contains_the_known_braces() {
    let q8 = group("Q8");
    let e = enumerate_braces(&q8, None, 8).unwrap();
    let reps: Vec<&SkewBrace> = e.class_representatives.iter().map(|&i| &e.braces[i]).collect();
    // relabel each known brace so its circle table is exactly the library Q8
    let on_q8 = |b: &SkewBrace| {
        let (src, dst) = (SkewBrace::trivial(b.circle_table()), SkewBrace::trivial(&q8));
        let moved = b.relabel(&find_isomorphism(&src, &dst).unwrap().map);
        assert_eq!(moved.circle_table(), &q8);
        moved
    };
    let ex = SkewBrace::dihedral_quaternion();
    let known =
        [on_q8(&SkewBrace::trivial(&q8)), on_q8(&SkewBrace::almost_trivial(&q8)), on_q8(&ex), on_q8(&ex.opposite())];
    for b in &known {
        assert!(e.braces.contains(b));
        assert_eq!(reps.iter().filter(|r| find_isomorphism(r, b).is_some()).count(), 1);
    }
    assert_eq!(e.iso_class_count(), common::brute_force_class_count(&e.braces));
}

#[test]
fn enumeration_matches_class_oracle_at_order_six() {
    for name in ["C6", "D3"] {
        let e = enumerate_braces(&group(name), None, 8).unwrap();
        for b in &e.braces {
            assert!(b.verify().is_ok());
            assert_eq!(b.circle_table(), &group(name));
        }
        assert_eq!(e.iso_class_count(), common::brute_force_class_count(&e.braces), "{name}");
    }
}

#[test]
fn quasi_ideal_checks_agree_with_classification() {
    for (name, b) in fixtures().iter().take(60) {
        for sub in b.dot_table().subgroups() {
            let r = classify_subgroup(b, &sub);
            assert_eq!(r.flags.is_quasi_ideal, is_quasi_ideal(b, &sub).unwrap(), "{name}");
            assert_eq!(r.flags.is_circle_stable, is_circle_stable(b, &sub).unwrap(), "{name}");
        }
    }
}
