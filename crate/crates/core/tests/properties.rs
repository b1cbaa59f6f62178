//! Randomised properties: relabellings, products, table fuzzing and
//! format round trips.

mod common;

use std::sync::OnceLock;

use bracekit::format::{brace_to_json, read_brace, read_ybe, write_brace_text, write_ybe_text, ybe_to_json};
use bracekit::ideals::classify_subgroup;
use bracekit::subgroup_expr::parse_generators;
use bracekit::translation::{group_like_elements, is_self_opposite, pair_census, SelfOpposite};
use bracekit::{
    find_isomorphism, is_homomorphism, is_inverse_pair, named_group_with_labels, ybe_from_brace, ElementSet,
    GroupTable, SkewBrace,
};
use proptest::prelude::*;

fn fixtures() -> &'static [(String, SkewBrace)] {
    static F: OnceLock<Vec<(String, SkewBrace)>> = OnceLock::new();
    F.get_or_init(|| {
        let mut all = common::named_fixtures();
        all.extend(common::enumerated_fixtures(8));
        all
    })
}

fn small_fixtures() -> &'static [(String, SkewBrace)] {
    static F: OnceLock<Vec<(String, SkewBrace)>> = OnceLock::new();
    F.get_or_init(|| fixtures().iter().filter(|(_, b)| b.order() <= 4).cloned().collect())
}

/// A fixture and a bijection of its elements that keeps the identity at 0.
fn fixture_and_relabel() -> impl Strategy<Value = (SkewBrace, Vec<usize>)> {
    (0..fixtures().len())
        .prop_flat_map(|i| {
            let b = fixtures()[i].1.clone();
            let rest: Vec<usize> = (1..b.order()).collect();
            (Just(b), Just(rest).prop_shuffle())
        })
        .prop_map(|(b, rest)| {
            let mut map = vec![0];
            map.extend(rest);
            (b, map)
        })
}

/// As above, plus an unrelated bijection of the same elements.
fn fixture_relabel_and_bijection() -> impl Strategy<Value = (SkewBrace, Vec<usize>, Vec<usize>)> {
    fixture_and_relabel().prop_flat_map(|(b, map)| {
        let all: Vec<usize> = (0..b.order()).collect();
        (Just(b), Just(map), Just(all).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_braces_are_isomorphic((b, map) in fixture_and_relabel()) {
        let c = b.relabel(&map);
        prop_assert!(c.verify().is_ok());
        // rebuilding through the checked constructor agrees
        let rebuilt = SkewBrace::from_tables(c.dot_table().clone(), c.circle_table().clone()).unwrap();
        prop_assert_eq!(&rebuilt, &c);
        prop_assert!(is_homomorphism(&b, &c, &map));
        let found = find_isomorphism(&b, &c).expect("relabelling is an isomorphism");
        prop_assert!(found.is_isomorphism());
        prop_assert!(found.inverse().unwrap().is_isomorphism());
    }

    #[test]
    fn isomorphisms_commute_with_opposites((b, map, other) in fixture_relabel_and_bijection()) {
        let c = b.relabel(&map);
        let (bo, co) = (b.opposite(), c.opposite());
        prop_assert!(is_homomorphism(&bo, &co, &map));
        // an arbitrary bijection is an isomorphism exactly when it is one between opposites
        prop_assert_eq!(is_homomorphism(&b, &c, &other), is_homomorphism(&bo, &co, &other));
    }

    #[test]
    fn solutions_are_equivariant((b, map) in fixture_and_relabel()) {
        let c = b.relabel(&map);
        let r = ybe_from_brace(&b);
        let s = ybe_from_brace(&c);
        let n = b.order();
        for x in 0..n {
            for y in 0..n {
                let (u, v) = r.apply(x, y);
                prop_assert_eq!(s.apply(map[x], map[y]), (map[u], map[v]));
            }
        }
        let gb = group_like_elements(&b);
        let gc = group_like_elements(&c);
        prop_assert_eq!(gc, ElementSet::new(n, gb.iter().map(|x| map[x])));
        let (pb, pc) = (pair_census(&b, false), pair_census(&c, false));
        prop_assert_eq!((pb.l_count, pb.r_count), (pc.l_count, pc.r_count));
    }

    #[test]
    fn products_of_braces(i in 0..small_fixtures().len(), j in 0..small_fixtures().len()) {
        let (a, b) = (&small_fixtures()[i].1, &small_fixtures()[j].1);
        let p = a.direct_product(b);
        prop_assert!(p.verify().is_ok());
        let r = ybe_from_brace(&p);
        prop_assert!(r.verify_braid());
        prop_assert!(r.is_nondegenerate());
        prop_assert_eq!(r.is_involutive(), p.is_dot_abelian());
        prop_assert!(is_inverse_pair(&r, &ybe_from_brace(&p.opposite())).unwrap());
        let pairs = pair_census(&p, false);
        match is_self_opposite(&p) {
            SelfOpposite::Equal => prop_assert!(p.is_dot_abelian()),
            SelfOpposite::Isomorphic { map } => {
                prop_assert_eq!(pairs.l_count, pairs.r_count);
                prop_assert!(is_homomorphism(&p, &p.opposite(), &map));
            }
            SelfOpposite::No { .. } => prop_assert!(find_isomorphism(&p, &p.opposite()).is_none()),
        }
    }

    #[test]
    fn arbitrary_subsets_classify_consistently(i in 0..fixtures().len(), mask in any::<u8>()) {
        let b = &fixtures()[i].1;
        let n = b.order();
        let s = ElementSet::new(n, (0..n).filter(|&x| x == 0 || mask >> (x % 8) & 1 == 1));
        let r = classify_subgroup(b, &s);
        let f = r.flags;
        prop_assert_eq!(f.is_subgroup_dot, b.dot_table().is_subgroup(&s));
        if !f.is_subgroup_dot {
            prop_assert!(!f.is_quasi_ideal && !f.is_ideal && !f.is_circle_stable && r.witness.is_none());
        }
        prop_assert_eq!(f.is_ideal, f.is_dot_qi && f.is_circle_qi);
        prop_assert!(!(f.is_dot_qi || f.is_circle_qi) || f.is_quasi_ideal);
    }

    #[test]
    fn random_tables_are_accepted_only_when_they_are_groups(
        n in 1usize..=4,
        entries in proptest::collection::vec(0usize..4, 16),
    ) {
        let mut t: Vec<usize> = entries[..n * n].iter().map(|&e| e % n).collect();
        // half the time force identity 0 so that accepted tables are not vanishingly rare
        if entries[0] % 2 == 0 {
            for x in 0..n {
                t[x] = x;
                t[x * n] = x;
            }
        }
        match GroupTable::from_flat(n, t.clone()) {
            Ok(g) => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                        }
                    }
                    prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
                }
            }
            Err(_) => prop_assert!(!(t[..n] == (0..n).collect::<Vec<_>>() && common::is_group(&t, n))),
        }
    }

    #[test]
    fn brace_files_round_trip((b, map) in fixture_and_relabel(), with_labels in any::<bool>()) {
        let c = b.relabel(&map);
        let labels: Vec<String> = (0..c.order()).map(|x| format!("e{x}")).collect();
        let labels = with_labels.then_some(labels.as_slice());
        let text = write_brace_text(&c, labels);
        let back = read_brace(&text).unwrap();
        prop_assert_eq!(&back.brace, &c);
        prop_assert_eq!(back.labels.as_deref(), labels);
        prop_assert_eq!(write_brace_text(&back.brace, back.labels.as_deref()), text);

        let json = serde_json::to_string(&brace_to_json(&c, labels)).unwrap();
        let back = read_brace(&json).unwrap();
        prop_assert_eq!(&back.brace, &c);
        prop_assert_eq!(serde_json::to_string(&brace_to_json(&back.brace, back.labels.as_deref())).unwrap(), json);

        let r = ybe_from_brace(&c);
        let text = write_ybe_text(&r);
        prop_assert_eq!(write_ybe_text(&read_ybe(&text).unwrap()), text.clone());
        let json = serde_json::to_string(&ybe_to_json(&r)).unwrap();
        let parsed = read_ybe(&json).unwrap();
        prop_assert_eq!(parsed.table(), r.table());
    }

    #[test]
    fn generator_expressions_compose_left_to_right(
        name in prop::sample::select(vec!["Q8", "D4", "C2xC2", "D3", "C6"]),
        words in proptest::collection::vec((any::<bool>(), 0usize..2, -3i64..4), 1..4),
    ) {
        let g = named_group_with_labels(name).unwrap();
        let gens = &g.generators;
        let mut expr = Vec::new();
        let mut want = bracekit::Permutation::identity(g.table.order());
        for (left, k, e) in &words {
            let (sym, elem) = &gens[k % gens.len()];
            let x = g.table.pow(*elem, *e);
            let kind = if *left { "lambda" } else { "rho" };
            expr.push(format!("{kind}({sym}^{e})"));
            let p = if *left { bracekit::perm::left_mult(&g.table, x) } else { bracekit::perm::right_mult(&g.table, x) };
            want = want.compose(&p);
        }
        let parsed = parse_generators(&g, &expr.join("*")).unwrap();
        prop_assert_eq!(parsed.len(), 1);
        prop_assert_eq!(&parsed[0], &want);
    }

    #[test]
    fn direct_products_of_groups_are_associative(
        a in prop::sample::select(vec!["C2", "C3", "D3", "Q8", "C4"]),
        b in prop::sample::select(vec!["C2", "C3", "C2xC2"]),
        triples in proptest::collection::vec((0usize..96, 0usize..96, 0usize..96), 50),
    ) {
        let g = common::group(a).direct_product(&common::group(b));
        let n = g.order();
        for (x, y, z) in triples {
            let (x, y, z) = (x % n, y % n, z % n);
            prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        }
    }
}
