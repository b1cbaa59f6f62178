use std::path::Path;

use bracekit::format::{brace_to_json, write_brace_text, write_ybe_text, ybe_to_json};
use bracekit::ideals::{census, summarize};
use bracekit::subgroup_expr::parse_generators;
use bracekit::translation::{
    brace_from_regular_subgroup, dihedral_labeled, enumerate_braces, group_like_elements, is_self_opposite,
    pair_census, regular_subgroup_from_brace, second_projection_fixed, NonIsoCertificate, SelfOpposite,
};
use bracekit::{
    find_isomorphism, is_inverse_pair, named_group, named_group_with_labels, ybe_from_brace, Error, NamedGroup,
    PermSubgroup, Permutation, SkewBrace,
};
use serde_json::json;

use crate::input::load_brace;
use crate::render::{describe_group, identify_group, table, yes_no, Labels};
use crate::{Cli, CliError, Command, ExampleName, Output};

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let max = cli.max_order;
    match &cli.command {
        Command::Verify { input } => verify(input.as_deref(), max),
        Command::Opposite { input } => opposite(input.as_deref(), max),
        Command::Ybe { input, check_inverse } => ybe(input.as_deref(), max, *check_inverse),
        Command::Ideals { input } => ideals(input.as_deref(), max),
        Command::Grouplikes { input } => grouplikes(input.as_deref(), max),
        Command::Pairs { input, list } => pairs(input.as_deref(), max, *list),
        Command::Selfopp { input } => selfopp(input.as_deref(), max),
        Command::Translate { input, group, subgroup } => match (group, subgroup) {
            (Some(g), Some(s)) => translate_subgroup(g, s, max),
            _ => translate_brace(input.as_deref(), max),
        },
        Command::Enumerate { circle, bound } => enumerate(circle, *bound),
        Command::Example { name, group } => example(*name, group.as_deref(), max),
    }
}

fn labelled_group(name: &str, max: usize) -> Result<NamedGroup, CliError> {
    let g = named_group_with_labels(name)?;
    let order = g.table.order();
    if order > max {
        return Err(Error::BoundExceeded { order, bound: max }.into());
    }
    Ok(g)
}

fn brace_output(b: &SkewBrace, labels: Option<&[String]>, diagnostics: Vec<String>) -> Output {
    let mut text: String = diagnostics.iter().map(|d| format!("# {d}\n")).collect();
    text.push_str(&write_brace_text(b, labels));
    Output { text, payload: brace_to_json(b, labels), diagnostics }
}

fn verify(input: Option<&Path>, max: usize) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let b = &file.brace;
    b.verify()?;
    let dot = describe_group(b.dot_table());
    let circle = describe_group(b.circle_table());
    let text = format!(
        "ok: brace of order {}\nbrace relation holds ({} triples)\ndot group: {dot}\ncircle group: {circle}\n",
        b.order(),
        b.triple_count()
    );
    let count_two = |g: &bracekit::GroupTable| g.element_orders().iter().filter(|&&o| o == 2).count();
    let payload = json!({
        "order": b.order(),
        "triples": b.triple_count(),
        "dot_group": identify_group(b.dot_table()),
        "circle_group": identify_group(b.circle_table()),
        "dot_abelian": b.dot_table().is_abelian(),
        "circle_abelian": b.circle_table().is_abelian(),
        "dot_order_two": count_two(b.dot_table()),
        "circle_order_two": count_two(b.circle_table()),
    });
    let diagnostics = vec![format!("brace relation holds ({} triples)", b.triple_count())];
    Ok(Output { text, payload, diagnostics })
}

fn opposite(input: Option<&Path>, max: usize) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    Ok(brace_output(&file.brace.opposite(), file.labels.as_deref(), Vec::new()))
}

fn ybe(input: Option<&Path>, max: usize, check_inverse: bool) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let b = &file.brace;
    let n = b.order();
    let r = ybe_from_brace(b);
    let mut diagnostics = vec![
        format!("braid relation holds ({} triples)", n * n * n),
        format!("non-degenerate: {}", yes_no(r.is_nondegenerate())),
        format!("involutive: {}", yes_no(r.is_involutive())),
    ];
    if check_inverse {
        let s = ybe_from_brace(&b.opposite());
        if !is_inverse_pair(&r, &s)? {
            return Err(CliError::Domain {
                message: "the opposite brace's solution is not the inverse".into(),
                witness: None,
            });
        }
        diagnostics.push(format!(
            "inverse check: both composites with the opposite's solution are the identity on {} pairs",
            n * n
        ));
    }
    let mut text: String = diagnostics.iter().map(|d| format!("# {d}\n")).collect();
    text.push_str(&write_ybe_text(&r));
    Ok(Output { text, payload: ybe_to_json(&r), diagnostics })
}

fn ideals(input: Option<&Path>, max: usize) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let b = &file.brace;
    let labels = Labels::new(file.labels.as_deref(), b.order());
    let reports = census(b);
    let summary = summarize(&reports);

    let mut rows =
        vec![["subgroup", "order", "quasi-ideal", "dot-QI", "circle-QI", "ideal", "circle-stable", "witness", "field"]
            .map(String::from)
            .to_vec()];
    let mut entries = Vec::new();
    for r in &reports {
        let f = &r.flags;
        let witness = r.witness.map(|p| labels.pair(p)).unwrap_or_else(|| "-".into());
        rows.push(vec![
            labels.set(&r.subject),
            r.subject.len().to_string(),
            yes_no(f.is_quasi_ideal).into(),
            yes_no(f.is_dot_qi).into(),
            yes_no(f.is_circle_qi).into(),
            yes_no(f.is_ideal).into(),
            yes_no(f.is_circle_stable).into(),
            witness,
            r.annotation().unwrap_or("-").into(),
        ]);
        entries.push(json!({
            "members": r.subject.members(),
            "labels": r.subject.iter().map(|x| labels.get(x)).collect::<Vec<_>>(),
            "flags": f,
            "witness": r.witness,
            "annotation": r.annotation(),
        }));
    }
    let mut text = table(&rows);
    text.push_str(&format!(
        "{} subgroups, {} quasi-ideals, {} ideals, {} circle-stable\n",
        summary.subgroups, summary.quasi_ideals, summary.ideals, summary.circle_stable
    ));
    Ok(Output { text, payload: json!({ "summary": summary, "subgroups": entries }), diagnostics: Vec::new() })
}

fn grouplikes(input: Option<&Path>, max: usize) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let labels = Labels::new(file.labels.as_deref(), file.brace.order());
    let g = group_like_elements(&file.brace);
    let p = second_projection_fixed(&file.brace);
    let plural = if g.len() == 1 { "" } else { "s" };
    let mut text = format!("{} group-like element{plural}: {}\n", g.len(), labels.set(&g));
    if p != g {
        text.push_str(&format!("note: {{y : pr2 R(x, y) = x for all x}} is {}\n", labels.set(&p)));
    }
    let payload = json!({
        "count": g.len(),
        "elements": g.members(),
        "labels": g.iter().map(|x| labels.get(x)).collect::<Vec<_>>(),
        "second_projection_fixed": p.members(),
    });
    Ok(Output { text, payload, diagnostics: Vec::new() })
}

fn pairs(input: Option<&Path>, max: usize, list: bool) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let labels = Labels::new(file.labels.as_deref(), file.brace.order());
    let c = pair_census(&file.brace, list);
    let mut text = format!("L={} R={}\n", c.l_count, c.r_count);
    for (name, ps) in [("L-pairs", &c.l_pairs), ("R-pairs", &c.r_pairs)] {
        if let Some(ps) = ps {
            text.push_str(&format!("{name}:\n"));
            for &p in ps {
                text.push_str(&format!("  {}\n", labels.pair(p)));
            }
        }
    }
    let payload = serde_json::to_value(&c).expect("serializable");
    Ok(Output { text, payload, diagnostics: Vec::new() })
}

fn selfopp(input: Option<&Path>, max: usize) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let labels = Labels::new(file.labels.as_deref(), file.brace.order());
    let verdict = is_self_opposite(&file.brace);
    let text = match &verdict {
        SelfOpposite::Equal => "self-opposite: equal to its opposite (abelian dot group)\n".to_string(),
        SelfOpposite::Isomorphic { map } => {
            let images: Vec<String> =
                map.iter().enumerate().map(|(x, &y)| format!("{} -> {}", labels.get(x), labels.get(y))).collect();
            format!("self-opposite: isomorphic to its opposite\nmap: {}\n", images.join(", "))
        }
        SelfOpposite::No { certificate } => match certificate {
            NonIsoCertificate::PairCounts { l_count, r_count } => {
                format!("not self-opposite: pair counts differ, L={l_count} R={r_count}\n")
            }
            NonIsoCertificate::OrderProfiles => "not self-opposite: element order profiles differ\n".into(),
            NonIsoCertificate::ExhaustedSearch => "not self-opposite: isomorphism search exhausted\n".into(),
        },
    };
    let payload = serde_json::to_value(&verdict).expect("serializable");
    Ok(Output { text, payload, diagnostics: Vec::new() })
}

/// `eta^i pi^j` labels when the two generators present a dihedral group.
fn dihedral_relabel(g: &NamedGroup, gens: &[Permutation]) -> Option<(PermSubgroup, Vec<String>)> {
    let [eta, pi] = gens else { return None };
    let n = g.table.order();
    let mut m = 1;
    let mut p = eta.clone();
    while !p.is_identity() {
        p = p.compose(eta);
        m += 1;
    }
    let inv = eta.inverse();
    if m < 3 || 2 * m != n || !pi.compose(pi).is_identity() || pi.compose(eta).compose(pi) != inv {
        return None;
    }
    let sub = dihedral_labeled(&g.table, eta, pi).ok()?;
    let labels = named_group_with_labels(&format!("D{m}")).ok()?.labels;
    Some((sub, labels))
}

/// `a`, `b^2*a`, ... from breadth-first generator words.
fn word_labels(words: &[Vec<usize>]) -> Vec<String> {
    let name = |k: usize| {
        if k < 26 {
            char::from(b'a' + k as u8).to_string()
        } else {
            format!("g{k}")
        }
    };
    words
        .iter()
        .map(|w| {
            if w.is_empty() {
                return "1".to_string();
            }
            let mut parts: Vec<(usize, usize)> = Vec::new();
            for &k in w {
                match parts.last_mut() {
                    Some((last, count)) if *last == k => *count += 1,
                    _ => parts.push((k, 1)),
                }
            }
            let pieces: Vec<String> =
                parts.into_iter().map(|(k, c)| if c == 1 { name(k) } else { format!("{}^{c}", name(k)) }).collect();
            pieces.join("*")
        })
        .collect()
}

fn translate_subgroup(group: &str, spec: &str, max: usize) -> Result<Output, CliError> {
    let g = labelled_group(group, max)?;
    let gens = parse_generators(&g, spec)?;
    let (sub, labels) = match dihedral_relabel(&g, &gens) {
        Some(found) => found,
        None => {
            let (sub, words) = PermSubgroup::generated_with_words(&g.table, &gens)?;
            (sub, word_labels(&words))
        }
    };
    let rec = brace_from_regular_subgroup(&sub)?;
    let diagnostics = vec![format!("regular G-stable subgroup of Perm({group}) of order {}", sub.order())];
    Ok(brace_output(&rec.brace, Some(&labels), diagnostics))
}

fn translate_brace(input: Option<&Path>, max: usize) -> Result<Output, CliError> {
    let file = load_brace(input, max)?;
    let labels = Labels::new(file.labels.as_deref(), file.brace.order());
    let rec = regular_subgroup_from_brace(&file.brace);
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (x, p) in rec.subgroup.elements().iter().enumerate() {
        rows.push(vec![format!("eta_{}", labels.get(x)), p.to_string()]);
        entries.push(json!({ "label": labels.get(x), "image": p.image() }));
    }
    let mut text =
        format!("regular G-stable subgroup of Perm(B, o) of order {}, eta_x(y) = x y\n", rec.subgroup.order());
    text.push_str(&table(&rows));
    Ok(Output { text, payload: json!({ "order": rec.subgroup.order(), "elements": entries }), diagnostics: Vec::new() })
}

fn enumerate(circle: &str, bound: usize) -> Result<Output, CliError> {
    let g = named_group(circle)?;
    let e = enumerate_braces(&g, None, bound)?;
    let reps = &e.class_representatives;
    let mut sizes = vec![0usize; reps.len()];
    for b in &e.braces {
        let class = reps.iter().position(|&r| find_isomorphism(&e.braces[r], b).is_some());
        sizes[class.expect("every brace is in some class")] += 1;
    }
    let mut rows = vec![["class", "braces", "dot group", "dot abelian", "self-opposite"].map(String::from).to_vec()];
    let mut classes = Vec::new();
    for (k, (&r, &size)) in reps.iter().zip(&sizes).enumerate() {
        let b = &e.braces[r];
        let dot = identify_group(b.dot_table()).unwrap_or("unidentified");
        let selfopp = !matches!(is_self_opposite(b), SelfOpposite::No { .. });
        rows.push(vec![
            (k + 1).to_string(),
            size.to_string(),
            dot.into(),
            yes_no(b.is_dot_abelian()).into(),
            yes_no(selfopp).into(),
        ]);
        classes.push(json!({
            "size": size,
            "dot_group": dot,
            "self_opposite": selfopp,
            "brace": brace_to_json(b, None),
        }));
    }
    let mut text =
        format!("circle group {circle}: {} braces in {} isomorphism classes\n", e.braces.len(), e.iso_class_count());
    text.push_str(&table(&rows));
    let payload = json!({
        "circle": circle,
        "braces": e.braces.len(),
        "classes": classes,
    });
    Ok(Output { text, payload, diagnostics: Vec::new() })
}

fn example(name: ExampleName, group: Option<&str>, max: usize) -> Result<Output, CliError> {
    let (b, labels) = match name {
        ExampleName::PaperD4q8 => {
            if group.is_some_and(|g| g != "D4") {
                return Err(CliError::Usage("paper-d4q8 is defined on D4 only".into()));
            }
            (SkewBrace::dihedral_quaternion(), labelled_group("D4", max)?.labels)
        }
        ExampleName::Trivial | ExampleName::AlmostTrivial => {
            let group = group.ok_or_else(|| CliError::Usage("--group is required for this example".into()))?;
            let g = labelled_group(group, max)?;
            let b = if name == ExampleName::Trivial {
                SkewBrace::trivial(&g.table)
            } else {
                SkewBrace::almost_trivial(&g.table)
            };
            (b, g.labels)
        }
    };
    Ok(brace_output(&b, Some(&labels), Vec::new()))
}
