use bracekit::group::library_names;
use bracekit::{find_isomorphism, named_group, ElementSet, GroupTable, SkewBrace};

/// Display names for brace elements; bare indices when none were given.
pub struct Labels(pub Vec<String>);

impl Labels {
    pub fn new(labels: Option<&[String]>, n: usize) -> Self {
        match labels {
            Some(l) => Labels(l.to_vec()),
            None => Labels((0..n).map(|i| i.to_string()).collect()),
        }
    }

    pub fn get(&self, x: usize) -> &str {
        &self.0[x]
    }

    pub fn set(&self, s: &ElementSet) -> String {
        let names: Vec<&str> = s.iter().map(|x| self.get(x)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn pair(&self, (x, y): (usize, usize)) -> String {
        format!("({}, {})", self.get(x), self.get(y))
    }
}

/// Library name of a group isomorphic to `g`, for orders the library covers.
pub fn identify_group(g: &GroupTable) -> Option<&'static str> {
    let b = SkewBrace::trivial(g);
    library_names(g.order()).iter().copied().find(|name| {
        let h = SkewBrace::trivial(&named_group(name).expect("library name"));
        find_isomorphism(&b, &h).is_some()
    })
}

/// e.g. `D4, non-abelian, 5 elements of order 2`.
pub fn describe_group(g: &GroupTable) -> String {
    let name = identify_group(g).unwrap_or("unidentified");
    let kind = if g.is_abelian() { "abelian" } else { "non-abelian" };
    let involutions = g.element_orders().iter().filter(|&&o| o == 2).count();
    let plural = if involutions == 1 { "" } else { "s" };
    format!("{name}, {kind}, {involutions} element{plural} of order 2")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces, trailing space trimmed.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
