//! Text and JSON encodings of groups, braces and Yang-Baxter solutions.
//!
//! Text formats (indices are 0-based, index 0 is the identity, `#` starts
//! a comment, blank lines are ignored):
//!
//! ```text
//! group <n>
//! <n rows of n indices; row i, column j holds i*j>
//!
//! brace <n>
//! labels: <n whitespace-free names>      (optional)
//! dot:
//! <n rows>
//! circle:
//! <n rows>
//!
//! ybe <n>
//! <n^2 lines `x y -> u v`, in row-major order of (x, y)>
//! ```
//!
//! The JSON forms carry the same fields: `{"group": n, "table": [...]}`,
//! `{"brace": n, "labels": [...], "dot": [...], "circle": [...]}` and
//! `{"ybe": n, "pairs": [{"x", "y", "u", "v"}, ...]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ybe::YbeSolution;

/// A brace together with optional display labels for its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceFile {
    pub brace: SkewBrace,
    pub labels: Option<Vec<String>>,
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

struct Line<'a> {
    no: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn tokenize(src: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push((body[..s].chars().count() + 1, &body[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line { no: i + 1, tokens });
        }
    }
    out
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let last_line = src.lines().count().max(1);
        Cursor { lines: tokenize(src), pos: 0, last_line }
    }

    fn next(&mut self, what: &str) -> Result<&Line<'a>> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| parse_err(self.last_line + 1, 1, format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(line)
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(l) => Err(parse_err(l.no, l.tokens[0].0, "unexpected trailing content")),
        }
    }

    fn header(&mut self, keyword: &str) -> Result<(usize, usize)> {
        let line = self.next(&format!("`{keyword} <n>`"))?;
        match line.tokens.as_slice() {
            [(_, k), (col, n)] if *k == keyword => {
                let n = n.parse::<usize>().map_err(|_| parse_err(line.no, *col, format!("invalid order `{n}`")))?;
                if n == 0 {
                    return Err(parse_err(line.no, *col, "order must be positive"));
                }
                Ok((line.no, n))
            }
            _ => Err(parse_err(line.no, line.tokens[0].0, format!("expected `{keyword} <n>`"))),
        }
    }

    fn keyword_line(&mut self, keyword: &str) -> Result<()> {
        let line = self.next(&format!("`{keyword}`"))?;
        match line.tokens.as_slice() {
            [(_, k)] if *k == keyword => Ok(()),
            _ => Err(parse_err(line.no, line.tokens[0].0, format!("expected `{keyword}`"))),
        }
    }

    /// Reads `n` rows of `n` indices and validates the group.
    fn table(&mut self, n: usize) -> Result<GroupTable> {
        let mut line_nos = Vec::with_capacity(n);
        let mut flat = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = self.next("table row")?;
            if line.tokens.len() != n {
                let col = line.tokens.get(n).map_or(line.tokens.last().map_or(1, |t| t.0), |t| t.0);
                return Err(parse_err(line.no, col, format!("expected {n} entries, found {}", line.tokens.len())));
            }
            for &(col, tok) in &line.tokens {
                let v: usize = tok.parse().map_err(|_| parse_err(line.no, col, format!("invalid index `{tok}`")))?;
                if v >= n {
                    return Err(parse_err(line.no, col, format!("index {v} out of range for order {n}")));
                }
                flat.push(v);
            }
            line_nos.push((line.no, line.tokens.iter().map(|t| t.0).collect::<Vec<_>>()));
        }
        let at = |row: usize, col: usize| -> (usize, usize) { (line_nos[row].0, line_nos[row].1[col]) };
        let g = GroupTable::from_flat(n, flat).map_err(|e| {
            let (l, c) = match &e {
                Error::NoInverse { element } => at(*element, 0),
                Error::NotAssociative { x, y, .. } => at(*x, *y),
                _ => at(0, 0),
            };
            parse_err(l, c, e.to_string())
        })?;
        if g.identity() != 0 {
            let (l, c) = at(0, 0);
            return Err(parse_err(l, c, format!("index 0 must be the identity (found {})", g.identity())));
        }
        Ok(g)
    }
}

fn write_rows(out: &mut String, g: &GroupTable) {
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn write_group_text(g: &GroupTable) -> String {
    let mut out = format!("group {}\n", g.order());
    write_rows(&mut out, g);
    out
}

pub fn read_group_text(src: &str) -> Result<GroupTable> {
    let mut cur = Cursor::new(src);
    let (_, n) = cur.header("group")?;
    let g = cur.table(n)?;
    cur.finish()?;
    Ok(g)
}

pub fn write_brace_text(b: &SkewBrace, labels: Option<&[String]>) -> String {
    let mut out = format!("brace {}\n", b.order());
    if let Some(labels) = labels {
        let _ = writeln!(out, "labels: {}", labels.join(" "));
    }
    out.push_str("dot:\n");
    write_rows(&mut out, b.dot_table());
    out.push_str("circle:\n");
    write_rows(&mut out, b.circle_table());
    out
}

pub fn read_brace_text(src: &str) -> Result<BraceFile> {
    let mut cur = Cursor::new(src);
    let (header_line, n) = cur.header("brace")?;
    let mut labels = None;
    if let Some(line) = cur.peek() {
        if line.tokens[0].1 == "labels:" {
            let line = cur.next("labels")?;
            let names: Vec<String> = line.tokens[1..].iter().map(|t| t.1.to_string()).collect();
            if names.len() != n {
                return Err(parse_err(
                    line.no,
                    line.tokens[0].0,
                    format!("expected {n} labels, found {}", names.len()),
                ));
            }
            labels = Some(names);
        }
    }
    cur.keyword_line("dot:")?;
    let dot = cur.table(n)?;
    cur.keyword_line("circle:")?;
    let circle = cur.table(n)?;
    cur.finish()?;
    let brace = SkewBrace::from_tables(dot, circle).map_err(|e| parse_err(header_line, 1, e.to_string()))?;
    Ok(BraceFile { brace, labels })
}

pub fn write_ybe_text(r: &YbeSolution) -> String {
    let n = r.order();
    let mut out = format!("ybe {n}\n");
    for (p, &(u, v)) in r.table().iter().enumerate() {
        let _ = writeln!(out, "{} {} -> {u} {v}", p / n, p % n);
    }
    out
}

pub fn read_ybe_text(src: &str) -> Result<YbeSolution> {
    let mut cur = Cursor::new(src);
    let (_, n) = cur.header("ybe")?;
    let mut table = Vec::with_capacity(n * n);
    for p in 0..n * n {
        let line = cur.next("pair line")?;
        let t = &line.tokens;
        if t.len() != 5 || t[2].1 != "->" {
            return Err(parse_err(line.no, t[0].0, "expected `x y -> u v`"));
        }
        let mut vals = [0usize; 4];
        for (slot, &(col, tok)) in vals.iter_mut().zip([t[0], t[1], t[3], t[4]].iter()) {
            *slot = tok.parse().map_err(|_| parse_err(line.no, col, format!("invalid index `{tok}`")))?;
            if *slot >= n {
                return Err(parse_err(line.no, col, format!("index {slot} out of range for order {n}")));
            }
        }
        if (vals[0], vals[1]) != (p / n, p % n) {
            return Err(parse_err(line.no, t[0].0, format!("expected pair ({}, {})", p / n, p % n)));
        }
        table.push((vals[2], vals[3]));
    }
    cur.finish()?;
    YbeSolution::from_table(n, table)
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    group: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct BraceJson {
    brace: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
    dot: Vec<Vec<usize>>,
    circle: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    x: usize,
    y: usize,
    u: usize,
    v: usize,
}

#[derive(Serialize, Deserialize)]
struct YbeJson {
    ybe: usize,
    pairs: Vec<PairJson>,
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line(), e.column(), e.to_string())
}

fn json_table(n: usize, rows: &[Vec<usize>], what: &str) -> Result<GroupTable> {
    if rows.len() != n {
        return Err(parse_err(1, 1, format!("{what}: expected {n} rows, found {}", rows.len())));
    }
    let g = GroupTable::from_rows(rows).map_err(|e| parse_err(1, 1, format!("{what}: {e}")))?;
    if g.identity() != 0 {
        return Err(parse_err(1, 1, format!("{what}: index 0 must be the identity")));
    }
    Ok(g)
}

pub fn group_to_json(g: &GroupTable) -> serde_json::Value {
    serde_json::to_value(GroupJson { group: g.order(), table: g.rows() }).expect("serializable")
}

pub fn group_from_json(v: serde_json::Value) -> Result<GroupTable> {
    let j: GroupJson = serde_json::from_value(v).map_err(json_err)?;
    json_table(j.group, &j.table, "table")
}

pub fn brace_to_json(b: &SkewBrace, labels: Option<&[String]>) -> serde_json::Value {
    serde_json::to_value(BraceJson {
        brace: b.order(),
        labels: labels.map(<[String]>::to_vec),
        dot: b.dot_table().rows(),
        circle: b.circle_table().rows(),
    })
    .expect("serializable")
}

pub fn brace_from_json(v: serde_json::Value) -> Result<BraceFile> {
    let j: BraceJson = serde_json::from_value(v).map_err(json_err)?;
    if let Some(l) = &j.labels {
        if l.len() != j.brace {
            return Err(parse_err(1, 1, format!("expected {} labels, found {}", j.brace, l.len())));
        }
    }
    let dot = json_table(j.brace, &j.dot, "dot")?;
    let circle = json_table(j.brace, &j.circle, "circle")?;
    let brace = SkewBrace::from_tables(dot, circle).map_err(|e| parse_err(1, 1, e.to_string()))?;
    Ok(BraceFile { brace, labels: j.labels })
}

pub fn ybe_to_json(r: &YbeSolution) -> serde_json::Value {
    let n = r.order();
    let pairs = r.table().iter().enumerate().map(|(p, &(u, v))| PairJson { x: p / n, y: p % n, u, v }).collect();
    serde_json::to_value(YbeJson { ybe: n, pairs }).expect("serializable")
}

pub fn ybe_from_json(v: serde_json::Value) -> Result<YbeSolution> {
    let j: YbeJson = serde_json::from_value(v).map_err(json_err)?;
    let n = j.ybe;
    if j.pairs.len() != n * n {
        return Err(parse_err(1, 1, format!("expected {} pairs, found {}", n * n, j.pairs.len())));
    }
    for (p, pair) in j.pairs.iter().enumerate() {
        if (pair.x, pair.y) != (p / n, p % n) {
            return Err(parse_err(1, 1, format!("pair {p} should be ({}, {})", p / n, p % n)));
        }
    }
    YbeSolution::from_table(n, j.pairs.iter().map(|p| (p.u, p.v)).collect())
}

/// Parses JSON text, keeping serde's line and column on failure.
pub fn parse_json(src: &str) -> Result<serde_json::Value> {
    serde_json::from_str(src).map_err(json_err)
}

fn looks_like_json(src: &str) -> bool {
    src.trim_start().starts_with('{')
}

/// Reads a brace in either encoding.
pub fn read_brace(src: &str) -> Result<BraceFile> {
    if looks_like_json(src) {
        brace_from_json(parse_json(src)?)
    } else {
        read_brace_text(src)
    }
}

pub fn read_group(src: &str) -> Result<GroupTable> {
    if looks_like_json(src) {
        group_from_json(parse_json(src)?)
    } else {
        read_group_text(src)
    }
}

pub fn read_ybe(src: &str) -> Result<YbeSolution> {
    if looks_like_json(src) {
        ybe_from_json(parse_json(src)?)
    } else {
        read_ybe_text(src)
    }
}
