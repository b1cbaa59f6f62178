//! Generators of a permutation subgroup written as words in the regular
//! representations of a named group.
//!
//! ```text
//! spec    := term ( ',' term )*
//! term    := factor ( '*' factor )*
//! factor  := ( 'rho' | 'lambda' ) '(' element ')' | 'id'
//! element := '1' | atom+
//! atom    := GEN ( '^' INT )?
//! ```
//!
//! `GEN` is a generator symbol of the named group (`g` for `Cn`, `eta` and
//! `pi` for `Dn`, `s` and `t` for `Q8`, suffixed with the factor number in
//! products, e.g. `g1`, `s2`). Symbols are matched longest first, so `st`
//! reads as `s` then `t`. `INT` may be negative. Whitespace is ignored.
//! Example: `rho(s),lambda(s)*rho(t)`.

use crate::error::{Error, Result};
use crate::group::NamedGroup;
use crate::perm::{left_mult, right_mult, Permutation};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    group: &'a NamedGroup,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, col: pos + 1, msg: msg.into() }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.pos, format!("expected `{c}`")))
        }
    }

    fn starts_with(&self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        self.chars.len() >= self.pos + w.len() && self.chars[self.pos..self.pos + w.len()] == w[..]
    }

    fn spec(&mut self) -> Result<Vec<Permutation>> {
        let mut gens = vec![self.term()?];
        while self.eat(',') {
            gens.push(self.term()?);
        }
        if self.peek().is_some() {
            return Err(err(self.pos, "unexpected character"));
        }
        Ok(gens)
    }

    fn term(&mut self) -> Result<Permutation> {
        let mut p = self.factor()?;
        while self.eat('*') {
            p = p.compose(&self.factor()?);
        }
        Ok(p)
    }

    fn factor(&mut self) -> Result<Permutation> {
        self.skip_ws();
        let g = &self.group.table;
        for (word, left) in [("lambda", true), ("rho", false)] {
            if self.starts_with(word) {
                self.pos += word.len();
                self.expect('(')?;
                let x = self.element()?;
                self.expect(')')?;
                return Ok(if left { left_mult(g, x) } else { right_mult(g, x) });
            }
        }
        if self.starts_with("id") {
            self.pos += 2;
            return Ok(Permutation::identity(g.order()));
        }
        Err(err(self.pos, "expected `rho(...)`, `lambda(...)` or `id`"))
    }

    fn element(&mut self) -> Result<usize> {
        let g = &self.group.table;
        if self.eat('1') {
            return Ok(g.identity());
        }
        let mut acc = g.identity();
        let mut any = false;
        loop {
            self.skip_ws();
            let Some((sym, x)) = self.generator() else { break };
            self.pos += sym.chars().count();
            let mut k = 1i64;
            if self.eat('^') {
                k = self.int()?;
            }
            acc = g.mul(acc, g.pow(x, k));
            any = true;
        }
        if !any {
            return Err(err(self.pos, "expected a generator symbol"));
        }
        Ok(acc)
    }

    fn generator(&self) -> Option<(String, usize)> {
        self.group.generators.iter().filter(|(sym, _)| self.starts_with(sym)).max_by_key(|(sym, _)| sym.len()).cloned()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| err(start, "expected an integer exponent"))
    }
}

/// Parses a comma-separated generator list into permutations of the
/// group's elements.
pub fn parse_generators(group: &NamedGroup, spec: &str) -> Result<Vec<Permutation>> {
    Parser { chars: spec.chars().collect(), pos: 0, group }.spec()
}
