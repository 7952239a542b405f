//! Plain-text presentation format.
//!
//! ```text
//! # comment
//! name affine-sl2
//! params k
//! kind structure-constant
//! gen e even 1
//! gen h even 1
//! gen f even 1
//! ope h h { 2: 2*k }
//! ope e f {
//!   2: k
//!   1: h
//! }
//! ```
//!
//! Pole lines are `n: <field-expression>`, separated by newlines or `;`. In a
//! field expression `:a b c:` is the right-nested Wick product, `D^k x` the
//! k-th derivative, `[ ... ]` groups fields, and coefficients are exact
//! fractions, parameters, or parenthesized rational expressions. Pairs
//! without an entry have regular OPE; the reversed order of a listed pair is
//! derived by skew-symmetry.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use va_exact::{parse_rational, Scalar};

use crate::algebra::{Algebra, GenSpec, Kind, OpeEntries};
use crate::engine::Engine;
use crate::error::{Result, VaError};
use crate::field::{fmt_coeff, Field, FieldExpr};
use crate::ops::canonical;

fn perr(line: usize, msg: impl Into<String>) -> VaError {
    VaError::Parse { line, msg: msg.into() }
}

fn strip_comment(l: &str) -> &str {
    match l.find('#') {
        Some(i) => &l[..i],
        None => l,
    }
}

pub fn parse_presentation(src: &str) -> Result<Algebra> {
    let mut name = String::from("unnamed");
    let mut params: Vec<String> = Vec::new();
    let mut kind = None;
    let mut gens: Vec<GenSpec> = Vec::new();
    let mut raw: Vec<(usize, String, String, String)> = Vec::new();
    let lines: Vec<&str> = src.lines().collect();
    let mut i = 0;
    while i < lines.len() {
        let lineno = i + 1;
        let line = strip_comment(lines[i]).trim();
        i += 1;
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match head {
            "name" => name = rest.to_string(),
            "params" => params = rest.split_whitespace().map(str::to_string).collect(),
            "kind" => {
                kind = Some(match rest {
                    "free-field" => Kind::FreeField,
                    "structure-constant" => Kind::StructureConstant,
                    _ => return Err(perr(lineno, format!("unknown kind `{rest}`"))),
                })
            }
            "gen" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(perr(lineno, "expected `gen <name> <even|odd> <weight>`"));
                }
                if !is_ident(parts[0]) || parts[0] == "D" {
                    return Err(perr(lineno, format!("bad generator name `{}`", parts[0])));
                }
                let odd = match parts[1] {
                    "even" => false,
                    "odd" => true,
                    p => return Err(perr(lineno, format!("parity must be even or odd, got `{p}`"))),
                };
                let weight = parse_rational(parts[2]).map_err(|e| perr(lineno, e.to_string()))?;
                gens.push(GenSpec { name: parts[0].to_string(), odd, weight });
            }
            "ope" => {
                let Some(open) = rest.find('{') else { return Err(perr(lineno, "expected `{`")) };
                let pair: Vec<&str> = rest[..open].split_whitespace().collect();
                if pair.len() != 2 {
                    return Err(perr(lineno, "expected `ope <a> <b> { ... }`"));
                }
                let mut body = rest[open + 1..].to_string();
                while !body.contains('}') {
                    if i >= lines.len() {
                        return Err(perr(lineno, "unterminated `{`"));
                    }
                    body.push('\n');
                    body.push_str(strip_comment(lines[i]));
                    i += 1;
                }
                let close = body.find('}').unwrap();
                if !body[close + 1..].trim().is_empty() {
                    return Err(perr(lineno, "trailing text after `}`"));
                }
                body.truncate(close);
                raw.push((lineno, pair[0].to_string(), pair[1].to_string(), body));
            }
            _ => return Err(perr(lineno, format!("unknown directive `{head}`"))),
        }
    }
    let kind = kind.unwrap_or(Kind::StructureConstant);
    let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
    let mut entries = OpeEntries::new();
    for (lineno, a, b, body) in raw {
        let ia = names.iter().position(|n| *n == a).ok_or(VaError::UnknownGenerator(a.clone()))?;
        let ib = names.iter().position(|n| *n == b).ok_or(VaError::UnknownGenerator(b.clone()))?;
        let mut poles = BTreeMap::new();
        for item in body.split(['\n', ';']) {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let Some((n, e)) = item.split_once(':') else {
                return Err(perr(lineno, format!("expected `<pole>: <expr>`, got `{item}`")));
            };
            let n: u32 = n.trim().parse().map_err(|_| perr(lineno, format!("bad pole order `{}`", n.trim())))?;
            let f = parse_field(e, &names, &params).map_err(|e| match e {
                VaError::Parse { msg, .. } => perr(lineno, msg),
                other => other,
            })?;
            if poles.insert(n, f).is_some() {
                return Err(perr(lineno, format!("pole {n} given twice")));
            }
        }
        if entries.insert((ia, ib), poles).is_some() {
            return Err(perr(lineno, format!("OPE {a} {b} given twice")));
        }
    }
    Algebra::new(&name, params, gens, kind, entries)
}

/// Serialize a presentation in the same format.
pub fn write_presentation(alg: &Algebra) -> String {
    let mut s = String::new();
    writeln!(s, "name {}", alg.name()).unwrap();
    if !alg.params().is_empty() {
        writeln!(s, "params {}", alg.params().join(" ")).unwrap();
    }
    writeln!(s, "kind {}", alg.kind().as_str()).unwrap();
    for g in alg.gens() {
        writeln!(s, "gen {} {} {}", g.name, if g.odd { "odd" } else { "even" }, va_exact::fmt_rational(&g.weight)).unwrap();
    }
    for ((a, b), poles) in alg.entries() {
        writeln!(s, "ope {} {} {{", alg.names()[*a], alg.names()[*b]).unwrap();
        for (n, f) in poles.iter().rev() {
            writeln!(s, "  {n}: {}", fmt_field(f, alg.names())).unwrap();
        }
        writeln!(s, "}}").unwrap();
    }
    s
}

/// Render a field tree in parseable syntax.
pub fn fmt_field(f: &Field, names: &[String]) -> String {
    match f {
        Field::Identity => "1".into(),
        Field::Gen(g) => names[*g].clone(),
        Field::Deriv(k, x) => {
            let inner = match **x {
                Field::Gen(_) | Field::Wick(..) => fmt_field(x, names),
                _ => format!("[{}]", fmt_field(x, names)),
            };
            if *k == 1 {
                format!("D {inner}")
            } else {
                format!("D^{k} {inner}")
            }
        }
        Field::Wick(a, b) => {
            let mut parts = vec![wick_factor(a, names)];
            let mut cur = &**b;
            while let Field::Wick(x, y) = cur {
                parts.push(wick_factor(x, names));
                cur = y;
            }
            parts.push(wick_factor(cur, names));
            format!(":{}:", parts.join(" "))
        }
        Field::Sum(t) => {
            let live: Vec<_> = t.iter().filter(|(c, _)| !c.is_zero()).collect();
            if live.is_empty() {
                return "0".into();
            }
            let mut out = String::new();
            for (i, (c, x)) in live.iter().enumerate() {
                let mut cs = fmt_coeff(c);
                let neg = cs.starts_with('-');
                if neg {
                    cs.remove(0);
                }
                if i == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                let body = match x {
                    Field::Identity => String::new(),
                    Field::Sum(_) => format!("[{}]", fmt_field(x, names)),
                    _ => fmt_field(x, names),
                };
                if body.is_empty() {
                    out.push_str(&cs);
                } else if cs == "1" {
                    out.push_str(&body);
                } else {
                    out.push_str(&format!("{cs} {body}"));
                }
            }
            out
        }
    }
}

fn wick_factor(f: &Field, names: &[String]) -> String {
    match f {
        Field::Gen(_) | Field::Deriv(..) | Field::Identity => fmt_field(f, names),
        _ => format!("[{}]", fmt_field(f, names)),
    }
}

fn is_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Parse a field expression into a syntax tree.
pub fn parse_field(src: &str, names: &[String], params: &[String]) -> Result<Field> {
    let mut p = FieldParser { s: src.as_bytes(), i: 0, names, params };
    let f = p.expr()?;
    p.ws();
    if p.i < p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

/// Parse and canonicalize a field expression in `alg`.
pub fn parse_field_expr(alg: &Algebra, src: &str) -> Result<FieldExpr> {
    let f = parse_field(src, alg.names(), alg.params())?;
    canonical(&Engine::new(alg), &f)
}

struct FieldParser<'a> {
    s: &'a [u8],
    i: usize,
    names: &'a [String],
    params: &'a [String],
}

enum Factor {
    Scalar(Scalar),
    Field(Field),
}

impl FieldParser<'_> {
    fn err(&self, msg: &str) -> VaError {
        VaError::Parse { line: 0, msg: format!("{msg} at column {} in `{}`", self.i + 1, String::from_utf8_lossy(self.s)) }
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Field> {
        let mut terms = Vec::new();
        let mut sign = Scalar::one();
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                sign = -Scalar::one();
            }
            Some(b'+') => self.i += 1,
            _ => {}
        }
        loop {
            let (c, f) = self.term()?;
            terms.push((&sign * &c, f));
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    sign = Scalar::one();
                }
                Some(b'-') => {
                    self.i += 1;
                    sign = -Scalar::one();
                }
                _ => break,
            }
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Field::Sum(terms))
    }

    fn term(&mut self) -> Result<(Scalar, Field)> {
        let mut coef = Scalar::one();
        let mut field: Option<Field> = None;
        let mut any = false;
        loop {
            match self.peek() {
                None | Some(b'+') | Some(b'-') | Some(b']') | Some(b')') => break,
                _ => {}
            }
            if any && self.peek() == Some(b'*') {
                self.i += 1;
            }
            if any && self.peek() == Some(b'/') {
                self.i += 1;
                match self.factor()? {
                    Factor::Scalar(d) => coef = coef.try_div(&d)?,
                    Factor::Field(_) => return Err(self.err("cannot divide by a field")),
                }
                continue;
            }
            match self.factor()? {
                Factor::Scalar(c) => coef = &coef * &c,
                Factor::Field(f) => {
                    if field.is_some() {
                        return Err(self.err("two fields in one term; use :a b: for products"));
                    }
                    field = Some(f);
                }
            }
            any = true;
        }
        if !any {
            return Err(self.err("expected a term"));
        }
        Ok((coef, field.unwrap_or(Field::Identity)))
    }

    fn factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let txt = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                Ok(Factor::Scalar(Scalar::parse(txt)?))
            }
            Some(b'(') => {
                let start = self.i + 1;
                let mut depth = 0;
                while self.i < self.s.len() {
                    match self.s[self.i] {
                        b'(' => depth += 1,
                        b')' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    self.i += 1;
                }
                if self.i >= self.s.len() {
                    return Err(self.err("unbalanced parenthesis"));
                }
                let txt = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                self.i += 1;
                let c = Scalar::parse(txt).map_err(|e| self.err(&e.to_string()))?;
                if let Some(p) = c.params().into_iter().find(|p| !self.params.contains(p)) {
                    return Err(VaError::UnknownParameter(p));
                }
                let c = self.maybe_pow(c)?;
                Ok(Factor::Scalar(c))
            }
            Some(b'[') => {
                self.i += 1;
                let f = self.expr()?;
                if self.peek() != Some(b']') {
                    return Err(self.err("expected `]`"));
                }
                self.i += 1;
                Ok(Factor::Field(f))
            }
            Some(b':') => {
                self.i += 1;
                let mut parts = Vec::new();
                loop {
                    match self.peek() {
                        Some(b':') => {
                            self.i += 1;
                            break;
                        }
                        None => return Err(self.err("unterminated Wick product")),
                        _ => parts.push(self.atom()?),
                    }
                }
                if parts.is_empty() {
                    return Err(self.err("empty Wick product"));
                }
                let mut f = parts.pop().unwrap();
                while let Some(x) = parts.pop() {
                    f = Field::wick(x, f);
                }
                Ok(Factor::Field(f))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let id = self.ident();
                if id == "D" {
                    let k = self.deriv_order()?;
                    let f = self.atom()?;
                    return Ok(Factor::Field(Field::deriv(k, f)));
                }
                if let Some(g) = self.names.iter().position(|n| *n == id) {
                    return Ok(Factor::Field(Field::Gen(g)));
                }
                if self.params.contains(&id) {
                    let c = self.maybe_pow(Scalar::param(&id))?;
                    return Ok(Factor::Scalar(c));
                }
                Err(VaError::UnknownGenerator(id))
            }
            _ => Err(self.err("unexpected character")),
        }
    }

    fn maybe_pow(&mut self, c: Scalar) -> Result<Scalar> {
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.int()?;
            return Ok(c.pow(e as i32)?);
        }
        Ok(c)
    }

    fn deriv_order(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.i += 1;
            return Ok(self.int()? as u32);
        }
        Ok(1)
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.i;
        if self.i < self.s.len() && self.s[self.i] == b'-' {
            self.i += 1;
        }
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().map_err(|_| self.err("expected an integer"))
    }

    fn ident(&mut self) -> String {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_' || self.s[self.i] == b'\'') {
            self.i += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.i]).into_owned()
    }

    /// A single field factor: generator, derivative, Wick product or group.
    fn atom(&mut self) -> Result<Field> {
        match self.factor()? {
            Factor::Field(f) => Ok(f),
            Factor::Scalar(_) => Err(self.err("expected a field")),
        }
    }
}
