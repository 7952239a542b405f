//! Fields: the syntax tree used by OPE tables and the canonical right-nested
//! Wick form [`FieldExpr`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;
use va_exact::Scalar;

/// A derivative-decorated generator `∂^d g`, packed so that ascending order is
/// generators ascending, then derivative order descending.
pub type Letter = u32;

/// Sorted word of letters. As a PBW monomial it stands for
/// `g1_(-d1-1) g2_(-d2-1) ... |0>`; as a Wick word for `:∂^d1 g1 :∂^d2 g2 ...::`.
pub type Word = SmallVec<[Letter; 8]>;

pub const MAX_DERIV: u32 = 0xFFFF;

pub fn letter(gen: usize, deriv: u32) -> Letter {
    assert!(gen < 0x8000 && deriv < MAX_DERIV);
    ((gen as u32) << 16) | (MAX_DERIV - deriv)
}

pub fn letter_gen(l: Letter) -> usize {
    (l >> 16) as usize
}

pub fn letter_deriv(l: Letter) -> u32 {
    MAX_DERIV - (l & 0xFFFF)
}

/// Syntax tree of a field. Table entries and user input are kept in this form;
/// the engine evaluates modes of it directly.
#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Identity,
    Gen(usize),
    Deriv(u32, Box<Field>),
    Wick(Box<Field>, Box<Field>),
    Sum(Vec<(Scalar, Field)>),
}

impl Field {
    pub fn zero() -> Field {
        Field::Sum(Vec::new())
    }

    pub fn deriv(k: u32, f: Field) -> Field {
        if k == 0 {
            f
        } else {
            Field::Deriv(k, Box::new(f))
        }
    }

    pub fn wick(a: Field, b: Field) -> Field {
        Field::Wick(Box::new(a), Box::new(b))
    }

    pub fn scaled(c: Scalar, f: Field) -> Field {
        Field::Sum(vec![(c, f)])
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Field::Sum(t) => t.iter().all(|(c, f)| c.is_zero() || f.is_zero()),
            Field::Deriv(_, f) => f.is_zero() || matches!(**f, Field::Identity),
            Field::Wick(a, b) => a.is_zero() || b.is_zero(),
            _ => false,
        }
    }

    /// Map every scalar through `f`.
    pub fn map_scalars<E>(&self, f: &dyn Fn(&Scalar) -> Result<Scalar, E>) -> Result<Field, E> {
        Ok(match self {
            Field::Identity => Field::Identity,
            Field::Gen(g) => Field::Gen(*g),
            Field::Deriv(k, x) => Field::Deriv(*k, Box::new(x.map_scalars(f)?)),
            Field::Wick(a, b) => Field::wick(a.map_scalars(f)?, b.map_scalars(f)?),
            Field::Sum(t) => {
                let mut out = Vec::with_capacity(t.len());
                for (c, x) in t {
                    out.push((f(c)?, x.map_scalars(f)?));
                }
                Field::Sum(out)
            }
        })
    }

    pub fn generators(&self, out: &mut Vec<usize>) {
        match self {
            Field::Identity => {}
            Field::Gen(g) => out.push(*g),
            Field::Deriv(_, x) => x.generators(out),
            Field::Wick(a, b) => {
                a.generators(out);
                b.generators(out);
            }
            Field::Sum(t) => t.iter().for_each(|(_, x)| x.generators(out)),
        }
    }

    /// Largest number of generator factors in a single monomial.
    pub fn degree(&self) -> usize {
        match self {
            Field::Identity => 0,
            Field::Gen(_) => 1,
            Field::Deriv(_, x) => x.degree(),
            Field::Wick(a, b) => a.degree() + b.degree(),
            Field::Sum(t) => t.iter().map(|(_, x)| x.degree()).max().unwrap_or(0),
        }
    }

    pub fn params(&self, out: &mut Vec<String>) {
        if let Field::Sum(t) = self {
            for (c, x) in t {
                out.extend(c.params());
                x.params(out);
            }
        } else if let Field::Deriv(_, x) = self {
            x.params(out);
        } else if let Field::Wick(a, b) = self {
            a.params(out);
            b.params(out);
        }
    }
}

/// Finite sum of canonical Wick words with scalar coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FieldExpr {
    terms: BTreeMap<Word, Scalar>,
}

impl FieldExpr {
    pub fn zero() -> FieldExpr {
        FieldExpr::default()
    }

    pub fn identity() -> FieldExpr {
        FieldExpr::word(Word::new())
    }

    pub fn word(w: Word) -> FieldExpr {
        let mut terms = BTreeMap::new();
        terms.insert(w, Scalar::one());
        FieldExpr { terms }
    }

    pub fn gen(g: usize) -> FieldExpr {
        FieldExpr::word(Word::from_slice(&[letter(g, 0)]))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Scalar)>) -> FieldExpr {
        let mut f = FieldExpr::zero();
        for (w, c) in it {
            f.add_term(w, &c);
        }
        f
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient when `self = c * 1`.
    pub fn as_identity_multiple(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Word::new()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn scale(&self, c: &Scalar) -> FieldExpr {
        if c.is_zero() {
            return FieldExpr::zero();
        }
        FieldExpr { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn add(&self, o: &FieldExpr) -> FieldExpr {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &FieldExpr) -> FieldExpr {
        self.add(&o.scale(&-Scalar::one()))
    }

    /// The same field as a syntax tree.
    pub fn to_field(&self) -> Field {
        Field::Sum(self.terms.iter().map(|(w, c)| (c.clone(), word_field(w))).collect())
    }

    pub fn map_scalars<E>(&self, f: &dyn Fn(&Scalar) -> Result<Scalar, E>) -> Result<FieldExpr, E> {
        let mut out = FieldExpr::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Render with generator names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> FieldDisplay<'a> {
        FieldDisplay { f: self, names }
    }
}

/// Right-nested Wick tree of a word.
pub fn word_field(w: &[Letter]) -> Field {
    match w.len() {
        0 => Field::Identity,
        1 => Field::deriv(letter_deriv(w[0]), Field::Gen(letter_gen(w[0]))),
        _ => Field::wick(word_field(&w[..1]), word_field(&w[1..])),
    }
}

pub fn fmt_word(w: &[Letter], names: &[String]) -> String {
    let lit = |l: Letter| {
        let d = letter_deriv(l);
        let n = &names[letter_gen(l)];
        match d {
            0 => n.clone(),
            1 => format!("D {n}"),
            _ => format!("D^{d} {n}"),
        }
    };
    match w.len() {
        0 => "1".to_string(),
        1 => lit(w[0]),
        _ => format!(":{}:", w.iter().map(|l| lit(*l)).collect::<Vec<_>>().join(" ")),
    }
}

/// Coefficient as it appears in front of a field: bare rationals, parenthesized
/// rational functions.
pub fn fmt_coeff(c: &Scalar) -> String {
    match c.as_rational() {
        Some(q) => va_exact::fmt_rational(q),
        None => format!("({c})"),
    }
}

pub struct FieldDisplay<'a> {
    f: &'a FieldExpr,
    names: &'a [String],
}

impl fmt::Display for FieldDisplay<'_> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_zero() {
            return write!(fm, "0");
        }
        let mut first = true;
        for (w, c) in &self.f.terms {
            let mut cs = fmt_coeff(c);
            let neg = cs.starts_with('-');
            if neg {
                cs.remove(0);
            }
            if first {
                if neg {
                    write!(fm, "-")?;
                }
            } else {
                write!(fm, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if w.is_empty() {
                write!(fm, "{cs}")?;
            } else if cs == "1" {
                write!(fm, "{}", fmt_word(w, self.names))?;
            } else {
                write!(fm, "{cs} {}", fmt_word(w, self.names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_is_pbw_order() {
        assert!(letter(0, 3) < letter(0, 1));
        assert!(letter(0, 0) < letter(1, 5));
        assert_eq!(letter_deriv(letter(2, 7)), 7);
        assert_eq!(letter_gen(letter(2, 7)), 2);
    }

    #[test]
    fn display_words() {
        let names = vec!["a".to_string(), "b".to_string()];
        let mut f = FieldExpr::zero();
        f.add_term(Word::from_slice(&[letter(0, 2), letter(1, 0)]), &Scalar::int(-2));
        f.add_term(Word::new(), &Scalar::frac(1, 2));
        assert_eq!(f.display(&names).to_string(), "1/2 - 2 :D^2 a b:");
    }
}
