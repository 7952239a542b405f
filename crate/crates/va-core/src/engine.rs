//! Modes `X_(n)` acting on PBW states of the vacuum module.
//!
//! A state is a sparse map from sorted words to scalars; the word
//! `[l1, ..., lr]` stands for `g1_(-d1-1) ... gr_(-dr-1)|0>`. Creation modes are
//! inserted by commuting them to their sorted position, annihilation modes are
//! commuted to the right until they hit the vacuum, and modes of composite
//! fields are expanded through the Wick and derivative mode formulas.

use std::collections::HashMap;

use num_traits::{One, Zero};
use va_exact::{binomial, Scalar, Q};

use crate::algebra::Algebra;
use crate::error::{Result, VaError};
use crate::field::{letter, letter_deriv, letter_gen, Field, Letter, Word};

pub type Vector = HashMap<Word, Scalar>;

pub const DEFAULT_MAX_DEPTH: usize = 8;

pub fn vacuum() -> Vector {
    let mut v = Vector::new();
    v.insert(Word::new(), Scalar::one());
    v
}

pub fn add_to(v: &mut Vector, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&w) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                v.remove(&w);
            }
        }
        None => {
            v.insert(w, c);
        }
    }
}

pub fn axpy(v: &mut Vector, c: &Scalar, w: &Vector) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        add_to(v, k.clone(), x * c);
    }
}

pub fn scale(v: &Vector, c: &Scalar) -> Vector {
    if c.is_zero() {
        return Vector::new();
    }
    v.iter().map(|(k, x)| (k.clone(), x * c)).collect()
}

fn int(n: i64) -> Scalar {
    Scalar::from(Q::from_integer(n.into()))
}

/// `(-1)^k n(n-1)...(n-k+1)`, the factor in `(∂^k F)_(n) = (..) F_(n-k)`.
fn deriv_factor(n: i64, k: u32) -> Q {
    let mut r = Q::one();
    for i in 0..k as i64 {
        r *= Q::from_integer((-(n - i)).into());
    }
    r
}

/// Evaluates modes for one presentation, with a bound on how deeply OPE table
/// entries may be nested inside each other.
#[derive(Clone, Copy)]
pub struct Engine<'a> {
    alg: &'a Algebra,
    max_depth: usize,
}

impl<'a> Engine<'a> {
    pub fn new(alg: &'a Algebra) -> Engine<'a> {
        Engine { alg, max_depth: DEFAULT_MAX_DEPTH }
    }

    pub fn with_max_depth(alg: &'a Algebra, max_depth: usize) -> Engine<'a> {
        Engine { alg, max_depth }
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    fn max_w2(&self, v: &Vector) -> Option<i64> {
        v.keys().map(|w| self.alg.word_w2(w)).max()
    }

    /// `g_(m) v` for a generator `g`.
    pub fn gen_mode(&self, g: usize, m: i64, v: &Vector, depth: usize) -> Result<Vector> {
        let mut out = Vector::new();
        for (w, c) in v {
            self.gen_mode_word(g, m, w, c, &mut out, depth)?;
        }
        Ok(out)
    }

    fn gen_mode_word(&self, a: usize, m: i64, word: &[Letter], coef: &Scalar, out: &mut Vector, depth: usize) -> Result<()> {
        let alg = self.alg;
        let wv = alg.word_w2(word);
        if wv + alg.gen_w2(a) - 2 * m - 2 < 0 {
            return Ok(());
        }
        let odd_a = alg.is_odd(a);
        if m < 0 {
            let la = letter(a, (-m - 1) as u32);
            if word.is_empty() || la < word[0] || (la == word[0] && !odd_a) {
                let mut w = Word::with_capacity(word.len() + 1);
                w.push(la);
                w.extend_from_slice(word);
                add_to(out, w, coef.clone());
                return Ok(());
            }
            if la == word[0] {
                // a_(m) a_(m) = 1/2 [a_(m), a_(m)] for odd a
                let rest = unit(&word[1..]);
                let half = coef * &Scalar::frac(1, 2);
                let r = self.commutator(a, m, a, m, &rest, depth)?;
                axpy(out, &half, &r);
                return Ok(());
            }
        } else if word.is_empty() {
            return Ok(());
        }
        let b = letter_gen(word[0]);
        let n = -(letter_deriv(word[0]) as i64) - 1;
        let rest = &word[1..];
        let sign = if odd_a && alg.is_odd(b) { -coef } else { coef.clone() };
        let mut inner = Vector::new();
        self.gen_mode_word(a, m, rest, &Scalar::one(), &mut inner, depth)?;
        if !inner.is_empty() {
            let moved = self.gen_mode(b, n, &inner, depth)?;
            axpy(out, &sign, &moved);
        }
        let r = self.commutator(a, m, b, n, &unit(rest), depth)?;
        axpy(out, coef, &r);
        Ok(())
    }

    /// `[a_(m), b_(n)] v = Σ_j C(m,j) (a_(j)b)_(m+n-j) v`.
    fn commutator(&self, a: usize, m: i64, b: usize, n: i64, v: &Vector, depth: usize) -> Result<Vector> {
        let mut out = Vector::new();
        for (j, f) in self.alg.products(a, b).iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let c = binomial(m, j as u32);
            if c.is_zero() {
                continue;
            }
            let r = self.field_mode(f, m + n - j as i64, v, depth + 1)?;
            axpy(&mut out, &Scalar::from(c), &r);
        }
        Ok(out)
    }

    /// `F_(n) v` for an arbitrary field.
    pub fn field_mode(&self, f: &Field, n: i64, v: &Vector, depth: usize) -> Result<Vector> {
        if depth > self.max_depth {
            return Err(VaError::DepthExceeded(self.max_depth));
        }
        if v.is_empty() {
            return Ok(Vector::new());
        }
        match f {
            Field::Identity => Ok(if n == -1 { v.clone() } else { Vector::new() }),
            Field::Gen(g) => self.gen_mode(*g, n, v, depth),
            Field::Deriv(k, x) => {
                let c = deriv_factor(n, *k);
                if c.is_zero() {
                    return Ok(Vector::new());
                }
                let r = self.field_mode(x, n - *k as i64, v, depth)?;
                Ok(scale(&r, &Scalar::from(c)))
            }
            Field::Sum(t) => {
                let mut out = Vector::new();
                for (c, x) in t {
                    if c.is_zero() {
                        continue;
                    }
                    let r = self.field_mode(x, n, v, depth)?;
                    axpy(&mut out, c, &r);
                }
                Ok(out)
            }
            Field::Wick(a, b) => self.wick_mode(a, b, n, v, depth),
        }
    }

    /// `(:AB:)_(n) v = Σ_j A_(-1-j) B_(n+j) v + (-1)^{|A||B|} Σ_j B_(n-1-j) A_(j) v`.
    fn wick_mode(&self, a: &Field, b: &Field, n: i64, v: &Vector, depth: usize) -> Result<Vector> {
        if let Field::Sum(t) = a {
            if self.alg.field_odd(a).is_none() {
                let mut out = Vector::new();
                for (c, x) in t {
                    let r = self.wick_mode(x, b, n, v, depth)?;
                    axpy(&mut out, c, &r);
                }
                return Ok(out);
            }
        }
        if let Field::Sum(t) = b {
            if self.alg.field_odd(b).is_none() {
                let mut out = Vector::new();
                for (c, x) in t {
                    let r = self.wick_mode(a, x, n, v, depth)?;
                    axpy(&mut out, c, &r);
                }
                return Ok(out);
            }
        }
        let (Some(pa), Some(pb)) = (self.alg.field_odd(a), self.alg.field_odd(b)) else {
            return Ok(Vector::new());
        };
        let Some(wv) = self.max_w2(v) else { return Ok(Vector::new()) };
        let wa = self.alg.field_max_w2(a);
        let wb = self.alg.field_max_w2(b);
        let mut out = Vector::new();
        // B_(n+j) v vanishes once 2(n+j)+2 > wv + wb
        let top1 = (wv + wb - 2 - 2 * n).div_euclid(2);
        for j in 0..=top1.max(-1) {
            let r = self.field_mode(b, n + j, v, depth)?;
            if r.is_empty() {
                continue;
            }
            let r = self.field_mode(a, -1 - j, &r, depth)?;
            axpy(&mut out, &Scalar::one(), &r);
        }
        let top2 = (wv + wa - 2).div_euclid(2);
        let sign = if pa && pb { int(-1) } else { int(1) };
        for j in 0..=top2.max(-1) {
            let r = self.field_mode(a, j, v, depth)?;
            if r.is_empty() {
                continue;
            }
            let r = self.field_mode(b, n - 1 - j, &r, depth)?;
            axpy(&mut out, &sign, &r);
        }
        Ok(out)
    }
}

pub fn unit(w: &[Letter]) -> Vector {
    let mut v = Vector::new();
    v.insert(Word::from_slice(w), Scalar::one());
    v
}
