//! The coefficient type used everywhere: an exact rational, or a rational
//! function in named formal parameters.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::mpoly::MPoly;
use crate::ratfunc::RatFunc;
use crate::var::Var;
use crate::{ExactError, Q};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(Q),
    Func(Box<RatFunc>),
}

impl Scalar {
    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(Q::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Q::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn param(name: &str) -> Scalar {
        Scalar::Func(Box::new(RatFunc::from_poly(MPoly::var(Var::new(name)))))
    }

    pub fn from_poly(p: MPoly) -> Scalar {
        Scalar::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn from_ratfunc(f: RatFunc) -> Scalar {
        match f.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Func(Box::new(f)),
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        match self {
            Scalar::Rat(q) => RatFunc::from_poly(MPoly::constant(q.clone())),
            Scalar::Func(f) => (**f).clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Func(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    /// Parameter names appearing, sorted by name.
    pub fn params(&self) -> Vec<String> {
        match self {
            Scalar::Rat(_) => Vec::new(),
            Scalar::Func(f) => {
                let mut v: Vec<String> = f.vars().into_iter().map(|v| v.name()).collect();
                v.sort();
                v
            }
        }
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar, ExactError> {
        match (self, o) {
            (_, Scalar::Rat(b)) if b.is_zero() => Err(ExactError::DivisionByZero),
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            _ => Ok(Scalar::from_ratfunc(self.to_ratfunc().mul(&o.to_ratfunc().recip()?))),
        }
    }

    pub fn recip(&self) -> Result<Scalar, ExactError> {
        Scalar::one().try_div(self)
    }

    pub fn pow(&self, n: i32) -> Result<Scalar, ExactError> {
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * self;
        }
        if n < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    /// Specialize parameter `name` to `value`. Rejects values that annihilate a denominator.
    pub fn subs(&self, name: &str, value: &Q) -> Result<Scalar, ExactError> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Func(f) => Ok(Scalar::from_ratfunc(f.subs(Var::new(name), value)?)),
        }
    }

    pub fn subs_all(&self, vals: &[(String, Q)]) -> Result<Scalar, ExactError> {
        let mut s = self.clone();
        for (n, v) in vals {
            s = s.subs(n, v)?;
        }
        Ok(s)
    }

    pub fn parse(s: &str) -> Result<Scalar, ExactError> {
        let mut p = Parser { toks: tokenize(s)?, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(ExactError::Parse(format!("trailing input in scalar `{s}`")));
        }
        Ok(v)
    }
}

impl Zero for Scalar {
    fn zero() -> Scalar {
        Scalar::Rat(Q::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Func(f) => f.is_zero(),
        }
    }
}

impl One for Scalar {
    fn one() -> Scalar {
        Scalar::Rat(Q::one())
    }
}

impl From<Q> for Scalar {
    fn from(q: Q) -> Scalar {
        Scalar::Rat(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(a), Scalar::Func(_)) if a.is_zero() => o.clone(),
            (Scalar::Func(_), Scalar::Rat(b)) if b.is_zero() => self.clone(),
            _ => Scalar::from_ratfunc(self.to_ratfunc().add(&o.to_ratfunc())),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().sub(&o.to_ratfunc())),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Func(f)) | (Scalar::Func(f), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Func(Box::new(f.scale(a)))
                }
            }
            _ => Scalar::from_ratfunc(self.to_ratfunc().mul(&o.to_ratfunc())),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::try_div`] to handle it.
    fn div(self, o: &Scalar) -> Scalar {
        self.try_div(o).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Func(f) => Scalar::Func(Box::new(f.neg())),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a += b;
            return;
        }
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a -= b;
            return;
        }
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a *= b;
            return;
        }
        *self = &*self * o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => f.write_str(&crate::mpoly::fmt_q(q)),
            Scalar::Func(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Scalar, ExactError> {
        Scalar::parse(s)
    }
}

/// Parse an exact fraction such as `-3/4` or `7`.
pub fn parse_rational(s: &str) -> Result<Q, ExactError> {
    match Scalar::parse(s)? {
        Scalar::Rat(q) => Ok(q),
        Scalar::Func(_) => Err(ExactError::Parse(format!("`{s}` is not a rational number"))),
    }
}

pub fn fmt_rational(q: &Q) -> String {
    crate::mpoly::fmt_q(q)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ExactError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(ExactError::Parse(format!("unexpected character `{c}` in scalar `{s}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.unary()?)?;
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Num(_)) | Some(Tok::Sym('('))) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ExactError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ExactError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: i32 = n.to_string().parse().map_err(|_| ExactError::Parse("exponent too large".into()))?;
                    return base.pow(if neg { -e } else { e });
                }
                _ => return Err(ExactError::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ExactError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Scalar::Rat(Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Scalar::param(&name))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(ExactError::Parse("missing `)`".into()));
                }
                Ok(v)
            }
            other => Err(ExactError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Sign helper used by printers.
pub fn is_negative_rational(s: &Scalar) -> bool {
    matches!(s, Scalar::Rat(q) if q.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_simplify() {
        let s = Scalar::parse("3*k/(k+2)").unwrap();
        let t = Scalar::parse("(6*k)/(2*k+4)").unwrap();
        assert_eq!(s, t);
        assert_eq!(Scalar::parse("-3/4").unwrap(), Scalar::frac(-3, 4));
        let u = Scalar::parse("(k^2-1)/(k+1)").unwrap();
        assert_eq!(u, Scalar::parse("k-1").unwrap());
    }

    #[test]
    fn display_round_trips() {
        for src in ["2*a/(a+1)^2", "-6*k-3", "(k*a+a+k)/(1+a)^2", "313/450", "k1*k2/(k1+k2+4)"] {
            let s = Scalar::parse(src).unwrap();
            assert_eq!(Scalar::parse(&s.to_string()).unwrap(), s, "{src} -> {s}");
        }
    }

    #[test]
    fn specialization_rejects_poles() {
        let s = Scalar::parse("1/(k+2)").unwrap();
        assert!(s.subs("k", &Q::from_integer((-2).into())).is_err());
        assert_eq!(s.subs("k", &Q::from_integer(0.into())).unwrap(), Scalar::frac(1, 2));
    }

    #[test]
    fn collapses_to_rational() {
        let k = Scalar::param("k");
        let z = &k - &k;
        assert!(z.is_rational() && z.is_zero());
        let one = &k / &k;
        assert_eq!(one, Scalar::one());
    }
}
