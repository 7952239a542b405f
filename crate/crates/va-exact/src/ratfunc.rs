//! Quotients of multivariate polynomials, kept in lowest terms.

use std::fmt;

use num_traits::{One, Zero};

use crate::mpoly::MPoly;
use crate::var::Var;
use crate::{ExactError, Q};

/// `num / den` with `gcd(num, den) = 1` and `den` monic in lex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: MPoly::one() };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let lc = den.leading_coeff();
        let inv = lc.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: MPoly) -> RatFunc {
        RatFunc { num: p, den: MPoly::one() }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.den.is_constant() {
            let d = self.den.as_constant().unwrap();
            self.num.as_constant().map(|n| n / d)
        } else {
            None
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        if self.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Q) -> RatFunc {
        if c.is_zero() {
            return RatFunc::from_poly(MPoly::zero());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitute a rational value for `v`; fails if the denominator vanishes.
    pub fn subs(&self, v: Var, x: &Q) -> Result<RatFunc, ExactError> {
        let den = self.den.subs(v, x);
        if den.is_zero() {
            return Err(ExactError::Pole { var: v.name(), value: crate::mpoly::fmt_q(x), den: self.den.to_string() });
        }
        Ok(RatFunc::new(self.num.subs(v, x), den))
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paren = |p: &MPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if let Some(d) = self.den.as_constant() {
            if d.is_one() {
                return write!(f, "{}", self.num);
            }
            return write!(f, "{}/{}", paren(&self.num), crate::mpoly::fmt_q(&d));
        }
        let d = self.den.to_string();
        if self.den.len() > 1 || d.contains('*') || d.contains('/') {
            write!(f, "{}/({d})", paren(&self.num))
        } else {
            write!(f, "{}/{d}", paren(&self.num))
        }
    }
}
