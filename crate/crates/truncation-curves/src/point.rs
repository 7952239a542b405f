//! Exact points of the `(c, λ)` plane: rational, or algebraic with an exact descriptor.

use std::cmp::Ordering;
use std::fmt;

use va_exact::{fmt_rational, UPoly, Q};

/// Which root of the minimal polynomial is meant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLocation {
    /// The unique root in `(lo, hi]`.
    Real { lo: Q, hi: Q },
    /// Any of the `count` non-real roots (conjugate, so not separated).
    NonReal { count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    /// Monic and irreducible over the rationals, in the variable `x`.
    pub minpoly: UPoly,
    pub location: RootLocation,
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            RootLocation::Real { lo, hi } => {
                write!(f, "root of {} in ({}, {}]", self.minpoly.display_in("x"), fmt_rational(lo), fmt_rational(hi))
            }
            RootLocation::NonReal { count } => write!(f, "one of {count} non-real roots of {}", self.minpoly.display_in("x")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coord {
    Rational(Q),
    Algebraic(AlgebraicNumber),
    /// `λ` as a polynomial in the algebraic `c` of the same point, reduced modulo its minimal polynomial.
    PolyInC(UPoly),
    /// `λ` is a root of this polynomial in `λ` whose coefficients are polynomials in `c`.
    RootOverC(Vec<UPoly>),
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Rational(x) => f.write_str(&fmt_rational(x)),
            Coord::Algebraic(a) => write!(f, "{a}"),
            Coord::PolyInC(p) => f.write_str(&p.display_in("c")),
            Coord::RootOverC(cs) => {
                let parts: Vec<String> = cs.iter().enumerate().map(|(j, u)| format!("({})*lambda^{j}", u.display_in("c"))).collect();
                write!(f, "root of {}", parts.join(" + "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub c: Coord,
    pub lambda: Coord,
}

impl CurvePoint {
    pub fn rational(c: Q, lambda: Q) -> Self {
        CurvePoint { c: Coord::Rational(c), lambda: Coord::Rational(lambda) }
    }

    pub fn as_rational(&self) -> Option<(Q, Q)> {
        match (&self.c, &self.lambda) {
            (Coord::Rational(c), Coord::Rational(l)) => Some((c.clone(), l.clone())),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Rational points first in `(c, λ)` order, then by descriptor text.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        match (self.as_rational(), o.as_rational()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => {
                let key = |p: &CurvePoint| match &p.c {
                    Coord::Algebraic(AlgebraicNumber { location: RootLocation::Real { lo, .. }, .. }) => (0, Some(lo.clone())),
                    Coord::Rational(x) => (0, Some(x.clone())),
                    _ => (1, None),
                };
                key(self).cmp(&key(o)).then_with(|| self.to_string().cmp(&o.to_string()))
            }
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(c = {}, lambda = {})", self.c, self.lambda)
    }
}
