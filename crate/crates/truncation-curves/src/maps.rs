//! Rational parametrizations `k ↦ (c(k), λ(k))` of the truncation curves by a level.

use num_traits::{One, Zero};
use va_exact::{fmt_rational, q, UPoly, Q};

use crate::curves::curve;
use crate::error::CurveError;
use crate::point::CurvePoint;

/// `constant · Π num / Π den` with each factor kept separately for pole diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct RatExpr {
    pub constant: Q,
    pub num: Vec<UPoly>,
    pub den: Vec<UPoly>,
}

impl RatExpr {
    fn new(constant: Q, num: &[&[i64]], den: &[&[i64]]) -> Self {
        let f = |v: &[&[i64]]| v.iter().map(|c| UPoly::from_ints(c)).collect();
        RatExpr { constant, num: f(num), den: f(den) }
    }

    pub fn constant(a: Q) -> Self {
        RatExpr { constant: a, num: Vec::new(), den: Vec::new() }
    }

    pub fn numerator(&self) -> UPoly {
        self.num.iter().fold(UPoly::constant(self.constant.clone()), |a, f| &a * f)
    }

    pub fn denominator(&self) -> UPoly {
        self.den.iter().fold(UPoly::one(), |a, f| &a * f)
    }

    /// The value at `k`, or the first denominator factor that vanishes there.
    pub fn eval(&self, k: &Q) -> Result<Q, UPoly> {
        let mut d = Q::one();
        for f in &self.den {
            let v = f.eval(k);
            if v.is_zero() {
                return Err(f.clone());
            }
            d *= v;
        }
        Ok(self.numerator().eval(k) / d)
    }

    /// Real poles, each with its vanishing factor; irrational ones are skipped.
    pub fn rational_poles(&self) -> Vec<(Q, UPoly)> {
        let mut out: Vec<(Q, UPoly)> = self.den.iter().flat_map(|f| f.rational_roots().into_iter().map(move |r| (r, f.clone()))).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn display_in(&self, var: &str) -> String {
        let fac = |f: &UPoly| {
            if f.deg() == 0 {
                f.display_in(var)
            } else {
                format!("({})", f.display_in(var))
            }
        };
        let mut s = if self.num.is_empty() {
            fmt_rational(&self.constant)
        } else {
            let body: Vec<String> = self.num.iter().map(fac).collect();
            if self.constant.is_one() {
                body.join("")
            } else if self.constant == -Q::one() {
                format!("-{}", body.join(""))
            } else {
                format!("{}{}", fmt_rational(&self.constant), body.join(""))
            }
        };
        if !self.den.is_empty() {
            let d: Vec<String> = self.den.iter().map(fac).collect();
            s = format!("{s} / ({})", d.join(""));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    pub name: &'static str,
    pub variable: &'static str,
    pub description: &'static str,
    /// The bundled curve the image lies on, if any.
    pub curve: Option<&'static str>,
    pub c_of_k: RatExpr,
    pub lambda_of_k: RatExpr,
}

pub const MAP_NAMES: [&str; 5] = ["k2", "kh", "kk", "km", "small"];

pub fn param(name: &str) -> Result<RationalMap, CurveError> {
    let one = Q::one;
    let m = match name {
        "k2" => RationalMap {
            name: "k2",
            variable: "k1",
            description: "coset C^{k1}_2, level k2 = 2",
            curve: Some("p2"),
            c_of_k: RatExpr::new(q(3, 2), &[&[0, 1], &[6, 1]], &[&[2, 1], &[4, 1]]),
            lambda_of_k: RatExpr::new(
                q(-2, 7),
                &[&[2, 1], &[4, 1], &[-5248, -4488, -352, 132, 11]],
                &[&[-2, 1], &[8, 1], &[68, 42, 7], &[352, 354, 59]],
            ),
        },
        "kh" => RationalMap {
            name: "kh",
            variable: "k1",
            description: "coset C^{k1}_{-1/2}, level k2 = -1/2",
            curve: Some("p3"),
            c_of_k: RatExpr::new(-one(), &[&[0, 1], &[7, 2]], &[&[2, 1], &[3, 2]]),
            lambda_of_k: RatExpr::new(
                q(1, 14),
                &[&[2, 1], &[3, 2], &[84, 2359, 3271, 1484, 212]],
                &[&[3, 1], &[1, 2], &[41, 49, 14], &[132, 119, 34]],
            ),
        },
        "kk" => RationalMap {
            name: "kk",
            variable: "k1",
            description: "diagonal coset C^{k1,k1}",
            curve: Some("p4"),
            c_of_k: RatExpr::new(q(3, 1), &[&[0, 0, 1]], &[&[1, 1], &[2, 1]]),
            lambda_of_k: RatExpr::new(
                q(1, 7),
                &[&[1, 1], &[2, 1], &[-28, -118, -23, 22]],
                &[&[-2, 1], &[1, 2], &[5, 2], &[44, 66, 37]],
            ),
        },
        "km" => RationalMap {
            name: "km",
            variable: "k1",
            description: "coset C^{k1,-1} in W(c, lambda), written in k1 (lambda = -1/16)",
            curve: None,
            c_of_k: RatExpr::new(q(-3, 1), &[&[0, 1], &[3, 1]], &[&[1, 1], &[2, 1]]),
            lambda_of_k: RatExpr::constant(q(-1, 16)),
        },
        "small" => RationalMap {
            name: "small",
            variable: "k",
            description: "(D^k)^{U(1)} in W(c, lambda) as displayed (lambda = -1/16)",
            curve: None,
            c_of_k: RatExpr::new(q(3, 1), &[&[0, 1], &[3, 2]], &[&[2, 1]]),
            lambda_of_k: RatExpr::constant(q(-1, 16)),
        },
        _ => return Err(CurveError::UnknownMap(name.to_string())),
    };
    Ok(m)
}

impl RationalMap {
    pub fn eval(&self, k: &Q) -> Result<CurvePoint, CurveError> {
        let pole = |coord: &'static str, f: UPoly| CurveError::Pole {
            map: self.name.to_string(),
            k: fmt_rational(k),
            coord,
            factor: format!("({})", f.display_in(self.variable)),
        };
        let c = self.c_of_k.eval(k).map_err(|f| pole("c", f))?;
        let l = self.lambda_of_k.eval(k).map_err(|f| pole("lambda", f))?;
        Ok(CurvePoint::rational(c, l))
    }

    /// Rational levels `k`, away from the poles, with `c(k) = c0`.
    pub fn fiber(&self, c0: &Q) -> Vec<Q> {
        let p = &self.c_of_k.numerator() - &self.c_of_k.denominator().scale(c0);
        if p.is_zero() {
            return Vec::new();
        }
        p.rational_roots().into_iter().filter(|k| self.eval(k).is_ok()).collect()
    }

    /// Upper bound for the size of any fiber of `c`.
    pub fn fiber_bound(&self) -> usize {
        self.c_of_k.numerator().deg().max(self.c_of_k.denominator().deg())
    }
}

pub fn eval_param(name: &str, k: &Q) -> Result<CurvePoint, CurveError> {
    param(name)?.eval(k)
}

/// Outcome of substituting a parametrization into a curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Substitution {
    pub curve: String,
    pub map: String,
    /// `p(c(k), λ(k))` times the cleared denominators, as a polynomial in `k`.
    pub residual: UPoly,
}

impl Substitution {
    pub fn vanishes(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Substitute `(c(k), λ(k))` into the curve and clear denominators:
/// `Σ a_ij N_c^i D_c^{dc-i} N_λ^j D_λ^{dλ-j}` vanishes iff the curve vanishes identically.
pub fn on_curve_identically(curve_name: &str, map_name: &str) -> Result<Substitution, CurveError> {
    let p = curve(curve_name)?;
    let m = param(map_name)?;
    let (nc, dc) = (m.c_of_k.numerator(), m.c_of_k.denominator());
    let (nl, dl) = (m.lambda_of_k.numerator(), m.lambda_of_k.denominator());
    let (ec, el) = (p.degree_c(), p.degree_lambda());
    let mut residual = UPoly::zero();
    for ((i, j), a) in p.terms() {
        let t = &(&nc.pow(*i) * &dc.pow(ec - i)) * &(&nl.pow(*j) * &dl.pow(el - j));
        residual = &residual + &t.scale(a);
    }
    Ok(Substitution { curve: curve_name.to_string(), map: map_name.to_string(), residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_names_the_factor() {
        let e = eval_param("kk", &q(2, 1)).unwrap_err();
        assert_eq!(e, CurveError::Pole { map: "kk".into(), k: "2".into(), coord: "lambda", factor: "(k1 - 2)".into() });
        assert!(matches!(eval_param("k2", &q(-4, 1)), Err(CurveError::Pole { coord: "c", .. })));
    }

    #[test]
    fn display() {
        let m = param("kk").unwrap();
        assert_eq!(m.c_of_k.display_in("k"), "3(k^2) / ((k + 1)(k + 2))");
    }

    #[test]
    fn fiber_of_diagonal_map() {
        let m = param("kk").unwrap();
        let mut f = m.fiber(&q(27, 5));
        f.sort();
        assert_eq!(f, vec![q(-6, 1), q(-3, 4)]);
        assert_eq!(m.fiber_bound(), 2);
    }
}
