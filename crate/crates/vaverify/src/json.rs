//! JSON encoding of exact values. Fractions are always strings `"num/den"`,
//! integers included, so no value ever passes through a float.

use serde_json::{json, Value};
use truncation_curves::{AlgebraicNumber, Coord, CurvePoint, RootLocation};
use va_exact::{UPoly, Q};

pub fn frac(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn fv(x: &Q) -> Value {
    Value::String(frac(x))
}

pub fn fracs(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(fv).collect())
}

/// Coefficients lowest degree first, plus a readable form.
pub fn upoly(p: &UPoly, var: &str) -> Value {
    let cs: Vec<Q> = (0..=p.deg()).map(|i| p.coeff(i)).collect();
    json!({ "coefficients": fracs(&cs), "text": p.display_in(var) })
}

pub fn algebraic(a: &AlgebraicNumber) -> Value {
    match &a.location {
        RootLocation::Real { lo, hi } => json!({ "minpoly": upoly(&a.minpoly, "x"), "interval": [fv(lo), fv(hi)] }),
        RootLocation::NonReal { count } => json!({ "minpoly": upoly(&a.minpoly, "x"), "nonreal_roots": count }),
    }
}

pub fn coord(c: &Coord) -> Value {
    match c {
        Coord::Rational(x) => fv(x),
        Coord::Algebraic(a) => algebraic(a),
        Coord::PolyInC(p) => json!({ "poly_in_c": upoly(p, "c") }),
        Coord::RootOverC(cs) => json!({ "root_in_lambda": cs.iter().map(|u| upoly(u, "c")).collect::<Vec<_>>() }),
    }
}

pub fn point(p: &CurvePoint) -> Value {
    json!({ "c": coord(&p.c), "lambda": coord(&p.lambda) })
}

pub fn rat_point(c: &Q, l: &Q) -> Value {
    json!({ "c": fv(c), "lambda": fv(l) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use va_exact::q;

    #[test]
    fn fractions_are_strings() {
        assert_eq!(frac(&q(15, 1)), "15/1");
        assert_eq!(frac(&q(-4, 6)), "-2/3");
        assert_eq!(rat_point(&q(15, 1), &q(221, 9506)).to_string(), r#"{"c":"15/1","lambda":"221/9506"}"#);
    }
}
