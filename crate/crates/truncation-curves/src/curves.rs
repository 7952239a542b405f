//! The bundled truncation curves in the `(c, λ)` plane of the universal even spin
//! algebra of type W(2,4,6,...).

use crate::bivar::BivarPoly as P;
use crate::error::CurveError;

pub const CURVE_NAMES: [&str; 5] = ["p1", "p2", "p3", "p4", "degenerate"];

/// Names of truncation curves that live in external work and are not bundled.
pub const EXTERNAL_CURVES: [(&str, &str); 4] = [
    ("sp2n", "principal W-algebra of sp_2n; lives in the classification of quotients of the even spin algebra"),
    ("so2n-z2", "Z2-orbifold of the principal W-algebra of so_2n; lives in the classification of quotients of the even spin algebra"),
    ("sln-z2", "Z2-orbifold of the principal W-algebra of sl_n; a quotient of W(c, lambda) from the W_infinity classification"),
    ("parafermion-z2", "generalized parafermion orbifold; a quotient of W(c, lambda) from the W_infinity classification"),
];

fn lam() -> P {
    P::lambda()
}

/// Principal W-algebra of sp_6.
fn p1() -> P {
    let f = P::in_c(&[-2633664, 1806268, 101736, 5275, 85]).scale_int(3);
    let g = P::product(&[P::lin(-1, 1), P::lin(-1, 2), P::lin(46, 3), P::lin(22, 5), P::lin(444, 11)]).scale_int(-84);
    let h = P::product(&[P::lin(-1, 1).pow(2), P::lin(22, 5).pow(2), P::in_c(&[19104, 1531, 29])]).scale_int(1029);
    f.add(&g.mul(&lam())).add(&h.mul(&lam().pow(2)))
}

/// The coset at `k2 = 2`.
fn p2() -> P {
    P::product(&[lam(), P::lin(-1, 1), P::lin(-17, 2), P::lin(22, 5)])
        .scale_int(7)
        .add(&P::in_c(&[82, -47, -10]))
}

/// The coset at `k2 = -1/2`.
fn p3() -> P {
    P::product(&[lam(), P::lin(-41, 1), P::lin(-1, 1), P::lin(22, 5)])
        .scale_int(7)
        .add(&P::in_c(&[-14, 309, 5]))
}

/// The diagonal coset `k1 = k2`: `f + λ g + λ² h`.
fn p4() -> P {
    let f = P::in_c(&[-196, 1476, -955, -25]);
    let g = P::product(&[P::lin(-1, 1), P::lin(-1, 2), P::lin(22, 5)]).scale_int(980);
    let h = P::product(&[P::lin(-25, 1), P::lin(-1, 1).pow(2), P::lin(22, 5).pow(2)]).scale_int(49);
    f.add(&lam().mul(&g)).add(&lam().pow(2).mul(&h))
}

/// The fourth weight 8 curve, along which a weight 6 singular vector already appears.
fn degenerate() -> P {
    let l2 = P::in_c(&[213444, -329868, 30429, 74970, 11025]);
    P::in_c(&[-196, 172, -1]).add(&lam().pow(2).mul(&l2))
}

pub fn curve(name: &str) -> Result<P, CurveError> {
    match name {
        "p1" => Ok(p1()),
        "p2" => Ok(p2()),
        "p3" => Ok(p3()),
        "p4" => Ok(p4()),
        "degenerate" => Ok(degenerate()),
        _ => match EXTERNAL_CURVES.iter().find(|(n, _)| *n == name) {
            Some((_, why)) => Err(CurveError::Refused(format!("curve `{name}` is not bundled: {why}"))),
            None => Err(CurveError::UnknownCurve(name.to_string())),
        },
    }
}

/// One-line description for listings.
pub fn describe_curve(name: &str) -> &'static str {
    match name {
        "p1" => "W_k(sp_6) quotient",
        "p2" => "coset C^{k1}_2",
        "p3" => "coset C^{k1}_{-1/2}",
        "p4" => "diagonal coset C^{k1,k1}: f + lambda g + lambda^2 h",
        "degenerate" => "fourth weight-8 curve (weight-6 singular vector, type W(2,4))",
        _ => "",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use va_exact::q;

    #[test]
    fn p4_split() {
        let p = curve("p4").unwrap();
        assert_eq!(p.degree_lambda(), 2);
        assert_eq!(p.coeff(3, 0), q(-25, 1));
        // h has leading coefficient 49 * 25
        assert_eq!(p.coeff(5, 2), q(1225, 1));
    }

    #[test]
    fn names() {
        assert!(matches!(curve("p9"), Err(CurveError::UnknownCurve(_))));
        assert!(matches!(curve("sp2n"), Err(CurveError::Refused(_))));
    }
}
