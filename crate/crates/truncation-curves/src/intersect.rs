//! Intersection of two curves: eliminate `λ` with a resultant, factor it over the
//! rationals and recover `λ` over each factor.

use num_traits::Zero;
use va_exact::upoly::resultant_outer;
use va_exact::{UPoly, Q};

use crate::bivar::BivarPoly;
use crate::curves::curve;
use crate::error::CurveError;
use crate::point::{AlgebraicNumber, Coord, CurvePoint, RootLocation};

#[derive(Clone, Debug)]
pub struct Intersection {
    pub a: String,
    pub b: String,
    /// `res_λ(A, B)`, made primitive.
    pub resultant: UPoly,
    /// Monic irreducible factors of the resultant with multiplicities.
    pub factors: Vec<(UPoly, u32)>,
    pub points: Vec<CurvePoint>,
    pub notes: Vec<String>,
}

pub fn intersect(a: &str, b: &str) -> Result<Intersection, CurveError> {
    if a == b {
        return Err(CurveError::SameCurve(a.to_string()));
    }
    let (pa, pb) = (curve(a)?, curve(b)?);
    let mut r = intersect_polys(&pa, &pb)?;
    r.a = a.to_string();
    r.b = b.to_string();
    Ok(r)
}

pub fn lambda_resultant(pa: &BivarPoly, pb: &BivarPoly) -> UPoly {
    resultant_outer(&pa.coeffs_in_lambda(), &pb.coeffs_in_lambda())
}

pub fn intersect_polys(pa: &BivarPoly, pb: &BivarPoly) -> Result<Intersection, CurveError> {
    let g = pa.gcd(pb);
    if g.degree_c() + g.degree_lambda() > 0 {
        return Err(CurveError::NonIsolated(g.to_string()));
    }
    let res = lambda_resultant(pa, pb);
    let mut notes = Vec::new();
    let mut points = Vec::new();
    let res = UPoly::new(res.to_primitive_integers().into_iter().map(Q::from_integer).collect());
    if res.deg() == 0 {
        notes.push("the resultant is a nonzero constant: no finite intersection".into());
        return Ok(Intersection { a: String::new(), b: String::new(), resultant: res, factors: Vec::new(), points, notes });
    }
    let (_, factors) = res.factor();
    for (f, _) in &factors {
        if f.deg() == 1 {
            let c0 = -f.coeff(0);
            let (ua, ub) = (pa.at_c(&c0), pb.at_c(&c0));
            let gl = ua.gcd(&ub);
            if ua.is_zero() && ub.is_zero() {
                return Err(CurveError::NonIsolated(format!("c - {}", va_exact::fmt_rational(&c0))));
            }
            if gl.deg() == 0 {
                notes.push(format!("c = {}: common root only at lambda = infinity", va_exact::fmt_rational(&c0)));
                continue;
            }
            let (_, lf) = gl.factor();
            for (h, _) in lf {
                if h.deg() == 1 {
                    points.push(CurvePoint::rational(c0.clone(), -h.coeff(0)));
                } else {
                    for a in algebraic_roots(&h) {
                        points.push(CurvePoint { c: Coord::Rational(c0.clone()), lambda: Coord::Algebraic(a) });
                    }
                }
            }
        } else {
            let field = NumberField::new(f.clone());
            let ga = field.reduce_poly(&pa.coeffs_in_lambda());
            let gb = field.reduce_poly(&pb.coeffs_in_lambda());
            let gl = field.gcd(&ga, &gb);
            let lambda = match gl.len() {
                0 => return Err(CurveError::NonIsolated(format!("the factor {} of the resultant", f.display_in("c")))),
                1 => {
                    notes.push(format!("{}: common root only at lambda = infinity", f.display_in("c")));
                    continue;
                }
                2 => Coord::PolyInC(-&gl[0]),
                _ => Coord::RootOverC(gl),
            };
            for a in algebraic_roots(f) {
                points.push(CurvePoint { c: Coord::Algebraic(a), lambda: lambda.clone() });
            }
        }
    }
    points.sort_by(|x, y| x.canonical_cmp(y));
    Ok(Intersection { a: String::new(), b: String::new(), resultant: res, factors, points, notes })
}

/// The roots of an irreducible `f`: one descriptor per real root, one for all non-real roots.
fn algebraic_roots(f: &UPoly) -> Vec<AlgebraicNumber> {
    let f = f.monic();
    let real = f.isolate_real_roots();
    let nonreal = f.deg() - real.len();
    let mut out: Vec<AlgebraicNumber> =
        real.into_iter().map(|(lo, hi)| AlgebraicNumber { minpoly: f.clone(), location: RootLocation::Real { lo, hi } }).collect();
    if nonreal > 0 {
        out.push(AlgebraicNumber { minpoly: f, location: RootLocation::NonReal { count: nonreal } });
    }
    out
}

/// `Q[c]/(m)` for an irreducible `m`.
struct NumberField {
    m: UPoly,
}

impl NumberField {
    fn new(m: UPoly) -> Self {
        NumberField { m: m.monic() }
    }

    fn reduce(&self, a: &UPoly) -> UPoly {
        a.rem(&self.m)
    }

    fn reduce_poly(&self, p: &[UPoly]) -> Vec<UPoly> {
        let mut v: Vec<UPoly> = p.iter().map(|a| self.reduce(a)).collect();
        trim(&mut v);
        v
    }

    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&(a * b))
    }

    fn inv(&self, a: &UPoly) -> UPoly {
        let (g, s, _) = a.xgcd(&self.m);
        debug_assert!(g.deg() == 0 && !g.is_zero());
        self.reduce(&s.scale(&g.coeff(0).recip()))
    }

    /// Monic gcd in `K[λ]`, coefficients lowest degree first.
    fn gcd(&self, a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            return a;
        }
        let inv = self.inv(a.last().unwrap());
        a.iter().map(|x| self.mul(x, &inv)).collect()
    }

    fn rem(&self, a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let inv = self.inv(&b[db]);
        while r.len() > db {
            let dr = r.len() - 1;
            let t = self.mul(&r[dr], &inv);
            for (i, bc) in b.iter().enumerate() {
                r[i + dr - db] = self.reduce(&(&r[i + dr - db] - &(&t * bc)));
            }
            debug_assert!(r[dr].is_zero());
            trim(&mut r);
        }
        r
    }
}

fn trim(v: &mut Vec<UPoly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Whether the point satisfies the curve; exact for rational points, `None` otherwise.
pub fn on_curve(p: &BivarPoly, pt: &CurvePoint) -> Option<bool> {
    pt.as_rational().map(|(c, l)| p.eval(&c, &l).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use va_exact::q;

    #[test]
    fn line_and_circle() {
        // λ = c and c² + λ² = 2: two rational points (±1, ±1)
        let line = BivarPoly::c().sub(&BivarPoly::lambda());
        let circle = BivarPoly::c().pow(2).add(&BivarPoly::lambda().pow(2)).sub(&BivarPoly::int(2));
        let r = intersect_polys(&line, &circle).unwrap();
        let pts: Vec<_> = r.points.iter().map(|p| p.as_rational().unwrap()).collect();
        assert_eq!(pts, vec![(q(-1, 1), q(-1, 1)), (q(1, 1), q(1, 1))]);
    }

    #[test]
    fn irrational_points_carry_exact_descriptors() {
        // λ = c and c² + λ² = 1: c² = 1/2
        let line = BivarPoly::c().sub(&BivarPoly::lambda());
        let circle = BivarPoly::c().pow(2).add(&BivarPoly::lambda().pow(2)).sub(&BivarPoly::int(1));
        let r = intersect_polys(&line, &circle).unwrap();
        assert_eq!(r.points.len(), 2);
        for p in &r.points {
            assert_eq!(p.lambda, Coord::PolyInC(UPoly::x()));
            match &p.c {
                Coord::Algebraic(a) => assert_eq!(a.minpoly, UPoly::new(vec![q(-1, 2), q(0, 1), q(1, 1)])),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn shared_component_is_rejected() {
        let a = BivarPoly::lin(1, 1).mul(&BivarPoly::lambda());
        let b = BivarPoly::lin(1, 1).mul(&BivarPoly::c());
        assert!(matches!(intersect_polys(&a, &b), Err(CurveError::NonIsolated(_))));
    }
}
