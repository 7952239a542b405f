//! Dense univariate polynomials over the rationals: Euclidean algorithms,
//! Sturm root isolation, rational roots, factorization and resultants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::mpoly::{fmt_q, MPoly};
use crate::var::Var;
use crate::Q;

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    c: Vec<Q>,
}

impl UPoly {
    pub fn new(mut c: Vec<Q>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| Q::from_integer(x.into())).collect())
    }

    pub fn zero() -> UPoly {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(Q::one())
    }

    pub fn constant(q: Q) -> UPoly {
        UPoly::new(vec![q])
    }

    /// The polynomial `x`.
    pub fn x() -> UPoly {
        UPoly::new(vec![Q::zero(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, q: &Q) -> UPoly {
        UPoly::new(self.c.iter().map(|x| x * q).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn shift_up(&self, n: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); n];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(i, x)| x * Q::from_integer(BigInt::from(i))).collect())
    }

    /// `self(p(x))`.
    pub fn compose(&self, p: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * p) + &UPoly::constant(c.clone());
        }
        acc
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.c.clone();
        let dd = d.deg();
        let inv = d.lc().recip();
        if r.len() < d.c.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Q::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = &r[i + dd] * &inv;
            if !t.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    r[i + j] -= &t * dc;
                }
            }
            q[i] = t;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn squarefree(&self) -> UPoly {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).unwrap().monic()
    }

    /// Primitive integer coefficient vector with positive leading coefficient.
    pub fn to_primitive_integers(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut l = BigInt::one();
        for c in &self.c {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|x| x / &g * &sign).collect()
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        let cs: Vec<MPoly> = self.c.iter().map(|x| MPoly::constant(x.clone())).collect();
        MPoly::from_univariate(v, &cs)
    }

    /// Read a polynomial in a single variable `v`; `None` if other variables occur.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Option<UPoly> {
        let cs = p.to_univariate(v);
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            out.push(c.as_constant()?);
        }
        Some(UPoly::new(out))
    }

    /// Sturm sequence of the square-free part.
    pub fn sturm(&self) -> Vec<UPoly> {
        let p = self.squarefree();
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        if seq.last().unwrap().is_zero() {
            seq.pop();
        }
        seq
    }

    fn sign_changes(seq: &[UPoly], x: &Q) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for p in seq {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    n += 1;
                }
                last = s;
            }
        }
        n
    }

    /// Bound `B` with every real root in `(-B, B)`.
    pub fn root_bound(&self) -> Q {
        let lc = self.lc().abs();
        let mut m = Q::zero();
        for c in &self.c[..self.c.len() - 1] {
            let r = c.abs() / &lc;
            if r > m {
                m = r;
            }
        }
        m + Q::one()
    }

    /// Disjoint intervals `(a, b]`, each holding exactly one distinct real root.
    pub fn isolate_real_roots(&self) -> Vec<(Q, Q)> {
        if self.deg() == 0 {
            return Vec::new();
        }
        let seq = self.sturm();
        let b = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = Self::sign_changes(&seq, &lo) - Self::sign_changes(&seq, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / Q::from_integer(2.into());
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Shrink an isolating interval `(a, b]` of a square-free polynomial until its width is below `eps`.
    pub fn refine_root(&self, iv: (Q, Q), eps: &Q) -> (Q, Q) {
        let p = self.squarefree();
        let (mut lo, mut hi) = iv;
        let two = Q::from_integer(2.into());
        while &(&hi - &lo) >= eps {
            if p.eval(&hi).is_zero() {
                return (hi.clone() - eps / &two, hi);
            }
            let mid = (&lo + &hi) / &two;
            let (fm, fh) = (p.eval(&mid), p.eval(&hi));
            if fm.is_zero() {
                return (&mid - eps / &two, mid);
            }
            if fm.is_positive() != fh.is_positive() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }

    /// All distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Q> {
        let p = self.squarefree();
        if p.deg() == 0 {
            return Vec::new();
        }
        let ints = p.to_primitive_integers();
        let lc = Q::from_integer(ints.last().unwrap().abs());
        // two fractions with denominators dividing lc differ by at least 1/lc^2
        let eps = Q::one() / (&lc * &lc * Q::from_integer(2.into()));
        let mut out = Vec::new();
        for iv in p.isolate_real_roots() {
            if p.eval(&iv.1).is_zero() {
                out.push(iv.1.clone());
                continue;
            }
            let (lo, hi) = p.refine_root(iv, &eps);
            if p.eval(&hi).is_zero() {
                out.push(hi);
                continue;
            }
            let cand = simplest_between(&lo, &hi);
            if p.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Factorization into monic irreducibles over the rationals with multiplicities.
    pub fn factor(&self) -> (Q, Vec<(UPoly, u32)>) {
        use algebraics::polynomial::Polynomial;
        if self.deg() == 0 {
            return (self.lc(), Vec::new());
        }
        let ints = self.to_primitive_integers();
        let poly: Polynomial<BigInt> = ints.into();
        let fs = poly.factor();
        let mut out: Vec<(UPoly, u32)> = fs
            .polynomial_factors
            .into_iter()
            .map(|f| {
                let cs: Vec<Q> = f.polynomial.iter().map(|x| Q::from_integer(x.clone())).collect();
                (UPoly::new(cs).monic(), f.power as u32)
            })
            .collect();
        out.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| a.0.c.cmp(&b.0.c)));
        (self.lc(), out)
    }
}

/// The fraction with the smallest denominator in the open interval `(lo, hi)`.
pub fn simplest_between(lo: &Q, hi: &Q) -> Q {
    assert!(lo < hi);
    let fl = lo.floor();
    if &(&fl + Q::one()) < hi {
        // an integer strictly inside; pick the one of least magnitude
        let a = &fl + Q::one();
        let b = hi.ceil() - Q::one();
        if a <= Q::zero() && b >= Q::zero() {
            return Q::zero();
        }
        return if a > Q::zero() { a } else { b };
    }
    // lo and hi share integer part n (or hi = n+1)
    let n = fl;
    let (l, h) = (lo - &n, hi - &n);
    // recurse on reciprocals: x in (l, h) with 0 <= l < h <= 1
    if l.is_zero() {
        // (0, h): 1/m with m > 1/h
        let m = (h.recip()).floor() + Q::one();
        return n + m.recip();
    }
    let inner = simplest_between(&h.recip(), &l.recip());
    n + inner.recip()
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in("x", f)
    }
}

impl UPoly {
    pub fn display_in(&self, var: &str) -> String {
        struct D<'a>(&'a UPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_in(self.1, f)
            }
        }
        D(self, var).to_string()
    }

    fn fmt_in(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let coef = if a.is_one() && i > 0 { String::new() } else { fmt_q(&a) };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (coef.is_empty(), mono.is_empty()) {
                (true, _) => f.write_str(&mono)?,
                (false, true) => f.write_str(&coef)?,
                (false, false) => write!(f, "{coef}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in an outer variable with coefficients in `Q[x]`, lowest degree first.
pub type PolyOverUPoly = Vec<UPoly>;

fn trim_outer(p: &mut PolyOverUPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem_outer(a: &PolyOverUPoly, b: &PolyOverUPoly) -> PolyOverUPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut e = (a.len() - 1) as i64 - db as i64 + 1;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + dr - db] = &r[i + dr - db] - &(&lr * bc);
        }
        trim_outer(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Resultant with respect to the outer variable, via the subresultant PRS.
pub fn resultant_outer(a: &PolyOverUPoly, b: &PolyOverUPoly) -> UPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim_outer(&mut a);
    trim_outer(&mut b);
    if a.is_empty() || b.is_empty() {
        return UPoly::zero();
    }
    let mut s = Q::one();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = -s;
        }
    }
    if b.len() == 1 {
        return b[0].pow((a.len() - 1) as u32).scale(&s);
    }
    let mut g = UPoly::one();
    let mut h = UPoly::one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem_outer(&a, &b);
        if r.is_empty() {
            return UPoly::zero();
        }
        let div = &g * &h.pow(delta);
        a = b;
        b = r.iter().map(|c| c.div_exact(&div).expect("subresultant division is exact")).collect();
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta-1)
        h = if delta == 0 {
            h.clone()
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update is exact")
        };
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let lb = b[0].clone();
            let res = if da == 0 {
                UPoly::one()
            } else {
                lb.pow(da).div_exact(&h.pow(da - 1)).expect("final subresultant step is exact")
            };
            return res.scale(&s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn rational_roots_found_exactly() {
        // (3x - 2)(x + 5)(x^2 - 2)
        let p = &(&UPoly::from_ints(&[-2, 3]) * &UPoly::from_ints(&[5, 1])) * &UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(p.rational_roots(), vec![q(-5, 1), q(2, 3)]);
        assert_eq!(p.isolate_real_roots().len(), 4);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q(3, 10), &q(4, 10)), q(1, 3));
        assert_eq!(simplest_between(&q(-7, 2), &q(-3, 1)), q(-10, 3));
        assert_eq!(simplest_between(&q(-1, 2), &q(1, 2)), q(0, 1));
    }

    #[test]
    fn resultant_of_linear_forms() {
        // res_y(y - x^2, y - 1) = 1 - x^2 up to sign
        let a: PolyOverUPoly = vec![-&UPoly::from_ints(&[0, 0, 1]), UPoly::one()];
        let b: PolyOverUPoly = vec![UPoly::from_ints(&[-1]), UPoly::one()];
        let r = resultant_outer(&a, &b);
        assert_eq!(r.monic(), UPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn resultant_matches_sylvester_for_quadratics() {
        // res_y(y^2 + x, y^2 - y + 1) = prod over roots b of y^2 - y + 1 of (b - 1 + x) = x^2 - x + 1
        let a: PolyOverUPoly = vec![UPoly::x(), UPoly::zero(), UPoly::one()];
        let b: PolyOverUPoly = vec![UPoly::one(), UPoly::from_ints(&[-1]), UPoly::one()];
        let r = resultant_outer(&a, &b);
        assert_eq!(r, UPoly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn factor_splits_products() {
        let p = &(&UPoly::from_ints(&[-2, 0, 1]) * &UPoly::from_ints(&[1, 2])) * &UPoly::from_ints(&[1, 2]);
        let (_, fs) = p.factor();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(f, e)| *e == 2 && *f == UPoly::new(vec![q(1, 2), q(1, 1)])));
    }
}
