//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::var::Var;
use crate::Q;

/// Monomial stored as `(variable, exponent)` pairs sorted by variable id, all
/// exponents positive. Ordered lexicographically (smaller variable id has
/// higher priority), so the last key of a polynomial is its leading term.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub Vec<(Var, u32)>);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    pub fn var(v: Var) -> Mono {
        Mono(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.iter().find(|p| p.0 == v).map(|p| p.1).unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    fn without(&self, v: Var) -> (u32, Mono) {
        let mut e = 0;
        let mut rest = Vec::with_capacity(self.0.len());
        for &(w, f) in &self.0 {
            if w == v {
                e = f;
            } else {
                rest.push((w, f));
            }
        }
        (e, Mono(rest))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Q>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::term(Mono::var(v), Q::one())
    }

    pub fn term(m: Mono, c: Q) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Q {
        self.leading().map(|t| t.1.clone()).unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Make the leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &d.mul_mono(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Substitute a rational value for a variable.
    pub fn subs(&self, v: Var, x: &Q) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            let val = if e == 0 { c.clone() } else { c * num_traits::pow(x.clone(), e as usize) };
            out.add_term(rest, val);
        }
        out
    }

    /// Substitute a polynomial for a variable.
    pub fn subs_poly(&self, v: Var, p: &MPoly) -> MPoly {
        let coeffs = self.to_univariate(v);
        let mut out = MPoly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * p) + c;
        }
        out
    }

    /// Evaluate with every variable given a value; `None` if a variable is missing.
    pub fn eval(&self, vals: &dyn Fn(Var) -> Option<Q>) -> Option<Q> {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                t *= num_traits::pow(vals(v)?, e as usize);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Coefficients of `self` viewed as a polynomial in `v`, lowest degree first.
    pub fn to_univariate(&self, v: Var) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            out[e as usize].add_term(rest, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_univariate(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let m = if i == 0 { Mono::one() } else { Mono::var(v).pow(i as u32) };
            for (k, x) in &c.terms {
                out.add_term(k.mul(&m), x.clone());
            }
        }
        out
    }

    /// Greatest common divisor, normalized to be monic (lex leading coefficient 1).
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return MPoly::one();
        }
        let mut vs = self.vars();
        vs.extend(other.vars());
        vs.sort();
        vs.dedup();
        let v = vs[0];
        if vs.len() == 1 {
            let a = crate::UPoly::from_mpoly(self, v).unwrap();
            let b = crate::UPoly::from_mpoly(other, v).unwrap();
            return a.gcd(&b).to_mpoly(v);
        }
        let a = self.to_univariate(v);
        let b = other.to_univariate(v);
        let ca = content(&a);
        let cb = content(&b);
        let g = ca.gcd(&cb);
        let pa = prim(&a, &ca);
        let pb = prim(&b, &cb);
        let h = upoly_gcd_primitive(pa, pb);
        (&g * &MPoly::from_univariate(v, &h)).monic()
    }

    /// Gcd of the numerators divided by the lcm of the denominators of the coefficients, made positive.
    pub fn rational_content(&self) -> Q {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Q::one();
        }
        Q::new(num, den)
    }
}

impl Mono {
    pub fn pow(&self, n: u32) -> Mono {
        if n == 0 {
            return Mono::one();
        }
        Mono(self.0.iter().map(|&(v, e)| (v, e * n)).collect())
    }
}

fn trim(p: &mut Vec<MPoly>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in p {
        g = g.gcd(c);
        if g.as_constant().is_some_and(|x| x.is_one()) {
            break;
        }
    }
    g
}

fn prim(p: &[MPoly], c: &MPoly) -> Vec<MPoly> {
    p.iter().map(|x| x.div_exact(c).expect("content divides coefficients")).collect()
}

fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + dr - db] = &r[i + dr - db] - &(&lr * bc);
        }
        trim(&mut r);
    }
    r
}

fn upoly_gcd_primitive(mut a: Vec<MPoly>, mut b: Vec<MPoly>) -> Vec<MPoly> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_empty() {
            return a;
        }
        if b.len() == 1 {
            return vec![MPoly::one()];
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        let c = content(&r);
        a = b;
        b = prim(&r, &c);
        let rc = b.iter().fold(Q::zero(), |acc, x| {
            let xc = x.rational_content();
            if acc.is_zero() {
                xc
            } else {
                use num_integer::Integer;
                Q::new(acc.numer().gcd(xc.numer()), acc.denom().lcm(xc.denom()))
            }
        });
        if !rc.is_zero() && !rc.is_one() {
            let inv = rc.recip();
            b = b.iter().map(|x| x.scale(&inv)).collect();
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        &self + &o
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        &self - &o
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

pub(crate) fn fmt_q(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MPoly {
    /// Terms in descending total degree, variables sorted by name.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut items: Vec<(Vec<(String, u32)>, &Q)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut vs: Vec<(String, u32)> = m.0.iter().map(|&(v, e)| (v.name(), e)).collect();
                vs.sort();
                (vs, c)
            })
            .collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().map(|p| p.1).sum();
            let db: u32 = b.0.iter().map(|p| p.1).sum();
            db.cmp(&da).then_with(|| a.0.cmp(&b.0))
        });
        for (i, (vs, c)) in items.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || vs.is_empty() {
                parts.push(fmt_q(&abs));
            }
            for (name, e) in vs {
                if *e == 1 {
                    parts.push(name.clone());
                } else {
                    parts.push(format!("{name}^{e}"));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn lex_order_puts_higher_powers_last() {
        let x = Var::new("x_mp_t");
        let y = Var::new("y_mp_t");
        let a = Mono(vec![(x, 1)]);
        let b = Mono(vec![(y, 5)]);
        assert!(a > b);
        assert!(Mono(vec![(x, 2)]) > Mono(vec![(x, 1), (y, 3)]));
    }

    #[test]
    fn exact_division_and_gcd() {
        let x = MPoly::var(Var::new("x_mp_t"));
        let y = MPoly::var(Var::new("y_mp_t"));
        let f = &(&x + &y) * &(&x - &MPoly::constant(q(2)));
        let g = &(&x + &y) * &(&y + &MPoly::constant(q(3)));
        assert_eq!(f.div_exact(&(&x + &y)).unwrap(), &x - &MPoly::constant(q(2)));
        assert_eq!(f.gcd(&g), (&x + &y).monic());
        assert!(f.div_exact(&(&y + &MPoly::constant(q(3)))).is_none());
    }

    #[test]
    fn univariate_round_trip() {
        let xv = Var::new("x_mp_t");
        let x = MPoly::var(xv);
        let y = MPoly::var(Var::new("y_mp_t"));
        let f = &(&x.pow(3) * &y) + &(&x - &y);
        assert_eq!(MPoly::from_univariate(xv, &f.to_univariate(xv)), f);
        assert_eq!(f.subs(xv, &q(2)), &(&y.scale(&q(8)) + &MPoly::constant(q(2))) - &y);
    }

    #[test]
    fn zeroth_power_is_the_unit_monomial() {
        let m = Mono::var(Var::new("x_mp_t")).pow(0);
        assert!(m.is_one());
        assert_eq!(MPoly::term(m, q(3)), MPoly::constant(q(3)));
    }
}
