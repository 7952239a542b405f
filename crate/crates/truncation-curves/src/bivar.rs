//! Sparse polynomials in `c` and `λ` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};
use va_exact::{fmt_rational, MPoly, Mono, UPoly, Var, Q};

/// `Σ a_{ij} c^i λ^j`; the map never stores a zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Q>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(a: Q) -> Self {
        Self::term(0, 0, a)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Q::from_integer(n.into()))
    }

    pub fn term(i: u32, j: u32, a: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !a.is_zero() {
            terms.insert((i, j), a);
        }
        BivarPoly { terms }
    }

    pub fn c() -> Self {
        Self::term(1, 0, Q::one())
    }

    pub fn lambda() -> Self {
        Self::term(0, 1, Q::one())
    }

    /// `a + b c`
    pub fn lin(a: i64, b: i64) -> Self {
        Self::int(a).add(&Self::term(1, 0, Q::from_integer(b.into())))
    }

    /// Polynomial in `c` alone from integer coefficients, lowest degree first.
    pub fn in_c(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &a) in cs.iter().enumerate() {
            p.add_term(i as u32, 0, &Q::from_integer(a.into()));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Q)>>(it: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), a) in it {
            p.add_term(i, j, &a);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, a: &Q) {
        if a.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Q::zero);
        *e += a;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn degree_c(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_lambda(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for ((i, j), a) in &o.terms {
            p.add_term(*i, *j, a);
        }
        p
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, a: &Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * a)))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Q::from_integer(n.into()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &o.terms {
                p.add_term(i + k, j + l, &(a * b));
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(Q::one()), |acc, _| acc.mul(self))
    }

    /// Product of a list of factors.
    pub fn product(fs: &[Self]) -> Self {
        fs.iter().fold(Self::constant(Q::one()), |acc, f| acc.mul(f))
    }

    pub fn eval(&self, c: &Q, lambda: &Q) -> Q {
        self.terms.iter().fold(Q::zero(), |acc, ((i, j), a)| acc + a * pow_q(c, *i) * pow_q(lambda, *j))
    }

    /// Coefficients of `λ^j` as polynomials in `c`, lowest `j` first.
    pub fn coeffs_in_lambda(&self) -> Vec<UPoly> {
        let n = if self.is_zero() { 0 } else { self.degree_lambda() as usize + 1 };
        let mut cs = vec![vec![Q::zero(); self.degree_c() as usize + 1]; n];
        for ((i, j), a) in &self.terms {
            cs[*j as usize][*i as usize] = a.clone();
        }
        cs.into_iter().map(UPoly::new).collect()
    }

    /// Coefficients of `c^i` as polynomials in `λ`.
    pub fn coeffs_in_c(&self) -> Vec<UPoly> {
        self.swap().coeffs_in_lambda()
    }

    /// Exchange the roles of `c` and `λ`.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((i, j), a)| ((*j, *i), a.clone())))
    }

    /// `p(c0, λ)` as a polynomial in `λ`.
    pub fn at_c(&self, c0: &Q) -> UPoly {
        UPoly::new(self.coeffs_in_lambda().iter().map(|u| u.eval(c0)).collect())
    }

    /// `p(c, λ0)` as a polynomial in `c`.
    pub fn at_lambda(&self, l0: &Q) -> UPoly {
        UPoly::new(self.coeffs_in_c().iter().map(|u| u.eval(l0)).collect())
    }

    /// Whether `self = t · o` for a nonzero rational `t`.
    pub fn is_proportional(&self, o: &Self) -> bool {
        if self.is_zero() || o.is_zero() {
            return self.is_zero() && o.is_zero();
        }
        if self.terms.len() != o.terms.len() || self.terms.keys().ne(o.terms.keys()) {
            return false;
        }
        let (k, a) = self.terms.iter().next().unwrap();
        let t = a / &o.terms[k];
        self.terms.iter().all(|(k, a)| *a == &o.terms[k] * &t)
    }

    /// Scaled so the coefficients are coprime integers with positive leading term
    /// (largest `(i, j)` in lexicographic order).
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut l = num_bigint::BigInt::one();
        for a in self.terms.values() {
            l = l.lcm(a.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for a in self.terms.values() {
            g = g.gcd(&(a * Q::from_integer(l.clone())).to_integer());
        }
        let mut s = Q::new(l, g);
        if self.terms.values().next_back().unwrap().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// As a polynomial in the named variables `c` and `lambda`.
    pub fn to_mpoly(&self) -> MPoly {
        let (vc, vl) = (Var::new("c"), Var::new("lambda"));
        self.terms.iter().fold(MPoly::zero(), |acc, ((i, j), a)| {
            let m = Mono::var(vc).pow(*i).mul(&Mono::var(vl).pow(*j));
            &acc + &MPoly::term(m, a.clone())
        })
    }

    pub fn from_mpoly(p: &MPoly) -> Self {
        let (vc, vl) = (Var::new("c"), Var::new("lambda"));
        Self::from_terms(p.terms().map(|(m, a)| ((m.exp(vc), m.exp(vl)), a.clone())))
    }

    /// Greatest common factor, normalized by [`BivarPoly::primitive`].
    pub fn gcd(&self, o: &Self) -> Self {
        Self::from_mpoly(&self.to_mpoly().gcd(&o.to_mpoly())).primitive()
    }

    /// SHA-256 of the canonical coefficient list `i,j:num/den;` in increasing `(i, j)`.
    pub fn coefficient_hash(&self) -> String {
        let mut h = Sha256::new();
        for ((i, j), a) in &self.terms {
            h.update(format!("{i},{j}:{};", fmt_rational(a)).as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn pow_q(x: &Q, n: u32) -> Q {
    (0..n).fold(Q::one(), |acc, _| acc * x)
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((i, j), a) in self.terms.iter().rev() {
            let neg = a.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut parts = Vec::new();
            let abs = a.abs();
            if !abs.is_one() || (*i == 0 && *j == 0) {
                parts.push(fmt_rational(&abs));
            }
            match i {
                0 => {}
                1 => parts.push("c".into()),
                _ => parts.push(format!("c^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("lambda".into()),
                _ => parts.push(format!("lambda^{j}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use va_exact::q;

    #[test]
    fn arithmetic_and_eval() {
        // (1 + 2c)(c - λ) at (3, 1/2)
        let p = BivarPoly::lin(1, 2).mul(&BivarPoly::c().sub(&BivarPoly::lambda()));
        assert_eq!(p.eval(&q(3, 1), &q(1, 2)), q(35, 2));
        assert_eq!(p.degree_c(), 2);
        assert_eq!(p.degree_lambda(), 1);
        assert_eq!(p.to_string(), "2*c^2 - 2*c*lambda + c - lambda");
    }

    #[test]
    fn slices() {
        let p = BivarPoly::c().mul(&BivarPoly::lambda()).add(&BivarPoly::int(4));
        assert_eq!(p.at_c(&q(2, 1)), UPoly::from_ints(&[4, 2]));
        assert_eq!(p.at_lambda(&q(-1, 1)), UPoly::from_ints(&[4, -1]));
        assert_eq!(p.coeffs_in_lambda(), vec![UPoly::from_ints(&[4]), UPoly::from_ints(&[0, 1])]);
    }

    #[test]
    fn proportionality_and_primitive_form() {
        let p = BivarPoly::lin(2, 4).mul(&BivarPoly::lambda());
        assert!(p.is_proportional(&p.scale(&q(-3, 7))));
        assert!(!p.is_proportional(&p.add(&BivarPoly::int(1))));
        assert_eq!(p.scale(&q(-5, 3)).primitive(), BivarPoly::lin(1, 2).mul(&BivarPoly::lambda()));
    }
}
