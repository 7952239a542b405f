//! Laurent polynomials in the fugacities `z1, z2, w, x, y`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use va_exact::{fmt_rational, Q};

/// Number of fugacity slots.
pub const NVARS: usize = 5;

/// The fugacity variables. `x` and `y` are only used when a display is read
/// literally; the verifications work with `x = z1 z2`, `y = z1 / z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LVar {
    Z1,
    Z2,
    W,
    X,
    Y,
}

impl LVar {
    pub const ALL: [LVar; NVARS] = [LVar::Z1, LVar::Z2, LVar::W, LVar::X, LVar::Y];

    pub fn name(self) -> &'static str {
        match self {
            LVar::Z1 => "z1",
            LVar::Z2 => "z2",
            LVar::W => "w",
            LVar::X => "x",
            LVar::Y => "y",
        }
    }
}

/// Exponent vector of a Laurent monomial.
pub type Mono = [i32; NVARS];

/// `Π v^e` from `(variable, exponent)` pairs.
pub fn mono(parts: &[(LVar, i32)]) -> Mono {
    let mut m = [0; NVARS];
    for (v, e) in parts {
        m[*v as usize] += e;
    }
    m
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for i in 0..NVARS {
        m[i] += b[i];
    }
    m
}

pub fn mono_pow(a: &Mono, k: i32) -> Mono {
    let mut m = *a;
    for e in m.iter_mut() {
        *e *= k;
    }
    m
}

pub fn mono_inv(a: &Mono) -> Mono {
    mono_pow(a, -1)
}

pub fn fmt_mono(m: &Mono) -> String {
    let parts: Vec<String> = LVar::ALL
        .iter()
        .zip(m.iter())
        .filter(|(_, e)| **e != 0)
        .map(|(v, e)| if *e == 1 { v.name().to_string() } else { format!("{}^{}", v.name(), e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// A finitely supported map from monomials to rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiLaurent {
    terms: BTreeMap<Mono, Q>,
}

impl MultiLaurent {
    pub fn zero() -> MultiLaurent {
        MultiLaurent::default()
    }

    pub fn one() -> MultiLaurent {
        MultiLaurent::constant(Q::one())
    }

    pub fn constant(c: Q) -> MultiLaurent {
        MultiLaurent::term([0; NVARS], c)
    }

    pub fn term(m: Mono, c: Q) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        out.add_term(m, c);
        out
    }

    pub fn monomial(m: Mono) -> MultiLaurent {
        MultiLaurent::term(m, Q::one())
    }

    pub fn var(v: LVar, e: i32) -> MultiLaurent {
        MultiLaurent::monomial(mono(&[(v, e)]))
    }

    /// `m - m^{-1}`.
    pub fn antisym(m: Mono) -> MultiLaurent {
        let mut out = MultiLaurent::monomial(m);
        out.add_term(mono_inv(&m), -Q::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The value if this is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    /// The single monomial and its coefficient, if there is exactly one.
    pub fn as_term(&self) -> Option<(Mono, Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// `self += c · m · other`.
    pub fn add_scaled(&mut self, other: &MultiLaurent, m: &Mono, c: &Q) {
        for (k, v) in &other.terms {
            self.add_term(mono_mul(k, m), v * c);
        }
    }

    pub fn add(&self, o: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out.add_scaled(o, &[0; NVARS], &Q::one());
        out
    }

    pub fn sub(&self, o: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out.add_scaled(o, &[0; NVARS], &-Q::one());
        out
    }

    pub fn neg(&self) -> MultiLaurent {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> MultiLaurent {
        if c.is_zero() {
            return MultiLaurent::zero();
        }
        MultiLaurent { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul(&self, o: &MultiLaurent) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        for (m, c) in &o.terms {
            out.add_scaled(self, m, c);
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono) -> MultiLaurent {
        MultiLaurent { terms: self.terms.iter().map(|(k, v)| (mono_mul(k, m), v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiLaurent {
        (0..k).fold(MultiLaurent::one(), |acc, _| acc.mul(self))
    }

    /// Apply a monomial map (a group homomorphism on exponents) termwise.
    pub fn map_monos(&self, f: impl Fn(&Mono) -> Mono) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Replace `x` by `z1 z2` and `y` by `z1 / z2`.
    pub fn eliminate_xy(&self) -> MultiLaurent {
        self.map_monos(eliminate_xy_mono)
    }

    /// Sum of the coefficients: every variable set to 1.
    pub fn at_one(&self) -> Q {
        self.terms.values().fold(Q::zero(), |a, c| a + c)
    }

    /// Largest absolute exponent appearing in any slot.
    pub fn degree_span(&self) -> i32 {
        self.terms.keys().flat_map(|m| m.iter().map(|e| e.abs())).max().unwrap_or(0)
    }
}

pub fn eliminate_xy_mono(m: &Mono) -> Mono {
    let (x, y) = (m[LVar::X as usize], m[LVar::Y as usize]);
    let mut out = *m;
    out[LVar::X as usize] = 0;
    out[LVar::Y as usize] = 0;
    out[LVar::Z1 as usize] += x + y;
    out[LVar::Z2 as usize] += x - y;
    out
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let ms = fmt_mono(m);
                if ms == "1" {
                    fmt_rational(c)
                } else if c.is_one() {
                    ms
                } else {
                    format!("{}*{}", fmt_rational(c), ms)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use va_exact::q;

    #[test]
    fn antisym_squares() {
        let z = mono(&[(LVar::Z1, 1)]);
        let a = MultiLaurent::antisym(z);
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(&[0; NVARS]), q(-2, 1));
        assert_eq!(sq.coeff(&mono(&[(LVar::Z1, 2)])), q(1, 1));
        assert_eq!(sq.at_one(), q(0, 1));
    }

    #[test]
    fn xy_elimination() {
        let m = mono(&[(LVar::X, 1), (LVar::Y, -1)]);
        assert_eq!(eliminate_xy_mono(&m), mono(&[(LVar::Z2, 2)]));
        assert_eq!(fmt_mono(&mono(&[(LVar::Z1, -1), (LVar::W, 2)])), "z1^-1*w^2");
    }
}
