//! Truncated formal series in a rational power of `q` with Laurent coefficients.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use va_exact::{q, Q};

use crate::laurent::{fmt_mono, Mono, MultiLaurent};

/// `Σ_e c_e q^{e/N}` with every exponent below `trunc / N` known exactly.
///
/// `trunc = None` marks an exact (finite) series.
#[derive(Clone, Debug)]
pub struct GradedQSeries {
    denom: i64,
    coeffs: BTreeMap<i64, MultiLaurent>,
    trunc: Option<i64>,
}

/// Equal coefficients and equal truncation, whatever the denominators.
impl PartialEq for GradedQSeries {
    fn eq(&self, o: &GradedQSeries) -> bool {
        let (a, b) = GradedQSeries::align(self, o);
        a.coeffs == b.coeffs && a.trunc == b.trunc
    }
}

impl Eq for GradedQSeries {}

/// First point where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Q,
    pub monomial: Mono,
    pub left: Q,
    pub right: Q,
}

impl Mismatch {
    pub fn describe(&self) -> String {
        format!(
            "q^{} {}: {} vs {}",
            va_exact::fmt_rational(&self.exponent),
            fmt_mono(&self.monomial),
            va_exact::fmt_rational(&self.left),
            va_exact::fmt_rational(&self.right)
        )
    }
}

fn to_i64(x: &num_bigint::BigInt) -> i64 {
    x.to_i64().expect("q-exponent out of range")
}

fn units(r: &Q, n: i64) -> i64 {
    let s = r * Q::from_integer(n.into());
    assert!(s.is_integer(), "exponent {r} is not a multiple of 1/{n}");
    to_i64(s.numer())
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl GradedQSeries {
    /// The exact zero series.
    pub fn zero() -> GradedQSeries {
        GradedQSeries { denom: 1, coeffs: BTreeMap::new(), trunc: None }
    }

    pub fn one() -> GradedQSeries {
        GradedQSeries::term(&Q::zero(), MultiLaurent::one())
    }

    /// The exact series `c q^exp`.
    pub fn term(exp: &Q, c: MultiLaurent) -> GradedQSeries {
        let denom = to_i64(exp.denom());
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(to_i64(exp.numer()), c);
        }
        GradedQSeries { denom, coeffs, trunc: None }
    }

    /// Zero, known only below `q^order`.
    pub fn zero_to(order: &Q) -> GradedQSeries {
        GradedQSeries::zero().truncated(order)
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Exponent below which the series is known, or `None` if exact.
    pub fn trunc(&self) -> Option<Q> {
        self.trunc.map(|t| q(t, self.denom))
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<Q> {
        self.coeffs.keys().next().map(|e| q(*e, self.denom))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.values().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms `(exponent, coefficient)` in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (Q, &MultiLaurent)> + '_ {
        self.coeffs.iter().map(move |(e, c)| (q(*e, self.denom), c))
    }

    pub fn coeff(&self, exp: &Q) -> MultiLaurent {
        let s = exp * Q::from_integer(self.denom.into());
        if !s.is_integer() {
            return MultiLaurent::zero();
        }
        self.coeffs.get(&to_i64(s.numer())).cloned().unwrap_or_default()
    }

    /// Re-express in powers of `q^{1/n}`; `n` must be a multiple of the current denominator.
    pub fn with_denom(&self, n: i64) -> GradedQSeries {
        assert!(n > 0 && n % self.denom == 0, "denominator {n} does not refine {}", self.denom);
        let f = n / self.denom;
        GradedQSeries {
            denom: n,
            coeffs: self.coeffs.iter().map(|(e, c)| (e * f, c.clone())).collect(),
            trunc: self.trunc.map(|t| t * f),
        }
    }

    fn refine_for(&self, r: &Q) -> GradedQSeries {
        let d = to_i64(r.denom());
        self.with_denom(self.denom.lcm(&d))
    }

    fn align(a: &GradedQSeries, b: &GradedQSeries) -> (GradedQSeries, GradedQSeries) {
        let n = a.denom.lcm(&b.denom);
        (a.with_denom(n), b.with_denom(n))
    }

    fn normalize(mut self) -> GradedQSeries {
        if let Some(t) = self.trunc {
            self.coeffs.retain(|e, _| *e < t);
        }
        self.coeffs.retain(|_, c| !c.is_zero());
        self
    }

    /// Forget everything at or above `q^order`.
    pub fn truncated(&self, order: &Q) -> GradedQSeries {
        let s = self.refine_for(order);
        let t = units(order, s.denom);
        GradedQSeries { trunc: min_opt(s.trunc, Some(t)), ..s }.normalize()
    }

    pub fn add(&self, o: &GradedQSeries) -> GradedQSeries {
        let (mut a, b) = GradedQSeries::align(self, o);
        for (e, c) in b.coeffs {
            let slot = a.coeffs.entry(e).or_default();
            *slot = slot.add(&c);
        }
        a.trunc = min_opt(a.trunc, b.trunc);
        a.normalize()
    }

    pub fn neg(&self) -> GradedQSeries {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, o: &GradedQSeries) -> GradedQSeries {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Q) -> GradedQSeries {
        self.mul_laurent(&MultiLaurent::constant(c.clone()))
    }

    pub fn mul_laurent(&self, l: &MultiLaurent) -> GradedQSeries {
        GradedQSeries {
            denom: self.denom,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.mul(l))).collect(),
            trunc: self.trunc,
        }
        .normalize()
    }

    /// Multiply by `q^r`.
    pub fn shift(&self, r: &Q) -> GradedQSeries {
        let s = self.refine_for(r);
        let d = units(r, s.denom);
        GradedQSeries {
            denom: s.denom,
            coeffs: s.coeffs.into_iter().map(|(e, c)| (e + d, c)).collect(),
            trunc: s.trunc.map(|t| t + d),
        }
    }

    /// Lower bound for the exponents of the (possibly unknown) terms, in units.
    fn low(&self) -> Option<i64> {
        self.coeffs.keys().next().copied().or(self.trunc)
    }

    pub fn mul(&self, o: &GradedQSeries) -> GradedQSeries {
        let (a, b) = GradedQSeries::align(self, o);
        let trunc = match (a.trunc, b.trunc) {
            (None, None) => None,
            (Some(ta), None) => b.low().map(|v| ta + v).or(Some(ta)),
            (None, Some(tb)) => a.low().map(|v| tb + v).or(Some(tb)),
            (Some(ta), Some(tb)) => Some((ta + b.low().unwrap()).min(tb + a.low().unwrap())),
        };
        let mut coeffs: BTreeMap<i64, MultiLaurent> = BTreeMap::new();
        for (ea, ca) in &a.coeffs {
            for (eb, cb) in &b.coeffs {
                let e = ea + eb;
                if trunc.is_some_and(|t| e >= t) {
                    break;
                }
                let slot = coeffs.entry(e).or_default();
                for (m, c) in cb.terms() {
                    slot.add_scaled(ca, m, c);
                }
            }
        }
        GradedQSeries { denom: a.denom, coeffs, trunc }.normalize()
    }

    /// Multiply by the two-term factor `1 + l q^e`.
    pub fn mul_binomial(&self, l: &MultiLaurent, e: &Q) -> GradedQSeries {
        let s = self.refine_for(e);
        let d = units(e, s.denom);
        let mut out = s.clone();
        for (k, c) in &s.coeffs {
            let slot = out.coeffs.entry(k + d).or_default();
            *slot = slot.add(&c.mul(l));
        }
        out.trunc = s.trunc.map(|t| t.min(t + d));
        out.normalize()
    }

    /// Divide by `1 + l q^e` with `e > 0`, expanding the reciprocal geometrically.
    ///
    /// Panics on an exact series, whose quotient would not terminate.
    pub fn div_binomial(&self, l: &MultiLaurent, e: &Q) -> GradedQSeries {
        assert!(e.is_positive(), "reciprocal of 1 + l q^e needs e > 0");
        let s = self.refine_for(e);
        let d = units(e, s.denom);
        let t = s.trunc.expect("reciprocal of a factor needs a truncation order");
        let mut r: BTreeMap<i64, MultiLaurent> = BTreeMap::new();
        let Some(&start) = s.coeffs.keys().next() else {
            return s;
        };
        for k in start..t {
            let mut v = s.coeffs.get(&k).cloned().unwrap_or_default();
            if let Some(prev) = r.get(&(k - d)) {
                for (m, c) in l.terms() {
                    v.add_scaled(prev, m, &-c);
                }
            }
            if !v.is_zero() {
                r.insert(k, v);
            }
        }
        GradedQSeries { denom: s.denom, coeffs: r, trunc: Some(t) }
    }

    /// Divide by `1 + l q^e` for a single-term `l` and any `e != 0`: for `e < 0`
    /// the factor is rewritten as `l q^e (1 + l^{-1} q^{-e})`.
    pub fn div_binomial_any(&self, l: &MultiLaurent, e: &Q) -> GradedQSeries {
        if e.is_positive() {
            return self.div_binomial(l, e);
        }
        let (m, c) = l.as_term().expect("monomial factor");
        let inv = MultiLaurent::term(crate::laurent::mono_inv(&m), c.recip());
        self.mul_laurent(&inv).shift(&-e).div_binomial(&inv, &-e)
    }

    /// Reciprocal of a series whose lowest term is a nonzero constant at `q^0`.
    pub fn recip_unit(&self) -> GradedQSeries {
        let t = self.trunc.expect("reciprocal needs a truncation order");
        let c0 = self
            .coeffs
            .get(&0)
            .and_then(|c| c.as_constant())
            .filter(|c| !c.is_zero() && self.coeffs.keys().next() == Some(&0))
            .expect("reciprocal only of unit series");
        let inv0 = c0.recip();
        let mut r: BTreeMap<i64, MultiLaurent> = BTreeMap::new();
        r.insert(0, MultiLaurent::constant(inv0.clone()));
        for k in 1..t {
            let mut v = MultiLaurent::zero();
            for (j, c) in self.coeffs.range(1..=k) {
                if let Some(prev) = r.get(&(k - j)) {
                    for (m, x) in c.terms() {
                        v.add_scaled(prev, m, &(-x * &inv0));
                    }
                }
            }
            if !v.is_zero() {
                r.insert(k, v);
            }
        }
        GradedQSeries { denom: self.denom, coeffs: r, trunc: Some(t) }.normalize()
    }

    pub fn map_laurent(&self, f: impl Fn(&MultiLaurent) -> MultiLaurent) -> GradedQSeries {
        GradedQSeries { denom: self.denom, coeffs: self.coeffs.iter().map(|(e, c)| (*e, f(c))).collect(), trunc: self.trunc }
            .normalize()
    }

    /// The series with every fugacity set to 1.
    pub fn at_one(&self) -> Vec<(Q, Q)> {
        self.iter().map(|(e, c)| (e, c.at_one())).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Exponent bound below which both series are known.
    pub fn common_window(a: &GradedQSeries, b: &GradedQSeries) -> Option<Q> {
        let (x, y) = GradedQSeries::align(a, b);
        min_opt(x.trunc, y.trunc).map(|t| q(t, x.denom))
    }

    /// The lowest exponent (then monomial) where the two series differ below
    /// their common window.
    pub fn first_difference(a: &GradedQSeries, b: &GradedQSeries) -> Option<Mismatch> {
        let (x, y) = GradedQSeries::align(a, b);
        let t = min_opt(x.trunc, y.trunc);
        let keys: std::collections::BTreeSet<i64> = x.coeffs.keys().chain(y.coeffs.keys()).copied().collect();
        for e in keys {
            if t.is_some_and(|t| e >= t) {
                break;
            }
            let ca = x.coeffs.get(&e).cloned().unwrap_or_default();
            let cb = y.coeffs.get(&e).cloned().unwrap_or_default();
            let diff = ca.sub(&cb);
            let first = diff.terms().next().map(|(m, _)| *m);
            if let Some(m) = first {
                return Some(Mismatch { exponent: q(e, x.denom), monomial: m, left: ca.coeff(&m), right: cb.coeff(&m) });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{LVar, MultiLaurent};

    fn one_minus_q_to(order: i64) -> GradedQSeries {
        GradedQSeries::one().truncated(&q(order, 1)).mul_binomial(&MultiLaurent::constant(q(-1, 1)), &q(1, 1))
    }

    #[test]
    fn geometric_reciprocal() {
        let g = GradedQSeries::one().truncated(&q(5, 1)).div_binomial(&MultiLaurent::constant(q(-1, 1)), &q(1, 1));
        assert_eq!(g.at_one(), (0..5).map(|k| (q(k, 1), q(1, 1))).collect::<Vec<_>>());
        assert_eq!(g.mul(&one_minus_q_to(5)), GradedQSeries::one().truncated(&q(5, 1)));
        assert_eq!(one_minus_q_to(5).recip_unit(), g);
    }

    #[test]
    fn truncation_of_products() {
        let a = GradedQSeries::term(&q(1, 8), MultiLaurent::var(LVar::W, 1)).truncated(&q(2, 1));
        let b = GradedQSeries::one().truncated(&q(3, 1));
        assert_eq!(a.mul(&b).trunc(), Some(q(2, 1)));
        assert_eq!(a.shift(&q(1, 3)).trunc(), Some(q(7, 3)));
        assert_eq!(a.shift(&q(1, 3)).denom(), 24);
    }

    #[test]
    fn negative_exponent_factor() {
        // 1/(1 + x q^{-1/2}) = x^{-1} q^{1/2} / (1 + x^{-1} q^{1/2})
        let x = MultiLaurent::var(LVar::X, 1);
        let lhs = GradedQSeries::one().truncated(&q(3, 1)).div_binomial_any(&x, &q(-1, 2));
        let back = lhs.mul_binomial(&x, &q(-1, 2));
        assert!(GradedQSeries::first_difference(&back, &GradedQSeries::one()).is_none());
        assert_eq!(lhs.valuation(), Some(q(1, 2)));
    }
}
