//! Theta functions of `A1`, the Weyl denominator, Dedekind eta and the
//! character of four free fermions, as truncated expansions.
//!
//! Every builder returns a series known for all exponents below `order`.

use va_exact::{q, Q};

use crate::laurent::{mono_inv, mono_pow, Mono, MultiLaurent};
use crate::series::GradedQSeries;

fn ceil_int(r: &Q) -> i64 {
    r.ceil().to_integer().try_into().expect("order out of range")
}

/// Expand `Π (1 + l q^e)` over `mul` and `Π 1/(1 + l q^e)` over `div`, starting
/// from `seed`, keeping exponents below `trunc`.
pub fn expand_factors(seed: GradedQSeries, trunc: &Q, mul: &[(MultiLaurent, Q)], div: &[(MultiLaurent, Q)]) -> GradedQSeries {
    let mut s = seed.truncated(trunc);
    for (l, e) in mul {
        if e < trunc {
            s = s.mul_binomial(l, e);
        }
    }
    for (l, e) in div {
        if e < trunc {
            s = s.div_binomial(l, e);
        }
    }
    s
}

/// `1 - v q^n` factors `(−v, n)` for `n = 1 .. < bound`.
pub(crate) fn minus_factors(v: &MultiLaurent, bound: &Q) -> Vec<(MultiLaurent, Q)> {
    (1..=ceil_int(bound).max(0)).map(|n| (v.neg(), q(n, 1))).filter(|(_, e)| e < bound).collect()
}

/// `η(q) = q^{1/24} Π_{n≥1} (1 - q^n)`.
pub fn eta(order: &Q) -> GradedQSeries {
    let shift = q(1, 24);
    let inner = order - &shift;
    expand_factors(GradedQSeries::one(), &inner, &minus_factors(&MultiLaurent::one(), &inner), &[]).shift(&shift)
}

fn theta(v: &Mono, order: &Q, odd: bool) -> GradedQSeries {
    let mut s = GradedQSeries::zero_to(order);
    let mut m: i64 = if odd { 1 } else { 0 };
    while q(m * m, 4) < *order {
        for sign in if m == 0 { vec![1] } else { vec![1, -1] } {
            let k = sign * m;
            s = s.add(&GradedQSeries::term(&q(m * m, 4), MultiLaurent::monomial(mono_pow(v, k as i32))));
        }
        m += 2;
    }
    s
}

/// `θ_{A1}(v) = Σ_{m even} v^m q^{m²/4}`.
pub fn theta_a1(v: &Mono, order: &Q) -> GradedQSeries {
    theta(v, order, false)
}

/// `θ_{A1+(1)}(v) = Σ_{m odd} v^m q^{m²/4}`.
pub fn theta_a1_shift(v: &Mono, order: &Q) -> GradedQSeries {
    theta(v, order, true)
}

/// The product part `Π_{n≥1} (1 - v² q^n)(1 - q^n)(1 - v^{-2} q^n)` below `q^order`.
pub fn weyl_pi_unit(v: &Mono, order: &Q) -> GradedQSeries {
    let mut f = minus_factors(&MultiLaurent::monomial(mono_pow(v, 2)), order);
    f.extend(minus_factors(&MultiLaurent::one(), order));
    f.extend(minus_factors(&MultiLaurent::monomial(mono_pow(v, -2)), order));
    expand_factors(GradedQSeries::one(), order, &f, &[])
}

/// `Π(v) = q^{1/8} (v - v^{-1}) Π_{n≥1} (1 - v² q^n)(1 - q^n)(1 - v^{-2} q^n)`.
pub fn weyl_pi(v: &Mono, order: &Q) -> GradedQSeries {
    let shift = q(1, 8);
    weyl_pi_unit(v, &(order - &shift)).mul_laurent(&MultiLaurent::antisym(*v)).shift(&shift)
}

/// Multiply `s` by `Π(v)` factor by factor, keeping exponents below `order`.
pub fn times_weyl_pi(s: &GradedQSeries, v: &Mono, order: &Q) -> GradedQSeries {
    let shift = q(1, 8);
    let inner = order - &shift;
    let mut f = minus_factors(&MultiLaurent::monomial(mono_pow(v, 2)), &inner);
    f.extend(minus_factors(&MultiLaurent::one(), &inner));
    f.extend(minus_factors(&MultiLaurent::monomial(mono_pow(v, -2)), &inner));
    let base = s.mul_laurent(&MultiLaurent::antisym(*v));
    expand_factors(base, &inner, &f, &[]).shift(&shift)
}

/// `(1 + m q^{n-1/2})(1 + m^{-1} q^{n-1/2})` for `n ≥ 1` below `bound`.
pub(crate) fn fermion_factors(ms: &[Mono], bound: &Q, skip: Option<i64>) -> Vec<(MultiLaurent, Q)> {
    let mut out = Vec::new();
    let mut n = 0i64;
    while q(2 * n + 1, 2) < *bound {
        if Some(n) != skip {
            for m in ms {
                out.push((MultiLaurent::monomial(*m), q(2 * n + 1, 2)));
                out.push((MultiLaurent::monomial(mono_inv(m)), q(2 * n + 1, 2)));
            }
        }
        n += 1;
    }
    out
}

/// `F(x, y) = q^{-1/12} Π_{n≥1} (1 + x q^{n-1/2})(1 + x^{-1} q^{n-1/2})(1 + y q^{n-1/2})(1 + y^{-1} q^{n-1/2})`.
pub fn fermion_f(x: &Mono, y: &Mono, order: &Q) -> GradedQSeries {
    let shift = q(-1, 12);
    let inner = order - &shift;
    expand_factors(GradedQSeries::one(), &inner, &fermion_factors(&[*x, *y], &inner, None), &[]).shift(&shift)
}

/// `η² F(x, y)` through the theta quotient, with `s = √(xy)`, `t = √(x/y)` given
/// as monomials: `θ(s)θ(t) + θ'(s)θ'(t)`.
pub fn fermion_theta_numerator(s: &Mono, t: &Mono, order: &Q) -> GradedQSeries {
    theta_a1(s, order).mul(&theta_a1(t, order)).add(&theta_a1_shift(s, order).mul(&theta_a1_shift(t, order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{mono, LVar, NVARS};

    #[test]
    fn eta_expansion() {
        let e = eta(&q(8, 1));
        let want = [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)];
        let got: Vec<(Q, Q)> = e.at_one();
        assert_eq!(got, want.iter().map(|(k, c)| (q(*k, 1) + q(1, 24), q(*c, 1))).collect::<Vec<_>>());
    }

    #[test]
    fn theta_leading_terms() {
        let z = mono(&[(LVar::Z1, 1)]);
        let t = theta_a1(&z, &q(9, 4));
        assert_eq!(t.coeff(&q(0, 1)), MultiLaurent::one());
        assert_eq!(t.coeff(&q(1, 1)), MultiLaurent::var(LVar::Z1, 2).add(&MultiLaurent::var(LVar::Z1, -2)));
        assert_eq!(t.num_terms(), 3);
        let s = theta_a1_shift(&z, &q(1, 1));
        assert_eq!(s.coeff(&q(1, 4)), MultiLaurent::var(LVar::Z1, 1).add(&MultiLaurent::var(LVar::Z1, -1)));
    }

    #[test]
    fn weyl_pi_times_reciprocal() {
        let z = mono(&[(LVar::Z1, 1)]);
        let order = q(5, 1);
        let unit_part = weyl_pi_unit(&z, &order);
        let pi = weyl_pi(&z, &order);
        let back = pi.mul(&unit_part.recip_unit());
        let want = GradedQSeries::term(&q(1, 8), MultiLaurent::antisym(z));
        assert!(GradedQSeries::first_difference(&back, &want).is_none());
        assert!(GradedQSeries::first_difference(&times_weyl_pi(&GradedQSeries::one(), &z, &order), &pi).is_none());
        assert_eq!(MultiLaurent::antisym([0; NVARS]), MultiLaurent::zero());
    }

    #[test]
    fn fermion_first_order() {
        let x = mono(&[(LVar::X, 1)]);
        let y = mono(&[(LVar::Y, 1)]);
        let f = fermion_f(&x, &y, &q(2, 1));
        let c = f.coeff(&(q(1, 2) - q(1, 12)));
        let want = [x, mono_inv(&x), y, mono_inv(&y)].iter().fold(MultiLaurent::zero(), |a, m| a.add(&MultiLaurent::monomial(*m)));
        assert_eq!(c, want);
    }
}
