//! Character decomposition of `Y(λ)` built from `L_1(d(2,1;-λ)) ⊗ L_1(psl(2|2))`
//! under the diagonal `sl2` at level `k1 - 1 = λ^{-1} - 2`.
//!
//! The left side is the branching sum
//! `Σ_{n ≡ m} ch V^{k1}(n)(w) ch V^{k2}(n)(z1) ch V^{-1}(m)(w) χ_m(z2)`,
//! multiplied by `Π(z1)Π(w)²`; `z2` is the fugacity of the finite `sl2`
//! acting on `ρ_m`, so `x = z1 z2` and `y = z1/z2` as before.

use num_traits::{One, Signed};
use rayon::prelude::*;
use va_exact::{q, Q};

use crate::functions::{expand_factors, fermion_factors, times_weyl_pi};
use crate::large::{anti, current_factors, eta_factors, fermion_charges, free_generator_character, sl2_currents, weyl_exponent, z, Generator, SpecError, ZForm};
use crate::laurent::{mono_inv, LVar, MultiLaurent};
use crate::report::{CharReport, SubCheck};
use crate::series::GradedQSeries;

/// Leading power of `W_m` before the `λ`-dependent shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeadForm {
    /// `q^{m + 1/4}`, the value forced by the branching sum.
    Derived,
    /// `q^{m + 1/8}` as displayed.
    AsPrinted,
}

impl LeadForm {
    fn offset(self) -> Q {
        match self {
            LeadForm::Derived => q(1, 4),
            LeadForm::AsPrinted => q(1, 8),
        }
    }
}

pub fn check_lambda(lambda: &Q) -> Result<(), SpecError> {
    if !lambda.is_positive() {
        return Err(SpecError(format!("lambda = {} must be positive", va_exact::fmt_rational(lambda))));
    }
    Ok(())
}

/// Weyl character `χ_m(v) = Σ_{j=0}^{m} v^{m-2j}`.
pub fn weyl_character(m: u32, v: LVar) -> MultiLaurent {
    (0..=m).fold(MultiLaurent::zero(), |a, j| a.add(&MultiLaurent::var(v, m as i32 - 2 * j as i32)))
}

/// `ch[Y(λ)] Π(z1) Π(w)²` from the branching rule, with the actual levels
/// `k1 = λ^{-1} - 1`, `k2 = λ - 1` and `-1`.
pub fn small_branching(lambda: &Q, order: &Q) -> GradedQSeries {
    let k1 = lambda.recip() - Q::one();
    let k2 = lambda - Q::one();
    let km = -Q::one();
    let mut out = GradedQSeries::zero_to(order);
    let mut n = 0i64;
    while weyl_exponent(n, &k1) + weyl_exponent(n, &k2) < *order {
        let mut m = n % 2;
        loop {
            let h = weyl_exponent(n, &k1) + weyl_exponent(n, &k2) + weyl_exponent(m, &km);
            if h >= *order {
                break;
            }
            let c = anti(LVar::W, n + 1)
                .mul(&anti(LVar::Z1, n + 1))
                .mul(&anti(LVar::W, m + 1))
                .mul(&weyl_character(m as u32, LVar::Z2));
            out = out.add(&GradedQSeries::term(&h, c));
            m += 2;
        }
        n += 1;
    }
    out
}

/// `W_m = q^{m + δ - λ(m+1)²/4} Π_{n≥0, n≠m}(1 + x^{±1} q^{n+1/2})(1 + y^{±1} q^{n+1/2}) /
/// (Π_{n≥1, n≠2m+1}(1 - q^n) Π_{n≥1}(1 - q^n)(1 - z1^{±} q^n))`, `δ` from `lead`.
pub fn w_m(lambda: &Q, m: u32, order: &Q, lead: LeadForm, form: ZForm) -> GradedQSeries {
    let e = Q::from_integer((m as i64).into()) + lead.offset() - lambda * q(((m + 1) * (m + 1)) as i64, 4);
    let inner = order - &e;
    let mul = fermion_factors(&fermion_charges(), &inner, Some(m as i64));
    let mut div = eta_factors(1, Some(2 * m as i64 + 1), &inner);
    div.extend(eta_factors(1, None, &inner));
    div.extend(current_factors(&[LVar::Z1], form, &inner));
    expand_factors(GradedQSeries::one(), &inner, &mul, &div).shift(&e)
}

/// `Π(z1)Π(w) Σ_m q^{λ(m+1)²/4}(w^{2m+1} - w^{-2m-1}) W_m`, the numerator of
/// `ch[V^{k1-1}](2m)` being `q^{(m+1)²/(4(k1+1))}(w^{2m+1} - w^{-2m-1})`.
pub fn small_rhs(lambda: &Q, order: &Q, lead: LeadForm, form: ZForm, perturb: bool) -> GradedQSeries {
    let inner = order - q(1, 4);
    let ms: Vec<u32> = (0..).take_while(|m| q(2 * *m as i64 + 1, 2) < *order).collect();
    let terms: Vec<GradedQSeries> = ms
        .par_iter()
        .map(|&m| {
            let t = lambda * q(((m + 1) * (m + 1)) as i64, 4);
            let mut wm = w_m(lambda, m, &(&inner - &t), lead, form);
            if perturb && m == 0 {
                wm = wm.mul_binomial(&MultiLaurent::one(), &Q::one());
            }
            wm.shift(&t).mul_laurent(&anti(LVar::W, 2 * m as i64 + 1))
        })
        .collect();
    let sum = terms.iter().fold(GradedQSeries::zero_to(&inner), |a, b| a.add(b));
    let s = times_weyl_pi(&sum, &z(LVar::Z1, 1), &(order - q(1, 8)));
    times_weyl_pi(&s, &z(LVar::W, 1), order)
}

/// `L`, one set of `sl2` currents and four weight 3/2 fields.
pub fn small_n4_generators() -> Vec<Generator> {
    let mut g = sl2_currents(LVar::Z1);
    for c in fermion_charges() {
        for m in [c, mono_inv(&c)] {
            g.push(Generator { weight: q(3, 2), charge: m, odd: true });
        }
    }
    g.push(Generator { weight: q(2, 1), charge: [0; crate::laurent::NVARS], odd: false });
    g
}

/// `ch[V^{-λ}] = q^{-c/24} · (free generator character)` with `c = -6(k+1)`, `k = -λ`.
pub fn ch_small_n4(lambda: &Q, order: &Q) -> GradedQSeries {
    let c = q(-6, 1) * (Q::one() - lambda);
    let lead = -c / q(24, 1);
    free_generator_character(&small_n4_generators(), &(order - &lead)).shift(&lead)
}

/// Check `ch[Y(λ)] = Σ_m ch[V^{k1-1}](2m) W_m` through `q^order`.
pub fn verify_thm_char_small(lambda: &Q, order: &Q) -> CharReport {
    let mut r = CharReport::new("thm-char-small", vec![("lambda".into(), lambda.clone())], order);
    let lhs = small_branching(lambda, order);
    let rhs = small_rhs(lambda, order, LeadForm::Derived, ZForm::Roots, false);
    r.push(SubCheck::identity("decomposition", &lhs, &rhs, order));

    let perturbed = small_rhs(lambda, order, LeadForm::Derived, ZForm::Roots, true);
    r.push(SubCheck::control("perturbed W_0 (1+q)", &lhs, &perturbed, order));

    let w0 = w_m(lambda, 0, order, LeadForm::Derived, ZForm::Roots);
    r.push(SubCheck::identity("W_0 vs ch[V^{-lambda}]", &w0, &ch_small_n4(lambda, order), order));

    for m in 0..3u32 {
        let got = w_m(lambda, m, &(Q::from_integer(((m + 2) as i64).into())), LeadForm::Derived, ZForm::Roots)
            .valuation()
            .unwrap_or_default();
        let printed = Q::from_integer((m as i64).into()) + q(1, 8) - lambda * q(((m + 1) * (m + 1)) as i64, 4);
        r.push(
            SubCheck::value(format!("W_{m} leading exponent"), &got, &(&printed + q(1, 8)))
                .with_note(format!("printed formula gives {}", va_exact::fmt_rational(&printed))),
        );
    }

    let printed = small_rhs(lambda, order, LeadForm::AsPrinted, ZForm::AsPrinted, false);
    r.push(SubCheck::diagnostic("as-printed W_m", &lhs, &printed, order).with_note("q^{m+1/8} and (1 - z1^{±1} q^n) read literally"));
    let lead_only = small_rhs(lambda, order, LeadForm::AsPrinted, ZForm::Roots, false);
    r.push(SubCheck::diagnostic("printed leading power only", &lhs, &lead_only, order));
    let currents_only = small_rhs(lambda, order, LeadForm::Derived, ZForm::AsPrinted, false);
    r.push(SubCheck::diagnostic("printed current factors only", &lhs, &currents_only, order));

    r.notes.push("verified in the equivalent form multiplied by Pi(z1) Pi(w)^2".into());
    r.notes.push("W_m read with leading power q^{m+1/4-lambda(m+1)^2/4} and currents (1 - z1^{±2} q^n)".into());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_characters() {
        let c2 = weyl_character(2, LVar::Z1);
        assert_eq!(c2.len(), 3);
        assert_eq!(c2.at_one(), q(3, 1));
    }

    #[test]
    fn branching_leading_term() {
        // n = m = 0: q^{1/4 + 1/4}(w - w^{-1})²(z1 - z1^{-1})
        let s = small_branching(&q(2, 3), &q(1, 1));
        assert_eq!(s.valuation(), Some(q(1, 2)));
        assert_eq!(s.coeff(&q(1, 2)), anti(LVar::W, 1).pow(2).mul(&anti(LVar::Z1, 1)));
    }
}
