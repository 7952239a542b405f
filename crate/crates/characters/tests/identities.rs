use characters::large::{ch_large_n4, ch_y_branching, v_m, x_m_middle_scaled};
use characters::small::{ch_small_n4, w_m, LeadForm};
use characters::*;
use va_exact::q;

fn large(l: (i64, i64), m: (i64, i64)) -> CharSpec {
    CharSpec::new(q(l.0, l.1), q(m.0, m.1)).unwrap()
}

#[test]
fn large_decomposition_at_two_points() {
    for s in [large((2, 3), (2, 5)), large((5, 3), (3, 7))] {
        let r = verify_thm_char(&s, &q(4, 1));
        assert!(r.passed(), "{r}");
        let c = r.checks.iter().find(|c| c.name.starts_with("perturbed")).unwrap();
        assert_eq!(c.mismatch.as_ref().unwrap().exponent, q(3, 2));
    }
}

#[test]
fn corollary_at_two_points() {
    for s in [large((2, 3), (2, 5)), large((5, 3), (3, 7))] {
        let r = verify_cor_char(&s, &q(4, 1));
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn small_decomposition() {
    for l in [q(2, 3), q(5, 7)] {
        let r = verify_thm_char_small(&l, &q(4, 1));
        assert!(r.passed(), "{r}");
        let printed = r.checks.iter().find(|c| c.name == "as-printed W_m").unwrap();
        assert!(!printed.ok);
    }
}

#[test]
fn branching_depends_on_levels_only_through_their_sum() {
    let a = ch_y_branching(&large((2, 3), (2, 5)), &q(3, 1));
    let b = ch_y_branching(&large((7, 2), (1, 9)), &q(3, 1));
    assert_eq!(a, b);
    assert!(GradedQSeries::first_difference(&a, &ch_y_theta(&q(3, 1))).is_none());
}

#[test]
fn v0_is_the_large_n4_character() {
    let s = large((2, 3), (2, 5));
    let v0 = v_m(&s, 0, &q(3, 1));
    // -c/24 with c = -3/2
    assert_eq!(v0.valuation(), Some(q(1, 16)));
    assert!(GradedQSeries::first_difference(&v0, &ch_large_n4(&s, &q(3, 1))).is_none());
}

#[test]
fn small_w0_leading_power() {
    let l = q(2, 3);
    let w0 = w_m(&l, 0, &q(2, 1), LeadForm::Derived, ZForm::Roots);
    // c = -6(1 - lambda) = -2, so -c/24 = 1/12 = 1/4 - lambda/4
    assert_eq!(w0.valuation(), Some(q(1, 12)));
    assert!(GradedQSeries::first_difference(&w0, &ch_small_n4(&l, &q(2, 1))).is_none());
}

#[test]
fn antisymmetry_beyond_zero() {
    for m in 1..3 {
        let a = x_m_middle_scaled(m, &q(3, 1));
        let b = x_m_middle_scaled(-m - 1, &q(3, 1)).neg();
        assert!(GradedQSeries::first_difference(&a, &b).is_none(), "m = {m}");
    }
}

#[test]
fn euler_poincare_is_diagonal() {
    let t = euler_poincare_table(12);
    for (n, row) in t.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            assert_eq!(*v, (n == m) as i64, "({n}, {m})");
        }
    }
}
