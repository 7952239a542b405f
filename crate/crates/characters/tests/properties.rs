use characters::functions::{weyl_pi, weyl_pi_unit};
use characters::large::{summand_leading_exponent, x_m};
use characters::*;
use proptest::prelude::*;
use va_exact::{q, Q};

fn series(terms: Vec<(i64, i32, i32, i64)>, order: i64) -> GradedQSeries {
    let mut s = GradedQSeries::zero_to(&q(order, 1));
    for (e, a, b, c) in terms {
        let m = mono(&[(LVar::Z1, a), (LVar::W, b)]);
        s = s.add(&GradedQSeries::term(&q(e, 4), MultiLaurent::term(m, q(c, 1))));
    }
    s
}

fn arb_series() -> impl Strategy<Value = GradedQSeries> {
    (prop::collection::vec((0i64..12, -2i32..3, -2i32..3, -3i64..4), 0..6), 2i64..4).prop_map(|(t, o)| series(t, o))
}

fn same(a: &GradedQSeries, b: &GradedQSeries) -> bool {
    GradedQSeries::first_difference(a, b).is_none() && GradedQSeries::common_window(a, b) == GradedQSeries::common_window(b, a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert!(same(&a.mul(&b), &b.mul(&a)));
        prop_assert!(same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(same(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(same(&a.add(&b), &b.add(&a)));
    }

    #[test]
    fn truncation_is_sound(m in 0u32..3, lo in 1i64..3, extra in 1i64..3) {
        let small = x_m(m, &q(lo, 1), ZForm::Roots);
        let big = x_m(m, &q(lo + extra, 1), ZForm::Roots).truncated(&q(lo, 1));
        prop_assert_eq!(small, big);
    }

    #[test]
    fn weyl_denominator_unit_part(a in -2i32..3, b in -2i32..3) {
        prop_assume!(a != 0 || b != 0);
        let v = mono(&[(LVar::Z1, a), (LVar::W, b)]);
        let order = q(3, 1);
        let back = weyl_pi(&v, &order).mul(&weyl_pi_unit(&v, &order).recip_unit());
        let want = GradedQSeries::term(&q(1, 8), MultiLaurent::antisym(v));
        prop_assert!(GradedQSeries::first_difference(&back, &want).is_none());
    }

    #[test]
    fn summands_start_ever_later(ln in 1i64..20, ld in 1i64..20, mn in -20i64..20, md in 1i64..20) {
        let spec = CharSpec::new(q(ln, ld), q(mn, md));
        prop_assume!(spec.is_ok());
        let spec = spec.unwrap();
        let e: Vec<Q> = (0..6).map(|m| summand_leading_exponent(&spec, m)).collect();
        prop_assert!(e.windows(2).all(|w| w[0] < w[1]));
    }
}
