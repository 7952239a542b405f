use proptest::prelude::*;
use va_exact::{MPoly, Scalar, UPoly, Var};

fn small_poly() -> impl Strategy<Value = Scalar> {
    // a + b*k + c*a' + d*k*a' with small integer coefficients, over two parameters
    (-4i64..5, -4i64..5, -4i64..5, -3i64..4).prop_map(|(a, b, c, d)| {
        let k = MPoly::var(Var::new("k"));
        let t = MPoly::var(Var::new("t"));
        let p = &(&MPoly::constant(va_exact::q(a, 1)) + &k.scale(&va_exact::q(b, 1)))
            + &(&t.scale(&va_exact::q(c, 1)) + &(&k * &t).scale(&va_exact::q(d, 1)));
        Scalar::from_poly(p)
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| n.try_div(&d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn division_inverts_multiplication(a in scalar(), b in scalar()) {
        if let Ok(q) = a.try_div(&b) {
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn display_parses_back(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn upoly_divrem_identity(a in proptest::collection::vec(-9i64..10, 1..7), b in proptest::collection::vec(-9i64..10, 1..5)) {
        let a = UPoly::from_ints(&a);
        let b = UPoly::from_ints(&b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn rational_roots_are_roots(rs in proptest::collection::vec((-6i64..7, 1i64..5), 1..4)) {
        let mut p = UPoly::one();
        for (n, d) in &rs {
            p = &p * &UPoly::new(vec![va_exact::q(-*n, *d), va_exact::q(1, 1)]);
        }
        let mut want: Vec<_> = rs.iter().map(|(n, d)| va_exact::q(*n, *d)).collect();
        want.sort();
        want.dedup();
        prop_assert_eq!(p.rational_roots(), want);
    }
}
