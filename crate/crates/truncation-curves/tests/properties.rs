use proptest::prelude::*;
use truncation_curves::*;
use va_exact::{q, Q};

/// Coefficient lists as transcribed; any edit to a curve changes its digest.
const PINNED: [(&str, &str, usize); 5] = [
    ("p1", "e0b0955ef5d2c7d7ea9eec0886f024d4b50ec34798ed5a79e541b513de17f9cc", 18),
    ("p2", "f1c14923bc11494913d0b7aa3e151ee0f3e8e4dbc20c024070fa8dc02ba50653", 7),
    ("p3", "9cd716721ba5d8011ae51a1db41547fa14094dc8801b5af24276ccd07abafd08", 7),
    ("p4", "789c376fc2ddd6d67af8422df0dd4dfa39f20958536120e856a229354adde8a0", 14),
    ("degenerate", "6a56f7f1bb63473edae590f992ded7e64fab774f5ff6775c61feb63df706049c", 8),
];

#[test]
fn pinned_coefficient_digests() {
    for (name, digest, len) in PINNED {
        let p = curve(name).unwrap();
        assert_eq!(p.len(), len, "{name}");
        assert_eq!(p.coefficient_hash(), digest, "{name}");
    }
}

#[test]
fn hand_expanded_coefficients() {
    // 7(c-1)(2c-17)(22+5c) = 70c³ - 357c² - 2331c + 2618
    let p2 = curve("p2").unwrap();
    let l: Vec<Q> = (0..4).map(|i| p2.coeff(i, 1)).collect();
    assert_eq!(l, vec![q(2618, 1), q(-2331, 1), q(-357, 1), q(70, 1)]);
    // 7(c-41)(c-1)(22+5c) = 35c³ - 1316c² - 5033c + 6314
    let p3 = curve("p3").unwrap();
    let l: Vec<Q> = (0..4).map(|i| p3.coeff(i, 1)).collect();
    assert_eq!(l, vec![q(6314, 1), q(-5033, 1), q(-1316, 1), q(35, 1)]);
    // constant terms of p1 and p4
    assert_eq!(curve("p1").unwrap().coeff(0, 0), q(-7900992, 1));
    assert_eq!(curve("p4").unwrap().coeff(0, 2), q(49 * -25 * 484, 1));
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-60i64..60, 1i64..12).prop_map(|(n, d)| q(n, d))
}

fn poly() -> impl Strategy<Value = BivarPoly> {
    proptest::collection::vec(((0u32..3, 0u32..3), -5i64..5), 0..5)
        .prop_map(|ts| BivarPoly::from_terms(ts.into_iter().map(|(k, a)| (k, q(a, 1)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly(), x in small_rational(), y in small_rational()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn images_lie_on_the_curve_and_in_their_fiber(k in small_rational(), which in 0usize..3) {
        let (name, cname) = [("k2", "p2"), ("kh", "p3"), ("kk", "p4")][which];
        let m = param(name).unwrap();
        if let Ok(p) = m.eval(&k) {
            let (c, l) = p.as_rational().unwrap();
            prop_assert_eq!(curve(cname).unwrap().eval(&c, &l), q(0, 1));
            let fiber = m.fiber(&c);
            prop_assert!(fiber.contains(&k));
            prop_assert!(fiber.len() <= m.fiber_bound());
        }
    }

    #[test]
    fn resultant_vanishes_at_intersections(a in poly(), b in poly()) {
        if let Ok(r) = intersect_polys(&a, &b) {
            for p in &r.points {
                if let Some((c, l)) = p.as_rational() {
                    prop_assert_eq!(r.resultant.eval(&c), q(0, 1));
                    prop_assert_eq!(a.eval(&c, &l), q(0, 1));
                    prop_assert_eq!(b.eval(&c, &l), q(0, 1));
                }
            }
        }
    }

    #[test]
    fn family_pairs_share_a_fiber(n in 3i64..40, which in 0usize..3) {
        let id = ["k2-sp-1", "k2-sp-2", "kh-sp-2"][which];
        let r = coincidence_family_check(id, n..=n).unwrap();
        let row = &r.rows[0];
        if let Ok((c, _)) = &row.images[0] {
            let fiber = param(&r.map).unwrap().fiber(c);
            for k in &row.levels {
                prop_assert!(fiber.contains(k));
            }
        }
    }
}

#[test]
fn bundled_intersections_vanish_on_the_resultant() {
    for (a, b) in [("p2", "p3"), ("p2", "p4"), ("p3", "p4"), ("p1", "p4"), ("p4", "degenerate")] {
        let r = intersect(a, b).unwrap();
        for p in &r.points {
            match (&p.c, &p.lambda) {
                (Coord::Rational(c), _) => assert_eq!(r.resultant.eval(c), q(0, 1)),
                (Coord::Algebraic(x), _) => assert!(r.resultant.rem(&x.minpoly).is_zero()),
                _ => unreachable!(),
            }
        }
    }
}
