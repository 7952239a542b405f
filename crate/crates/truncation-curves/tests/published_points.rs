use truncation_curves::*;
use va_exact::{q, Q};

fn pt(c: Q, l: Q) -> CurvePoint {
    CurvePoint::rational(c, l)
}

#[test]
fn p2_passes_through_the_degenerate_points() {
    let p2 = curve("p2").unwrap();
    assert_eq!(p2.eval(&q(-24, 1), &q(-1, 245)), q(0, 1));
    assert_eq!(p2.eval(&q(1, 2), &q(-2, 49)), q(0, 1));
}

#[test]
fn parametrizations_lie_on_their_curves() {
    for (c, m) in [("p2", "k2"), ("p3", "kh"), ("p4", "kk")] {
        let s = on_curve_identically(c, m).unwrap();
        assert!(s.vanishes(), "{c} along {m}: residual {}", s.residual);
    }
}

#[test]
fn parametrizations_miss_the_other_curves() {
    for (c, m) in [("p3", "k2"), ("p2", "kh"), ("p2", "kk"), ("p1", "kk"), ("degenerate", "k2")] {
        assert!(!on_curve_identically(c, m).unwrap().vanishes(), "{c} along {m}");
    }
}

#[test]
fn pairwise_intersections_contain_the_coincidence_points() {
    for (a, b, c, l) in [("p2", "p3", q(15, 1), q(221, 9506)), ("p2", "p4", q(27, 20), q(4, 12397)), ("p3", "p4", q(49, 5), q(20, 781))] {
        let r = intersect(a, b).unwrap();
        assert!(r.points.contains(&pt(c.clone(), l.clone())), "{a} ∩ {b}: {:?}", r.points.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        assert_eq!(r.resultant.eval(&c), q(0, 1));
    }
}

#[test]
fn intersection_is_symmetric() {
    let ab = intersect("p2", "p3").unwrap();
    let ba = intersect("p3", "p2").unwrap();
    assert_eq!(ab.points, ba.points);
}

#[test]
fn levels_of_the_coincidences() {
    let p = pt(q(27, 20), q(4, 12397));
    assert_eq!(eval_param("k2", &q(6, 1)).unwrap(), p);
    assert_eq!(eval_param("kk", &q(3, 1)).unwrap(), p);
    let p = pt(q(27, 5), q(25, 1078));
    assert_eq!(eval_param("kk", &q(-3, 4)).unwrap(), p);
    assert_eq!(eval_param("kk", &q(-6, 1)).unwrap(), p);
    assert_eq!(eval_param("k2", &q(-8, 3)).unwrap(), pt(q(15, 1), q(221, 9506)));
    assert_eq!(eval_param("kh", &q(-5, 4)).unwrap(), pt(q(15, 1), q(221, 9506)));
    assert_eq!(eval_param("kh", &q(-7, 3)).unwrap(), pt(q(49, 5), q(20, 781)));
    assert_eq!(eval_param("kk", &q(-7, 2)).unwrap(), pt(q(49, 5), q(20, 781)));
}

#[test]
fn first_family_at_two() {
    assert_eq!(eval_param("k2", &q(-8, 5)).unwrap(), eval_param("k2", &q(-22, 5)).unwrap());
}

#[test]
fn fifth_point_matches_the_third_family() {
    for n in 2..=8i64 {
        let c = q(3 * n * (2 * n - 3), 2 * (n - 1) * (2 * n - 1));
        let k = q(4 * n - 6, 1);
        assert_eq!(param("k2").unwrap().c_of_k.eval(&k).unwrap(), c, "n = {n}");
    }
}

#[test]
fn degenerate_curve_is_new() {
    let d = curve("degenerate").unwrap();
    for p in ["p1", "p2", "p3", "p4"] {
        assert!(!d.is_proportional(&curve(p).unwrap()), "{p}");
    }
}

#[test]
fn p1_is_quadratic_in_lambda() {
    let p1 = curve("p1").unwrap();
    assert_eq!((p1.degree_c(), p1.degree_lambda()), (6, 2));
}

#[test]
fn all_pairs_are_isolated() {
    let names = ["p1", "p2", "p3", "p4", "degenerate"];
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            let r = intersect(a, b).unwrap();
            for p in r.points.iter().filter_map(|p| p.as_rational()) {
                assert_eq!(curve(a).unwrap().eval(&p.0, &p.1), q(0, 1));
                assert_eq!(curve(b).unwrap().eval(&p.0, &p.1), q(0, 1));
            }
        }
    }
}

#[test]
fn errors() {
    assert!(matches!(intersect("p2", "p2"), Err(CurveError::SameCurve(_))));
    assert!(matches!(curve("q7"), Err(CurveError::UnknownCurve(_))));
    assert!(matches!(param("k9"), Err(CurveError::UnknownMap(_))));
    assert!(matches!(intersect("p2", "sp2n"), Err(CurveError::Refused(_))));
}
