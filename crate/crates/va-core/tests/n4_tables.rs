use va_core::jacobi::{jacobi_all, jacobi_check};
use va_core::virasoro::check_virasoro;
use va_core::{parse_field_expr, presets, Algebra, Field, Scalar};
use va_exact::{q, Q};

fn failures(alg: &Algebra) -> usize {
    jacobi_all(alg, &q(20, 1)).unwrap().iter().filter(|r| r.failure.is_some()).count()
}

fn spec(alg: &Algebra, vals: &[(&str, Q)]) -> Algebra {
    alg.specialize(vals).unwrap()
}

#[test]
fn large_n4_closes_at_rational_points() {
    let alg = presets::large_n4();
    for (k, a) in [(q(1, 2), q(2, 1)), (q(1, 1), q(1, 1)), (q(-3, 4), q(3, 1))] {
        let s = spec(&alg, &[("k", k.clone()), ("a", a.clone())]);
        let reports = jacobi_all(&s, &q(20, 1)).unwrap();
        assert_eq!(reports.len(), 11 * 11 * 11);
        assert!(reports.iter().all(|r| r.passed()), "k={k} a={a}");
    }
}

#[test]
fn large_n4_closes_formally() {
    assert_eq!(failures(&presets::large_n4()), 0);
}

#[test]
fn small_n4_closes() {
    let alg = presets::small_n4();
    for k in [q(1, 2), q(-3, 4)] {
        assert_eq!(failures(&spec(&alg, &[("k", k)])), 0);
    }
    assert_eq!(failures(&alg), 0);
}

#[test]
fn perturbed_third_pole_fails() {
    let alg = spec(&presets::large_n4(), &[("k", q(1, 2)), ("a", q(2, 1))]);
    let gpp = alg.gen_index("Gpp").unwrap();
    let gmm = alg.gen_index("Gmm").unwrap();
    let h = alg.gen_index("h").unwrap();
    let old = alg.entries()[&(gpp, gmm)][&3].clone();
    let bumped = Field::Sum(vec![(Scalar::int(1), old), (Scalar::int(1), Field::Identity)]);
    let bad = alg.with_entry(gpp, gmm, 3, bumped).unwrap();
    assert!(jacobi_check(&alg, gpp, gmm, h, &q(20, 1)).unwrap().passed());
    let r = jacobi_check(&bad, gpp, gmm, h, &q(20, 1)).unwrap();
    let f = r.failure.expect("perturbation must be detected");
    assert!(!f.residual.is_zero());
}

#[test]
fn n4_central_charges() {
    let l = presets::large_n4();
    let c = check_virasoro(&l, &parse_field_expr(&l, "L").unwrap()).unwrap();
    assert_eq!(c.central_charge(), Some(&Scalar::parse("-6*k-3").unwrap()));
    let s = presets::small_n4();
    let c = check_virasoro(&s, &parse_field_expr(&s, "L").unwrap()).unwrap();
    assert_eq!(c.central_charge(), Some(&Scalar::parse("-6*(k+1)").unwrap()));
}

#[test]
fn small_n4_affine_part_has_level_minus_k_minus_1() {
    let s = presets::small_n4();
    let l = va_core::virasoro::sugawara(&s, &Scalar::parse("-k-1").unwrap()).unwrap();
    let c = check_virasoro(&s, &l).unwrap();
    assert_eq!(c.central_charge(), Some(&Scalar::parse("3*(-k-1)/(-k+1)").unwrap()));
}
