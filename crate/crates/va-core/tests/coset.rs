use va_core::commutant::commutant_weight_space;
use va_core::engine::Engine;
use va_core::virasoro::sugawara;
use va_core::{parse_field_expr, presets, Algebra, FieldExpr, Scalar};
use va_exact::q;

fn diagonal(alg: &Algebra) -> Vec<FieldExpr> {
    ["e1 + e2", "h1 + h2", "f1 + f2"].iter().map(|s| parse_field_expr(alg, s).unwrap()).collect()
}

fn two_copies() -> Algebra {
    presets::affine_sl2("k1").tensor(&presets::affine_sl2("k2"), ("1", "2")).unwrap()
}

#[test]
fn diagonal_coset_dimensions_formal_levels() {
    let alg = two_copies();
    let gens = diagonal(&alg);
    let dims: Vec<usize> = (2..=4).map(|w| commutant_weight_space(&alg, &gens, 2 * w, 5000).unwrap().len()).collect();
    assert_eq!(dims, vec![1, 1, 3]);
    assert!(commutant_weight_space(&alg, &gens, 2, 5000).unwrap().is_empty());
}

#[test]
fn diagonal_coset_dimensions_at_generic_rational_levels() {
    let alg = two_copies().specialize(&[("k1", q(1, 3)), ("k2", q(2, 7))]).unwrap();
    let gens = diagonal(&alg);
    let dims: Vec<usize> = (2..=4).map(|w| commutant_weight_space(&alg, &gens, 2 * w, 5000).unwrap().len()).collect();
    assert_eq!(dims, vec![1, 1, 3]);
}

/// The weight-2 coset vector is `L1 + L2 - L_diag` built from Sugawara vectors.
#[test]
fn weight_two_vector_is_sugawara_difference() {
    let alg = two_copies();
    let eng = Engine::new(&alg);
    let k1 = Scalar::param("k1");
    let k2 = Scalar::param("k2");
    let l1 = sugawara(&presets::affine_sl2("k1"), &k1).unwrap();
    let l2 = sugawara(&presets::affine_sl2("k2"), &k2).unwrap();
    // generators of the second copy sit after the first three
    let shift = |f: &FieldExpr, by: usize| {
        FieldExpr::from_terms(f.terms().iter().map(|(w, c)| {
            (w.iter().map(|l| va_core::letter(va_core::letter_gen(*l) + by, va_core::letter_deriv(*l))).collect(), c.clone())
        }))
    };
    let l2 = shift(&l2, 3);
    let norm = (&Scalar::int(2) * &(&(&k1 + &k2) + &Scalar::int(2))).recip().unwrap();
    let diag = parse_field_expr(&alg, ":[e1 + e2] [f1 + f2]: + :[f1 + f2] [e1 + e2]: + 1/2 :[h1 + h2] [h1 + h2]:").unwrap().scale(&norm);
    let w = l1.add(&l2).sub(&diag);
    for x in diagonal(&alg) {
        let p = eng.ope(&x, &w).unwrap();
        assert!(p.is_empty(), "{}", p.display(alg.names()));
    }
}
