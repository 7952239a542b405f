//! The weight 12 decoupling relation in `H(3)^{SO_3}` and its classical symbol.

use orbifold_invariants::relation::{classical_terms, correction_terms, published_relation, verify_relation, Weight12Space, WEIGHT12_DIM};
use orbifold_invariants::symbol::{classical_relation, classical_symbol, expand_invariants, relation_symbol};
use orbifold_invariants::verify_decoupling_wt12;
use proptest::prelude::*;
use va_core::basis::{graded_dims, pbw_basis};
use va_core::{letter, normal_order, presets, FieldExpr, Word};
use va_exact::q;

#[test]
fn weight_twelve_dimension_two_ways() {
    let h = presets::heisenberg(3);
    assert_eq!(graded_dims(&h, 24).unwrap()[24], WEIGHT12_DIM as u128);
    assert_eq!(pbw_basis(&h, 24).unwrap().len(), WEIGHT12_DIM);
}

#[test]
fn published_relation_vanishes() {
    let r = verify_decoupling_wt12().unwrap();
    assert_eq!(r.dim, 7868);
    assert!(r.holds(), "residual has {} nonzero coordinates", r.residual.len());
    assert_eq!(r.nullity, 0);
    assert_eq!(r.solved.as_ref().unwrap(), &r.published);
    assert!(r.differing().is_empty());
    assert_eq!(r.published[29], q(313, 450));
}

#[test]
fn perturbed_relation_fails() {
    let mut space = Weight12Space::new().unwrap();
    let mut classical = classical_terms();
    classical[0].coeff = q(2, 1);
    let r = verify_relation(&mut space, &classical, &correction_terms()).unwrap();
    assert!(!r.holds());
    // the corrections cannot absorb an extra :C012 C012:
    assert!(r.solved.is_none());
}

#[test]
fn symbol_is_the_classical_relation() {
    let p = relation_symbol(&published_relation());
    assert_eq!(p, classical_relation());
    assert!(expand_invariants(&p, &["a1".into(), "a2".into(), "a3".into()]).is_zero());
}

fn mono_strategy() -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((0usize..2, 0u32..3), 1..4)
}

fn field(m: &[(usize, u32)]) -> FieldExpr {
    let mut w: Word = m.iter().map(|(g, d)| letter(*g, *d)).collect();
    w.sort();
    FieldExpr::word(w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn symbol_is_multiplicative(a in mono_strategy(), b in mono_strategy()) {
        let h = presets::heisenberg(2);
        let fa = field(&a);
        let fb = field(&b);
        let ab = normal_order(&h, &[fa.clone(), fb.clone()]).unwrap();
        let lhs = classical_symbol(&h, &ab).unwrap();
        let rhs = &classical_symbol(&h, &fa).unwrap() * &classical_symbol(&h, &fb).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
