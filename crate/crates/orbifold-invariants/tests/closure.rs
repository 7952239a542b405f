//! Strong span membership and OPE closure of the invariant generating sets.

use orbifold_invariants::span::{closure_check, member, strong_span_basis, SpanMode, SpanTower};
use orbifold_invariants::{fermionic_generators, minimal_generators, Invariant};
use proptest::prelude::*;
use va_core::{presets, state_of, Algebra, FieldExpr};

fn build(alg: &Algebra, xs: &[Invariant]) -> Vec<FieldExpr> {
    xs.iter().map(|x| x.build(alg).unwrap()).collect()
}

#[test]
fn q0_10_decouples_at_weight_twelve() {
    let h = presets::heisenberg(3);
    let gens = build(&h, &[Invariant::C(0, 1, 2), Invariant::Q(0, 0), Invariant::Q(0, 2), Invariant::Q(0, 4), Invariant::Q(0, 6), Invariant::Q(0, 8)]);
    let span = strong_span_basis(&h, &gens, 24).unwrap();
    let target = state_of(&h, &Invariant::Q(0, 10).build(&h).unwrap()).unwrap();
    assert!(member(&span, &target).is_some());
    // the cubic is needed: the Q tower alone misses Q_{0,10}
    let span_q = strong_span_basis(&h, &gens[1..], 24).unwrap();
    assert!(member(&span_q, &target).is_none());
}

#[test]
fn c013_in_minimal_span() {
    let h = presets::heisenberg(3);
    let gens = build(&h, &minimal_generators());
    let span = strong_span_basis(&h, &gens, 14).unwrap();
    let target = state_of(&h, &Invariant::C(0, 1, 3).build(&h).unwrap()).unwrap();
    assert!(member(&span, &target).is_some());
}

#[test]
fn minimal_set_closes_to_weight_14() {
    let h = presets::heisenberg(3);
    let gens = build(&h, &minimal_generators());
    let r = closure_check(&h, &gens, 28).unwrap();
    assert_eq!(r.pairs.len(), 46);
    assert!(r.passed(), "{:?}", r.failures());
    // the matrix has every checked pair passing and nothing else filled in
    let m = r.matrix(gens.len());
    assert_eq!(m.iter().flatten().filter(|x| **x == Some(true)).count(), 46);
}

#[test]
fn fermionic_set_closes_to_weight_12() {
    let g = presets::godd(4);
    let gens = build(&g, &fermionic_generators());
    let r = closure_check(&g, &gens, 24).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
    // same verdicts with the list reversed
    let mut rev = gens.clone();
    rev.reverse();
    let r2 = closure_check(&g, &rev, 24).unwrap();
    assert!(r2.passed());
    assert_eq!(r.entries.len(), r2.entries.len());
}

/// `Q00 = 2T` for the Virasoro field `T` of central charge 3, so
/// `Q00(z)Q00(w) ~ 6(z-w)^-4 + 4 Q00(w)(z-w)^-2 + 2 ∂Q00(w)(z-w)^-1`: every
/// pole lies in the span of `{Q00}` and the singleton closes.
#[test]
fn singleton_q00_closes() {
    let h = presets::heisenberg(3);
    let gens = build(&h, &[Invariant::Q(0, 0)]);
    let r = closure_check(&h, &gens, 8).unwrap();
    let poles: Vec<u32> = r.entries.iter().map(|e| e.pole).collect();
    assert_eq!(poles, vec![1, 2, 4]);
    assert!(r.passed());
}

#[test]
fn missing_generator_is_detected() {
    // {Q00, C012} without Q02: Q00 acts on C012 fine, but C012 C012 needs Q02-type terms
    let h = presets::heisenberg(3);
    let gens = build(&h, &[Invariant::Q(0, 0), Invariant::C(0, 1, 2)]);
    let r = closure_check(&h, &gens, 24).unwrap();
    assert!(!r.passed());
    assert!(r.failures().iter().all(|e| e.left == 1 && e.right == 1));
}

#[test]
fn modular_and_exact_towers_agree() {
    let g = presets::godd(4);
    let gens = build(&g, &fermionic_generators()[..5]);
    let mut a = SpanTower::new(&g, &gens, 10_000).unwrap();
    let mut b = SpanTower::with_mode(&g, &gens, 10_000, SpanMode::Modular).unwrap();
    for w in 0..=20 {
        assert_eq!(a.at(w).unwrap().dim(), b.at(w).unwrap().dim(), "w2 = {w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn span_dimension_is_monotone(mask in 1u8..16, extra in 0usize..4, w in 4i64..9) {
        let h = presets::heisenberg(3);
        let pool = build(&h, &[Invariant::Q(0, 0), Invariant::Q(0, 1), Invariant::Q(0, 2), Invariant::C(0, 1, 2)]);
        let small: Vec<FieldExpr> = (0..4).filter(|i| mask & (1 << i) != 0).map(|i| pool[i].clone()).collect();
        let mut big = small.clone();
        big.push(pool[extra].clone());
        let ds = strong_span_basis(&h, &small, 2 * w).unwrap().dim();
        let db = strong_span_basis(&h, &big, 2 * w).unwrap().dim();
        prop_assert!(ds <= db);
        // order of the list does not matter
        let mut rev = big.clone();
        rev.reverse();
        prop_assert_eq!(strong_span_basis(&h, &rev, 2 * w).unwrap().dim(), db);
    }
}
