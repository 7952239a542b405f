//! Invariants of four odd free fields of weight 3/2.

use orbifold_invariants::{build_fermi_q, build_fermi_w};
use va_core::{ope, presets, state_of};
use va_exact::Scalar;

/// `<∂^a φ(z) ∂^b φ(w)> = (-1)^a (a+b+2)!/2 (z-w)^{-3-a-b}` for `φ(z)φ(w) ~ (z-w)^{-3}`.
fn contraction(a: u32, b: u32) -> i64 {
    let f: i64 = (1..=(a + b + 2) as i64).product();
    if a % 2 == 0 {
        f / 2
    } else {
        -f / 2
    }
}

#[test]
fn q01_self_ope_top_pole() {
    let g = presets::godd(4);
    let x = build_fermi_q(&g, 0, 1).unwrap();
    let p = ope(&g, &x, &x).unwrap();
    assert_eq!(p.max_pole(), 8);
    // :AB:(z) :CD:(w), all odd: full contractions <AD><BC> - <AC><BD>, four copies
    let per_field = contraction(0, 1) * contraction(1, 0) - contraction(0, 0) * contraction(1, 1);
    assert_eq!(per_field, 3);
    assert_eq!(p.poles[&8].as_identity_multiple(), Some(Scalar::int(4 * per_field)));
}

#[test]
fn weights_and_vanishing() {
    let g = presets::godd(4);
    assert_eq!(state_of(&g, &build_fermi_q(&g, 0, 1).unwrap()).unwrap().weight2, 8);
    assert_eq!(state_of(&g, &build_fermi_w(&g, 0, 0, 0, 0).unwrap()).unwrap().weight2, 12);
    // odd squares vanish, and reordering two odd letters only flips the sign here
    assert!(build_fermi_q(&g, 0, 0).unwrap().is_zero());
    let a = build_fermi_q(&g, 1, 0).unwrap();
    let b = build_fermi_q(&g, 0, 1).unwrap();
    assert_eq!(a, b.scale(&Scalar::int(-1)));
}

#[test]
fn quartic_is_symmetric_in_its_indices() {
    let g = presets::godd(4);
    assert_eq!(build_fermi_w(&g, 0, 0, 0, 2).unwrap(), build_fermi_w(&g, 2, 0, 0, 0).unwrap());
    assert!(!build_fermi_w(&g, 0, 0, 2, 2).unwrap().is_zero());
}
