//! OPEs of normally ordered monomials in free bosons compared against a
//! direct sum over Wick contractions.

use std::collections::BTreeMap;

use proptest::prelude::*;
use va_core::{letter, letter_deriv, letter_gen, ope, presets, FieldExpr, Word};
use va_exact::{binomial, factorial, Q};

/// Multiset of (generator, derivative) letters, kept sorted.
type Mono = Vec<(usize, u32)>;

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn add(map: &mut BTreeMap<(u32, Mono), Q>, key: (u32, Mono), c: Q) {
    let e = map.entry(key).or_insert_with(|| qi(0));
    *e += c;
}

/// `∂^k` of a product of commuting letters, by the Leibniz rule.
fn leibniz(x: &[(usize, u32)], k: u32) -> Vec<(Mono, Q)> {
    if x.is_empty() {
        return if k == 0 { vec![(Vec::new(), qi(1))] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let (g, d) = x[0];
    for i in 0..=k {
        for (mut rest, c) in leibniz(&x[1..], k - i) {
            rest.push((g, d + i));
            out.push((rest, c * binomial(k as i64, i)));
        }
    }
    out
}

/// Every partial matching of left factors with right factors of the same
/// generator; each contraction `<∂^c a(z) ∂^d a(w)> = (-1)^c (c+d+1)! (z-w)^{-2-c-d}`.
fn contractions(left: &[(usize, u32)], right: &[(usize, u32)], used: &mut Vec<bool>, i: usize, acc: (Q, u32, Mono), out: &mut Vec<(Q, u32, Mono, Mono)>) {
    if i == left.len() {
        let rest_right: Mono = right.iter().zip(used.iter()).filter(|(_, u)| !**u).map(|(x, _)| *x).collect();
        out.push((acc.0, acc.1, acc.2, rest_right));
        return;
    }
    let mut keep = acc.2.clone();
    keep.push(left[i]);
    contractions(left, right, used, i + 1, (acc.0.clone(), acc.1, keep), out);
    let (g, c) = left[i];
    for j in 0..right.len() {
        if used[j] || right[j].0 != g {
            continue;
        }
        let d = right[j].1;
        used[j] = true;
        let sign = if c % 2 == 0 { qi(1) } else { qi(-1) };
        let coef = &acc.0 * sign * factorial(c + d + 1);
        contractions(left, right, used, i + 1, (coef, acc.1 + 2 + c + d, acc.2.clone()), out);
        used[j] = false;
    }
}

/// Singular part of `:left:(z) :right:(w)` as pole -> monomial -> coefficient.
fn wick_oracle(left: &Mono, right: &Mono) -> BTreeMap<(u32, Mono), Q> {
    let mut raw = Vec::new();
    contractions(left, right, &mut vec![false; right.len()], 0, (qi(1), 0, Vec::new()), &mut raw);
    let mut out = BTreeMap::new();
    for (c, p, x, y) in raw {
        // :X(z) Y(w): = Σ_k (z-w)^k / k! :(∂^k X)(w) Y(w):
        for k in 0..p {
            for (dx, lc) in leibniz(&x, k) {
                let mut m = dx;
                m.extend(y.iter().cloned());
                m.sort();
                add(&mut out, (p - k, m), &c * lc / factorial(k));
            }
        }
    }
    out.retain(|_, c| *c != qi(0));
    out
}

fn to_field(m: &Mono) -> FieldExpr {
    let mut w: Word = m.iter().map(|(g, d)| letter(*g, *d)).collect();
    w.sort();
    FieldExpr::word(w)
}

fn engine_poles(left: &Mono, right: &Mono, n: usize) -> BTreeMap<(u32, Mono), Q> {
    let alg = presets::heisenberg(n);
    let p = ope(&alg, &to_field(left), &to_field(right)).unwrap();
    let mut out = BTreeMap::new();
    for (pole, f) in &p.poles {
        for (w, c) in f.terms() {
            let mut m: Mono = w.iter().map(|l| (letter_gen(*l), letter_deriv(*l))).collect();
            m.sort();
            out.insert((*pole, m), c.as_rational().unwrap().clone());
        }
    }
    out
}

#[test]
fn quadratic_against_single_boson() {
    let a: Mono = vec![(0, 0)];
    let aa: Mono = vec![(0, 0), (0, 0)];
    let expect = wick_oracle(&aa, &a);
    assert_eq!(engine_poles(&aa, &a, 1), expect);
    // 2a at the double pole, 2∂a at the simple pole
    assert_eq!(expect.get(&(2, vec![(0, 0)])), Some(&qi(2)));
    assert_eq!(expect.get(&(1, vec![(0, 1)])), Some(&qi(2)));
    let reverse = wick_oracle(&a, &aa);
    assert_eq!(reverse.len(), 1);
    assert_eq!(reverse.get(&(2, vec![(0, 0)])), Some(&qi(2)));
    assert_eq!(engine_poles(&a, &aa, 1), reverse);
}

#[test]
fn cubic_monomials() {
    let l: Mono = vec![(0, 0), (0, 1), (1, 0)];
    let r: Mono = vec![(0, 0), (0, 2), (1, 1)];
    assert_eq!(engine_poles(&l, &r, 2), wick_oracle(&l, &r));
}

fn mono_strategy() -> impl Strategy<Value = Mono> {
    prop::collection::vec((0usize..2, 0u32..3), 1..4).prop_map(|mut v| {
        v.sort();
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn engine_matches_wick_contractions(l in mono_strategy(), r in mono_strategy()) {
        prop_assert_eq!(engine_poles(&l, &r, 2), wick_oracle(&l, &r));
    }
}
