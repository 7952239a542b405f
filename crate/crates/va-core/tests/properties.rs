use proptest::prelude::*;
use va_core::basis::pbw_basis;
use va_core::engine::Engine;
use va_core::{ope, presets, state_of, Algebra, FieldExpr, PoleExpansion, Scalar};
use va_exact::linalg::{rank, SparseVec};
use va_exact::{factorial, Q};

fn fields_up_to(alg: &Algebra, max_w2: i64) -> Vec<FieldExpr> {
    let mut out = Vec::new();
    for w in 1..=max_w2 {
        out.extend(pbw_basis(alg, w).unwrap().into_iter().map(FieldExpr::word));
    }
    out
}

fn combine(a: &PoleExpansion, ca: &Scalar, b: &PoleExpansion, cb: &Scalar) -> PoleExpansion {
    let mut out = PoleExpansion::default();
    let top = a.max_pole().max(b.max_pole());
    for n in 1..=top {
        let f = a.poles.get(&n).cloned().unwrap_or_default().scale(ca).add(&b.poles.get(&n).cloned().unwrap_or_default().scale(cb));
        if !f.is_zero() {
            out.poles.insert(n, f);
        }
    }
    out
}

fn sample_algebras() -> Vec<(Algebra, i64)> {
    vec![(presets::heisenberg(2), 6), (presets::fermion(2), 4), (presets::godd(2), 8), (presets::tfield(), 8)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ope_is_bilinear(which in 0usize..4, i in 0usize..40, j in 0usize..40, k in 0usize..40,
                       an in -5i64..6, ad in 1i64..5, bn in -5i64..6, bd in 1i64..5) {
        let (alg, w) = &sample_algebras()[which];
        let fs = fields_up_to(alg, *w);
        let (a, b, c) = (&fs[i % fs.len()], &fs[j % fs.len()], &fs[k % fs.len()]);
        // only combine fields of equal parity
        prop_assume!(alg.word_odd(a.terms().keys().next().unwrap()) == alg.word_odd(b.terms().keys().next().unwrap()));
        let (x, y) = (Scalar::frac(an, ad), Scalar::frac(bn, bd));
        let lhs = ope(alg, &a.scale(&x).add(&b.scale(&y)), c).unwrap();
        let rhs = combine(&ope(alg, a, c).unwrap(), &x, &ope(alg, b, c).unwrap(), &y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_shifts_poles(which in 0usize..4, i in 0usize..40, j in 0usize..40) {
        // (∂a)_(m) b = -m a_(m-1) b, so pole n of (∂a, b) is -(n-1) times pole n-1 of (a, b)
        let (alg, w) = &sample_algebras()[which];
        let fs = fields_up_to(alg, *w);
        let (a, b) = (&fs[i % fs.len()], &fs[j % fs.len()]);
        let eng = Engine::new(alg);
        let da = eng.derivative(a, 1).unwrap();
        let p = ope(alg, a, b).unwrap();
        let dp = ope(alg, &da, b).unwrap();
        for n in 1..=dp.max_pole().max(p.max_pole() + 1) {
            let want = if n == 1 { FieldExpr::zero() } else {
                p.poles.get(&(n - 1)).cloned().unwrap_or_default().scale(&Scalar::int(-(n as i64 - 1)))
            };
            prop_assert_eq!(dp.poles.get(&n).cloned().unwrap_or_default(), want);
        }
    }
}

/// `b_(n)a = (-1)^{|a||b|} Σ_i (-1)^{n+i+1} ∂^i(a_(n+i)b)/i!` for every pair of
/// PBW monomials of weight at most the bound.
#[test]
fn skew_symmetry_exhaustive() {
    for (alg, w) in [(presets::heisenberg(2), 6), (presets::fermion(2), 4), (presets::godd(2), 8), (presets::tfield(), 8), (presets::fermion(1), 8)] {
        let eng = Engine::new(&alg);
        let fs = fields_up_to(&alg, w);
        for a in &fs {
            for b in &fs {
                let pa = alg.word_odd(a.terms().keys().next().unwrap());
                let pb = alg.word_odd(b.terms().keys().next().unwrap());
                let sign = if pa && pb { -1 } else { 1 };
                let ab = ope(&alg, a, b).unwrap();
                let ba = ope(&alg, b, a).unwrap();
                for n in 0..ba.max_pole().max(ab.max_pole()) {
                    let mut rhs = FieldExpr::zero();
                    for i in 0..ab.max_pole() {
                        let src = ab.product(n + i);
                        if src.is_zero() {
                            continue;
                        }
                        let s = if (n + i + 1) % 2 == 0 { sign } else { -sign };
                        let c = Scalar::from(Q::from_integer(s.into()) / factorial(i));
                        rhs = rhs.add(&eng.derivative(&src, i).unwrap().scale(&c));
                    }
                    assert_eq!(ba.product(n), rhs, "{} n={n}", alg.name());
                }
            }
        }
    }
}

#[test]
fn distinct_monomials_give_independent_states() {
    let alg = presets::heisenberg(3);
    for w in 1..=10 {
        let words = pbw_basis(&alg, w).unwrap();
        let mut index = std::collections::HashMap::new();
        let rows: Vec<SparseVec<Q>> = words
            .iter()
            .map(|wd| {
                let s = state_of(&alg, &FieldExpr::word(wd.clone())).unwrap();
                s.coords
                    .iter()
                    .map(|(k, c)| {
                        let n = index.len();
                        (*index.entry(k.clone()).or_insert(n), c.as_rational().unwrap().clone())
                    })
                    .collect()
            })
            .collect();
        assert_eq!(rank(&rows), words.len());
    }
}
