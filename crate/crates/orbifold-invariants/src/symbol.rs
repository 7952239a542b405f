//! Classical symbols: the associated graded image of a field in the ring of
//! differential polynomials.
//!
//! Two levels are provided. [`classical_symbol`] sends a field of a bosonic
//! free-field algebra to its top-degree part in the variables `g_d = ∂^d g`.
//! [`relation_symbol`] sends a normally ordered polynomial in the invariants to
//! its top-degree part in the variables `q_ij`, `c_klm`, with `∂` acting as a
//! derivation; [`expand_invariants`] links the two by writing `q_ij` and `c_klm`
//! in terms of the `a^r_d`.

use std::collections::BTreeMap;

use va_core::{letter_deriv, letter_gen, Algebra, FieldExpr, Result, VaError};
use va_exact::mpoly::{MPoly, Mono};
use va_exact::{binomial, q, Var, Q};

use crate::invariants::Invariant;
use crate::relation::RelTerm;

/// Variable `∂^d g` for the generator called `name`.
pub fn letter_var(name: &str, d: u32) -> Var {
    Var::new(&format!("{name}_{d}"))
}

/// Top component of `f` under the filtration by number of letters.
pub fn classical_symbol(alg: &Algebra, f: &FieldExpr) -> Result<MPoly> {
    if let Some(g) = (0..alg.ngens()).find(|g| alg.is_odd(*g)) {
        return Err(VaError::Invalid(format!("odd generator `{}` has no commutative symbol", alg.names()[g])));
    }
    let top = f.terms().keys().map(|w| w.len()).max().unwrap_or(0);
    let mut out = MPoly::zero();
    for (w, c) in f.terms() {
        if w.len() != top {
            continue;
        }
        let c = c.as_rational().ok_or_else(|| VaError::Invalid("symbol of a formal coefficient".into()))?;
        let mut m = MPoly::one();
        for l in w {
            m = &m * &MPoly::var(letter_var(&alg.names()[letter_gen(*l)], letter_deriv(*l)));
        }
        out = &out + &m.scale(c);
    }
    Ok(out)
}

fn label(idx: &[u32]) -> String {
    if idx.iter().all(|x| *x < 10) {
        idx.iter().map(|x| x.to_string()).collect()
    } else {
        idx.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `q_ij` with `i <= j`.
pub fn q_var(i: u32, j: u32) -> Var {
    Var::new(&format!("q{}", label(&[i.min(j), i.max(j)])))
}

/// `c_klm` up to sign, indices sorted; `None` if two coincide.
pub fn c_var(k: u32, l: u32, m: u32) -> Option<(Var, i64)> {
    if k == l || l == m || k == m {
        return None;
    }
    let mut v = [k, l, m];
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((Var::new(&format!("c{}", label(&v))), sign))
}

/// `∂^d` of one invariant, as a linear form in the `q`/`c` variables.
pub fn derivative_symbol(x: Invariant, d: u32) -> MPoly {
    let mut out = MPoly::zero();
    match x {
        Invariant::Q(i, j) => {
            for a in 0..=d {
                out = &out + &MPoly::var(q_var(i + a, j + d - a)).scale(&binomial(d as i64, a));
            }
        }
        Invariant::C(k, l, m) => {
            for a in 0..=d {
                for b in 0..=d - a {
                    let mult = binomial(d as i64, a) * binomial((d - a) as i64, b);
                    if let Some((v, s)) = c_var(k + a, l + b, m + d - a - b) {
                        out = &out + &MPoly::var(v).scale(&(mult * q(s, 1)));
                    }
                }
            }
        }
        Invariant::FermiQ(..) | Invariant::FermiW(..) => {
            panic!("derivative_symbol is defined for the H(3) invariants only")
        }
    }
    out
}

fn degree_of(m: &Mono) -> u32 {
    m.0.iter().map(|(v, e)| if v.name().starts_with('c') { 3 * e } else { 2 * e }).sum()
}

/// Top component, in the letter degree (`q` has degree 2, `c` degree 3), of a
/// normally ordered polynomial in the invariants.
pub fn relation_symbol(terms: &[RelTerm]) -> MPoly {
    let mut full = MPoly::zero();
    for t in terms {
        let mut p = MPoly::constant(t.coeff.clone());
        for (d, x) in &t.factors {
            p = &p * &derivative_symbol(*x, *d);
        }
        full = &full + &p;
    }
    let top = full.terms().map(|(m, _)| degree_of(m)).max().unwrap_or(0);
    let mut out = MPoly::zero();
    for (m, c) in full.terms() {
        if degree_of(m) == top {
            out = &out + &MPoly::term(m.clone(), c.clone());
        }
    }
    out
}

/// `c_012^2 - det(q_ij)_{0<=i,j<=2}`.
pub fn classical_relation() -> MPoly {
    let qv = |i, j| MPoly::var(q_var(i, j));
    let c = MPoly::var(c_var(0, 1, 2).unwrap().0);
    let det = &(&(&(&qv(0, 0) * &qv(1, 1)) * &qv(2, 2)) + &(&(&qv(0, 1) * &qv(1, 2)) * &qv(0, 2)).scale(&q(2, 1)))
        - &(&(&(&qv(0, 0) * &qv(1, 2)) * &qv(1, 2)) + &(&(&(&qv(1, 1) * &qv(0, 2)) * &qv(0, 2)) + &(&(&qv(2, 2) * &qv(0, 1)) * &qv(0, 1))));
    &(&c * &c) - &det
}

/// Substitute `q_ij = Σ_r a^r_i a^r_j` and `c_klm = det(a^r_{k,l,m})` into a
/// polynomial in the `q`/`c` variables. `names` are the three generator names.
pub fn expand_invariants(p: &MPoly, names: &[String; 3]) -> MPoly {
    let a = |r: usize, d: u32| MPoly::var(letter_var(&names[r], d));
    let mut cache: BTreeMap<Var, MPoly> = BTreeMap::new();
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let mut t = MPoly::constant(c.clone());
        for (v, e) in &m.0 {
            let sub = cache
                .entry(*v)
                .or_insert_with(|| {
                    let name = v.name();
                    let idx: Vec<u32> = if name[1..].contains(',') {
                        name[1..].split(',').map(|x| x.parse().unwrap()).collect()
                    } else {
                        name[1..].chars().map(|ch| ch.to_digit(10).unwrap()).collect()
                    };
                    if name.starts_with('q') {
                        (0..3).fold(MPoly::zero(), |acc, r| &acc + &(&a(r, idx[0]) * &a(r, idx[1])))
                    } else {
                        let (k, l, m) = (idx[0], idx[1], idx[2]);
                        let perms: [([u32; 3], i64); 6] =
                            [([k, l, m], 1), ([k, m, l], -1), ([l, k, m], -1), ([l, m, k], 1), ([m, k, l], 1), ([m, l, k], -1)];
                        perms.iter().fold(MPoly::zero(), |acc, (pm, s)| {
                            &acc + &(&(&a(0, pm[0]) * &a(1, pm[1])) * &a(2, pm[2])).scale(&q(*s, 1))
                        })
                    }
                })
                .clone();
            t = &t * &sub.pow(*e);
        }
        out = &out + &t;
    }
    out
}

/// Rational coefficient of a monomial given as `(variable, exponent)` pairs.
pub fn coefficient(p: &MPoly, vars: &[(Var, u32)]) -> Q {
    let mut v = vars.to_vec();
    v.sort();
    p.coeff(&Mono(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::build_q;
    use crate::relation::{classical_terms, published_relation};
    use va_core::presets;

    fn names() -> [String; 3] {
        ["a1".into(), "a2".into(), "a3".into()]
    }

    #[test]
    fn symbol_of_q02() {
        let h = presets::heisenberg(3);
        let s = classical_symbol(&h, &build_q(&h, 0, 2).unwrap()).unwrap();
        assert_eq!(s, expand_invariants(&MPoly::var(q_var(0, 2)), &names()));
    }

    #[test]
    fn appendix_relation_symbol() {
        assert_eq!(relation_symbol(&classical_terms()), classical_relation());
        assert_eq!(relation_symbol(&published_relation()), classical_relation());
    }

    #[test]
    fn classical_relation_holds_in_free_variables() {
        assert!(expand_invariants(&classical_relation(), &names()).is_zero());
    }

    #[test]
    fn derivation_on_cubics() {
        // ∂c_012 = c_112 + c_022 + c_013 = c_013
        assert_eq!(derivative_symbol(Invariant::C(0, 1, 2), 1), MPoly::var(c_var(0, 1, 3).unwrap().0));
        assert_eq!(c_var(2, 1, 0).unwrap().1, -1);
    }
}
