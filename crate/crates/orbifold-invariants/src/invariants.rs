//! Quadratic and cubic O(3)/SO(3) invariants in the rank 3 Heisenberg algebra,
//! and quadratic/quartic invariants of four odd free fields of weight 3/2.

use std::fmt;

use va_core::engine::Engine;
use va_core::{letter, Algebra, FieldExpr, Result, Scalar, Word};

/// A named invariant generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    /// `Q_ij = Σ_r :∂^i α^r ∂^j α^r:` in `H(3)`.
    Q(u32, u32),
    /// `C_klm = Σ_σ sgn(σ) :∂^{σk} α^1 ∂^{σl} α^2 ∂^{σm} α^3:` in `H(3)`.
    C(u32, u32, u32),
    /// `q^{j,k} = Σ_i :∂^j φ^i ∂^k φ^i:` in `G_odd(4)`.
    FermiQ(u32, u32),
    /// Signless determinant `w^{ijkl}` in `G_odd(4)`.
    FermiW(u32, u32, u32, u32),
}

impl Invariant {
    /// Twice the conformal weight.
    pub fn weight2(&self) -> i64 {
        match *self {
            Invariant::Q(i, j) => 2 * (i + j + 2) as i64,
            Invariant::C(k, l, m) => 2 * (k + l + m + 3) as i64,
            Invariant::FermiQ(j, k) => 2 * (j + k + 3) as i64,
            Invariant::FermiW(i, j, k, l) => 2 * (i + j + k + l + 6) as i64,
        }
    }

    /// Polynomial degree in the free fields.
    pub fn degree(&self) -> usize {
        match self {
            Invariant::Q(..) | Invariant::FermiQ(..) => 2,
            Invariant::C(..) => 3,
            Invariant::FermiW(..) => 4,
        }
    }

    pub fn build(&self, alg: &Algebra) -> Result<FieldExpr> {
        match *self {
            Invariant::Q(i, j) => build_q(alg, i, j),
            Invariant::C(k, l, m) => build_c(alg, k, l, m),
            Invariant::FermiQ(j, k) => build_fermi_q(alg, j, k),
            Invariant::FermiW(i, j, k, l) => build_fermi_w(alg, i, j, k, l),
        }
    }

    /// Parse labels such as `Q0,2`, `C012`, `C0,1,10`, `q1,0`, `w0002`.
    pub fn parse(s: &str) -> Option<Invariant> {
        let s = s.trim();
        let head = s.chars().next()?;
        let body = &s[1..];
        let idx: Vec<u32> = if body.contains(',') {
            body.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?
        } else {
            body.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?
        };
        match (head, idx.as_slice()) {
            ('Q', [i, j]) => Some(Invariant::Q(*i, *j)),
            ('C', [k, l, m]) => Some(Invariant::C(*k, *l, *m)),
            ('q', [j, k]) => Some(Invariant::FermiQ(*j, *k)),
            ('w', [i, j, k, l]) => Some(Invariant::FermiW(*i, *j, *k, *l)),
            _ => None,
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            if v.iter().all(|x| *x < 10) {
                v.iter().map(|x| x.to_string()).collect::<String>()
            } else {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        match *self {
            Invariant::Q(i, j) => write!(f, "Q{}", join(&[i, j])),
            Invariant::C(k, l, m) => write!(f, "C{}", join(&[k, l, m])),
            Invariant::FermiQ(j, k) => write!(f, "q{}", join(&[j, k])),
            Invariant::FermiW(i, j, k, l) => write!(f, "w{}", join(&[i, j, k, l])),
        }
    }
}

fn deriv_gen(g: usize, d: u32) -> FieldExpr {
    FieldExpr::word(Word::from_slice(&[letter(g, d)]))
}

/// `Q_ij` in `heisenberg(3)`.
pub fn build_q(alg: &Algebra, i: u32, j: u32) -> Result<FieldExpr> {
    let eng = Engine::new(alg);
    let mut out = FieldExpr::zero();
    for r in 0..3 {
        out = out.add(&eng.normal_order(&[deriv_gen(r, i), deriv_gen(r, j)])?);
    }
    Ok(out)
}

/// `C_klm` in `heisenberg(3)`; alternating in its indices, zero when two coincide.
pub fn build_c(alg: &Algebra, k: u32, l: u32, m: u32) -> Result<FieldExpr> {
    if k == l || l == m || k == m {
        log::warn!("C{k}{l}{m} has a repeated index and vanishes");
        return Ok(FieldExpr::zero());
    }
    let eng = Engine::new(alg);
    let perms: [([u32; 3], i64); 6] =
        [([k, l, m], 1), ([k, m, l], -1), ([l, k, m], -1), ([l, m, k], 1), ([m, k, l], 1), ([m, l, k], -1)];
    let mut out = FieldExpr::zero();
    for (p, s) in perms {
        let w = eng.normal_order(&[deriv_gen(0, p[0]), deriv_gen(1, p[1]), deriv_gen(2, p[2])])?;
        out = out.add(&w.scale(&Scalar::int(s)));
    }
    Ok(out)
}

/// `q^{j,k}` in `godd(4)`.
pub fn build_fermi_q(alg: &Algebra, j: u32, k: u32) -> Result<FieldExpr> {
    let eng = Engine::new(alg);
    let mut out = FieldExpr::zero();
    for r in 0..4 {
        out = out.add(&eng.normal_order(&[deriv_gen(r, j), deriv_gen(r, k)])?);
    }
    Ok(out)
}

/// `w^{ijkl}` in `godd(4)`: the sum of `:∂^{d1}φ^1 ∂^{d2}φ^2 ∂^{d3}φ^3 ∂^{d4}φ^4:` over
/// the distinct rearrangements `(d1, d2, d3, d4)` of `(i, j, k, l)`.
pub fn build_fermi_w(alg: &Algebra, i: u32, j: u32, k: u32, l: u32) -> Result<FieldExpr> {
    let eng = Engine::new(alg);
    let mut ds = vec![i, j, k, l];
    ds.sort();
    let mut out = FieldExpr::zero();
    loop {
        let f: Vec<FieldExpr> = ds.iter().enumerate().map(|(r, d)| deriv_gen(r, *d)).collect();
        out = out.add(&eng.normal_order(&f)?);
        if !next_permutation(&mut ds) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The closed generating set `{C_01j : j = 2,4,5,6,8} ∪ {Q_0,2k : k = 0..4}`.
pub fn minimal_generators() -> Vec<Invariant> {
    let mut v: Vec<Invariant> = [2, 4, 5, 6, 8].iter().map(|j| Invariant::C(0, 1, *j)).collect();
    v.extend((0..5).map(|k| Invariant::Q(0, 2 * k)));
    v
}

/// The fermionic set `{q^{1,0}, q^{3,0}, q^{5,0}, q^{7,0}, w^{0000}, w^{0002}, w^{0003}, w^{0022}, w^{0033}}`.
pub fn fermionic_generators() -> Vec<Invariant> {
    let mut v: Vec<Invariant> = [1, 3, 5, 7].iter().map(|j| Invariant::FermiQ(*j, 0)).collect();
    v.extend([(0, 0, 0, 0), (0, 0, 0, 2), (0, 0, 0, 3), (0, 0, 2, 2), (0, 0, 3, 3)].iter().map(|&(a, b, c, d)| Invariant::FermiW(a, b, c, d)));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use va_core::{parse_field_expr, presets};

    #[test]
    fn q00_is_sum_of_squares() {
        let h = presets::heisenberg(3);
        let q = build_q(&h, 0, 0).unwrap();
        assert_eq!(q, parse_field_expr(&h, ":a1 a1: + :a2 a2: + :a3 a3:").unwrap());
        assert_eq!(build_q(&h, 0, 2).unwrap(), build_q(&h, 2, 0).unwrap());
    }

    #[test]
    fn cubic_weights_and_alternation() {
        let h = presets::heisenberg(3);
        let c = build_c(&h, 0, 1, 2).unwrap();
        let s = va_core::state_of(&h, &c).unwrap();
        assert_eq!(s.weight2, 12);
        assert_eq!(Invariant::C(0, 1, 2).weight2(), 12);
        assert_eq!(build_c(&h, 0, 2, 1).unwrap(), c.scale(&Scalar::int(-1)));
        assert!(build_c(&h, 1, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn fermionic_weights() {
        let g = presets::godd(4);
        assert_eq!(va_core::state_of(&g, &build_fermi_q(&g, 0, 1).unwrap()).unwrap().weight2, 8);
        assert_eq!(va_core::state_of(&g, &build_fermi_w(&g, 0, 0, 0, 0).unwrap()).unwrap().weight2, 12);
        assert!(build_fermi_q(&g, 0, 0).unwrap().is_zero());
    }

    #[test]
    fn labels_round_trip() {
        for inv in minimal_generators().into_iter().chain(fermionic_generators()).chain([Invariant::Q(0, 10)]) {
            assert_eq!(Invariant::parse(&inv.to_string()), Some(inv));
        }
    }
}
