//! OPEs, normal ordering and the state-field correspondence.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use va_exact::{factorial, Scalar, Q};

use crate::algebra::Algebra;
use crate::engine::{vacuum, Engine, Vector};
use crate::error::{Result, VaError};
use crate::field::{fmt_coeff, fmt_word, letter_deriv, Field, FieldExpr, Word};

/// A vector of the vacuum module in PBW coordinates, homogeneous in weight.
#[derive(Clone, Debug, PartialEq)]
pub struct State {
    /// Twice the conformal weight.
    pub weight2: i64,
    pub coords: BTreeMap<Word, Scalar>,
}

impl State {
    pub fn zero(weight2: i64) -> State {
        State { weight2, coords: BTreeMap::new() }
    }

    pub fn from_vector(alg: &Algebra, v: &Vector, weight2: Option<i64>) -> Result<State> {
        let mut w = weight2;
        for k in v.keys() {
            let wk = alg.word_w2(k);
            match w {
                None => w = Some(wk),
                Some(x) if x != wk => return Err(VaError::NotHomogeneous),
                _ => {}
            }
        }
        Ok(State { weight2: w.unwrap_or(0), coords: v.iter().map(|(k, c)| (k.clone(), c.clone())).collect() })
    }

    pub fn to_vector(&self) -> Vector {
        self.coords.iter().map(|(k, c)| (k.clone(), c.clone())).collect()
    }

    pub fn weight(&self) -> Q {
        va_exact::q(self.weight2, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> StateDisplay<'a> {
        StateDisplay { s: self, names }
    }
}

pub struct StateDisplay<'a> {
    s: &'a State,
    names: &'a [String],
}

impl fmt::Display for StateDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .s
            .coords
            .iter()
            .map(|(w, c)| {
                let modes: Vec<String> = w
                    .iter()
                    .map(|l| format!("{}({})", self.names[crate::field::letter_gen(*l)], -(letter_deriv(*l) as i64) - 1))
                    .collect();
                let m = if modes.is_empty() { "|0>".to_string() } else { modes.join(" ") + "|0>" };
                format!("{} {}", fmt_coeff(c), m)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Singular part of an OPE: `poles[n]` is the coefficient of `(z-w)^{-n}`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PoleExpansion {
    pub poles: BTreeMap<u32, FieldExpr>,
}

impl PoleExpansion {
    pub fn max_pole(&self) -> u32 {
        self.poles.keys().max().copied().unwrap_or(0)
    }

    /// The `n`-th product `a_(n)b`, that is the pole of order `n+1`.
    pub fn product(&self, n: u32) -> FieldExpr {
        self.poles.get(&(n + 1)).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PoleDisplay<'a> {
        PoleDisplay { p: self, names }
    }
}

pub struct PoleDisplay<'a> {
    p: &'a PoleExpansion,
    names: &'a [String],
}

impl fmt::Display for PoleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> =
            self.p.poles.iter().rev().map(|(n, x)| format!("{n}: {}", x.display(self.names))).collect();
        write!(f, "{{ {} }}", parts.join("; "))
    }
}

fn word_factor(w: &[crate::field::Letter]) -> Q {
    w.iter().fold(Q::from_integer(1.into()), |acc, l| acc * factorial(letter_deriv(*l)))
}

/// Coordinates of `f(z)|0>` at `z = 0`, as an unchecked vector.
pub fn vector_of(f: &FieldExpr) -> Vector {
    f.terms().iter().map(|(w, c)| (w.clone(), c * &Scalar::from(word_factor(w)))).collect()
}

/// The field whose state is `v`.
pub fn field_of_vector(v: &Vector) -> FieldExpr {
    FieldExpr::from_terms(v.iter().map(|(w, c)| (w.clone(), c * &Scalar::from(Q::from_integer(1.into()) / word_factor(w)))))
}

pub fn state_of(alg: &Algebra, f: &FieldExpr) -> Result<State> {
    check_gens(alg, f)?;
    State::from_vector(alg, &vector_of(f), None)
}

pub fn field_of_state(s: &State) -> FieldExpr {
    field_of_vector(&s.to_vector())
}

fn check_gens(alg: &Algebra, f: &FieldExpr) -> Result<()> {
    for w in f.terms().keys() {
        for l in w {
            if crate::field::letter_gen(*l) >= alg.ngens() {
                return Err(VaError::UnknownGenerator(format!("#{}", crate::field::letter_gen(*l))));
            }
        }
    }
    Ok(())
}

/// State of an arbitrary field tree.
pub fn state_of_field(eng: &Engine, f: &Field) -> Result<Vector> {
    eng.field_mode(f, -1, &vacuum(), 0)
}

/// Canonical form of a field tree.
pub fn canonical(eng: &Engine, f: &Field) -> Result<FieldExpr> {
    Ok(field_of_vector(&state_of_field(eng, f)?))
}

impl Engine<'_> {
    pub fn ope(&self, left: &FieldExpr, right: &FieldExpr) -> Result<PoleExpansion> {
        let alg = self.algebra();
        check_gens(alg, left)?;
        check_gens(alg, right)?;
        let lf = left.to_field();
        let rv = vector_of(right);
        let top = (alg.field_max_w2(&lf) + rv.keys().map(|w| alg.word_w2(w)).max().unwrap_or(0)).div_euclid(2);
        let mut out = PoleExpansion::default();
        for n in 1..=top.max(0) {
            let r = self.field_mode(&lf, n - 1, &rv, 0)?;
            if !r.is_empty() {
                out.poles.insert(n as u32, field_of_vector(&r));
            }
        }
        Ok(out)
    }

    /// `left_(n) right` for a single `n` (any sign).
    pub fn nth_product(&self, left: &FieldExpr, n: i64, right: &FieldExpr) -> Result<FieldExpr> {
        let r = self.field_mode(&left.to_field(), n, &vector_of(right), 0)?;
        Ok(field_of_vector(&r))
    }

    /// Right-nested Wick product `:f1 :f2 ... fk::`.
    pub fn normal_order(&self, factors: &[FieldExpr]) -> Result<FieldExpr> {
        let Some((last, init)) = factors.split_last() else {
            return Err(VaError::Invalid("normal_order needs at least one factor".into()));
        };
        let mut v = vector_of(last);
        for f in init.iter().rev() {
            v = self.field_mode(&f.to_field(), -1, &v, 0)?;
        }
        Ok(field_of_vector(&v))
    }

    /// `∂^k f`.
    pub fn derivative(&self, f: &FieldExpr, k: u32) -> Result<FieldExpr> {
        canonical(self, &Field::deriv(k, f.to_field()))
    }
}

pub fn ope(alg: &Algebra, left: &FieldExpr, right: &FieldExpr) -> Result<PoleExpansion> {
    Engine::new(alg).ope(left, right)
}

pub fn normal_order(alg: &Algebra, factors: &[FieldExpr]) -> Result<FieldExpr> {
    Engine::new(alg).normal_order(factors)
}

/// Render a word as a PBW mode monomial, for diagnostics.
pub fn describe_word(w: &[crate::field::Letter], names: &[String]) -> String {
    fmt_word(w, names)
}

pub fn is_zero_vector(v: &Vector) -> bool {
    v.values().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::text::parse_field_expr;

    fn poles(alg: &Algebra, a: &str, b: &str) -> String {
        let l = parse_field_expr(alg, a).unwrap();
        let r = parse_field_expr(alg, b).unwrap();
        ope(alg, &l, &r).unwrap().display(alg.names()).to_string()
    }

    #[test]
    fn heisenberg_ope() {
        let h = presets::heisenberg(1);
        assert_eq!(poles(&h, "a1", "a1"), "{ 2: 1 }");
        assert_eq!(poles(&h, ":a1 a1:", "a1"), "{ 2: 2 a1; 1: 2 D a1 }");
        assert_eq!(poles(&h, "a1", ":a1 a1:"), "{ 2: 2 a1 }");
        assert_eq!(poles(&h, ":a1 a1:", ":a1 a1:"), "{ 4: 2; 2: 4 :a1 a1:; 1: 4 :D a1 a1: }");
    }

    #[test]
    fn godd_and_t() {
        let g = presets::godd(4);
        assert_eq!(poles(&g, "phi1", "phi2"), "{}");
        assert_eq!(poles(&g, "phi1", "phi1"), "{ 3: 1 }");
        let t = presets::tfield();
        assert_eq!(poles(&t, "t", "t"), "{ 4: 1 }");
    }

    #[test]
    fn odd_square_vanishes() {
        let g = presets::godd(1);
        let phi = parse_field_expr(&g, "phi1").unwrap();
        assert!(normal_order(&g, &[phi.clone(), phi.clone()]).unwrap().is_zero());
        let dphi = parse_field_expr(&g, "D phi1").unwrap();
        assert!(!normal_order(&g, &[dphi, phi]).unwrap().is_zero());
    }

    #[test]
    fn normal_order_nests_right() {
        let h = presets::heisenberg(1);
        let a = parse_field_expr(&h, "a1").unwrap();
        let f = normal_order(&h, &[a.clone(), a.clone(), a.clone()]).unwrap();
        assert_eq!(f.display(h.names()).to_string(), ":a1 a1 a1:");
        assert_eq!(normal_order(&h, &[a.clone()]).unwrap(), a);
    }

    #[test]
    fn derivative_identity() {
        // n! a_(-n-1) b = :(∂^n a) b:
        let h = presets::heisenberg(2);
        let eng = Engine::new(&h);
        let a = parse_field_expr(&h, "a1").unwrap();
        let b = parse_field_expr(&h, ":a2 a1:").unwrap();
        let lhs = eng.nth_product(&a, -4, &b).unwrap().scale(&Scalar::int(6));
        let rhs = parse_field_expr(&h, ":[D^3 a1] [:a2 a1:]:").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn state_coordinates() {
        let h = presets::heisenberg(1);
        let s = state_of(&h, &parse_field_expr(&h, ":a1 a1:").unwrap()).unwrap();
        assert_eq!(s.weight2, 4);
        assert_eq!(s.coords.len(), 1);
        let s = state_of(&h, &FieldExpr::identity()).unwrap();
        assert_eq!(s.weight2, 0);
        assert_eq!(s.coords.keys().next().unwrap().len(), 0);
    }

    #[test]
    fn unknown_generator() {
        let h = presets::heisenberg(1);
        assert!(matches!(parse_field_expr(&h, "b"), Err(VaError::UnknownGenerator(_))));
    }
}
