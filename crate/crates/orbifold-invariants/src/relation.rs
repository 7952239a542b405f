//! The weight 12 decoupling relation among the generators of `H(3)^{SO_3}`:
//! the quantum correction of `c_012^2 - det(q_ij)_{0<=i,j<=2} = 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use va_core::basis::{graded_dims, pbw_basis};
use va_core::engine::Engine;
use va_core::ops::vector_of;
use va_core::{presets, Algebra, FieldExpr, Result, VaError, Word};
use va_exact::linalg::{Echelon, SparseVec};
use va_exact::{fmt_rational, q, Q};

use crate::invariants::Invariant;

/// Twice the weight of the relation.
pub const RELATION_W2: i64 = 24;

/// Dimension of the weight 12 piece of `H(3)`.
pub const WEIGHT12_DIM: usize = 7868;

/// One summand `coeff · :∂^{d1}X1 :∂^{d2}X2 ...::` of a relation.
#[derive(Clone, Debug, PartialEq)]
pub struct RelTerm {
    pub coeff: Q,
    pub factors: Vec<(u32, Invariant)>,
}

impl RelTerm {
    fn new(coeff: Q, factors: &[(u32, Invariant)]) -> RelTerm {
        RelTerm { coeff, factors: factors.to_vec() }
    }
}

impl fmt::Display for RelTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fac: Vec<String> = self
            .factors
            .iter()
            .map(|(d, x)| match d {
                0 => x.to_string(),
                1 => format!("D {x}"),
                _ => format!("D^{d} {x}"),
            })
            .collect();
        if fac.len() == 1 {
            write!(f, "{} {}", fmt_rational(&self.coeff), fac[0])
        } else {
            write!(f, "{} :{}:", fmt_rational(&self.coeff), fac.join(" "))
        }
    }
}

fn qq(i: u32, j: u32) -> Invariant {
    Invariant::Q(i, j)
}

/// The cubic part `:C012 C012: - (det)`, with the six quadratic-in-Q triple products.
pub fn classical_terms() -> Vec<RelTerm> {
    let c = Invariant::C(0, 1, 2);
    let t = |n: i64, a: Invariant, b: Invariant, x: Invariant| RelTerm::new(q(n, 1), &[(0, a), (0, b), (0, x)]);
    vec![
        RelTerm::new(q(1, 1), &[(0, c), (0, c)]),
        t(-1, qq(0, 0), qq(1, 1), qq(2, 2)),
        t(1, qq(0, 0), qq(1, 2), qq(1, 2)),
        t(1, qq(0, 1), qq(0, 1), qq(2, 2)),
        t(1, qq(0, 2), qq(1, 1), qq(0, 2)),
        t(-1, qq(0, 1), qq(0, 2), qq(1, 2)),
        t(-1, qq(0, 2), qq(1, 2), qq(0, 1)),
    ]
}

/// The 35 lower-order correction terms in the order they are printed,
/// with their published coefficients.
pub fn correction_terms() -> Vec<RelTerm> {
    let p = |n: i64, d: i64, a: (u32, u32, u32), b: (u32, u32, u32)| {
        RelTerm::new(q(n, d), &[(a.0, qq(a.1, a.2)), (b.0, qq(b.1, b.2))])
    };
    let s = |n: i64, d: i64, k: u32, x: (u32, u32)| RelTerm::new(q(n, d), &[(k, qq(x.0, x.1))]);
    vec![
        p(1, 30, (0, 0, 0), (0, 0, 8)),
        p(127, 15, (0, 0, 2), (0, 0, 6)),
        p(-49, 6, (0, 0, 4), (0, 0, 4)),
        p(-1, 6, (2, 0, 0), (0, 0, 6)),
        p(241, 60, (1, 0, 0), (1, 0, 6)),
        p(19, 30, (0, 0, 0), (2, 0, 6)),
        p(233, 12, (2, 0, 2), (0, 0, 4)),
        p(13, 3, (1, 0, 2), (1, 0, 4)),
        p(-409, 12, (0, 0, 2), (2, 0, 4)),
        p(-101, 24, (4, 0, 0), (0, 0, 4)),
        p(-5, 12, (3, 0, 0), (1, 0, 4)),
        p(4, 1, (2, 0, 0), (2, 0, 4)),
        p(-117, 8, (1, 0, 0), (3, 0, 4)),
        p(-7, 3, (0, 0, 0), (4, 0, 4)),
        p(159, 4, (4, 0, 2), (0, 0, 2)),
        p(-229, 24, (3, 0, 2), (1, 0, 2)),
        p(-17, 2, (2, 0, 2), (2, 0, 2)),
        p(-159, 20, (6, 0, 0), (0, 0, 2)),
        p(95, 48, (5, 0, 0), (1, 0, 2)),
        p(85, 24, (4, 0, 0), (2, 0, 2)),
        p(89, 48, (3, 0, 0), (3, 0, 2)),
        p(-5, 1, (2, 0, 0), (4, 0, 2)),
        p(4357, 240, (1, 0, 0), (5, 0, 2)),
        p(14, 5, (0, 0, 0), (6, 0, 2)),
        p(-17, 30, (8, 0, 0), (0, 0, 0)),
        p(-589, 160, (7, 0, 0), (1, 0, 0)),
        p(1, 1, (6, 0, 0), (2, 0, 0)),
        p(-13, 32, (5, 0, 0), (3, 0, 0)),
        p(-17, 48, (4, 0, 0), (4, 0, 0)),
        s(313, 450, 0, (0, 10)),
        s(403, 72, 2, (0, 8)),
        s(-2141, 120, 4, (0, 6)),
        s(3653, 45, 6, (0, 4)),
        s(-1058927, 10080, 8, (0, 2)),
        s(2156377, 100800, 10, (0, 0)),
    ]
}

/// Classical part followed by the corrections.
pub fn published_relation() -> Vec<RelTerm> {
    let mut v = classical_terms();
    v.extend(correction_terms());
    v
}

/// Coordinates of weight 12 states of `H(3)` over the PBW basis.
pub struct Weight12Space {
    alg: Algebra,
    index: HashMap<Word, usize>,
    cache: HashMap<Invariant, FieldExpr>,
}

impl Weight12Space {
    /// Enumerates the PBW basis and checks its size against the generating function.
    pub fn new() -> Result<Weight12Space> {
        let alg = presets::heisenberg(3);
        let from_series = graded_dims(&alg, RELATION_W2)?[RELATION_W2 as usize] as usize;
        let basis = pbw_basis(&alg, RELATION_W2)?;
        if from_series != basis.len() || basis.len() != WEIGHT12_DIM {
            return Err(VaError::Invalid(format!(
                "weight 12 piece: series gives {from_series}, enumeration gives {}, expected {WEIGHT12_DIM}",
                basis.len()
            )));
        }
        let index = basis.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(Weight12Space { alg, index, cache: HashMap::new() })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    fn prepare(&mut self, terms: &[RelTerm]) -> Result<()> {
        for t in terms {
            for (_, x) in &t.factors {
                if !self.cache.contains_key(x) {
                    let f = x.build(&self.alg)?;
                    self.cache.insert(*x, f);
                }
            }
        }
        Ok(())
    }

    /// The state of one term with unit coefficient.
    fn term_state(&self, t: &RelTerm) -> Result<SparseVec<Q>> {
        let eng = Engine::new(&self.alg);
        let mut fs = Vec::with_capacity(t.factors.len());
        for (d, x) in &t.factors {
            fs.push(eng.derivative(&self.cache[x], *d)?);
        }
        let f = eng.normal_order(&fs)?;
        let mut out = SparseVec::new();
        for (w, c) in vector_of(&f) {
            let Some(&i) = self.index.get(&w) else {
                return Err(VaError::NotHomogeneous);
            };
            let c = c.as_rational().cloned().ok_or_else(|| VaError::Invalid("non-rational coefficient".into()))?;
            out.insert(i, c);
        }
        Ok(out)
    }

    /// States of all terms with unit coefficients, in order.
    pub fn term_states(&mut self, terms: &[RelTerm]) -> Result<Vec<SparseVec<Q>>> {
        self.prepare(terms)?;
        let this = &*self;
        terms.par_iter().map(|t| this.term_state(t)).collect()
    }
}

fn combine(states: &[SparseVec<Q>], coeffs: impl Iterator<Item = Q>) -> SparseVec<Q> {
    let mut out = SparseVec::new();
    for (s, c) in states.iter().zip(coeffs) {
        va_exact::linalg::axpy(&mut out, &c, s);
    }
    out
}

/// Outcome of evaluating the relation and re-solving its corrections.
#[derive(Clone, Debug)]
pub struct DecouplingReport {
    pub dim: usize,
    /// Residual of the relation with the published coefficients (sparse PBW coordinates).
    pub residual: SparseVec<Q>,
    /// Coefficients of the 35 correction terms found by exact solve, if one exists.
    pub solved: Option<Vec<Q>>,
    /// Dimension of the space of corrections annihilating the classical part.
    pub nullity: usize,
    pub published: Vec<Q>,
}

impl DecouplingReport {
    pub fn holds(&self) -> bool {
        self.residual.is_empty()
    }

    /// Indices where the solved correction differs from the published one.
    pub fn differing(&self) -> Vec<usize> {
        match &self.solved {
            Some(s) => (0..s.len()).filter(|i| s[*i] != self.published[*i]).collect(),
            None => (0..self.published.len()).collect(),
        }
    }
}

/// Evaluate `classical` + `corrections` in the weight 12 piece; then solve for the
/// correction coefficients with the classical part held fixed.
pub fn verify_relation(space: &mut Weight12Space, classical: &[RelTerm], corrections: &[RelTerm]) -> Result<DecouplingReport> {
    let cs = space.term_states(classical)?;
    let ks = space.term_states(corrections)?;
    let head = combine(&cs, classical.iter().map(|t| t.coeff.clone()));
    let mut residual = head.clone();
    va_exact::linalg::axpy(&mut residual, &q(1, 1), &combine(&ks, corrections.iter().map(|t| t.coeff.clone())));

    let mut ech = Echelon::<Q>::new(true);
    for s in &ks {
        ech.insert(s);
    }
    let nullity = ks.len() - ech.rank();
    // corrections = -head
    let red = ech.reduce(&head);
    let solved = red.residual.is_empty().then(|| {
        let mut x = vec![q(0, 1); ks.len()];
        for (i, c) in red.combination {
            x[i] = -c;
        }
        x
    });
    Ok(DecouplingReport {
        dim: space.dim(),
        residual,
        solved,
        nullity,
        published: corrections.iter().map(|t| t.coeff.clone()).collect(),
    })
}

/// The published weight 12 relation, evaluated exactly.
pub fn verify_decoupling_wt12() -> Result<DecouplingReport> {
    let mut space = Weight12Space::new()?;
    verify_relation(&mut space, &classical_terms(), &correction_terms())
}

/// Nonzero PBW coordinates of a residual keyed by word, for reporting.
pub fn residual_words(space: &Weight12Space, r: &SparseVec<Q>) -> BTreeMap<Word, Q> {
    let mut by_index: Vec<(&Word, &usize)> = space.index.iter().collect();
    by_index.sort_by_key(|(_, i)| **i);
    r.iter().map(|(i, c)| (by_index[*i].0.clone(), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription_shape() {
        assert_eq!(classical_terms().len(), 7);
        let k = correction_terms();
        assert_eq!(k.len(), 35);
        assert_eq!(k[29].factors, vec![(0, Invariant::Q(0, 10))]);
        assert_eq!(k[29].coeff, q(313, 450));
        for t in published_relation() {
            let w: i64 = t.factors.iter().map(|(d, x)| x.weight2() + 2 * *d as i64).sum();
            assert_eq!(w, RELATION_W2, "{t}");
        }
    }
}
