//! Strong spans: the span of `X1_(n1) ... Xk_(nk) |0>` with every `n < 0`, for a
//! finite list of fields `X`, and OPE closure checks against them.
//!
//! Two ways of fixing a basis are available. [`SpanMode::Exact`] eliminates
//! every candidate over the coefficient field. [`SpanMode::Modular`] selects
//! candidates that are independent modulo a large prime (hence independent
//! over Q) and decides membership by an exact solve on the pivot columns
//! followed by an exact check of the full vector. A positive answer is always
//! exact; a negative answer in modular mode only says "not in the span of the
//! selected vectors", so [`closure_check`] re-decides those with an exact tower.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rayon::prelude::*;
use va_core::engine::{vacuum, Engine, Vector};
use va_core::ops::{field_of_vector, vector_of};
use va_core::{Algebra, Field, FieldExpr, Result, Scalar, State, VaError, Word};
use va_exact::linalg::{dense_inverse, Echelon, Fp, SparseVec};
use va_exact::Q;

pub const DEFAULT_SPAN_BOUND: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanMode {
    Exact,
    Modular,
}

#[derive(Clone, Debug)]
enum Solver {
    Exact {
        echelon: Echelon<Scalar>,
        /// Basis position of each vector offered to the echelon, if it was kept.
        offered: Vec<Option<usize>>,
    },
    Pivoted {
        pivots: Vec<usize>,
        /// Inverse of the basis restricted to the pivot columns.
        inverse: Vec<Vec<Q>>,
    },
}

/// Span of the normally ordered monomials in `generators` and their
/// derivatives, at one weight.
#[derive(Clone, Debug)]
pub struct StrongSpan {
    pub weight2: i64,
    /// Linearly independent states spanning the piece.
    pub basis: Vec<State>,
    index: HashMap<Word, usize>,
    solver: Solver,
}

impl StrongSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether the basis is known to span the whole piece.
    pub fn is_exact(&self) -> bool {
        matches!(self.solver, Solver::Exact { .. })
    }

    fn coords(&self, v: &Vector) -> Option<SparseVec<Scalar>> {
        let mut out = SparseVec::new();
        for (w, c) in v {
            if c.is_zero() {
                continue;
            }
            out.insert(*self.index.get(w)?, c.clone());
        }
        Some(out)
    }
}

/// Coordinates of `s` in the basis of `span`, or `None` if `s` is not in it.
pub fn member(span: &StrongSpan, s: &State) -> Option<Vec<Scalar>> {
    if s.is_zero() {
        return Some(vec![Scalar::zero(); span.dim()]);
    }
    if s.weight2 != span.weight2 {
        return None;
    }
    let v = span.coords(&s.to_vector())?;
    match &span.solver {
        Solver::Exact { echelon, offered } => {
            let red = echelon.reduce(&v);
            if !red.residual.is_empty() {
                return None;
            }
            let mut out = vec![Scalar::zero(); span.dim()];
            for (i, c) in red.combination {
                out[offered[i].expect("combinations only involve kept rows")] = c;
            }
            Some(out)
        }
        Solver::Pivoted { pivots, inverse } => {
            let tp: Vec<Q> = pivots
                .iter()
                .map(|p| v.get(p).map(|c| c.as_rational().cloned()).unwrap_or(Some(Q::zero())))
                .collect::<Option<_>>()?;
            let r = pivots.len();
            let mut x = vec![Q::zero(); r];
            for (k, t) in tp.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                for j in 0..r {
                    if !inverse[k][j].is_zero() {
                        x[j] += t * &inverse[k][j];
                    }
                }
            }
            let coords: Vec<Scalar> = x.into_iter().map(Scalar::from).collect();
            let mut check = s.to_vector();
            for (b, c) in span.basis.iter().zip(&coords) {
                if !c.is_zero() {
                    va_core::engine::axpy(&mut check, &-c.clone(), &b.to_vector());
                }
            }
            check.values().all(|c| c.is_zero()).then_some(coords)
        }
    }
}

/// Strong spans of a generator list at every weight up to a bound, built
/// recursively: `S_w = Σ_X Σ_d (∂^d X)_(-1) S_{w - wt X - d}`.
pub struct SpanTower<'a> {
    alg: &'a Algebra,
    gens: Vec<(i64, Field)>,
    levels: BTreeMap<i64, StrongSpan>,
    dim_bound: usize,
    mode: SpanMode,
}

impl<'a> SpanTower<'a> {
    pub fn new(alg: &'a Algebra, generators: &[FieldExpr], dim_bound: usize) -> Result<SpanTower<'a>> {
        SpanTower::with_mode(alg, generators, dim_bound, SpanMode::Exact)
    }

    pub fn with_mode(alg: &'a Algebra, generators: &[FieldExpr], dim_bound: usize, mode: SpanMode) -> Result<SpanTower<'a>> {
        let mut gens = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            let s = va_core::state_of(alg, g)?;
            if s.weight2 <= 0 {
                return Err(VaError::Invalid("strong generators must have positive weight".into()));
            }
            gens.push((s.weight2, g.to_field()));
        }
        Ok(SpanTower { alg, gens, levels: BTreeMap::new(), dim_bound, mode })
    }

    /// The span at weight `w2 / 2`.
    pub fn at(&mut self, w2: i64) -> Result<&StrongSpan> {
        if !self.levels.contains_key(&w2) {
            let span = self.build(w2)?;
            self.levels.insert(w2, span);
        }
        Ok(&self.levels[&w2])
    }

    /// An already built level.
    pub fn level(&self, w2: i64) -> Option<&StrongSpan> {
        self.levels.get(&w2)
    }

    fn build(&mut self, w2: i64) -> Result<StrongSpan> {
        // (∂^d X)_(-1) = d! X_(-d-1)
        let mut candidates: Vec<(usize, i64, i64)> = Vec::new();
        if w2 > 0 {
            for (gi, (wx, _)) in self.gens.iter().enumerate() {
                let mut d = 0;
                while wx + 2 * d <= w2 {
                    candidates.push((gi, -d - 1, w2 - wx - 2 * d));
                    d += 1;
                }
            }
        }
        for (_, _, rest) in &candidates {
            self.at(*rest)?;
        }
        let vectors: Vec<Vector> = if w2 == 0 {
            vec![vacuum()]
        } else {
            let eng = Engine::new(self.alg);
            let jobs: Vec<(usize, i64, &State)> =
                candidates.iter().flat_map(|(g, m, rest)| self.levels[rest].basis.iter().map(move |b| (*g, *m, b))).collect();
            jobs.par_iter()
                .map(|(g, m, b)| eng.field_mode(&self.gens[*g].1, *m, &b.to_vector(), 0))
                .collect::<Result<Vec<_>>>()?
        };
        let mut index: HashMap<Word, usize> = HashMap::new();
        let rows: Vec<SparseVec<Scalar>> = vectors
            .iter()
            .map(|v| {
                let mut row = SparseVec::new();
                for (w, c) in v {
                    if !c.is_zero() {
                        let n = index.len();
                        row.insert(*index.entry(w.clone()).or_insert(n), c.clone());
                    }
                }
                row
            })
            .collect();
        if self.mode == SpanMode::Modular {
            if let Some((basis, solver)) = self.pivoted(w2, &vectors, &rows)? {
                return Ok(StrongSpan { weight2: w2, basis, index, solver });
            }
        }
        let mut echelon = Echelon::new(true);
        let mut basis = Vec::new();
        let mut offered = Vec::new();
        for (v, row) in vectors.iter().zip(&rows) {
            if echelon.insert(row) {
                offered.push(Some(basis.len()));
                basis.push(State::from_vector(self.alg, v, Some(w2))?);
                if basis.len() > self.dim_bound {
                    return Err(VaError::DimensionBound { dim: basis.len(), bound: self.dim_bound });
                }
            } else {
                offered.push(None);
            }
        }
        Ok(StrongSpan { weight2: w2, basis, index, solver: Solver::Exact { echelon, offered } })
    }

    /// Basis chosen modulo a prime; `None` if some coefficient has no image.
    fn pivoted(&self, w2: i64, vectors: &[Vector], rows: &[SparseVec<Scalar>]) -> Result<Option<(Vec<State>, Solver)>> {
        let mut modp: Vec<SparseVec<Fp>> = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = SparseVec::new();
            for (k, c) in row {
                let Some(x) = c.as_rational().and_then(Fp::from_q) else { return Ok(None) };
                r.insert(*k, x);
            }
            modp.push(r);
        }
        let mut ech: Echelon<Fp> = Echelon::new(false);
        let mut kept = Vec::new();
        let mut pivots = Vec::new();
        for (i, r) in modp.iter().enumerate() {
            let red = ech.reduce(r);
            let Some(&p) = red.residual.keys().next() else { continue };
            ech.insert(r);
            kept.push(i);
            pivots.push(p);
            if kept.len() > self.dim_bound {
                return Err(VaError::DimensionBound { dim: kept.len(), bound: self.dim_bound });
            }
        }
        let m: Vec<Vec<Q>> = kept
            .iter()
            .map(|&i| pivots.iter().map(|p| rows[i].get(p).map(|c| c.as_rational().unwrap().clone()).unwrap_or_else(Q::zero)).collect())
            .collect();
        // nonsingular modulo p, hence over Q
        let inverse = dense_inverse(&m).expect("pivot block is invertible");
        let basis = kept.iter().map(|&i| State::from_vector(self.alg, &vectors[i], Some(w2))).collect::<Result<Vec<_>>>()?;
        Ok(Some((basis, Solver::Pivoted { pivots, inverse })))
    }
}

/// The strong span of `generators` at weight `w2 / 2`, by exact elimination.
pub fn strong_span_basis(alg: &Algebra, generators: &[FieldExpr], w2: i64) -> Result<StrongSpan> {
    SpanTower::new(alg, generators, DEFAULT_SPAN_BOUND)?.at(w2).cloned()
}

/// One pole coefficient of one ordered pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureEntry {
    pub left: usize,
    pub right: usize,
    /// `n` in `(z-w)^{-n}`.
    pub pole: u32,
    pub weight2: i64,
    pub in_span: bool,
    /// The pole coefficient rebuilt from the span basis, when it is a member.
    pub witness: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    /// Twice the weight bound on `wt X + wt Y`.
    pub bound2: i64,
    /// Ordered pairs that were checked.
    pub pairs: Vec<(usize, usize)>,
    pub entries: Vec<ClosureEntry>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.in_span)
    }

    pub fn failures(&self) -> Vec<&ClosureEntry> {
        self.entries.iter().filter(|e| !e.in_span).collect()
    }

    /// `matrix[i][j]`: `Some(ok)` for checked pairs, `None` for pairs above the bound.
    pub fn matrix(&self, n: usize) -> Vec<Vec<Option<bool>>> {
        let mut m = vec![vec![None; n]; n];
        for &(i, j) in &self.pairs {
            m[i][j] = Some(true);
        }
        for e in &self.entries {
            if !e.in_span {
                m[e.left][e.right] = Some(false);
            }
        }
        m
    }
}

/// For each ordered pair with `wt X_i + wt X_j <= bound2 / 2`, test every pole
/// coefficient of `X_i(z) X_j(w)` for membership in the strong span.
pub fn closure_check(alg: &Algebra, generators: &[FieldExpr], bound2: i64) -> Result<ClosureReport> {
    closure_check_with(alg, generators, bound2, DEFAULT_SPAN_BOUND)
}

pub fn closure_check_with(alg: &Algebra, generators: &[FieldExpr], bound2: i64, dim_bound: usize) -> Result<ClosureReport> {
    let weights: Vec<i64> = generators.iter().map(|g| va_core::state_of(alg, g).map(|s| s.weight2)).collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for i in 0..generators.len() {
        for j in 0..generators.len() {
            if weights[i] + weights[j] <= bound2 {
                pairs.push((i, j));
            }
        }
    }
    let eng = Engine::new(alg);
    let opes: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| eng.ope(&generators[i], &generators[j]).map(|p| (i, j, p)))
        .collect::<Result<Vec<_>>>()?;
    let top = pairs.iter().map(|&(i, j)| weights[i] + weights[j] - 2).max().unwrap_or(0);
    let mut tower = SpanTower::with_mode(alg, generators, dim_bound, SpanMode::Modular)?;
    for w in 0..=top {
        tower.at(w)?;
    }
    let weights = &weights;
    let decide = move |tower: &SpanTower, i: usize, j: usize, n: u32, f: &FieldExpr| -> ClosureEntry {
        let w2 = weights[i] + weights[j] - 2 * n as i64;
        let s = State::from_vector(alg, &vector_of(f), Some(w2)).expect("pole coefficients are homogeneous");
        let witness = member(&tower.levels[&w2], &s);
        ClosureEntry { left: i, right: j, pole: n, weight2: w2, in_span: witness.is_some(), witness }
    };
    let mut entries: Vec<ClosureEntry> = opes
        .par_iter()
        .flat_map_iter(|(i, j, p)| p.poles.iter().map(|(n, f)| decide(&tower, *i, *j, *n, f)))
        .collect();
    if entries.iter().any(|e| !e.in_span && !tower.levels[&e.weight2].is_exact()) {
        let mut exact = SpanTower::new(alg, generators, dim_bound)?;
        let poles: HashMap<(usize, usize, u32), &FieldExpr> =
            opes.iter().flat_map(|(i, j, p)| p.poles.iter().map(move |(n, f)| ((*i, *j, *n), f))).collect();
        for e in entries.iter_mut().filter(|e| !e.in_span) {
            exact.at(e.weight2)?;
            *e = decide(&exact, e.left, e.right, e.pole, poles[&(e.left, e.right, e.pole)]);
        }
    }
    Ok(ClosureReport { bound2, pairs, entries })
}

/// The field whose state has the given coordinates in `span`.
pub fn field_of_coords(span: &StrongSpan, coords: &[Scalar]) -> FieldExpr {
    let mut v = Vector::new();
    for (b, c) in span.basis.iter().zip(coords) {
        va_core::engine::axpy(&mut v, c, &b.to_vector());
    }
    field_of_vector(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::build_q;
    use va_core::presets;

    #[test]
    fn single_quadratic_at_weight_four() {
        let h = presets::heisenberg(3);
        let q00 = build_q(&h, 0, 0).unwrap();
        let s = strong_span_basis(&h, &[q00.clone()], 8).unwrap();
        assert_eq!(s.dim(), 2);
        let qq = va_core::normal_order(&h, &[q00.clone(), q00.clone()]).unwrap();
        assert!(member(&s, &va_core::state_of(&h, &qq).unwrap()).is_some());
        let q02 = build_q(&h, 0, 2).unwrap();
        assert!(member(&s, &va_core::state_of(&h, &q02).unwrap()).is_none());
    }

    #[test]
    fn membership_coordinates_reproduce_state() {
        let h = presets::heisenberg(3);
        let q00 = build_q(&h, 0, 0).unwrap();
        let q02 = build_q(&h, 0, 2).unwrap();
        for mode in [SpanMode::Exact, SpanMode::Modular] {
            let mut tower = SpanTower::with_mode(&h, &[q00.clone(), q02.clone()], 100, mode).unwrap();
            let s = tower.at(12).unwrap();
            let target = va_core::normal_order(&h, &[q00.clone(), q02.clone()]).unwrap();
            let c = member(s, &va_core::state_of(&h, &target).unwrap()).unwrap();
            assert_eq!(field_of_coords(s, &c), target);
        }
    }

    #[test]
    fn modes_agree_on_dimensions() {
        let h = presets::heisenberg(3);
        let gens = vec![build_q(&h, 0, 0).unwrap(), build_q(&h, 0, 2).unwrap()];
        let mut a = SpanTower::new(&h, &gens, 1000).unwrap();
        let mut b = SpanTower::with_mode(&h, &gens, 1000, SpanMode::Modular).unwrap();
        for w in 0..=16 {
            assert_eq!(a.at(w).unwrap().dim(), b.at(w).unwrap().dim(), "w2 = {w}");
        }
    }
}
