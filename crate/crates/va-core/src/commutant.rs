//! Weight pieces of commutants `{v : x_(n) v = 0 for all x, n >= 0}`.

use std::collections::HashMap;

use num_traits::Zero;
use va_exact::linalg::{nullspace, SparseVec};
use va_exact::{Scalar, Q};

use crate::algebra::Algebra;
use crate::basis::pbw_basis;
use crate::engine::{unit, Engine};
use crate::error::{Result, VaError};
use crate::field::{FieldExpr, Word};
use crate::ops::State;

pub const DEFAULT_DIM_BOUND: usize = 20_000;

/// Basis of the weight `w2/2` piece of the commutant of `gens` in `alg`.
///
/// Rows whose entries are all rational are eliminated over Q first; the rows
/// that involve formal parameters are then solved on that smaller space.
pub fn commutant_weight_space(alg: &Algebra, gens: &[FieldExpr], w2: i64, dim_bound: usize) -> Result<Vec<State>> {
    let basis = pbw_basis(alg, w2)?;
    if basis.len() > dim_bound {
        return Err(VaError::DimensionBound { dim: basis.len(), bound: dim_bound });
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let eng = Engine::new(alg);
    let fields: Vec<_> = gens.iter().map(|g| g.to_field()).collect();
    // row key (generator, mode, output word) -> sparse row over basis columns
    let mut rows: HashMap<(usize, i64, Word), SparseVec<Scalar>> = HashMap::new();
    for (gi, f) in fields.iter().enumerate() {
        let top = (alg.field_max_w2(f) + w2 - 2).div_euclid(2);
        for n in 0..=top {
            for (col, w) in basis.iter().enumerate() {
                let out = eng.field_mode(f, n, &unit(w), 0)?;
                for (ow, c) in out {
                    rows.entry((gi, n, ow)).or_default().insert(col, c);
                }
            }
        }
    }
    let mut keys: Vec<_> = rows.keys().cloned().collect();
    keys.sort();
    let mut rational: Vec<SparseVec<Q>> = Vec::new();
    let mut formal: Vec<SparseVec<Scalar>> = Vec::new();
    for k in keys {
        let r = rows.remove(&k).unwrap();
        if r.values().all(|c| c.is_rational()) {
            rational.push(r.into_iter().map(|(i, c)| (i, c.as_rational().unwrap().clone())).collect());
        } else {
            formal.push(r);
        }
    }
    let stage1 = nullspace(&rational, basis.len());
    let sol: Vec<Vec<Scalar>> = if formal.is_empty() || stage1.is_empty() {
        stage1.into_iter().map(|v| v.into_iter().map(Scalar::from).collect()).collect()
    } else {
        let projected: Vec<SparseVec<Scalar>> = formal
            .iter()
            .map(|r| {
                let mut out = SparseVec::new();
                for (j, v) in stage1.iter().enumerate() {
                    let mut acc = Scalar::zero();
                    for (i, c) in r {
                        if !v[*i].is_zero() {
                            acc += &(c * &Scalar::from(v[*i].clone()));
                        }
                    }
                    if !acc.is_zero() {
                        out.insert(j, acc);
                    }
                }
                out
            })
            .collect();
        let inner = nullspace(&projected, stage1.len());
        inner
            .iter()
            .map(|coef| {
                let mut x = vec![Scalar::zero(); basis.len()];
                for (j, c) in coef.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (i, v) in stage1[j].iter().enumerate() {
                        if !v.is_zero() {
                            x[i] += &(c * &Scalar::from(v.clone()));
                        }
                    }
                }
                x
            })
            .collect()
    };
    Ok(sol
        .into_iter()
        .map(|x| State {
            weight2: w2,
            coords: basis.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::text::parse_field_expr;

    #[test]
    fn heisenberg_self_commutant() {
        let h = presets::heisenberg(1);
        let a = parse_field_expr(&h, "a1").unwrap();
        assert_eq!(commutant_weight_space(&h, &[a.clone()], 0, 100).unwrap().len(), 1);
        for w in 1..=6 {
            assert!(commutant_weight_space(&h, &[a.clone()], 2 * w, 100).unwrap().is_empty());
        }
    }

    #[test]
    fn commutant_of_one_boson_in_two() {
        let h = presets::heisenberg(2);
        let a = parse_field_expr(&h, "a1").unwrap();
        // the second boson generates: dims p(w) at weights 1..4
        let dims: Vec<usize> = (1..=4).map(|w| commutant_weight_space(&h, &[a.clone()], 2 * w, 100).unwrap().len()).collect();
        assert_eq!(dims, vec![1, 2, 3, 5]);
    }

    #[test]
    fn dimension_bound() {
        let h = presets::heisenberg(3);
        let a = parse_field_expr(&h, "a1").unwrap();
        assert!(matches!(commutant_weight_space(&h, &[a], 12, 10), Err(VaError::DimensionBound { .. })));
    }
}
