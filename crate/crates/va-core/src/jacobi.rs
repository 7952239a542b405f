//! Jacobi identities among generators, checked on states.

use va_exact::{binomial, Scalar};

use crate::algebra::Algebra;
use crate::engine::{axpy, unit, Engine, Vector};
use crate::error::Result;
use crate::field::{letter, FieldExpr};
use crate::ops::field_of_vector;

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiFailure {
    pub m: i64,
    pub n: i64,
    /// `a_(m)(b_(n)c) - ± b_(n)(a_(m)c) - Σ_j C(m,j) (a_(j)b)_(m+n-j) c`.
    pub residual: FieldExpr,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport {
    pub triple: (usize, usize, usize),
    pub instances: usize,
    /// The triple's total weight is above the bound, so nothing was checked.
    pub out_of_bound: bool,
    pub failure: Option<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && !self.out_of_bound
    }
}

/// Check `a_(m)(b_(n)c) - (-1)^{|a||b|} b_(n)(a_(m)c) = Σ_j C(m,j) (a_(j)b)_(m+n-j) c`
/// for all `m, n >= 0` with a nonzero target weight, provided
/// `wt a + wt b + wt c <= weight_bound`.
pub fn jacobi_check(alg: &Algebra, a: usize, b: usize, c: usize, weight_bound: &va_exact::Q) -> Result<JacobiReport> {
    jacobi_check_with(&Engine::new(alg), a, b, c, weight_bound)
}

pub fn jacobi_check_with(eng: &Engine, a: usize, b: usize, c: usize, weight_bound: &va_exact::Q) -> Result<JacobiReport> {
    let alg = eng.algebra();
    let total2 = alg.gen_w2(a) + alg.gen_w2(b) + alg.gen_w2(c);
    let mut report = JacobiReport { triple: (a, b, c), instances: 0, out_of_bound: false, failure: None };
    if va_exact::q(total2, 2) > *weight_bound {
        report.out_of_bound = true;
        return Ok(report);
    }
    let cv = unit(&[letter(c, 0)]);
    let sign = if alg.is_odd(a) && alg.is_odd(b) { Scalar::int(-1) } else { Scalar::int(1) };
    // target weight wa + wb + wc - m - n - 2 >= 0
    let top = (total2 - 4).div_euclid(2);
    for m in 0..=top {
        for n in 0..=(top - m) {
            let residual = jacobi_residual(eng, a, b, m, n, &cv, &sign)?;
            report.instances += 1;
            if !residual.is_empty() {
                report.failure = Some(JacobiFailure { m, n, residual: field_of_vector(&residual) });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn jacobi_residual(eng: &Engine, a: usize, b: usize, m: i64, n: i64, cv: &Vector, sign: &Scalar) -> Result<Vector> {
    let alg = eng.algebra();
    let bc = eng.gen_mode(b, n, cv, 0)?;
    let mut res = eng.gen_mode(a, m, &bc, 0)?;
    let ac = eng.gen_mode(a, m, cv, 0)?;
    let bac = eng.gen_mode(b, n, &ac, 0)?;
    axpy(&mut res, &-sign, &bac);
    for (j, f) in alg.products(a, b).iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let r = eng.field_mode(f, m + n - j as i64, cv, 1)?;
        axpy(&mut res, &-Scalar::from(binomial(m, j as u32)), &r);
    }
    Ok(res)
}

/// Check every ordered triple of generators within the weight bound.
pub fn jacobi_all(alg: &Algebra, weight_bound: &va_exact::Q) -> Result<Vec<JacobiReport>> {
    let eng = Engine::new(alg);
    let n = alg.ngens();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let r = jacobi_check_with(&eng, a, b, c, weight_bound)?;
                if !r.out_of_bound {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use va_exact::q;

    #[test]
    fn free_fields_are_consistent() {
        for alg in [presets::heisenberg(2), presets::fermion(2), presets::godd(2), presets::tfield(), presets::betagamma()] {
            for r in jacobi_all(&alg, &q(10, 1)).unwrap() {
                assert!(r.passed(), "{} {:?}", alg.name(), r);
            }
        }
    }

    #[test]
    fn affine_sl2_is_consistent() {
        let alg = presets::affine_sl2("k");
        for r in jacobi_all(&alg, &q(3, 1)).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn broken_table_fails() {
        let alg = presets::affine_sl2("k").specialize(&[("k", q(1, 1))]).unwrap();
        let e = alg.gen_index("e").unwrap();
        let f = alg.gen_index("f").unwrap();
        let h = alg.gen_index("h").unwrap();
        // drop the h in e(z)f(w)
        let bad = alg.with_entry(e, f, 1, crate::field::Field::zero()).unwrap();
        let r = jacobi_check(&bad, e, f, h, &q(3, 1)).unwrap();
        assert!(r.failure.is_some());
    }
}
