//! Sugawara vector of affine sl2 and the Virasoro OPE test.

use num_traits::Zero;
use va_exact::Scalar;

use crate::algebra::Algebra;
use crate::engine::Engine;
use crate::error::{Result, VaError};
use crate::field::{Field, FieldExpr};
use crate::ops::canonical;

/// `L = (:ef: + :fe: + 1/2 :hh:) / (2(k+2))` in an affine sl2 presentation with
/// generators `e`, `h`, `f` at level `level`.
pub fn sugawara(alg: &Algebra, level: &Scalar) -> Result<FieldExpr> {
    let shifted = level + &Scalar::int(2);
    if shifted.is_zero() {
        return Err(VaError::Invalid("critical level k = -2 has no Sugawara vector".into()));
    }
    let e = Field::Gen(alg.gen_index("e")?);
    let h = Field::Gen(alg.gen_index("h")?);
    let f = Field::Gen(alg.gen_index("f")?);
    let casimir = Field::Sum(vec![
        (Scalar::int(1), Field::wick(e.clone(), f.clone())),
        (Scalar::int(1), Field::wick(f, e)),
        (Scalar::frac(1, 2), Field::wick(h.clone(), h)),
    ]);
    let norm = (&Scalar::int(2) * &shifted).recip()?;
    canonical(&Engine::new(alg), &Field::scaled(norm, casimir))
}

#[derive(Clone, Debug, PartialEq)]
pub enum VirasoroCheck {
    /// `L(z)L(w) ~ c/2 (z-w)^-4 + 2L (z-w)^-2 + ∂L (z-w)^-1` holds with this `c`.
    Virasoro { central_charge: Scalar },
    /// The pole of this order differs from the Virasoro form by `residual`.
    Mismatch { pole: u32, residual: FieldExpr },
}

impl VirasoroCheck {
    pub fn central_charge(&self) -> Option<&Scalar> {
        match self {
            VirasoroCheck::Virasoro { central_charge } => Some(central_charge),
            _ => None,
        }
    }
}

pub fn check_virasoro(alg: &Algebra, l: &FieldExpr) -> Result<VirasoroCheck> {
    let eng = Engine::new(alg);
    let ope = eng.ope(l, l)?;
    let two_l = l.scale(&Scalar::int(2));
    let dl = eng.derivative(l, 1)?;
    let pole4 = ope.poles.get(&4).cloned().unwrap_or_default();
    let c = match pole4.as_identity_multiple() {
        Some(x) => &x * &Scalar::int(2),
        None => return Ok(VirasoroCheck::Mismatch { pole: 4, residual: pole4 }),
    };
    let top = ope.max_pole().max(4);
    for n in (1..=top).rev() {
        let got = ope.poles.get(&n).cloned().unwrap_or_default();
        let want = match n {
            4 => pole4.clone(),
            2 => two_l.clone(),
            1 => dl.clone(),
            _ => FieldExpr::zero(),
        };
        let r = got.sub(&want);
        if !r.is_zero() {
            return Ok(VirasoroCheck::Mismatch { pole: n, residual: r });
        }
    }
    Ok(VirasoroCheck::Virasoro { central_charge: c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::text::parse_field_expr;

    #[test]
    fn sugawara_central_charge_is_formal() {
        let a = presets::affine_sl2("k");
        let l = sugawara(&a, &Scalar::param("k")).unwrap();
        let c = check_virasoro(&a, &l).unwrap();
        let want = Scalar::parse("3*k/(k+2)").unwrap();
        assert_eq!(c.central_charge(), Some(&want));
    }

    #[test]
    fn sugawara_at_levels() {
        for (k, c) in [("1", "1"), ("-1/2", "-1")] {
            let a = presets::affine_sl2("k").specialize(&[("k", va_exact::parse_rational(k).unwrap())]).unwrap();
            let l = sugawara(&a, &Scalar::parse(k).unwrap()).unwrap();
            assert_eq!(check_virasoro(&a, &l).unwrap().central_charge(), Some(&Scalar::parse(c).unwrap()));
        }
        let a = presets::affine_sl2("k");
        assert!(sugawara(&a, &Scalar::int(-2)).is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let h = presets::heisenberg(1);
        let l = parse_field_expr(&h, ":a1 a1:").unwrap();
        match check_virasoro(&h, &l).unwrap() {
            VirasoroCheck::Mismatch { pole, .. } => assert_eq!(pole, 2),
            other => panic!("{other:?}"),
        }
        let l = parse_field_expr(&h, "1/2 :a1 a1: + D a1").unwrap();
        assert_eq!(check_virasoro(&h, &l).unwrap().central_charge(), Some(&Scalar::int(-11)));
    }
}
