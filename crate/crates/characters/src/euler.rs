//! Euler–Poincaré multiplicities for `sl2`: the multiplicity of the trivial
//! character in `χ_n χ_m`, which decides when the relative semi-infinite
//! cohomology of `V^k(n) ⊗ V^{-4-k}(m)` is one dimensional.

use num_traits::ToPrimitive;

use crate::laurent::{mono, LVar, MultiLaurent};
use crate::small::weyl_character;

/// Multiplicity of `χ_0` in `χ_n χ_m`: the coefficient of `z` in
/// `(z - z^{-1}) χ_n(z) χ_m(z)` (Weyl antisymmetrization, then the dominant
/// term for `ρ`).
pub fn euler_poincare_multiplicity(n: u32, m: u32) -> i64 {
    let p = MultiLaurent::antisym(mono(&[(LVar::Z1, 1)]))
        .mul(&weyl_character(n, LVar::Z1))
        .mul(&weyl_character(m, LVar::Z1));
    p.coeff(&mono(&[(LVar::Z1, 1)])).to_integer().to_i64().expect("small multiplicity")
}

/// The full table for `0 ≤ n, m ≤ bound`.
pub fn euler_poincare_table(bound: u32) -> Vec<Vec<i64>> {
    (0..=bound).map(|n| (0..=bound).map(|m| euler_poincare_multiplicity(n, m)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(euler_poincare_multiplicity(2, 2), 1);
        assert_eq!(euler_poincare_multiplicity(1, 2), 0);
        assert_eq!(euler_poincare_multiplicity(0, 0), 1);
    }
}
