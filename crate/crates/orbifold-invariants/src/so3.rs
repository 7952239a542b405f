//! Infinitesimal rotations of `H(3)`.
//!
//! The rotation in the `(a, b)` plane sends `α^a -> α^b`, `α^b -> -α^a` on the
//! weight 1 space and extends to the vacuum module as a derivation commuting
//! with `∂`, i.e. letter by letter on PBW words.

use va_core::engine::{add_to, Vector};
use va_core::{letter, letter_deriv, letter_gen, State};
use va_exact::Scalar;

/// The three standard rotation planes.
pub const PLANES: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

/// Apply the rotation generator of the plane `(a, b)` to a state.
pub fn rotate(plane: (usize, usize), s: &State) -> State {
    let (a, b) = plane;
    let mut out = Vector::new();
    for (w, c) in &s.coords {
        for i in 0..w.len() {
            let l = w[i];
            let g = letter_gen(l);
            let (to, sign) = if g == a {
                (b, 1)
            } else if g == b {
                (a, -1)
            } else {
                continue;
            };
            let mut nw = w.clone();
            nw[i] = letter(to, letter_deriv(l));
            nw.sort_unstable();
            add_to(&mut out, nw, c * &Scalar::int(sign));
        }
    }
    State { weight2: s.weight2, coords: out.into_iter().collect() }
}

/// Whether every rotation generator kills `s`.
pub fn is_invariant(s: &State) -> bool {
    PLANES.iter().all(|p| rotate(*p, s).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{build_c, build_q};
    use va_core::{parse_field_expr, presets, state_of};

    #[test]
    fn invariants_are_killed_up_to_weight_twelve() {
        let h = presets::heisenberg(3);
        for i in 0..=10u32 {
            for j in i..=10 - i {
                let s = state_of(&h, &build_q(&h, i, j).unwrap()).unwrap();
                assert!(is_invariant(&s), "Q{i}{j}");
            }
        }
        for k in 0..=9u32 {
            for l in k + 1..=9 {
                for m in l + 1..=9 {
                    if k + l + m + 3 > 12 {
                        continue;
                    }
                    let s = state_of(&h, &build_c(&h, k, l, m).unwrap()).unwrap();
                    assert!(is_invariant(&s), "C{k}{l}{m}");
                }
            }
        }
    }

    #[test]
    fn non_invariants_are_moved() {
        let h = presets::heisenberg(3);
        let s = state_of(&h, &parse_field_expr(&h, ":a1 a1:").unwrap()).unwrap();
        assert!(!is_invariant(&s));
        let r = rotate((0, 1), &s);
        assert_eq!(r, state_of(&h, &parse_field_expr(&h, "2 :a1 a2:").unwrap()).unwrap());
    }
}
