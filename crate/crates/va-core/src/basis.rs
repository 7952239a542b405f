//! PBW monomials of a fixed weight and graded dimensions.

use crate::algebra::Algebra;
use crate::error::{Result, VaError};
use crate::field::{letter, Letter, Word};

/// All letters `∂^d g` of weight at most `max_w2 / 2`, in ascending order.
pub fn letters_up_to(alg: &Algebra, max_w2: i64) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for g in 0..alg.ngens() {
        if alg.gen_w2(g) == 0 {
            return Err(VaError::Invalid(format!(
                "generator `{}` has weight 0, so graded pieces are infinite-dimensional",
                alg.names()[g]
            )));
        }
        let mut d = 0u32;
        while alg.gen_w2(g) + 2 * d as i64 <= max_w2 {
            out.push(letter(g, d));
            d += 1;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Sorted words of total weight `w2 / 2`; odd letters appear at most once.
pub fn pbw_basis(alg: &Algebra, w2: i64) -> Result<Vec<Word>> {
    let letters = letters_up_to(alg, w2)?;
    let mut out = Vec::new();
    let mut cur = Word::new();
    fill(alg, &letters, 0, w2, &mut cur, &mut out);
    Ok(out)
}

fn fill(alg: &Algebra, letters: &[Letter], start: usize, left: i64, cur: &mut Word, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for i in start..letters.len() {
        let l = letters[i];
        let w = alg.letter_w2(l);
        if w > left {
            continue;
        }
        cur.push(l);
        let next = if alg.is_odd(crate::field::letter_gen(l)) { i + 1 } else { i };
        fill(alg, letters, next, left - w, cur, out);
        cur.pop();
    }
}

/// Dimensions of the weight pieces `0, 1/2, 1, ..., max_w2/2` from the product
/// `Π_{even} (1 - q^wt)^{-1} Π_{odd} (1 + q^wt)` over all letters.
pub fn graded_dims(alg: &Algebra, max_w2: i64) -> Result<Vec<u128>> {
    let letters = letters_up_to(alg, max_w2)?;
    let top = max_w2 as usize;
    let mut dims = vec![0u128; top + 1];
    dims[0] = 1;
    for l in letters {
        let w = alg.letter_w2(l) as usize;
        if alg.is_odd(crate::field::letter_gen(l)) {
            for i in (w..=top).rev() {
                dims[i] += dims[i - w];
            }
        } else {
            for i in w..=top {
                dims[i] += dims[i - w];
            }
        }
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn heisenberg3_dimensions() {
        let h = presets::heisenberg(3);
        let want = [1u128, 3, 9, 22, 51, 108, 221, 429, 810];
        let dims = graded_dims(&h, 16).unwrap();
        for (i, d) in want.iter().enumerate() {
            assert_eq!(dims[2 * i], *d);
            assert_eq!(pbw_basis(&h, 2 * i as i64).unwrap().len() as u128, *d);
        }
    }

    #[test]
    fn odd_letters_are_strict() {
        let g = presets::godd(1);
        assert!(pbw_basis(&g, 6).unwrap().is_empty());
        let b = pbw_basis(&g, 8).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].len(), 2);
        let dims = graded_dims(&g, 12).unwrap();
        for w in 0..=12 {
            assert_eq!(dims[w] as usize, pbw_basis(&g, w as i64).unwrap().len());
        }
    }
}
