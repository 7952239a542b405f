//! Exact linear algebra over a field: incremental sparse echelon bases with
//! optional combination tracking, and dense nullspaces.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::Q;

/// Arithmetic needed by the elimination routines.
pub trait FieldElem: Clone + PartialEq + Debug + Zero + One + Send + Sync {
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fdiv(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
}

impl FieldElem for Q {
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fdiv(&self, o: &Self) -> Self {
        self / o
    }
    fn fneg(&self) -> Self {
        -self
    }
}

impl FieldElem for Scalar {
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fdiv(&self, o: &Self) -> Self {
        self / o
    }
    fn fneg(&self) -> Self {
        -self
    }
}

/// Residues modulo the Mersenne prime `2^61 - 1`.
///
/// Used to pick linearly independent subsets quickly: vectors that are
/// independent modulo a prime are independent over Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp(pub u64);

pub const FP_MODULUS: u64 = (1 << 61) - 1;

impl Fp {
    fn reduce(x: u128) -> u64 {
        let lo = (x as u64) & FP_MODULUS;
        let hi = (x >> 61) as u64;
        let s = lo + (hi & FP_MODULUS) + ((x >> 122) as u64);
        let s = (s & FP_MODULUS) + (s >> 61);
        if s >= FP_MODULUS {
            s - FP_MODULUS
        } else {
            s
        }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut b = self;
        let mut r = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                r = r.fmul(&b);
            }
            b = b.fmul(&b);
            e >>= 1;
        }
        r
    }

    /// Image of a rational, `None` when the prime divides its denominator.
    pub fn from_q(x: &Q) -> Option<Fp> {
        use num_bigint::BigInt;
        use num_traits::ToPrimitive;
        let m = BigInt::from(FP_MODULUS);
        let md = |v: &BigInt| -> u64 {
            let r = v % &m;
            let r = if r.sign() == num_bigint::Sign::Minus { r + &m } else { r };
            r.to_u64().unwrap()
        };
        let d = md(x.denom());
        if d == 0 {
            return None;
        }
        Some(Fp(md(x.numer())).fmul(&Fp(d).pow(FP_MODULUS - 2)))
    }
}

impl Zero for Fp {
    fn zero() -> Fp {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Fp {
        Fp(1)
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        self.fadd(&o)
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        self.fmul(&o)
    }
}

impl FieldElem for Fp {
    fn fadd(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= FP_MODULUS { s - FP_MODULUS } else { s })
    }
    fn fsub(&self, o: &Self) -> Self {
        self.fadd(&o.fneg())
    }
    fn fmul(&self, o: &Self) -> Self {
        Fp(Fp::reduce(self.0 as u128 * o.0 as u128))
    }
    fn fdiv(&self, o: &Self) -> Self {
        assert!(o.0 != 0, "division by zero mod p");
        self.fmul(&o.pow(FP_MODULUS - 2))
    }
    fn fneg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { FP_MODULUS - self.0 })
    }
}

/// Inverse of a square matrix by Gauss-Jordan elimination, `None` if singular.
pub fn dense_inverse<F: FieldElem>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut inv: Vec<Vec<F>> = (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|r| !a[*r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = F::one().fdiv(&a[col][col]);
        for j in 0..n {
            a[col][j] = a[col][j].fmul(&s);
            inv[col][j] = inv[col][j].fmul(&s);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    let t = f.fmul(&a[col][j]);
                    a[r][j] = a[r][j].fsub(&t);
                }
                if !inv[col][j].is_zero() {
                    let t = f.fmul(&inv[col][j]);
                    inv[r][j] = inv[r][j].fsub(&t);
                }
            }
        }
    }
    Some(inv)
}

pub type SparseVec<F> = BTreeMap<usize, F>;

/// `v += c * w`, dropping cancelled entries.
pub fn axpy<F: FieldElem>(v: &mut SparseVec<F>, c: &F, w: &SparseVec<F>) {
    for (k, x) in w {
        let t = c.fmul(x);
        match v.get_mut(k) {
            Some(y) => {
                *y = y.fadd(&t);
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    v.insert(*k, t);
                }
            }
        }
    }
}

/// Echelon basis built one vector at a time. Every stored row has leading
/// entry 1 at its pivot (its smallest index) and carries, when tracking is on,
/// its expression in terms of the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F: FieldElem> {
    rows: BTreeMap<usize, (SparseVec<F>, SparseVec<F>)>,
    inserted: usize,
    track: bool,
}

/// Outcome of reducing a vector against an echelon basis.
#[derive(Clone, Debug)]
pub struct Reduction<F: FieldElem> {
    pub residual: SparseVec<F>,
    /// Coefficients `c_i` with `v = Σ c_i * inserted_i + residual` (only with tracking).
    pub combination: SparseVec<F>,
}

impl<F: FieldElem> Echelon<F> {
    pub fn new(track: bool) -> Self {
        Echelon { rows: BTreeMap::new(), inserted: 0, track }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    pub fn reduce(&self, v: &SparseVec<F>) -> Reduction<F> {
        let mut v = v.clone();
        let mut comb = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).next().map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            match self.rows.get(&k) {
                Some((row, rc)) => {
                    let m = c.fneg();
                    axpy(&mut v, &m, row);
                    if self.track {
                        axpy(&mut comb, &c, rc);
                    }
                }
                None => cursor = k + 1,
            }
        }
        Reduction { residual: v, combination: comb }
    }

    /// Insert `v`; returns true when it was independent of the current rows.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let red = self.reduce(v);
        let mut res = red.residual;
        let Some((&p, lead)) = res.iter().next() else { return false };
        let inv = F::one().fdiv(lead);
        for x in res.values_mut() {
            *x = x.fmul(&inv);
        }
        let mut comb = SparseVec::new();
        if self.track {
            // res = v - Σ c_i inserted_i, scaled by inv
            comb.insert(idx, inv.clone());
            let m = inv.fneg();
            axpy(&mut comb, &m, &red.combination);
        }
        self.rows.insert(p, (res, comb));
        true
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).residual.is_empty()
    }
}

/// Basis of `{x : A x = 0}` for a matrix given by sparse rows over `ncols` columns.
/// Each basis vector has a 1 at its free column and 0 at the other free columns.
pub fn nullspace<F: FieldElem>(rows: &[SparseVec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut ech: Echelon<F> = Echelon::new(false);
    for r in rows {
        ech.insert(r);
        if ech.rank() == ncols {
            return Vec::new();
        }
    }
    // back-substitute to reduced row echelon form
    let pivots: Vec<usize> = ech.rows.keys().rev().cloned().collect();
    let mut rref: BTreeMap<usize, SparseVec<F>> = BTreeMap::new();
    for p in pivots {
        let mut row = ech.rows[&p].0.clone();
        let keys: Vec<usize> = row.keys().cloned().filter(|k| *k != p && rref.contains_key(k)).collect();
        for k in keys {
            if let Some(c) = row.get(&k).cloned() {
                let m = c.fneg();
                axpy(&mut row, &m, &rref[&k]);
            }
        }
        rref.insert(p, row);
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !rref.contains_key(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![F::zero(); ncols];
            x[f] = F::one();
            for (p, row) in &rref {
                if let Some(c) = row.get(&f) {
                    x[*p] = c.fneg();
                }
            }
            x
        })
        .collect()
}

/// Rank of a set of sparse rows.
pub fn rank<F: FieldElem>(rows: &[SparseVec<F>]) -> usize {
    let mut ech: Echelon<F> = Echelon::new(false);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn sv(e: &[(usize, i64)]) -> SparseVec<Q> {
        e.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn tracks_combinations() {
        let mut e: Echelon<Q> = Echelon::new(true);
        let a = sv(&[(0, 1), (1, 2)]);
        let b = sv(&[(1, 1), (2, 1)]);
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        let target = sv(&[(0, 2), (1, 1), (2, -3)]);
        let red = e.reduce(&target);
        assert!(red.residual.is_empty());
        let mut rebuilt = SparseVec::new();
        axpy(&mut rebuilt, red.combination.get(&0).unwrap(), &a);
        axpy(&mut rebuilt, red.combination.get(&1).unwrap(), &b);
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn modular_arithmetic() {
        let a = Fp::from_q(&Q::new(3.into(), 7.into())).unwrap();
        assert_eq!(a.fmul(&Fp(7)), Fp(3));
        assert_eq!(Fp(FP_MODULUS - 1).fmul(&Fp(FP_MODULUS - 1)), Fp(1));
        assert_eq!(Fp::from_q(&q(-1)).unwrap().fadd(&Fp(1)), Fp(0));
        assert!(Fp::from_q(&Q::new(1.into(), FP_MODULUS.into())).is_none());
    }

    #[test]
    fn inverse_of_small_matrix() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = dense_inverse(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(dense_inverse(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let rows = vec![sv(&[(0, 1), (1, 1), (2, 1)])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Q = v.iter().cloned().sum();
            assert!(s.is_zero());
        }
    }
}
