//! The tensor space `V^⊗n` with `V` spanned by `v_i^t` (`1 ≤ i ≤ n`,
//! `0 ≤ t < r`) and the operators `T_i`, `G_i`, `E_i`, `H_i`.
//!
//! Operators act on the right: row `b` of a matrix is the image of the basis
//! tensor `b`, so `ρ(xy) = ρ(x)·ρ(y)` as ordinary matrix products.
//!
//! Basis tensors are numbered row-major with the first factor most
//! significant; the factor `v_i^t` has index `(i-1)·r + t`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::linalg::SparseVec;
use crate::scalars::{HeckeParams, Ring, Scalar};
use crate::symgroup::Perm;
use crate::yokonuma::{AlgebraError, YElement, Yokonuma};

mod checks;
mod shoji;

pub use checks::{faithfulness_rank, phi_embedding_check, phi_embedding_rank, tensor_check, v_a_basis};
pub use shoji::{adjoint_vandermonde, f_polys, mak_check, shoji_check, structure_dim_check, structure_dim_terms, Vandermonde};

/// The factor order recorded in exported matrices.
pub const ENUMERATION: &str = "row-major over factors, first factor most significant; v_i^t has factor index (i-1)*r + t";

/// `v_{i_1}^{t_1} ⊗ ⋯ ⊗ v_{i_n}^{t_n}`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorIndex {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

/// Square sparse matrix acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpMatrix<S> {
    dim: usize,
    rows: Vec<BTreeMap<usize, S>>,
}

impl<S: Ring> OpMatrix<S> {
    pub fn zero(dim: usize) -> Self {
        OpMatrix { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| S::one()).collect())
    }

    pub fn diagonal(d: Vec<S>) -> Self {
        let dim = d.len();
        let rows = d
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { BTreeMap::new() } else { BTreeMap::from([(i, x)]) })
            .collect();
        OpMatrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.rows[row].get(&col).cloned().unwrap_or_else(S::zero)
    }

    pub fn row(&self, row: usize) -> &BTreeMap<usize, S> {
        &self.rows[row]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    fn push(row: &mut BTreeMap<usize, S>, col: usize, c: &S) {
        crate::yokonuma::push_term(row, col, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            Self::push(&mut out.rows[i], j, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v.mul_ref(c))).collect()).collect();
        OpMatrix { dim: self.dim, rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &other.rows[*k] {
                        Self::push(&mut acc, *j, &a.mul_ref(b));
                    }
                }
                acc
            })
            .collect();
        OpMatrix { dim: self.dim, rows }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.dim), |acc, _| acc.mul(self))
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &BTreeMap<usize, S>) -> BTreeMap<usize, S> {
        let mut acc = BTreeMap::new();
        for (k, a) in v {
            for (j, b) in &self.rows[*k] {
                Self::push(&mut acc, *j, &a.mul_ref(b));
            }
        }
        acc
    }

    /// Entries flattened to `row·dim + col`.
    pub fn flatten(&self) -> SparseVec<S> {
        self.entries().map(|(i, j, v)| (i * self.dim + j, v.clone())).collect()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixJson {
    pub dim: usize,
    pub r: usize,
    pub n: usize,
    pub enumeration: String,
    pub entries: Vec<(usize, usize, String)>,
}

impl OpMatrix<Scalar> {
    pub fn to_json(&self, r: usize, n: usize) -> MatrixJson {
        MatrixJson {
            dim: self.dim,
            r,
            n,
            enumeration: ENUMERATION.to_string(),
            entries: self.entries().map(|(i, j, v)| (i, j, v.to_string())).collect(),
        }
    }

    /// `row,col,value` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("row,col,value\n");
        for (i, j, v) in self.entries() {
            s.push_str(&format!("{i},{j},\"{v}\"\n"));
        }
        s
    }
}

/// `V^⊗n` for `𝒴_{r,n}`.
#[derive(Clone, Debug)]
pub struct TensorSpace<S> {
    r: usize,
    n: usize,
    dim: usize,
    params: HeckeParams<S>,
}

impl TensorSpace<Scalar> {
    pub fn new(r: usize, n: usize, budget: usize) -> Result<Self, AlgebraError> {
        let params = HeckeParams::generic(r as u32)?;
        Self::with_params(n, params, budget)
    }
}

impl<S: Ring> TensorSpace<S> {
    pub fn with_params(n: usize, params: HeckeParams<S>, budget: usize) -> Result<Self, AlgebraError> {
        let r = params.r as usize;
        if n == 0 || n > 8 {
            return Err(AlgebraError::Unsupported(format!("n = {n} is outside 1..=8")));
        }
        let dim = (r * n).checked_pow(n as u32).unwrap_or(usize::MAX);
        if dim > budget {
            return Err(AlgebraError::BudgetExceeded { dim, budget });
        }
        Ok(TensorSpace { r, n, dim, params })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(rn)^n`
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &HeckeParams<S> {
        &self.params
    }

    fn factor_dim(&self) -> usize {
        self.r * self.n
    }

    /// Factor indices of a basis tensor, first factor first.
    fn factors(&self, mut b: usize) -> Vec<usize> {
        let d = self.factor_dim();
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = b % d;
            b /= d;
        }
        out
    }

    fn index_of_factors(&self, f: &[usize]) -> usize {
        let d = self.factor_dim();
        f.iter().fold(0, |acc, &x| acc * d + x)
    }

    pub fn index(&self, ix: &TensorIndex) -> Option<usize> {
        if ix.lower.len() != self.n || ix.upper.len() != self.n {
            return None;
        }
        let mut f = Vec::with_capacity(self.n);
        for (&i, &t) in ix.lower.iter().zip(&ix.upper) {
            if i == 0 || i > self.n || t >= self.r {
                return None;
            }
            f.push((i - 1) * self.r + t);
        }
        Some(self.index_of_factors(&f))
    }

    pub fn tensor_index(&self, b: usize) -> TensorIndex {
        let f = self.factors(b);
        TensorIndex {
            lower: f.iter().map(|x| x / self.r + 1).collect(),
            upper: f.iter().map(|x| x % self.r).collect(),
        }
    }

    fn upper(&self, b: usize, p: usize) -> usize {
        self.factors(b)[p - 1] % self.r
    }

    fn check_pair(&self, i: usize) -> Result<(), AlgebraError> {
        if i == 0 || i >= self.n {
            return Err(AlgebraError::BadIndex(i, self.n));
        }
        Ok(())
    }

    /// Applies a two-factor operator in factors `(p, p+1)`.
    fn two_factor(&self, p: usize, local: impl Fn((usize, usize), (usize, usize)) -> Vec<(bool, S)>) -> OpMatrix<S> {
        let mut m = OpMatrix::zero(self.dim);
        for b in 0..self.dim {
            let mut f = self.factors(b);
            let (x, y) = (f[p - 1], f[p]);
            let lhs = (x / self.r + 1, x % self.r);
            let rhs = (y / self.r + 1, y % self.r);
            for (swap, c) in local(lhs, rhs) {
                if swap {
                    f.swap(p - 1, p);
                }
                let col = self.index_of_factors(&f);
                if swap {
                    f.swap(p - 1, p);
                }
                OpMatrix::push(&mut m.rows[b], col, &c);
            }
        }
        m
    }

    /// `T_i`: `v^t ↦ ξ^t v^t` in factor `i`.
    pub fn op_t(&self, i: usize) -> Result<OpMatrix<S>, AlgebraError> {
        if i == 0 || i > self.n {
            return Err(AlgebraError::BadIndex(i, self.n));
        }
        Ok(OpMatrix::diagonal(
            (0..self.dim).map(|b| self.params.xi_pow(self.upper(b, i) as i64).clone()).collect(),
        ))
    }

    /// `T_i^k` for any integer `k`.
    pub fn op_t_pow(&self, i: usize, k: i64) -> Result<OpMatrix<S>, AlgebraError> {
        if i == 0 || i > self.n {
            return Err(AlgebraError::BadIndex(i, self.n));
        }
        Ok(OpMatrix::diagonal(
            (0..self.dim).map(|b| self.params.xi_pow(k * self.upper(b, i) as i64).clone()).collect(),
        ))
    }

    /// `G_i` in factors `(i, i+1)`.
    pub fn op_g(&self, i: usize) -> Result<OpMatrix<S>, AlgebraError> {
        self.check_pair(i)?;
        let q = self.params.q.clone();
        let qmq = self.params.q_minus_qinv();
        Ok(self.two_factor(i, |(a, t), (b, s)| {
            if t != s || a > b {
                vec![(true, S::one())]
            } else if a == b {
                vec![(false, q.clone())]
            } else {
                vec![(false, qmq.clone()), (true, S::one())]
            }
        }))
    }

    /// `E_i`: the identity when factors `i`, `i+1` carry the same upper
    /// index, zero otherwise.
    pub fn op_e(&self, i: usize) -> Result<OpMatrix<S>, AlgebraError> {
        self.check_pair(i)?;
        Ok(OpMatrix::diagonal(
            (0..self.dim)
                .map(|b| if self.upper(b, i) == self.upper(b, i + 1) { S::one() } else { S::zero() })
                .collect(),
        ))
    }

    /// Position of `v_i^t` in the order `v_1^1, …, v_n^1, v_1^2, …, v_n^r`,
    /// with upper index `r` read as `0`.
    pub fn total_order(&self, i: usize, t: usize) -> usize {
        ((t + self.r - 1) % self.r) * self.n + (i - 1)
    }

    /// `H_i` in factors `(i-1, i)`, for `2 ≤ i ≤ n`.
    pub fn op_h(&self, i: usize) -> Result<OpMatrix<S>, AlgebraError> {
        if i < 2 || i > self.n {
            return Err(AlgebraError::BadIndex(i, self.n));
        }
        let q = self.params.q.clone();
        let qmq = self.params.q_minus_qinv();
        Ok(self.two_factor(i - 1, |(a, t), (b, s)| {
            let (x, y) = (self.total_order(a, t), self.total_order(b, s));
            match x.cmp(&y) {
                std::cmp::Ordering::Equal => vec![(false, q.clone())],
                std::cmp::Ordering::Greater => vec![(true, S::one())],
                std::cmp::Ordering::Less => vec![(false, qmq.clone()), (true, S::one())],
            }
        }))
    }

    /// `G_w` along the reduced word of `w`.
    pub fn op_gw(&self, w: &Perm) -> OpMatrix<S> {
        let gs: Vec<OpMatrix<S>> = (1..self.n).map(|i| self.op_g(i).expect("valid")).collect();
        self.op_gw_with(w, &gs)
    }

    fn op_gw_with(&self, w: &Perm, gs: &[OpMatrix<S>]) -> OpMatrix<S> {
        w.reduced_word().iter().fold(OpMatrix::identity(self.dim), |acc, &i| acc.mul(&gs[i - 1]))
    }

    /// `ρ(x)` for `x ∈ 𝒴_{r,n}`.
    pub fn rho(&self, y: &Yokonuma<S>, x: &YElement<S>) -> Result<OpMatrix<S>, AlgebraError> {
        if x.r() != self.r || x.n() != self.n || y.r() != self.r || y.n() != self.n {
            return Err(AlgebraError::Mismatch(x.r(), x.n(), self.r, self.n));
        }
        let gs: Vec<OpMatrix<S>> = (1..self.n).map(|i| self.op_g(i).expect("valid")).collect();
        let mut cache: HashMap<Perm, OpMatrix<S>> = HashMap::new();
        let uppers: Vec<Vec<usize>> = (0..self.dim).map(|b| self.tensor_index(b).upper).collect();
        let mut out = OpMatrix::zero(self.dim);
        for (key, c) in x.terms() {
            let gw = cache.entry(key.w).or_insert_with(|| self.op_gw_with(&key.w, gs.as_slice()));
            let k = key.t.to_vec(self.n);
            for (b, row) in gw.rows.iter().enumerate() {
                let e: usize = k.iter().zip(&uppers[b]).map(|(a, t)| a * t).sum();
                let f = c.mul_ref(self.params.xi_pow(e as i64));
                for (j, v) in row {
                    OpMatrix::push(&mut out.rows[b], *j, &f.mul_ref(v));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn vec_of(ts: &TensorSpace<Scalar>, lower: &[usize], upper: &[usize]) -> usize {
        ts.index(&TensorIndex { lower: lower.to_vec(), upper: upper.to_vec() }).unwrap()
    }

    #[test]
    fn enumeration_round_trip() {
        let ts = TensorSpace::new(2, 3, 10_000).unwrap();
        assert_eq!(ts.dim(), 216);
        for b in 0..ts.dim() {
            assert_eq!(ts.index(&ts.tensor_index(b)), Some(b));
        }
        assert_eq!(vec_of(&ts, &[1, 1, 1], &[0, 0, 1]), 1);
        assert_eq!(vec_of(&ts, &[1, 1, 2], &[0, 0, 0]), 2);
    }

    #[test]
    fn g_cases() {
        let ts = TensorSpace::new(2, 2, 10_000).unwrap();
        let g = ts.op_g(1).unwrap();
        let q = Scalar::q();
        let b = vec_of(&ts, &[1, 2], &[0, 1]);
        assert_eq!(g.row(b), &BTreeMap::from([(vec_of(&ts, &[2, 1], &[1, 0]), Scalar::one())]));
        let b = vec_of(&ts, &[2, 2], &[1, 1]);
        assert_eq!(g.row(b), &BTreeMap::from([(b, q.clone())]));
        let b = vec_of(&ts, &[2, 1], &[1, 1]);
        assert_eq!(g.row(b), &BTreeMap::from([(vec_of(&ts, &[1, 2], &[1, 1]), Scalar::one())]));
        let b = vec_of(&ts, &[1, 2], &[1, 1]);
        let c = vec_of(&ts, &[2, 1], &[1, 1]);
        assert_eq!(g.row(b), &BTreeMap::from([(b, q - Scalar::q_inv()), (c, Scalar::one())]));
        let e = ts.op_e(1).unwrap();
        assert!(e.row(vec_of(&ts, &[1, 2], &[0, 1])).is_empty());
    }

    #[test]
    fn rho_of_one_and_generators() {
        let y = Yokonuma::new(2, 2).unwrap();
        let ts = TensorSpace::new(2, 2, 10_000).unwrap();
        assert_eq!(ts.rho(&y, &y.one()).unwrap(), OpMatrix::identity(16));
        assert_eq!(ts.rho(&y, &y.g(1).unwrap()).unwrap(), ts.op_g(1).unwrap());
        assert_eq!(ts.rho(&y, &y.t(2, 1).unwrap()).unwrap(), ts.op_t(2).unwrap());
        let e = ts.rho(&y, &y.e_i(1).unwrap()).unwrap();
        assert_eq!(e, ts.op_e(1).unwrap());
        assert_eq!(e.mul(&e), e);
        let g = ts.op_g(1).unwrap();
        let quad = g.mul(&g).sub(&OpMatrix::identity(16)).sub(&e.mul(&g).scale(&ts.params().q_minus_qinv()));
        assert!(quad.is_zero());
    }

    #[test]
    fn h_is_jimbo_operator() {
        let ts = TensorSpace::new(2, 2, 10_000).unwrap();
        let h = ts.op_h(2).unwrap();
        // v_2^1 comes after v_1^1 and before v_1^0 in the total order.
        let b = vec_of(&ts, &[2, 1], &[1, 1]);
        assert_eq!(h.row(b), &BTreeMap::from([(vec_of(&ts, &[1, 2], &[1, 1]), Scalar::one())]));
        let b = vec_of(&ts, &[1, 1], &[0, 1]);
        let c = vec_of(&ts, &[1, 1], &[1, 0]);
        assert_eq!(h.row(b), &BTreeMap::from([(c, Scalar::one())]));
        assert_eq!(h.row(c).len(), 2);
        assert!(!h.get(c, c).is_zero());
    }

    #[test]
    fn export_forms() {
        let ts = TensorSpace::new(2, 2, 10_000).unwrap();
        let g = ts.op_g(1).unwrap();
        let j = g.to_json(2, 2);
        assert_eq!(j.dim, 16);
        assert_eq!(j.entries.len(), g.nnz());
        assert!(g.to_csv().starts_with("row,col,value\n"));
        assert!(matches!(TensorSpace::new(3, 4, 10_000), Err(AlgebraError::BudgetExceeded { .. })));
    }
}
