//! The cellular basis `{m_st}` and coordinates with respect to it.
//!
//! Coordinates are computed blockwise. Writing `f_c = Π_j u_{j,c_j}` for the
//! simultaneous eigenprojections of the `t_j`, the elements `f_c g_w` form a
//! basis, and `m_st` lies in `f_c 𝒴` for `c_j = p_s(j) mod r`. Each block is
//! an `n! × n!` system.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{perm_rank, AlgebraError, TVec, YElement, Yokonuma};
use crate::combinatorics::{multipartitions, DomOrd, MultiPartition, MultiTableau};
use crate::report::Check;
use crate::linalg::{invert_over, vec_mat};
use crate::scalars::HeckeRing;
use crate::symgroup::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex {
    pub shape: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Debug)]
struct Block<S> {
    members: Vec<usize>,
    inverse: Vec<Vec<S>>,
}

#[derive(Clone, Debug)]
pub struct YCellularBasis<S> {
    r: usize,
    n: usize,
    pub shapes: Vec<MultiPartition>,
    pub tableaux: Vec<Vec<MultiTableau>>,
    pub index: Vec<CellIndex>,
    pub elements: Vec<YElement<S>>,
    position: HashMap<CellIndex, usize>,
    blocks: HashMap<usize, Block<S>>,
}

/// `c_j = p_s(j) mod r`, encoded as in [`TVec::code`].
pub(crate) fn character(s: &MultiTableau, n: usize, r: usize) -> usize {
    let c: Vec<usize> = (1..=n).map(|j| s.position(j) % r).collect();
    TVec::from_slice(&c, r).code(n, r)
}

impl<S: HeckeRing> Yokonuma<S> {
    /// Coefficients of `x` on the basis `f_c g_w`, grouped by `c`.
    pub fn idempotent_coords(&self, x: &YElement<S>) -> HashMap<usize, Vec<S>> {
        let (r, n) = (self.r(), self.n());
        let nc = r.pow(n as u32);
        let nw: usize = (1..=n).product();
        let mut out: HashMap<usize, Vec<S>> = HashMap::new();
        for (key, coeff) in &x.terms {
            let col = perm_rank(&key.w);
            let k = key.t.to_vec(n);
            for code in 0..nc {
                let c = TVec::from_code(code, n, r);
                let e: usize = (1..=n).map(|j| k[j - 1] * c.get(j)).sum();
                let v = coeff.mul_ref(self.params().xi_pow(e as i64));
                let row = out.entry(code).or_insert_with(|| vec![S::zero(); nw]);
                row[col] += &v;
            }
        }
        out.retain(|_, v| v.iter().any(|x| !x.is_zero()));
        out
    }

    /// `Σ_w v_w · f_c g_w` back in the normal form.
    fn block_element(&self, code: usize, v: &[S]) -> YElement<S> {
        let (r, n) = (self.r(), self.n());
        let c = TVec::from_code(code, n, r);
        let mut f = self.one();
        for j in 1..=n {
            f = self.mul(&f, &self.u(j, c.get(j) as i64).expect("valid index"));
        }
        let perms = Perm::all(n);
        let mut g = self.zero();
        for (w, x) in perms.iter().zip(v) {
            if !x.is_zero() {
                g = self.add(&g, &self.scale(&self.g_w(*w), x));
            }
        }
        self.mul(&f, &g)
    }

    pub fn cellular_basis(&self, budget: usize) -> Result<YCellularBasis<S>, AlgebraError> {
        YCellularBasis::build(self, budget)
    }
}

impl<S: HeckeRing> YCellularBasis<S> {
    pub fn build(y: &Yokonuma<S>, budget: usize) -> Result<Self, AlgebraError> {
        let (r, n) = (y.r(), y.n());
        let dim = y.dimension();
        if dim > budget {
            return Err(AlgebraError::BudgetExceeded { dim, budget });
        }
        let shapes = multipartitions(n, r);
        let tableaux: Vec<Vec<MultiTableau>> = shapes.iter().map(MultiTableau::standard).collect();
        let mut index = Vec::with_capacity(dim);
        for (a, tabs) in tableaux.iter().enumerate() {
            for s in 0..tabs.len() {
                for t in 0..tabs.len() {
                    index.push(CellIndex { shape: a, s, t });
                }
            }
        }
        // m_λ g_{d(t)} once per (λ, t)
        let halves: Vec<Vec<YElement<S>>> = shapes
            .par_iter()
            .zip(tableaux.par_iter())
            .map(|(lam, tabs)| {
                let m = y.m_lambda(lam);
                tabs.iter().map(|t| y.right_mul_gw(&m, &t.d())).collect()
            })
            .collect();
        let elements: Vec<YElement<S>> = index
            .par_iter()
            .map(|ix| {
                let s = &tableaux[ix.shape][ix.s];
                y.left_mul_gw(&s.d().inverse(), &halves[ix.shape][ix.t])
            })
            .collect();
        let position = index.iter().enumerate().map(|(i, ix)| (*ix, i)).collect();

        let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, ix) in index.iter().enumerate() {
            members.entry(character(&tableaux[ix.shape][ix.s], n, r)).or_default().push(i);
        }
        let nw: usize = (1..=n).product();
        let coords: Vec<(usize, Vec<S>)> = elements
            .par_iter()
            .zip(index.par_iter())
            .map(|(x, ix)| {
                let code = character(&tableaux[ix.shape][ix.s], n, r);
                let mut c = y.idempotent_coords(x);
                let row = c.remove(&code).unwrap_or_else(|| vec![S::zero(); nw]);
                if !c.is_empty() {
                    // leaks out of its eigenspace: cannot happen for a cellular basis
                    return Err(AlgebraError::NotInSpan);
                }
                Ok((code, row))
            })
            .collect::<Result<_, _>>()?;
        let mut codes: Vec<usize> = members.keys().copied().collect();
        codes.sort_unstable();
        if codes.len() != r.pow(n as u32) || members.values().any(|m| m.len() != nw) {
            return Err(AlgebraError::Unsupported("eigenspace blocks are not square".into()));
        }
        let blocks: Vec<(usize, Block<S>)> = codes
            .par_iter()
            .map(|&code| {
                let mem = members[&code].clone();
                let mat: Vec<Vec<S>> = mem.iter().map(|&i| coords[i].1.clone()).collect();
                match invert_over(&mat) {
                    Ok(Some(inverse)) => Ok((code, Block { members: mem, inverse })),
                    Ok(None) => Err(AlgebraError::Unsupported(format!("block {code} is singular"))),
                    Err(_) => Err(AlgebraError::Unsupported(format!("block {code} is not invertible over the ring"))),
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(YCellularBasis { r, n, shapes, tableaux, index, elements, position, blocks: blocks.into_iter().collect() })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn position(&self, ix: &CellIndex) -> Option<usize> {
        self.position.get(ix).copied()
    }

    pub fn tableau(&self, shape: usize, k: usize) -> &MultiTableau {
        &self.tableaux[shape][k]
    }

    /// Coefficients of `x` in the cellular basis.
    pub fn express(&self, y: &Yokonuma<S>, x: &YElement<S>) -> Result<Vec<S>, AlgebraError> {
        let mut out = vec![S::zero(); self.len()];
        for (code, row) in y.idempotent_coords(x) {
            let b = self.blocks.get(&code).ok_or(AlgebraError::NotInSpan)?;
            for (&i, v) in b.members.iter().zip(vec_mat(&row, &b.inverse)) {
                out[i] = v;
            }
        }
        Ok(out)
    }

    pub fn reassemble(&self, y: &Yokonuma<S>, coeffs: &[S]) -> YElement<S> {
        let mut out = y.zero();
        for (c, x) in coeffs.iter().zip(&self.elements) {
            if !c.is_zero() {
                out = y.add(&out, &y.scale(x, c));
            }
        }
        out
    }

    /// Whether `shape` is one-column: every component is a single column.
    pub fn is_one_column(&self, shape: usize) -> bool {
        self.shapes[shape].0.iter().all(|p| p.0.iter().all(|&x| x == 1))
    }

    /// Indices of `m_ss` for one-column standard `s`.
    pub fn one_column_diagonal(&self) -> Vec<usize> {
        self.index
            .iter()
            .enumerate()
            .filter(|(_, ix)| ix.s == ix.t && self.is_one_column(ix.shape))
            .map(|(i, _)| i)
            .collect()
    }

    /// Element of a basis block through the `f_c g_w` coordinates; used to
    /// cross-check coordinates.
    pub fn block_element(&self, y: &Yokonuma<S>, code: usize, v: &[S]) -> YElement<S> {
        y.block_element(code, v)
    }
}

/// Structural checks of the cellular basis.
pub fn cellular_check<S: HeckeRing>(y: &Yokonuma<S>, b: &YCellularBasis<S>, seed: u64, samples: usize) -> Vec<Check> {
    let n = y.n();
    let mut out = Vec::new();
    let expected: usize = b.tableaux.iter().map(|t| t.len() * t.len()).sum();
    out.push(Check::new(
        "cellular-y: basis size is r^n n!",
        b.len() == y.dimension() && expected == b.len(),
        format!("{} elements", b.len()),
    ));
    out.push(Check::pass(
        "cellular-y: change of basis invertible",
        format!("{} eigenspace blocks of size {}", b.blocks.len(), (1..=n).product::<usize>()),
    ));
    let ones = b.one_column_diagonal();
    let sum = ones.iter().fold(y.zero(), |acc, &i| y.add(&acc, &b.elements[i]));
    out.push(Check::new("cellular-y: sum of one-column m_ss is 1", sum == y.one(), format!("{} terms", ones.len())));
    out.push(Check::all("cellular-y: t_i = sum xi^{p_s(i)} m_ss", 1..=n, |&i| {
        let mut acc = y.zero();
        for &k in &ones {
            let ix = b.index[k];
            let p = b.tableau(ix.shape, ix.s).position(i) as i64;
            acc = y.add(&acc, &y.scale(&b.elements[k], y.params().xi_pow(p)));
        }
        acc == y.t(i, 1).expect("valid")
    }));
    out.push(Check::new(
        "cellular-y: coordinates of 1",
        match b.express(y, &y.one()) {
            Ok(c) => c.iter().enumerate().all(|(i, v)| if ones.contains(&i) { v.is_one() } else { v.is_zero() }),
            Err(_) => false,
        },
        "unit vector on one-column diagonal",
    ));
    out.push(Check::all("cellular-y: m_st^* = m_ts", 0..b.len(), |&i| {
        let ix = b.index[i];
        let j = b.position(&CellIndex { shape: ix.shape, s: ix.t, t: ix.s }).expect("indexed");
        y.star(&b.elements[i]) == b.elements[j]
    }));
    out.push(Check::all("cellular-y: properties of m_lambda", 0..b.shapes.len(), |&a| {
        let lam = &b.shapes[a];
        let m = y.m_lambda(lam);
        let t0 = MultiTableau::initial(&lam.rows());
        let blocks = Yokonuma::<S>::a_lambda(lam);
        let eig = (1..=n).all(|i| {
            let t = y.t(i, 1).expect("valid");
            let v = y.scale(&m, y.params().xi_pow(t0.position(i) as i64));
            y.mul(&t, &m) == v && y.mul(&m, &t) == v
        });
        let ties = (1..=n).all(|i| {
            (i + 1..=n).all(|j| {
                let e = y.e(i, j).expect("valid");
                let want = if blocks.same_block(i, j) { m.clone() } else { y.zero() };
                y.mul(&m, &e) == want && y.mul(&e, &m) == want
            })
        });
        let young = crate::symgroup::young_subgroup(&lam.flat_rows()).into_iter().all(|w| {
            let v = y.scale(&m, &y.params().q.pow(w.length() as u32));
            y.right_mul_gw(&m, &w) == v && y.left_mul_gw(&w, &m) == v
        });
        eig && ties && young
    }));
    out.push(Check::all("cellular-y: m_st e_ij by components of t", 0..b.len(), |&k| {
        let ix = b.index[k];
        let (s, t) = (b.tableau(ix.shape, ix.s), b.tableau(ix.shape, ix.t));
        let m = &b.elements[k];
        (1..=n).all(|i| {
            (i + 1..=n).all(|j| {
                let e = y.e(i, j).expect("valid");
                let right = if t.position(i) == t.position(j) { m.clone() } else { y.zero() };
                let left = if s.position(i) == s.position(j) { m.clone() } else { y.zero() };
                y.mul(m, &e) == right && y.mul(&e, m) == left
            })
        })
    }));
    out.push(Check::all("cellular-y: m_st t_k = xi^{p_t(k)} m_st", 0..b.len(), |&k| {
        let ix = b.index[k];
        let t = b.tableau(ix.shape, ix.t);
        let m = &b.elements[k];
        (1..=n).all(|i| y.mul(m, &y.t(i, 1).expect("valid")) == y.scale(m, y.params().xi_pow(t.position(i) as i64)))
    }));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes: Vec<usize> = (0..b.shapes.len()).filter(|&a| b.tableaux[a].len() >= 2).collect();
    let mut law = Check::pass("cellular-y: multiplicative law", format!("{samples} samples"));
    let mut round = Check::pass("cellular-y: coordinates reassemble", format!("{samples} samples"));
    for _ in 0..samples {
        let h = y.random_element(&mut rng, 3);
        let c = b.express(y, &h);
        if c.map(|c| b.reassemble(y, &c) != h).unwrap_or(true) {
            round = Check::fail("cellular-y: coordinates reassemble", format!("fails for {h:?}"));
        }
        if shapes.is_empty() {
            continue;
        }
        let a = shapes[rng.gen_range(0..shapes.len())];
        let m = b.tableaux[a].len();
        let s1 = rng.gen_range(0..m);
        let s2 = (s1 + rng.gen_range(1..m)) % m;
        let t = rng.gen_range(0..m);
        if let Some(w) = law_witness(y, b, a, s1, s2, t, &h) {
            law = Check::fail("cellular-y: multiplicative law", w);
        }
    }
    out.push(law);
    out.push(round);
    out
}

/// Compares `m_{s1 t} h` and `m_{s2 t} h` modulo higher shapes.
fn law_witness<S: HeckeRing>(
    y: &Yokonuma<S>,
    b: &YCellularBasis<S>,
    a: usize,
    s1: usize,
    s2: usize,
    t: usize,
    h: &YElement<S>,
) -> Option<String> {
    let coeffs = |s: usize| {
        let ix = CellIndex { shape: a, s, t };
        let x = y.mul(&b.elements[b.position(&ix)?], h);
        b.express(y, &x).ok()
    };
    let (c1, c2) = (coeffs(s1)?, coeffs(s2)?);
    let m = b.tableaux[a].len();
    for (k, ix) in b.index.iter().enumerate() {
        if ix.shape == a {
            let (v1, v2) = (&c1[k], &c2[k]);
            if (ix.s != s1 && !v1.is_zero()) || (ix.s != s2 && !v2.is_zero()) {
                return Some(format!("shape {}: stray in-shape term", b.shapes[a]));
            }
        } else if !(c1[k].is_zero() && c2[k].is_zero())
            && b.shapes[ix.shape].dominance(&b.shapes[a]).ok() != Some(DomOrd::Greater)
        {
            return Some(format!("shape {}: term of lower shape {}", b.shapes[a], b.shapes[ix.shape]));
        }
    }
    for v in 0..m {
        let k1 = b.position(&CellIndex { shape: a, s: s1, t: v })?;
        let k2 = b.position(&CellIndex { shape: a, s: s2, t: v })?;
        if c1[k1] != c2[k2] {
            return Some(format!("shape {}: coefficient of v = {} depends on s", b.shapes[a], b.tableaux[a][v]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;
    use num_traits::{One, Zero};

    #[test]
    fn basis_sizes() {
        for (r, n, dim) in [(1, 2, 2), (2, 2, 8), (1, 1, 1), (2, 3, 48), (3, 2, 18)] {
            let y = Yokonuma::new(r, n).unwrap();
            let b = y.cellular_basis(10_000).unwrap();
            assert_eq!(b.len(), dim);
        }
        let y = Yokonuma::new(3, 5).unwrap();
        assert!(matches!(y.cellular_basis(10_000), Err(AlgebraError::BudgetExceeded { .. })));
    }

    #[test]
    fn idempotent_coordinates_round_trip() {
        let y = Yokonuma::new(3, 2).unwrap();
        let b = y.cellular_basis(10_000).unwrap();
        let x = y.parse("t1*g1 + q*t2^2 - 3").unwrap();
        let mut back = y.zero();
        for (code, v) in y.idempotent_coords(&x) {
            back = y.add(&back, &b.block_element(&y, code, &v));
        }
        assert_eq!(back, x);
    }

    #[test]
    fn express_identity_and_generators() {
        let y = Yokonuma::new(2, 2).unwrap();
        let b = y.cellular_basis(10_000).unwrap();
        let ones = b.one_column_diagonal();
        assert_eq!(ones.len(), 4);
        let c = b.express(&y, &y.one()).unwrap();
        for (i, v) in c.iter().enumerate() {
            assert_eq!(v.is_one(), ones.contains(&i));
            assert!(v.is_one() || v == &Scalar::zero());
        }
        let x = y.parse("g1*t1 + q").unwrap();
        let c = b.express(&y, &x).unwrap();
        assert_eq!(b.reassemble(&y, &c), x);
    }
}
