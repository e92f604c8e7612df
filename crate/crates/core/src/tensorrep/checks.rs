//! Relations of `ρ`, faithfulness and the embedding of the braids-and-ties
//! algebra.

use std::collections::BTreeMap;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{OpMatrix, TensorIndex, TensorSpace};
use crate::combinatorics::{factorial, SetPartition};
use crate::linalg::{rank_over_fractions, SparseVec};
use crate::report::Check;
use crate::scalars::{Ring, Scalar};
use crate::symgroup::Perm;
use crate::yokonuma::{AlgebraError, YElement, Yokonuma};

/// `ρ` on generators, the relations r1-r6 as operator identities, and
/// multiplicativity on seeded random pairs.
pub fn tensor_check(y: &Yokonuma<Scalar>, ts: &TensorSpace<Scalar>, seed: u64, samples: usize) -> Vec<Check> {
    let (r, n, dim) = (ts.r(), ts.n(), ts.dim());
    let id = OpMatrix::<Scalar>::identity(dim);
    let t: Vec<OpMatrix<Scalar>> = (1..=n).map(|i| ts.op_t(i).expect("valid")).collect();
    let g: Vec<OpMatrix<Scalar>> = (1..n).map(|i| ts.op_g(i).expect("valid")).collect();
    let e: Vec<OpMatrix<Scalar>> = (1..n).map(|i| ts.op_e(i).expect("valid")).collect();
    let rho = |x: &YElement<Scalar>| ts.rho(y, x).expect("matching sizes");
    let mut out = Vec::new();

    out.push(Check::all("tensor: rho(t_i) = T_i, rho(g_i) = G_i, rho(e_i) = E_i", 1..=n, |&i| {
        let ok_t = rho(&y.t(i, 1).expect("valid")) == t[i - 1];
        ok_t && (i == n || (rho(&y.g(i).expect("valid")) == g[i - 1] && rho(&y.e_i(i).expect("valid")) == e[i - 1]))
    }));
    out.push(Check::all("tensor: E_i = (1/r) sum T_i^m T_{i+1}^-m", 1..n, |&i| {
        let mut s = OpMatrix::zero(dim);
        for m in 0..r as i64 {
            let a = ts.op_t_pow(i, m).expect("valid");
            let b = ts.op_t_pow(i + 1, -m).expect("valid");
            s = s.add(&a.mul(&b));
        }
        s.scale(&ts.params().inv_r) == e[i - 1]
    }));
    out.push(Check::all("tensor r1: T_i^r = 1", 1..=n, |&i| t[i - 1].pow(r as u32) == id));
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    out.push(Check::all("tensor r2: T_i T_j = T_j T_i", pairs, |&(i, j)| {
        t[i - 1].mul(&t[j - 1]) == t[j - 1].mul(&t[i - 1])
    }));
    let tg: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..n).map(move |i| (j, i))).collect();
    out.push(Check::all("tensor r3: T_j G_i = G_i T_{j s_i}", tg, |&(j, i)| {
        let js = Perm::simple(n, i).expect("valid").apply(j);
        t[j - 1].mul(&g[i - 1]) == g[i - 1].mul(&t[js - 1])
    }));
    let far: Vec<(usize, usize)> =
        (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).filter(|&(i, j)| i + 1 < j).collect();
    out.push(Check::all("tensor r4: G_i G_j = G_j G_i", far, |&(i, j)| {
        g[i - 1].mul(&g[j - 1]) == g[j - 1].mul(&g[i - 1])
    }));
    out.push(Check::all("tensor r5: braid relation", 1..n.saturating_sub(1), |&i| {
        g[i - 1].mul(&g[i]).mul(&g[i - 1]) == g[i].mul(&g[i - 1]).mul(&g[i])
    }));
    out.push(Check::all("tensor r6: G_i^2 = 1 + (q - q^-1) E_i G_i", 1..n, |&i| {
        let rhs = id.add(&e[i - 1].mul(&g[i - 1]).scale(&ts.params().q_minus_qinv()));
        g[i - 1].mul(&g[i - 1]) == rhs
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<_> = (0..samples).map(|_| (y.random_element(&mut rng, 3), y.random_element(&mut rng, 3))).collect();
    out.push(Check::all("tensor: rho(xy) = rho(x) rho(y)", sample, |(a, b)| rho(&y.mul(a, b)) == rho(a).mul(&rho(b))));
    out
}

/// Rank over the fraction field of the flattened `ρ(t^k g_w)` for all
/// `r^n n!` basis elements.
pub fn faithfulness_rank(y: &Yokonuma<Scalar>, ts: &TensorSpace<Scalar>) -> Result<usize, AlgebraError> {
    let (r, n) = (y.r(), y.n());
    let mut rows: Vec<SparseVec<Scalar>> = Vec::with_capacity(y.dimension());
    let uppers: Vec<Vec<usize>> = (0..ts.dim()).map(|b| ts.tensor_index(b).upper).collect();
    for w in Perm::all(n) {
        let gw = ts.op_gw(&w);
        for code in 0..r.pow(n as u32) {
            let k = crate::yokonuma::TVec::from_code(code, n, r).to_vec(n);
            let mut row = Vec::with_capacity(gw.nnz());
            for (b, col, v) in gw.entries() {
                let e: usize = k.iter().zip(&uppers[b]).map(|(a, t)| a * t).sum();
                row.push((b * ts.dim() + col, v.mul_ref(ts.params().xi_pow(e as i64))));
            }
            rows.push(row);
        }
    }
    Ok(rank_over_fractions(&rows))
}

/// Rank of the images `E_A g_w` in `𝒴_{r,n}`, over all set partitions `A`
/// and permutations `w`.
pub fn phi_embedding_rank(y: &Yokonuma<Scalar>) -> usize {
    let n = y.n();
    let rows: Vec<SparseVec<Scalar>> = SetPartition::all(n)
        .iter()
        .flat_map(|a| {
            let ea = y.e_partition(a);
            Perm::all(n).into_iter().map(move |w| (ea.clone(), w))
        })
        .map(|(ea, w)| y.coords(&y.right_mul_gw(&ea, &w)))
        .collect();
    rank_over_fractions(&rows)
}

/// Basis tensors `v_n^{j_n} ⊗ ⋯ ⊗ v_1^{j_1}` with decreasing lower indices
/// whose upper indices agree at tensor positions `k`, `l` exactly when `k`
/// and `l` share a block of `A`.
pub fn v_a_basis(ts: &TensorSpace<Scalar>, a: &SetPartition) -> Vec<usize> {
    let n = ts.n();
    let blocks = a.blocks();
    let lower: Vec<usize> = (1..=n).rev().collect();
    let mut out = Vec::new();
    // injective colourings of the blocks by upper indices
    let mut colour = vec![0usize; blocks.len()];
    fn rec(k: usize, r: usize, colour: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k == colour.len() {
            f(colour);
            return;
        }
        for c in 0..r {
            if !colour[..k].contains(&c) {
                colour[k] = c;
                rec(k + 1, r, colour, f);
            }
        }
    }
    rec(0, ts.r(), &mut colour, &mut |col| {
        let mut upper = vec![0; n];
        for (b, block) in blocks.iter().enumerate() {
            for &p in block {
                upper[p - 1] = col[b];
            }
        }
        out.push(ts.index(&TensorIndex { lower: lower.clone(), upper }).expect("valid tensor"));
    });
    out
}

/// For `r ≥ n`: the `b_n n!` elements `E_A g_w` stay independent in
/// `𝒴_{r,n}`, and `V_A` is fixed by `E_A` and killed by every `E_B` with
/// `B ⊄ A`.
pub fn phi_embedding_check(r: usize, n: usize, budget: usize) -> Result<Vec<Check>, AlgebraError> {
    if r < n {
        return Err(AlgebraError::Unsupported(format!("the embedding needs r >= n, got r = {r}, n = {n}")));
    }
    let y = Yokonuma::new(r, n)?;
    if y.dimension() > budget {
        return Err(AlgebraError::BudgetExceeded { dim: y.dimension(), budget });
    }
    let expected = crate::combinatorics::bell(n) as usize * factorial(n) as usize;
    let rank = phi_embedding_rank(&y);
    let mut out = vec![Check::new(
        format!("phi: E_A g_w independent in Y({r},{n})"),
        rank == expected,
        format!("rank {rank}, b_n n! = {expected}"),
    )];
    if let Ok(ts) = TensorSpace::new(n, n, budget) {
        // V_A needs r >= n colours; r = n is the smallest case
        let yn = Yokonuma::new(n, n)?;
        let parts = SetPartition::all(n);
        let eb: Vec<OpMatrix<Scalar>> =
            parts.iter().map(|b| ts.rho(&yn, &yn.e_partition(b)).expect("sizes match")).collect();
        out.push(Check::all(format!("phi: V_A fixed and killed at r = n = {n}"), parts.clone(), |a| {
            v_a_basis(&ts, a).into_iter().all(|v| {
                let e = BTreeMap::from([(v, Scalar::one())]);
                parts.iter().zip(&eb).all(|(b, m)| {
                    let img = m.apply(&e);
                    if b == a {
                        img == e
                    } else if !b.refines(a) {
                        img.is_empty()
                    } else {
                        true
                    }
                })
            }) && !v_a_basis(&ts, a).is_empty()
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yokonuma::DEFAULT_BUDGET;

    #[test]
    fn faithful_small() {
        for (r, n, rank) in [(1, 2, 2), (2, 2, 8), (3, 2, 18)] {
            let y = Yokonuma::new(r, n).unwrap();
            let ts = TensorSpace::new(r, n, DEFAULT_BUDGET).unwrap();
            assert_eq!(faithfulness_rank(&y, &ts).unwrap(), rank);
        }
    }

    #[test]
    fn tensor_suite_small() {
        let y = Yokonuma::new(2, 2).unwrap();
        let ts = TensorSpace::new(2, 2, DEFAULT_BUDGET).unwrap();
        let c = tensor_check(&y, &ts, 0, 10);
        assert!(c.iter().all(|c| c.pass), "{c:?}");
    }

    #[test]
    fn phi_small() {
        let c = phi_embedding_check(2, 2, DEFAULT_BUDGET).unwrap();
        assert!(c.iter().all(|c| c.pass), "{c:?}");
        assert_eq!(c[0].detail, "rank 4, b_n n! = 4");
        let c = phi_embedding_check(1, 1, DEFAULT_BUDGET).unwrap();
        assert!(c.iter().all(|c| c.pass));
        assert!(phi_embedding_check(2, 3, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn v_a_sizes() {
        let ts = TensorSpace::new(3, 3, DEFAULT_BUDGET).unwrap();
        let a = SetPartition::parse("{1,3|2}").unwrap();
        // two blocks coloured injectively from three colours
        assert_eq!(v_a_basis(&ts, &a).len(), 6);
    }
}
