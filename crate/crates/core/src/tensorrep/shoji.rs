//! The modified Ariki-Koike operators, the Vandermonde adjoint polynomials
//! `F_c` and the identity relating `G_{i-1}` to `H_i`.

use num_traits::{One, Zero};

use super::{OpMatrix, TensorSpace};
use crate::combinatorics::{compositions_with_zeros, factorial, multinomial};
use crate::linalg::invert;
use crate::report::Check;
use crate::scalars::{Cyclo, CycloQ, Ring, Scalar};

/// `A_{ij} = ξ^{j(i-1)}`, its determinant `Δ = ∏_{i>j} (ξ^i - ξ^j)` and
/// adjoint `B = Δ·A⁻¹`.
#[derive(Clone, Debug)]
pub struct Vandermonde {
    pub r: usize,
    pub a: Vec<Vec<CycloQ>>,
    pub delta: CycloQ,
    pub adj: Vec<Vec<CycloQ>>,
}

pub fn adjoint_vandermonde(r: usize) -> Vandermonde {
    let z = |k: i64| Cyclo::zeta_pow(r as u32, k);
    let a: Vec<Vec<CycloQ>> =
        (1..=r).map(|i| (1..=r).map(|j| z((j * (i - 1)) as i64)).collect()).collect();
    let mut delta = CycloQ::one();
    for i in 1..=r {
        for j in 1..i {
            delta = delta.mul_ref(&(z(i as i64) - z(j as i64)));
        }
    }
    let inv = invert(&a).expect("Vandermonde matrix at distinct roots of unity is invertible");
    let adj = inv.iter().map(|row| row.iter().map(|x| x.mul_ref(&delta)).collect()).collect();
    Vandermonde { r, a, delta, adj }
}

/// Coefficients of `F_c(X) = Σ_j h_{cj} X^{j-1}` for `c = 1..r`, lowest
/// degree first.
pub fn f_polys(r: usize) -> Vec<Vec<CycloQ>> {
    adjoint_vandermonde(r).adj
}

fn lift(c: &CycloQ) -> Scalar {
    Scalar::constant(c.clone())
}

impl TensorSpace<Scalar> {
    /// `F(T_k)` for a polynomial given by its coefficients.
    pub fn poly_of_t(&self, f: &[CycloQ], k: usize) -> OpMatrix<Scalar> {
        let t = self.op_t(k).expect("valid index");
        let mut pow = OpMatrix::identity(self.dim());
        let mut out = OpMatrix::zero(self.dim());
        for c in f {
            if !c.is_zero() {
                out = out.add(&pow.scale(&lift(c)));
            }
            pow = pow.mul(&t);
        }
        out
    }

    /// `Δ⁻² Σ_{c₁<c₂} w(c₁,c₂) F_{c₁}(T_{i-1}) F_{c₂}(T_i)`.
    fn f_sum(&self, v: &Vandermonde, i: usize, weight: impl Fn(usize, usize) -> Scalar) -> OpMatrix<Scalar> {
        let r = self.r();
        let d2 = lift(&v.delta.mul_ref(&v.delta).inverse().expect("Δ is a unit"));
        let mut out = OpMatrix::zero(self.dim());
        for c1 in 1..=r {
            let f1 = self.poly_of_t(&v.adj[c1 - 1], i - 1);
            for c2 in c1 + 1..=r {
                let f2 = self.poly_of_t(&v.adj[c2 - 1], i);
                out = out.add(&f1.mul(&f2).scale(&weight(c1, c2)));
            }
        }
        out.scale(&d2)
    }
}

/// The identity `G_{i-1} = H_i - Δ⁻²(q - q⁻¹) Σ_{c₁<c₂} F_{c₁}(T_{i-1}) F_{c₂}(T_i)`
/// for `2 ≤ i ≤ n`.
pub fn shoji_check(ts: &TensorSpace<Scalar>) -> Vec<Check> {
    let n = ts.n();
    let v = adjoint_vandermonde(ts.r());
    let qmq = ts.params().q_minus_qinv();
    vec![Check::all("shoji: G_{i-1} = H_i - D^-2 (q - q^-1) sum F_c1(T_{i-1}) F_c2(T_i)", 2..=n, |&i| {
        let sum = ts.f_sum(&v, i, |_, _| Scalar::one());
        let rhs = ts.op_h(i).expect("valid").sub(&sum.scale(&qmq));
        ts.op_g(i - 1).expect("valid") == rhs
    })]
}

/// The adjoint polynomials and the relations z1-z8 for `h_i ↦ H_i`,
/// `ω_j ↦ T_j`.
pub fn mak_check(ts: &TensorSpace<Scalar>) -> Vec<Check> {
    let (r, n) = (ts.r(), ts.n());
    let dim = ts.dim();
    let v = adjoint_vandermonde(r);
    let p = ts.params();
    let id = OpMatrix::identity(dim);
    let hs: Vec<OpMatrix<Scalar>> = (2..=n).map(|i| ts.op_h(i).expect("valid")).collect();
    let h = |i: usize| &hs[i - 2];
    let ts_: Vec<OpMatrix<Scalar>> = (1..=n).map(|i| ts.op_t(i).expect("valid")).collect();
    let t = |i: usize| &ts_[i - 1];
    let mut out = Vec::new();

    out.push(Check::all("mak: B A = D I", 0..r, |&i| {
        (0..r).all(|j| {
            let s = (0..r).fold(CycloQ::zero(), |acc, k| acc + v.adj[i][k].mul_ref(&v.a[k][j]));
            s == if i == j { v.delta.clone() } else { CycloQ::zero() }
        })
    }));
    out.push(Check::all("mak: F_c(xi^k) = D delta_ck", 1..=r, |&c| {
        (1..=r).all(|k| {
            let x = Cyclo::zeta_pow(r as u32, k as i64);
            let val = v.adj[c - 1].iter().rev().fold(CycloQ::zero(), |acc, h| acc.mul_ref(&x) + h.clone());
            val == if c == k { v.delta.clone() } else { CycloQ::zero() }
        })
    }));
    out.push(Check::all("mak z1: (h_i - q)(h_i + q^-1) = 0", 2..=n, |&i| {
        let a = h(i).sub(&id.scale(&p.q));
        let b = h(i).add(&id.scale(&p.q_inv));
        a.mul(&b).is_zero()
    }));
    let far: Vec<(usize, usize)> =
        (2..=n).flat_map(|i| (2..=n).map(move |j| (i, j))).filter(|&(i, j)| i + 1 < j).collect();
    out.push(Check::all("mak z2: h_i h_j = h_j h_i", far, |&(i, j)| h(i).mul(h(j)) == h(j).mul(h(i))));
    out.push(Check::all("mak z3: h_i h_{i+1} h_i = h_{i+1} h_i h_{i+1}", 2..n, |&i| {
        h(i).mul(h(i + 1)).mul(h(i)) == h(i + 1).mul(h(i)).mul(h(i + 1))
    }));
    out.push(Check::all("mak z4: (w_i - xi^1)...(w_i - xi^r) = 0", 1..=n, |&i| {
        (1..=r)
            .fold(id.clone(), |acc, k| acc.mul(&t(i).sub(&id.scale(p.xi_pow(k as i64)))))
            .is_zero()
    }));
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    out.push(Check::all("mak z5: w_i w_j = w_j w_i", pairs, |&(i, j)| t(i).mul(t(j)) == t(j).mul(t(i))));
    let qmq = p.q_minus_qinv();
    let weight = |c1: usize, c2: usize| p.xi_pow(c2 as i64).sub_ref(p.xi_pow(c1 as i64));
    out.push(Check::all("mak z6, z7: h_j w_j and h_j w_{j-1}", 2..=n, |&j| {
        let corr = ts.f_sum(&v, j, weight).scale(&qmq);
        let z6 = h(j).mul(t(j)) == t(j - 1).mul(h(j)).add(&corr);
        let z7 = h(j).mul(t(j - 1)) == t(j).mul(h(j)).sub(&corr);
        z6 && z7
    }));
    let z8: Vec<(usize, usize)> =
        (2..=n).flat_map(|j| (1..=n).map(move |l| (j, l))).filter(|&(j, l)| l != j && l + 1 != j).collect();
    out.push(Check::all("mak z8: h_j w_l = w_l h_j", z8, |&(j, l)| h(j).mul(t(l)) == t(l).mul(h(j))));
    out
}

/// `(μ, p_μ² ∏ μ_i!)` over compositions of `n` into `r` parts.
pub fn structure_dim_terms(r: usize, n: usize) -> Vec<(Vec<usize>, u128)> {
    compositions_with_zeros(n, r)
        .into_iter()
        .map(|mu| {
            let p = multinomial(&mu);
            let h: u128 = mu.iter().map(|&m| factorial(m)).product();
            let term = p * p * h;
            (mu, term)
        })
        .collect()
}

/// `Σ_μ p_μ² ∏ μ_i! = r^n n!`
pub fn structure_dim_check(r: usize, n: usize) -> Check {
    let terms = structure_dim_terms(r, n);
    let total: u128 = terms.iter().map(|(_, t)| t).sum();
    let expected = (r as u128).pow(n as u32) * factorial(n);
    Check::new(
        format!("structure dimension ({r},{n})"),
        total == expected,
        format!("{} compositions, sum {total}, r^n n! = {expected}", terms.len()),
    )
}
