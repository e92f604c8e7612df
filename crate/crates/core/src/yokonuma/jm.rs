//! Jucys-Murphy elements `J_k`, `J'_k` and their triangular action.

use super::{AlgebraError, YCellularBasis, YElement, Yokonuma};
use crate::combinatorics::{DomOrd, MultiTableau};
use crate::report::Check;
use crate::scalars::{HeckeRing, Ring};
use crate::symgroup::Perm;

impl<S: Ring> Yokonuma<S> {
    /// `J_1 = 1`, `J_{k+1} = g_k J_k g_k`.
    pub fn jm(&self, k: usize) -> Result<YElement<S>, AlgebraError> {
        if k == 0 || k > self.n() {
            return Err(AlgebraError::BadIndex(k, self.n()));
        }
        let mut j = self.one();
        for i in 1..k {
            let g = self.g(i)?;
            j = self.mul(&self.mul(&g, &j), &g);
        }
        Ok(j)
    }

    /// `J'_1 = 0`, `J'_{k+1} = q⁻¹ Σ_{i ≤ k} e_{i,k+1} g_{(i,k+1)}`.
    pub fn jm_prime(&self, k: usize) -> Result<YElement<S>, AlgebraError> {
        if k == 0 || k > self.n() {
            return Err(AlgebraError::BadIndex(k, self.n()));
        }
        let mut out = self.zero();
        for i in 1..k {
            let g = self.g_w(Perm::transposition(self.n(), i, k));
            out = self.add(&out, &self.mul(&self.e(i, k)?, &g));
        }
        Ok(self.scale(&out, &self.params().q_inv))
    }

    /// `g̃_i = g_i + (q - 1) e_i g_i`, the generator of the older presentation
    /// with parameter `u = q²`.
    pub fn juyumaya_generator(&self, i: usize) -> Result<YElement<S>, AlgebraError> {
        let g = self.g(i)?;
        let eg = self.mul(&self.e_i(i)?, &g);
        let c = self.params().q.sub_ref(&S::one());
        Ok(self.add(&g, &self.scale(&eg, &c)))
    }
}

/// Outcome of the triangularity check for one `(λ, t, L)`.
#[derive(Clone, Debug)]
pub struct JmReport {
    pub shape: usize,
    pub tableau: MultiTableau,
    pub element: String,
    pub ok: bool,
    pub detail: String,
}

/// Identities among the `J_k` and the `t_k`, plus triangularity on the
/// cellular basis.
pub fn jm_check<S: HeckeRing>(y: &Yokonuma<S>, basis: &YCellularBasis<S>) -> Vec<Check> {
    let n = y.n();
    let js: Vec<YElement<S>> = (1..=n).map(|k| y.jm(k).expect("valid index")).collect();
    let ts: Vec<YElement<S>> = (1..=n).map(|k| y.t(k, 1).expect("valid index")).collect();
    let q2m1 = y.params().q.mul_ref(&y.params().q).sub_ref(&S::one());
    let mut out = Vec::new();

    out.push(Check::all("jm: J_k = 1 + (q^2-1) J'_k", 1..=n, |&k| {
        let rhs = y.add(&y.one(), &y.scale(&y.jm_prime(k).expect("valid"), &q2m1));
        js[k - 1] == rhs
    }));
    out.push(Check::all("jm: J_k^* = J_k", 1..=n, |&k| y.star(&js[k - 1]) == js[k - 1]));
    let family: Vec<&YElement<S>> = js.iter().chain(ts.iter()).collect();
    let pairs: Vec<(usize, usize)> = (0..family.len()).flat_map(|a| (a + 1..family.len()).map(move |b| (a, b))).collect();
    out.push(Check::all("jm: J and t commute", pairs, |&(a, b)| {
        y.mul(family[a], family[b]) == y.mul(family[b], family[a])
    }));
    let gi: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..=n).map(move |k| (i, k))).filter(|&(i, k)| i + 1 != k && i != k).collect();
    out.push(Check::all("jm: g_i J_k = J_k g_i for i != k-1, k", gi, |&(i, k)| {
        let g = y.g(i).expect("valid");
        y.mul(&g, &js[k - 1]) == y.mul(&js[k - 1], &g)
    }));
    out.push(Check::all("jm: g_i commutes with J_i J_{i+1} and J_i + J_{i+1}", 1..n, |&i| {
        let g = y.g(i).expect("valid");
        let p = y.mul(&js[i - 1], &js[i]);
        let s = y.add(&js[i - 1], &js[i]);
        y.mul(&g, &p) == y.mul(&p, &g) && y.mul(&g, &s) == y.mul(&s, &g)
    }));
    out.push(Check::all("jm: g_i J_i and g_i J_{i+1} exchange formulas", 1..n, |&i| {
        let g = y.g(i).expect("valid");
        let e = y.e_i(i).expect("valid");
        let qmq = y.params().q_minus_qinv();
        let ej = y.mul(&e, &js[i]);
        let lhs1 = y.mul(&g, &js[i - 1]);
        let rhs1 = y.add(&y.mul(&js[i], &g), &y.scale(&ej, &(-qmq.clone())));
        let lhs2 = y.mul(&g, &js[i]);
        let rhs2 = y.add(&y.mul(&js[i - 1], &g), &y.scale(&ej, &qmq));
        lhs1 == rhs1 && lhs2 == rhs2
    }));

    let reports = triangularity(y, basis, &js, &ts);
    let bad = reports.iter().find(|r| !r.ok);
    out.push(match bad {
        None => Check::pass("jm: triangular action on the cellular basis", format!("{} triples", reports.len())),
        Some(r) => Check::fail(
            "jm: triangular action on the cellular basis",
            format!("shape {} tableau {} element {}: {}", basis.shapes[r.shape], r.tableau, r.element, r.detail),
        ),
    });
    out
}

/// For each `λ`, standard `t` and `L ∈ {J_k, t_k}`: `m_{t^λ t} L` has
/// diagonal coefficient given by the content of `t`, and other terms of
/// shape `λ` only at `m_{t^λ v}` with `v ⊳ t`; terms of other shapes have
/// shapes strictly dominating `λ`.
pub fn triangularity<S: HeckeRing>(
    y: &Yokonuma<S>,
    basis: &YCellularBasis<S>,
    js: &[YElement<S>],
    ts: &[YElement<S>],
) -> Vec<JmReport> {
    use rayon::prelude::*;
    let n = y.n();
    let mut jobs = Vec::new();
    for (a, tabs) in basis.tableaux.iter().enumerate() {
        let t0 = tabs.iter().position(|t| t.d().is_identity()).expect("initial tableau is standard");
        for t in 0..tabs.len() {
            for k in 1..=n {
                jobs.push((a, t0, t, k, true));
                jobs.push((a, t0, t, k, false));
            }
        }
    }
    jobs.par_iter()
        .map(|&(a, t0, t, k, is_j)| {
            let tab = &basis.tableaux[a][t];
            let ix = super::CellIndex { shape: a, s: t0, t };
            let m = &basis.elements[basis.position(&ix).expect("indexed")];
            let (l, name, diag) = if is_j {
                (&js[k - 1], format!("J{k}"), q_power(y, 2 * tab.residue(k)))
            } else {
                let p = tab.position(k) as i64;
                (&ts[k - 1], format!("t{k}"), y.params().xi_pow(p).clone())
            };
            let x = y.mul(m, l);
            let detail = match basis.express(y, &x) {
                Err(e) => Some(e.to_string()),
                Ok(c) => check_coeffs(basis, &c, a, t0, t, &diag),
            };
            JmReport { shape: a, tableau: tab.clone(), element: name, ok: detail.is_none(), detail: detail.unwrap_or_default() }
        })
        .collect()
}

/// `q^e` for any integer `e`.
fn q_power<S: Ring>(y: &Yokonuma<S>, e: i64) -> S {
    if e >= 0 {
        y.params().q.pow(e as u32)
    } else {
        y.params().q_inv.pow((-e) as u32)
    }
}

fn check_coeffs<S: HeckeRing>(
    basis: &YCellularBasis<S>,
    c: &[S],
    a: usize,
    t0: usize,
    t: usize,
    diag: &S,
) -> Option<String> {
    let tab = &basis.tableaux[a][t];
    for (i, v) in c.iter().enumerate() {
        let ix = basis.index[i];
        let is_diag = ix.shape == a && ix.s == t0 && ix.t == t;
        if is_diag {
            if v != diag {
                return Some(format!("diagonal coefficient {v:?}, expected {diag:?}"));
            }
            continue;
        }
        if v.is_zero() {
            continue;
        }
        if ix.shape == a {
            let other = &basis.tableaux[a][ix.t];
            if ix.s != t0 || other.dominance(tab).ok() != Some(DomOrd::Greater) {
                return Some(format!("in-shape term at ({}, {})", basis.tableaux[a][ix.s], other));
            }
        } else if basis.shapes[ix.shape].dominance(&basis.shapes[a]).ok() != Some(DomOrd::Greater) {
            return Some(format!("term of shape {} not above {}", basis.shapes[ix.shape], basis.shapes[a]));
        }
    }
    None
}
