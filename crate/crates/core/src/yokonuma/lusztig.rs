//! The idempotent presentation with `f_s := m_ss` for one-column `s`.

use std::collections::HashMap;

use super::{YCellularBasis, YElement, Yokonuma};
use crate::combinatorics::MultiTableau;
use crate::report::Check;
use crate::scalars::HeckeRing;
use crate::symgroup::Perm;

/// The one-column standard tableaux with their `m_ss`.
pub fn one_column_tableaux<S: HeckeRing>(basis: &YCellularBasis<S>) -> Vec<(MultiTableau, YElement<S>)> {
    basis
        .one_column_diagonal()
        .into_iter()
        .map(|i| {
            let ix = basis.index[i];
            (basis.tableau(ix.shape, ix.s).clone(), basis.elements[i].clone())
        })
        .collect()
}

/// Whether `i` and `i+1` share a column of `s`.
fn same_column(s: &MultiTableau, i: usize) -> bool {
    s.position(i) == s.position(i + 1)
}

pub fn lusztig_check<S: HeckeRing>(y: &Yokonuma<S>, basis: &YCellularBasis<S>) -> Vec<Check> {
    let n = y.n();
    let fs = one_column_tableaux(basis);
    let lookup: HashMap<MultiTableau, usize> = fs.iter().enumerate().map(|(k, (s, _))| (s.clone(), k)).collect();
    let gs: Vec<YElement<S>> = (1..n).map(|i| y.g(i).expect("valid index")).collect();
    let mut out = Vec::new();

    out.push(Check::new(
        "lusztig: one-column count is r^n",
        fs.len() == y.r().pow(n as u32),
        format!("{} tableaux", fs.len()),
    ));
    let far: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).filter(|&(i, j)| i + 1 < j).collect();
    out.push(Check::all("lusztig rl1: g_i g_j = g_j g_i", far, |&(i, j)| {
        y.mul(&gs[i - 1], &gs[j - 1]) == y.mul(&gs[j - 1], &gs[i - 1])
    }));
    out.push(Check::all("lusztig rl3: braid relation", 1..n.saturating_sub(1), |&i| {
        let (a, b) = (&gs[i - 1], &gs[i]);
        y.product(&[a, b, a]) == y.product(&[b, a, b])
    }));
    let inst: Vec<(usize, usize)> = (0..fs.len()).flat_map(|k| (1..n).map(move |i| (k, i))).collect();
    out.push(Check::all("lusztig rl4: f_s g_i = g_i f_{s s_i}", inst, |&(k, i)| {
        let (s, f) = &fs[k];
        let other = if same_column(s, i) {
            k
        } else {
            let ss = s.act(&Perm::simple(n, i).expect("valid"));
            match lookup.get(&ss) {
                Some(&j) => j,
                None => return false,
            }
        };
        y.mul(f, &gs[i - 1]) == y.mul(&gs[i - 1], &fs[other].1)
    }));
    out.push(Check::all("lusztig rl5: quadratic relation", 1..n, |&i| {
        let g = &gs[i - 1];
        let mut sum = y.zero();
        for (s, f) in &fs {
            if same_column(s, i) {
                sum = y.add(&sum, f);
            }
        }
        let rhs = y.add(&y.one(), &y.scale(&y.mul(&sum, g), &y.params().q_minus_qinv()));
        y.mul(g, g) == rhs
    }));
    let total = fs.iter().fold(y.zero(), |acc, (_, f)| y.add(&acc, f));
    out.push(Check::new("lusztig rl6: sum of f_s is 1", total == y.one(), format!("{} terms", fs.len())));
    let pairs: Vec<(usize, usize)> = (0..fs.len()).flat_map(|a| (0..fs.len()).map(move |b| (a, b))).collect();
    out.push(Check::all("lusztig rl7: f_s f_s' = delta f_s", pairs, |&(a, b)| {
        let p = y.mul(&fs[a].1, &fs[b].1);
        if a == b {
            p == fs[a].1
        } else {
            p.is_zero()
        }
    }));
    out.push(Check::all("lusztig: t_i = sum xi^{p_s(i)} f_s", 1..=n, |&i| {
        let mut sum = y.zero();
        for (s, f) in &fs {
            sum = y.add(&sum, &y.scale(f, y.params().xi_pow(s.position(i) as i64)));
        }
        sum == y.t(i, 1).expect("valid")
    }));
    out
}
