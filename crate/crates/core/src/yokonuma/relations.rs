//! Defining relations and the basic identities for `e_ij` and `E_A`.

use super::Yokonuma;
use crate::combinatorics::SetPartition;
use crate::report::Check;
use crate::scalars::Ring;
use crate::symgroup::Perm;

pub fn relations_check<S: Ring>(y: &Yokonuma<S>) -> Vec<Check> {
    let (r, n) = (y.r(), y.n());
    let ts: Vec<_> = (1..=n).map(|i| y.t(i, 1).expect("valid")).collect();
    let gs: Vec<_> = (1..n).map(|i| y.g(i).expect("valid")).collect();
    let mut out = Vec::new();

    out.push(Check::all("r1: t_i^r = 1", 1..=n, |&i| y.pow(&ts[i - 1], r as u32) == y.one()));
    let all_pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    out.push(Check::all("r2: t_i t_j = t_j t_i", all_pairs.clone(), |&(i, j)| {
        y.mul(&ts[i - 1], &ts[j - 1]) == y.mul(&ts[j - 1], &ts[i - 1])
    }));
    let tg: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..n).map(move |i| (j, i))).collect();
    out.push(Check::all("r3: t_j g_i = g_i t_{j s_i}", tg, |&(j, i)| {
        let js = Perm::simple(n, i).expect("valid").apply(j);
        y.mul(&ts[j - 1], &gs[i - 1]) == y.mul(&gs[i - 1], &ts[js - 1])
    }));
    let far: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).filter(|&(i, j)| i + 1 < j).collect();
    out.push(Check::all("r4: g_i g_j = g_j g_i", far, |&(i, j)| {
        y.mul(&gs[i - 1], &gs[j - 1]) == y.mul(&gs[j - 1], &gs[i - 1])
    }));
    out.push(Check::all("r5: g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", 1..n.saturating_sub(1), |&i| {
        let (a, b) = (&gs[i - 1], &gs[i]);
        y.product(&[a, b, a]) == y.product(&[b, a, b])
    }));
    out.push(Check::all("r6: g_i^2 = 1 + (q - q^-1) e_i g_i", 1..n, |&i| {
        let e = y.e_i(i).expect("valid");
        let rhs = y.add(&y.one(), &y.scale(&y.mul(&e, &gs[i - 1]), &y.params().q_minus_qinv()));
        y.mul(&gs[i - 1], &gs[i - 1]) == rhs
    }));
    out.push(Check::all("inverse: g_i g_i^-1 = g_i^-1 g_i = 1", 1..n, |&i| {
        let gi = y.g_inv(i).expect("valid");
        y.mul(&gs[i - 1], &gi) == y.one() && y.mul(&gi, &gs[i - 1]) == y.one()
    }));
    out.push(Check::all("e_ij: idempotent, symmetric, e_ii = 1", all_pairs.clone(), |&(i, j)| {
        let e = y.e(i, j).expect("valid");
        y.mul(&e, &e) == e && e == y.e(j, i).expect("valid") && (i != j || e == y.one())
    }));
    let lower: Vec<(usize, usize)> = all_pairs.iter().copied().filter(|&(i, j)| i < j).collect();
    out.push(Check::all("e_ij via conjugation of e_{j-1}", lower.clone(), |&(i, j)| {
        // g_i ⋯ g_{j-2} e_{j-1} g_{j-2}^{-1} ⋯ g_i^{-1}
        let mut x = y.e_i(j - 1).expect("valid");
        for k in (i..j - 1).rev() {
            x = y.mul(&y.mul(&gs[k - 1], &x), &y.g_inv(k).expect("valid"));
        }
        x == y.e(i, j).expect("valid")
    }));
    out.push(Check::all("e_ij: t_i e_ij = t_j e_ij", lower, |&(i, j)| {
        let e = y.e(i, j).expect("valid");
        y.mul(&ts[i - 1], &e) == y.mul(&ts[j - 1], &e)
    }));
    let aw: Vec<(SetPartition, Perm)> = SetPartition::all(n)
        .into_iter()
        .flat_map(|a| Perm::all(n).into_iter().map(move |w| (a, w)))
        .collect();
    out.push(Check::all("E_A g_w = g_w E_{Aw}", aw, |(a, w)| {
        let lhs = y.right_mul_gw(&y.e_partition(a), w);
        let rhs = y.left_mul_gw(w, &y.e_partition(&a.act(w)));
        lhs == rhs
    }));
    out.push(Check::all("star: anti-involution on generators", 1..n, |&i| {
        let a = y.mul(&ts[0], &gs[i - 1]);
        let b = y.mul(&gs[i - 1], &ts[n - 1]);
        let ab = y.mul(&a, &b);
        y.star(&ab) == y.mul(&y.star(&b), &y.star(&a)) && y.star(&y.star(&ab)) == ab
    }));
    out
}
