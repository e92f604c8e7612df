//! Defining relations E1-E9, the Möbius idempotents and the central
//! decomposition.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BraidsTies, EtElement};
use crate::combinatorics::{faa_di_bruno, factorial, partitions, SetPartition};
use crate::linalg::rank_over_fractions;
use crate::report::Check;
use crate::scalars::{Ring, Scalar};
use crate::symgroup::Perm;
use crate::yokonuma::Yokonuma;

fn pairs(n: usize, f: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).filter(|&(i, j)| f(i, j)).collect()
}

pub fn relations_check<S: Ring>(et: &BraidsTies<S>) -> Vec<Check> {
    let n = et.n();
    let g: Vec<_> = (1..n).map(|i| et.g(i).expect("valid")).collect();
    let e: Vec<_> = (1..n).map(|i| et.e_i(i).expect("valid")).collect();
    let (g, e) = (|i: usize| &g[i - 1], |i: usize| &e[i - 1]);
    let far = pairs(n, |i, j| i.abs_diff(j) > 1);
    let near = pairs(n, |i, j| i.abs_diff(j) == 1);
    let all = pairs(n, |_, _| true);
    let mut out = Vec::new();

    out.push(Check::all("E1: g_i g_j = g_j g_i, |i-j| > 1", far.clone(), |&(i, j)| {
        et.mul(g(i), g(j)) == et.mul(g(j), g(i))
    }));
    out.push(Check::all("E2: g_i e_i = e_i g_i", 1..n, |&i| et.mul(g(i), e(i)) == et.mul(e(i), g(i))));
    out.push(Check::all("E3: g_i g_j g_i = g_j g_i g_j, |i-j| = 1", near.clone(), |&(i, j)| {
        et.product(&[g(i), g(j), g(i)]) == et.product(&[g(j), g(i), g(j)])
    }));
    out.push(Check::all("E4: e_i g_j g_i = g_j g_i e_j, |i-j| = 1", near.clone(), |&(i, j)| {
        et.product(&[e(i), g(j), g(i)]) == et.product(&[g(j), g(i), e(j)])
    }));
    out.push(Check::all("E5: e_i e_j g_j = e_i g_j e_i = g_j e_i e_j, |i-j| = 1", near, |&(i, j)| {
        let a = et.product(&[e(i), e(j), g(j)]);
        a == et.product(&[e(i), g(j), e(i)]) && a == et.product(&[g(j), e(i), e(j)])
    }));
    out.push(Check::all("E6: e_i e_j = e_j e_i", all, |&(i, j)| et.mul(e(i), e(j)) == et.mul(e(j), e(i))));
    out.push(Check::all("E7: g_i e_j = e_j g_i, |i-j| > 1", far, |&(i, j)| {
        et.mul(g(i), e(j)) == et.mul(e(j), g(i))
    }));
    out.push(Check::all("E8: e_i^2 = e_i", 1..n, |&i| et.mul(e(i), e(i)) == *e(i)));
    out.push(Check::all("E9: g_i^2 = 1 + (q - q^-1) e_i g_i", 1..n, |&i| {
        let rhs = et.add(&et.one(), &et.scale(&et.mul(e(i), g(i)), &et.params().q_minus_qinv()));
        et.mul(g(i), g(i)) == rhs
    }));
    out.push(Check::all("et: g_i g_i^-1 = g_i^-1 g_i = 1", 1..n, |&i| {
        let gi = et.g_inv(i).expect("valid");
        et.mul(g(i), &gi) == et.one() && et.mul(&gi, g(i)) == et.one()
    }));
    let parts = et.set_partitions().to_vec();
    let ab: Vec<(SetPartition, SetPartition)> =
        parts.iter().flat_map(|a| parts.iter().map(move |b| (*a, *b))).collect();
    out.push(Check::all("et: E_A E_B = E_{A v B}", ab, |(a, b)| {
        et.mul(&et.e_partition(a), &et.e_partition(b)) == et.e_partition(&a.join(b))
    }));
    let aw: Vec<(SetPartition, Perm)> =
        parts.iter().flat_map(|a| Perm::all(n).into_iter().map(move |w| (*a, w))).collect();
    out.push(Check::all("et: E_A g_w = g_w E_{Aw}", aw, |(a, w)| {
        et.mul(&et.e_partition(a), &et.g_w(*w)) == et.mul(&et.g_w(*w), &et.e_partition(&a.act(w)))
    }));
    out.push(Check::all("et: E_A is a product of e_ij", parts, |a| {
        let mut x = et.one();
        for block in a.blocks() {
            for w in block.windows(2) {
                x = et.mul(&x, &et.e(w[0], w[1]).expect("valid"));
            }
        }
        x == et.e_partition(a)
    }));
    out.push(Check::all("et: star is an anti-involution", 1..n, |&i| {
        let a = et.mul(e(i), g(i));
        let b = et.mul(g(i), &et.e(1, n).expect("valid"));
        let ab = et.mul(&a, &b);
        et.star(&ab) == et.mul(&et.star(&b), &et.star(&a)) && et.star(&et.star(&ab)) == ab
    }));
    out
}

/// Orthogonality, the action of `g_w` and `E_B` on `𝔼_A`, the partition of
/// unity and centrality of `𝔼_α`.
pub fn mobius_check<S: Ring>(et: &BraidsTies<S>, seed: u64, samples: usize) -> Vec<Check> {
    let n = et.n();
    let parts = et.set_partitions().to_vec();
    let bbe: Vec<_> = parts.iter().map(|a| et.bbe(a)).collect();
    let idx: Vec<usize> = (0..parts.len()).collect();
    let ab: Vec<(usize, usize)> = idx.iter().flat_map(|&a| idx.iter().map(move |&b| (a, b))).collect();
    let mut out = Vec::new();
    out.push(Check::all("mobius: E_A E_B = delta_AB E_A", ab.clone(), |&(a, b)| {
        let want = if a == b { bbe[a].clone() } else { et.zero() };
        et.mul(&bbe[a], &bbe[b]) == want
    }));
    out.push(Check::all("mobius: E_A E_B = E_A if B in A, else 0", ab, |&(a, b)| {
        let eb = et.e_partition(&parts[b]);
        let want = if parts[b].refines(&parts[a]) { bbe[a].clone() } else { et.zero() };
        et.mul(&bbe[a], &eb) == want && et.mul(&eb, &bbe[a]) == want
    }));
    let aw: Vec<(usize, Perm)> = idx.iter().flat_map(|&a| Perm::all(n).into_iter().map(move |w| (a, w))).collect();
    out.push(Check::all("mobius: E_A g_w = g_w E_{Aw}", aw, |(a, w)| {
        et.right_mul_gw(&bbe[*a], w) == et.left_mul_gw(w, &et.bbe(&parts[*a].act(w)))
    }));
    let sum_a = bbe.iter().fold(et.zero(), |acc, x| et.add(&acc, x));
    out.push(Check::new("mobius: sum_A E_A = 1", sum_a == et.one(), format!("{} set partitions", parts.len())));
    let alphas = partitions(n);
    let ea: Vec<_> = alphas.iter().map(|a| et.bbe_alpha(a)).collect();
    let sum = ea.iter().fold(et.zero(), |acc, x| et.add(&acc, x));
    out.push(Check::new("mobius: sum_alpha E_alpha = 1", sum == et.one(), format!("{} types", alphas.len())));
    let gens: Vec<_> = (1..n)
        .flat_map(|i| [et.g(i).expect("valid"), et.e_i(i).expect("valid")])
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let randoms: Vec<_> = (0..samples).map(|_| et.random_element(&mut rng, 3)).collect();
    out.push(Check::all("mobius: E_alpha central", 0..alphas.len(), |&k| {
        gens.iter().chain(&randoms).all(|x| et.mul(&ea[k], x) == et.mul(x, &ea[k]))
    }));
    out
}

/// `x = Σ_α x 𝔼_α` with each component in the span of `𝔼_A g_w`, `|A| = α`,
/// and `dim ℰ_n^α = b_n(α) n!`.
pub fn decompose_check(et: &BraidsTies<Scalar>, seed: u64, samples: usize) -> Vec<Check> {
    let n = et.n();
    let nf = factorial(n) as usize;
    let mut out = Vec::new();
    let mut total = 0usize;
    out.push(Check::all("decompose: dim E_n^alpha = b_n(alpha) n!", partitions(n), |alpha| {
        let rows: Vec<_> = et
            .set_partitions()
            .iter()
            .filter(|a| &a.type_partition() == alpha)
            .flat_map(|a| Perm::all(n).into_iter().map(move |w| (*a, w)))
            .map(|(a, w)| et.coords(&et.right_mul_gw(&et.bbe(&a), &w)))
            .collect();
        let rank = rank_over_fractions(&rows);
        total += rank;
        rank == faa_di_bruno(alpha) as usize * nf
    }));
    out.push(Check::new(
        "decompose: sum of dimensions is b_n n!",
        total == et.dimension(),
        format!("{total} = {}", et.dimension()),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs = vec![et.one(), et.g(1).unwrap_or_else(|_| et.one())];
    xs.extend((0..samples).map(|_| et.random_element(&mut rng, 4)));
    out.push(Check::all("decompose: components recombine and have pure type", xs, |x| {
        let parts = et.decompose(x);
        let sum = parts.iter().fold(et.zero(), |acc, (_, c)| et.add(&acc, c));
        let pure = parts
            .iter()
            .all(|(alpha, c)| et.bbe_coords(c).keys().all(|a| &a.type_partition() == alpha));
        sum == *x && pure
    }));
    out
}

/// `φ` on generators and `φ(xy) = φ(x) φ(y)` on seeded pairs.
pub fn phi_check(et: &BraidsTies<Scalar>, y: &Yokonuma<Scalar>, seed: u64, samples: usize) -> Vec<Check> {
    let n = et.n();
    let phi = |x: &EtElement<Scalar>| et.phi(x, y).expect("same n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..samples).map(|_| (et.random_element(&mut rng, 3), et.random_element(&mut rng, 3))).collect();
    vec![
        Check::all(format!("phi r = {}: g_i, e_i to g_i, e_i", y.r()), 1..n, |&i| {
            phi(&et.g(i).expect("valid")) == y.g(i).expect("valid")
                && phi(&et.e_i(i).expect("valid")) == y.e_i(i).expect("valid")
        }),
        Check::new(format!("phi r = {}: phi(1) = 1", y.r()), phi(&et.one()) == y.one(), ""),
        Check::all(format!("phi r = {}: phi(xy) = phi(x) phi(y)", y.r()), pairs, |(a, b)| {
            phi(&et.mul(a, b)) == y.mul(&phi(a), &phi(b))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_small() {
        for n in 1..=3 {
            let et = BraidsTies::new(n).unwrap();
            for c in relations_check(&et).into_iter().chain(mobius_check(&et, 1, 3)).chain(decompose_check(&et, 1, 3)) {
                assert!(c.pass, "n = {n}: {c}");
            }
        }
    }

    #[test]
    fn phi_homomorphism() {
        for (r, n) in [(1, 2), (2, 3), (3, 3)] {
            let et = BraidsTies::new(n).unwrap();
            let y = Yokonuma::new(r, n).unwrap();
            for c in phi_check(&et, &y, 2, 5) {
                assert!(c.pass, "({r},{n}): {c}");
            }
        }
    }

    #[test]
    fn decompose_unit() {
        let et = BraidsTies::new(3).unwrap();
        let parts = et.decompose(&et.one());
        assert_eq!(parts.len(), 3);
        for (alpha, c) in parts {
            assert_eq!(c, et.bbe_alpha(&alpha));
        }
    }
}
