//! The subalgebra `𝔼_A ℰ_n 𝔼_A` spanned by the wreath type `m_st`, and the
//! isomorphism `ℰ_n^α ≅ Mat_b(𝔼_A ℰ_n 𝔼_A)`.

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cellular::WreathDatum;
use super::{BraidsTies, EtElement};
use crate::combinatorics::{factorial, lambda_shapes_of_type, LambdaShape, LambdaTableau, Partition, SetPartition};
use crate::linalg::rank_over_fractions;
use crate::report::Check;
use crate::scalars::{Ring, Scalar};
use crate::symgroup::Perm;
use crate::yokonuma::AlgebraError;

/// `A_α`: consecutive blocks of the parts of `α` in increasing order.
pub fn alpha_partition(alpha: &Partition) -> SetPartition {
    let mut sizes = alpha.0.clone();
    sizes.sort_unstable();
    SetPartition::consecutive(&sizes)
}

/// `∏ (a!)^k k!` over the distinct parts `a` of multiplicity `k`.
pub fn wreath_dimension(alpha: &Partition) -> u128 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &a in &alpha.0 {
        *mult.entry(a).or_default() += 1;
    }
    mult.iter().map(|(&a, &k)| factorial(a).pow(k as u32) * factorial(k)).product()
}

/// `w` with `A_α·w = P`, sending the blocks of `A_α` to those of `P` in
/// increasing order; blocks of equal size are matched by their minima.
pub fn orbit_representative(alpha: &Partition, p: &SetPartition) -> Result<Perm, AlgebraError> {
    if &p.type_partition() != alpha {
        return Err(AlgebraError::Unsupported(format!("{p} does not have type {alpha}")));
    }
    let mut target = p.blocks();
    target.sort_by_key(|b| (b.len(), b[0]));
    let mut images = Vec::with_capacity(p.degree());
    for b in target {
        images.extend(b);
    }
    Ok(Perm::from_images(&images)?)
}

#[derive(Clone, Debug)]
pub struct WreathBasis<S> {
    pub alpha: Partition,
    pub set_partition: SetPartition,
    pub shapes: Vec<LambdaShape>,
    pub index: Vec<(usize, LambdaTableau, LambdaTableau)>,
    pub elements: Vec<EtElement<S>>,
}

impl<S: Ring> WreathBasis<S> {
    /// `m_st` over `Λ ∈ ℒ_n(α)` with `s`, `t` standard of wreath type.
    pub fn build(et: &BraidsTies<S>, alpha: &Partition) -> Result<Self, AlgebraError> {
        if alpha.size() != et.n() {
            return Err(AlgebraError::Unsupported(format!("{alpha} is not a partition of {}", et.n())));
        }
        let shapes = lambda_shapes_of_type(et.n(), alpha);
        let mut index = Vec::new();
        let mut elements = Vec::new();
        for (k, shape) in shapes.iter().enumerate() {
            let tabs: Vec<LambdaTableau> =
                shape.standard_tableaux().into_iter().filter(|s| s.is_wreath_type(shape)).collect();
            for s in &tabs {
                for t in &tabs {
                    elements.push(et.m_st(shape, s, t)?);
                    index.push((k, s.clone(), t.clone()));
                }
            }
        }
        Ok(WreathBasis { alpha: alpha.clone(), set_partition: alpha_partition(alpha), shapes, index, elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The stabilizer of `A_α`, i.e. the `w` with `𝔼_A g_w ∈ 𝔼_A ℰ_n 𝔼_A`.
pub fn stabilizer(a: &SetPartition) -> Vec<Perm> {
    Perm::all(a.degree()).into_iter().filter(|w| a.act(w) == *a).collect()
}

pub fn wreath_check(et: &BraidsTies<Scalar>, alpha: &Partition) -> Vec<Check> {
    let wb = match WreathBasis::build(et, alpha) {
        Ok(b) => b,
        Err(e) => return vec![Check::fail(format!("wreath {alpha}: basis"), e.to_string())],
    };
    let a = wb.set_partition;
    let ea = et.bbe(&a);
    let expected = wreath_dimension(alpha) as usize;
    let rows: Vec<_> = wb.elements.iter().map(|x| et.coords(x)).collect();
    let rank = rank_over_fractions(&rows);
    let stab = stabilizer(&a);
    let mut out = vec![
        Check::new(
            format!("wreath {alpha}: dimension is prod (a!)^k k!"),
            wb.len() == expected && stab.len() == expected,
            format!("{} elements, expected {expected}", wb.len()),
        ),
        Check::new(format!("wreath {alpha}: basis independent"), rank == wb.len(), format!("rank {rank}")),
        Check::all(format!("wreath {alpha}: m_st = E_A m_st E_A"), 0..wb.len(), |&k| {
            let x = &wb.elements[k];
            et.mul(&et.mul(&ea, x), &ea) == *x
        }),
    ];
    let in_span = |extra: Vec<EtElement<Scalar>>| {
        let mut all = rows.clone();
        all.extend(extra.iter().map(|x| et.coords(x)));
        rank_over_fractions(&all) == rank
    };
    out.push(Check::new(
        format!("wreath {alpha}: spans E_A g_w over the stabilizer of A"),
        in_span(stab.iter().map(|w| et.right_mul_gw(&ea, w)).collect()),
        format!("{} permutations", stab.len()),
    ));
    let mut gens: Vec<EtElement<Scalar>> = (1..et.n())
        .filter(|&i| a.same_block(i, i + 1))
        .map(|i| et.right_mul_g(&ea, i))
        .collect();
    for shape in &wb.shapes {
        let d = WreathDatum::new(shape);
        gens.extend(d.k_generators().into_iter().map(|i| et.bb_i(&d, i).expect("generator")));
    }
    out.push(Check::new(
        format!("wreath {alpha}: E_A g_i and bbB_i lie in the span"),
        in_span(gens.clone()),
        format!("{} generators", gens.len()),
    ));
    out
}

/// Square matrix over `ℰ_n` with sparse entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiMatrix<S> {
    pub size: usize,
    pub entries: BTreeMap<(usize, usize), EtElement<S>>,
}

impl<S: Ring> PsiMatrix<S> {
    pub fn zero(size: usize) -> Self {
        PsiMatrix { size, entries: BTreeMap::new() }
    }

    fn put(&mut self, et: &BraidsTies<S>, ij: (usize, usize), x: EtElement<S>) {
        let v = match self.entries.remove(&ij) {
            Some(old) => et.add(&old, &x),
            None => x,
        };
        if !v.is_zero() {
            self.entries.insert(ij, v);
        }
    }

    pub fn mul(&self, et: &BraidsTies<S>, other: &Self) -> Self {
        let mut out = PsiMatrix::zero(self.size);
        for (&(i, k), x) in &self.entries {
            for (&(_, j), y) in other.entries.range((k, 0)..(k + 1, 0)) {
                out.put(et, (i, j), et.mul(x, y));
            }
        }
        out
    }
}

/// `ψ(x)_{PQ} = 𝔼_A g_{w_P} x g_{w_Q}^{-1} 𝔼_A` over the set partitions of
/// type `α`, with `w_P` the orbit representative of `P`.
#[derive(Clone, Debug)]
pub struct PsiMap<S> {
    pub alpha: Partition,
    pub a: SetPartition,
    pub orbit: Vec<SetPartition>,
    pub reps: Vec<Perm>,
    u: Vec<EtElement<S>>,
    v: Vec<EtElement<S>>,
    e_alpha: EtElement<S>,
}

impl<S: Ring> PsiMap<S> {
    pub fn new(et: &BraidsTies<S>, alpha: &Partition) -> Result<Self, AlgebraError> {
        if alpha.size() != et.n() {
            return Err(AlgebraError::Unsupported(format!("{alpha} is not a partition of {}", et.n())));
        }
        let a = alpha_partition(alpha);
        let orbit: Vec<SetPartition> =
            et.set_partitions().iter().filter(|p| &p.type_partition() == alpha).copied().collect();
        let reps: Vec<Perm> = orbit.iter().map(|p| orbit_representative(alpha, p)).collect::<Result<_, _>>()?;
        let ea = et.bbe(&a);
        let u = reps.iter().map(|w| et.right_mul_gw(&ea, w)).collect();
        let v = reps
            .iter()
            .map(|w| {
                let inv = w.reduced_word().iter().rev().fold(et.one(), |acc, &i| {
                    et.mul(&acc, &et.g_inv(i).expect("valid generator"))
                });
                et.mul(&inv, &ea)
            })
            .collect();
        Ok(PsiMap { alpha: alpha.clone(), a, orbit, reps, u, v, e_alpha: et.bbe_alpha(alpha) })
    }

    pub fn size(&self) -> usize {
        self.orbit.len()
    }

    pub fn orbit_index(&self, p: &SetPartition) -> Option<usize> {
        self.orbit.iter().position(|q| q == p)
    }

    pub fn psi(&self, et: &BraidsTies<S>, x: &EtElement<S>) -> Result<PsiMatrix<S>, AlgebraError> {
        if et.mul(x, &self.e_alpha) != *x {
            return Err(AlgebraError::NotInSpan);
        }
        let mut m = PsiMatrix::zero(self.size());
        for (i, u) in self.u.iter().enumerate() {
            let ux = et.mul(u, x);
            if ux.is_zero() {
                continue;
            }
            for (j, v) in self.v.iter().enumerate() {
                m.put(et, (i, j), et.mul(&ux, v));
            }
        }
        Ok(m)
    }

    pub fn psi_inv(&self, et: &BraidsTies<S>, m: &PsiMatrix<S>) -> EtElement<S> {
        m.entries
            .iter()
            .map(|(&(i, j), x)| et.product(&[&self.v[i], x, &self.u[j]]))
            .fold(et.zero(), |acc, x| et.add(&acc, &x))
    }
}

/// For the standard tableau `s` with components forming `P`, the tableau
/// `s_0` of wreath type obtained by relabelling with `w_P^{-1}`.
pub fn wreath_part(alpha: &Partition, s: &LambdaTableau) -> Result<LambdaTableau, AlgebraError> {
    let w = orbit_representative(alpha, &s.component_partition())?;
    Ok(LambdaTableau { t: s.t.act(&w.inverse()), u: s.u.clone() })
}

pub fn psi_check<S: Ring>(et: &BraidsTies<S>, alpha: &Partition, seed: u64, samples: usize) -> Vec<Check> {
    let n = et.n();
    let map = match PsiMap::new(et, alpha) {
        Ok(m) => m,
        Err(e) => return vec![Check::fail(format!("psi {alpha}: map"), e.to_string())],
    };
    let b = map.size();
    let ea = et.bbe(&map.a);
    let mut out = Vec::new();
    out.push(Check::all(format!("psi {alpha}: A w_P = P, w_A = 1"), 0..b, |&i| {
        map.a.act(&map.reps[i]) == map.orbit[i] && (map.orbit[i] != map.a || map.reps[i].is_identity())
    }));
    out.push(Check::all(format!("psi {alpha}: u_P v_P = E_A, v_P u_P = E_P"), 0..b, |&i| {
        et.mul(&map.u[i], &map.v[i]) == ea && et.mul(&map.v[i], &map.u[i]) == et.bbe(&map.orbit[i])
    }));

    let basis: Vec<EtElement<S>> = map
        .orbit
        .iter()
        .flat_map(|p| Perm::all(n).into_iter().map(move |w| (*p, w)))
        .map(|(p, w)| et.right_mul_gw(&et.bbe(&p), &w))
        .collect();
    let wr = wreath_dimension(alpha) as usize;
    let images: Vec<Option<PsiMatrix<S>>> = basis.iter().map(|x| map.psi(et, x).ok()).collect();
    let round = basis.iter().zip(&images).all(|(x, m)| m.as_ref().is_some_and(|m| map.psi_inv(et, m) == *x));
    let entries_ok = images
        .iter()
        .flatten()
        .all(|m| m.entries.values().all(|y| et.mul(&et.mul(&ea, y), &ea) == *y));
    out.push(Check::new(
        format!("psi {alpha}: bijective onto Mat_b(E_A E_n E_A)"),
        round && entries_ok && basis.len() == b * b * wr,
        format!("b = {b}, dim {} = b^2 * {wr}", basis.len()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(EtElement<S>, EtElement<S>)> = (0..samples)
        .map(|_| {
            let x = et.mul(&et.random_element(&mut rng, 3), &map.e_alpha);
            let y = et.mul(&et.random_element(&mut rng, 3), &map.e_alpha);
            (x, y)
        })
        .collect();
    out.push(Check::all(format!("psi {alpha}: psi(xy) = psi(x) psi(y)"), pairs, |(x, y)| {
        match (map.psi(et, x), map.psi(et, y), map.psi(et, &et.mul(x, y))) {
            (Ok(px), Ok(py), Ok(pxy)) => px.mul(et, &py) == pxy,
            _ => false,
        }
    }));
    out.push(Check::new(
        format!("psi {alpha}: rejects elements outside E_alpha"),
        alpha.0.len() == n && n == 1 || map.psi(et, &et.one()).is_err(),
        "psi(1) is refused unless E_alpha = 1",
    ));

    // m_st goes to m_{s0 t0} placed at (P_s, P_t)
    let mut seen = BTreeSet::new();
    let mut total = 0usize;
    let mut placement = Check::pass(format!("psi {alpha}: m_st at (P_s, P_t) with entry m_(s0 t0)"), "");
    for shape in lambda_shapes_of_type(n, alpha) {
        let tabs = shape.standard_tableaux();
        for s in &tabs {
            for t in &tabs {
                total += 1;
                let (Ok(s0), Ok(t0)) = (wreath_part(alpha, s), wreath_part(alpha, t)) else {
                    placement = Check::fail(placement.name.clone(), format!("no wreath part for {s}"));
                    continue;
                };
                let (i, j) = (
                    map.orbit_index(&s.component_partition()).expect("type alpha"),
                    map.orbit_index(&t.component_partition()).expect("type alpha"),
                );
                seen.insert((i, j, shape.to_string(), s0.clone(), t0.clone()));
                if !placement.pass {
                    continue;
                }
                let img = et.m_st(&shape, s, t).and_then(|m| map.psi(et, &m));
                let want = et.m_st(&shape, &s0, &t0);
                let ok = match (img, want) {
                    (Ok(img), Ok(want)) => img.entries.len() == 1 && img.entries.get(&(i, j)) == Some(&want),
                    _ => false,
                };
                if !ok {
                    placement = Check::fail(placement.name.clone(), format!("fails for s = {s}, t = {t} in {shape}"));
                }
            }
        }
    }
    out.push(Check::new(
        format!("psi {alpha}: (s, t) to (P_s, P_t, s0, t0) is a bijection"),
        seen.len() == total && total == b * b * wr,
        format!("{total} pairs"),
    ));
    if placement.pass {
        placement.detail = format!("{total} pairs");
    }
    out.push(placement);
    out
}

/// `m_{t^Λ s} m_{t t^Λ'}` vanishes exactly when the components of `s` and
/// `t` form different set partitions, and otherwise equals
/// `m_{t^Λ s0} m_{t0 t^Λ'}`.
pub fn lemamulti_check<S: Ring>(et: &BraidsTies<S>, alpha: &Partition) -> Vec<Check> {
    let shapes = lambda_shapes_of_type(et.n(), alpha);
    let data: Vec<(LambdaShape, LambdaTableau, Vec<LambdaTableau>)> = shapes
        .into_iter()
        .map(|s| {
            let init = s.initial_tableau();
            let tabs = s.standard_tableaux();
            (s, init, tabs)
        })
        .collect();
    let mut cases = Vec::new();
    for (k, (_, _, tabs)) in data.iter().enumerate() {
        for (l, (_, _, tabs2)) in data.iter().enumerate() {
            for s in 0..tabs.len() {
                for t in 0..tabs2.len() {
                    cases.push((k, l, s, t));
                }
            }
        }
    }
    let mut zero = Check::pass(format!("lemamulti {alpha}: product vanishes iff orbits differ"), "");
    let mut reduce = Check::pass(format!("lemamulti {alpha}: product reduces to the wreath parts"), "");
    let mut count = (0, 0);
    for (k, l, s, t) in cases {
        let (sh, init, tabs) = &data[k];
        let (sh2, init2, tabs2) = &data[l];
        let (s, t) = (&tabs[s], &tabs2[t]);
        let x = match (et.m_st(sh, init, s), et.m_st(sh2, t, init2)) {
            (Ok(a), Ok(b)) => et.mul(&a, &b),
            _ => {
                zero = Check::fail(zero.name.clone(), format!("bad tableaux {s}, {t}"));
                continue;
            }
        };
        let same = s.component_partition() == t.component_partition();
        count.0 += 1;
        if zero.pass && x.is_zero() == same {
            zero = Check::fail(zero.name.clone(), format!("s = {s}, t = {t}"));
        }
        if same {
            count.1 += 1;
            let (s0, t0) = (wreath_part(alpha, s).expect("type"), wreath_part(alpha, t).expect("type"));
            let y = match (et.m_st(sh, init, &s0), et.m_st(sh2, &t0, init2)) {
                (Ok(a), Ok(b)) => et.mul(&a, &b),
                _ => et.zero(),
            };
            if reduce.pass && x != y {
                reduce = Check::fail(reduce.name.clone(), format!("s = {s}, t = {t}"));
            }
        }
    }
    if zero.pass {
        zero.detail = format!("{} pairs", count.0);
    }
    if reduce.pass {
        reduce.detail = format!("{} pairs", count.1);
    }
    vec![zero, reduce]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;

    #[test]
    fn dimensions() {
        assert_eq!(wreath_dimension(&Partition(vec![2, 1])), 2);
        assert_eq!(wreath_dimension(&Partition(vec![2, 2])), 8);
        assert_eq!(wreath_dimension(&Partition(vec![1, 1, 1])), 6);
        assert_eq!(alpha_partition(&Partition(vec![2, 1])), SetPartition::parse("{1|2,3}").unwrap());
    }

    #[test]
    fn representatives() {
        let alpha = Partition(vec![2, 1]);
        let p = SetPartition::parse("{1,3|2}").unwrap();
        let w = orbit_representative(&alpha, &p).unwrap();
        assert_eq!(w.images(), vec![2, 1, 3]);
        assert_eq!(alpha_partition(&alpha).act(&w), p);
        assert!(orbit_representative(&Partition(vec![3]), &p).is_err());
    }

    #[test]
    fn wreath_and_psi_small() {
        for n in 1..=3 {
            let et = BraidsTies::new(n).unwrap();
            for alpha in partitions(n) {
                let checks = wreath_check(&et, &alpha)
                    .into_iter()
                    .chain(psi_check(&et, &alpha, 5, 5))
                    .chain(lemamulti_check(&et, &alpha));
                for c in checks {
                    assert!(c.pass, "n = {n}: {c}");
                }
            }
        }
    }
}
