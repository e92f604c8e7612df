//! The elements `𝔹_y`, `m_Λ`, `m_st` and the cellular basis indexed by
//! `ℒ_n`.
//!
//! Coordinates are computed blockwise in the basis `𝔼_C g_w`: `m_st` lies in
//! `𝔼_C ℰ_n` where `C` is the set partition formed by the components of
//! `s`, so each block is an `n! × n!` system.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{BraidsTies, EtElement};
use crate::combinatorics::{
    block_permutation, lambda_shapes, DomOrd, LambdaShape, LambdaTableau, MultiTableau, SetPartition, Tableau,
};
use crate::linalg::{invert_over, vec_mat};
use crate::report::Check;
use crate::scalars::{HeckeRing, Ring};
use crate::symgroup::{in_young_subgroup, young_subgroup, Perm};
use crate::yokonuma::{AlgebraError, CellIndex};

/// Block data of a shape `Λ`: the component sizes, the runs of equal sizes
/// (generating `𝔖^k_Λ`) and of equal components (generating `𝔖^m_Λ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathDatum {
    pub shape: LambdaShape,
    pub sizes: Vec<usize>,
    pub k_runs: Vec<usize>,
    pub m_runs: Vec<usize>,
}

fn run_lengths<T: PartialEq>(v: &[T]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 && v[i - 1] == *x {
            *out.last_mut().expect("nonempty") += 1;
        } else {
            out.push(1);
        }
    }
    out
}

impl WreathDatum {
    pub fn new(shape: &LambdaShape) -> Self {
        let sizes = shape.norm();
        WreathDatum {
            shape: shape.clone(),
            k_runs: run_lengths(&sizes),
            m_runs: run_lengths(&shape.lambda.0),
            sizes,
        }
    }

    /// Number of components `m`.
    pub fn m(&self) -> usize {
        self.sizes.len()
    }

    pub fn set_partition(&self) -> SetPartition {
        self.shape.set_partition()
    }

    /// `i` such that `σ_i` swaps components `i`, `i+1` of equal size.
    pub fn k_generators(&self) -> Vec<usize> {
        (1..self.m()).filter(|&i| self.sizes[i - 1] == self.sizes[i]).collect()
    }

    /// `i` such that components `i`, `i+1` are equal.
    pub fn m_generators(&self) -> Vec<usize> {
        (1..self.m()).filter(|&i| self.shape.lambda.0[i - 1] == self.shape.lambda.0[i]).collect()
    }

    pub fn in_k_group(&self, y: &Perm) -> bool {
        y.degree() == self.m() && in_young_subgroup(y, &self.k_runs)
    }

    pub fn in_m_group(&self, y: &Perm) -> bool {
        y.degree() == self.m() && in_young_subgroup(y, &self.m_runs)
    }

    pub fn k_group(&self) -> Vec<Perm> {
        young_subgroup(&self.k_runs)
    }

    /// The word `s_{a,1} s_{a+1,2} ⋯ s_{2a-1,a}` of `B_i`, shifted by the
    /// points before component `i`.
    pub fn b_word(&self, i: usize) -> Result<Vec<usize>, AlgebraError> {
        if !self.k_generators().contains(&i) {
            return Err(AlgebraError::Unsupported(format!("sigma_{i} is not in the block group of {}", self.shape)));
        }
        let c: usize = self.sizes[..i - 1].iter().sum();
        let a = self.sizes[i - 1];
        Ok((0..a).flat_map(|k| (1 + k..=a + k).rev().map(move |j| j + c)).collect())
    }

    /// `B_y`, pairing the points of the blocks moved by `y`.
    pub fn b_perm(&self, y: &Perm) -> Result<Perm, AlgebraError> {
        if !self.in_k_group(y) {
            return Err(AlgebraError::Unsupported(format!("{} is not in the block group", y.one_line())));
        }
        Ok(block_permutation(y, &self.sizes)?)
    }

    /// `d(u_1) ⋯ d(u_q)` as a permutation of the components.
    pub fn lift(&self, u: &[Tableau]) -> Perm {
        let mut images: Vec<usize> = (1..=self.m()).collect();
        let mut start = 0;
        for (len, t) in self.m_runs.iter().zip(u) {
            let d = t.d();
            for j in 1..=*len {
                images[start + j - 1] = start + d.apply(j);
            }
            start += len;
        }
        Perm::from_images(&images).expect("valid lift")
    }

    /// Composition of the components whose Young subgroup is the row
    /// stabilizer of `μ` inside `𝔖^m_Λ`.
    pub fn mu_composition(&self) -> Vec<usize> {
        self.shape.mu.iter().flat_map(|p| p.0.iter().copied()).collect()
    }
}

impl MultiTableau {
    /// Component `j` holds exactly block `j` of the given set partition.
    pub fn holds_blocks(&self, a: &SetPartition) -> bool {
        let blocks = a.blocks();
        self.0.len() == blocks.len()
            && self.0.iter().zip(&blocks).all(|(c, b)| {
                let mut e: Vec<usize> = c.entries().collect();
                e.sort_unstable();
                &e == b
            })
    }
}

impl<S: Ring> BraidsTies<S> {
    /// `𝔹_i = 𝔼_{A_Λ} g_{a,1} g_{a+1,2} ⋯ g_{2a-1,a}`
    pub fn bb_i(&self, d: &WreathDatum, i: usize) -> Result<EtElement<S>, AlgebraError> {
        let word = d.b_word(i)?;
        Ok(word.into_iter().fold(self.bbe(&d.set_partition()), |acc, k| self.right_mul_g(&acc, k)))
    }

    /// `𝔹_y` along a reduced word of `y ∈ 𝔖^k_Λ`; `𝔹_1 = 𝔼_{A_Λ}`.
    pub fn bb_y(&self, d: &WreathDatum, y: &Perm) -> Result<EtElement<S>, AlgebraError> {
        if !d.in_k_group(y) {
            return Err(AlgebraError::Unsupported(format!("{} is not in the block group", y.one_line())));
        }
        let mut out = self.bbe(&d.set_partition());
        for i in y.reduced_word() {
            out = self.mul(&out, &self.bb_i(d, i)?);
        }
        Ok(out)
    }

    /// `b_μ = Σ 𝔹_y` over the row stabilizer of `μ`.
    pub fn b_mu(&self, d: &WreathDatum) -> EtElement<S> {
        young_subgroup(&d.mu_composition())
            .iter()
            .map(|y| self.bb_y(d, y).expect("row stabilizer lies in the block group"))
            .fold(self.zero(), |acc, x| self.add(&acc, &x))
    }

    /// `m_Λ = 𝔼_{A_Λ} x_λ b_μ`
    pub fn m_lambda(&self, shape: &LambdaShape) -> EtElement<S> {
        let d = WreathDatum::new(shape);
        let e = self.bbe(&d.set_partition());
        self.mul(&self.mul(&e, &self.x_comp(&shape.lambda.flat_rows())), &self.b_mu(&d))
    }

    /// `𝔼_{A_Λ} 𝔹_{d(u)}^* x_λ b_μ 𝔹_{d(v)}`
    fn m_core(&self, d: &WreathDatum, u: &[Tableau], v: &[Tableau]) -> EtElement<S> {
        let bu = self.star(&self.bb_y(d, &d.lift(u)).expect("lift lies in the block group"));
        let bv = self.bb_y(d, &d.lift(v)).expect("lift lies in the block group");
        let x = self.x_comp(&d.shape.lambda.flat_rows());
        self.product(&[&bu, &x, &self.b_mu(d), &bv])
    }

    /// `m_st = g_{d(s)}^* 𝔼_{A_Λ} 𝔹_{d(u)}^* x_λ b_μ 𝔹_{d(v)} g_{d(t)}`
    pub fn m_st(&self, shape: &LambdaShape, s: &LambdaTableau, t: &LambdaTableau) -> Result<EtElement<S>, AlgebraError> {
        for x in [s, t] {
            if x.t.shape() != shape.lambda.rows()
                || x.u.len() != shape.mu.len()
                || x.u.iter().zip(&shape.mu).any(|(u, m)| u.shape() != m.0)
            {
                return Err(AlgebraError::Unsupported(format!("{x} does not have shape {shape}")));
            }
        }
        let d = WreathDatum::new(shape);
        let core = self.m_core(&d, &s.u, &t.u);
        Ok(self.left_mul_gw(&s.d_t().inverse(), &self.right_mul_gw(&core, &t.d_t())))
    }
}

#[derive(Clone, Debug)]
struct Block<S> {
    members: Vec<usize>,
    inverse: Vec<Vec<S>>,
}

/// `𝔼 𝔹*_u x b 𝔹_v` keyed by the second components `(u, v)`.
type CoreTable<S> = HashMap<(Vec<Tableau>, Vec<Tableau>), EtElement<S>>;

#[derive(Clone, Debug)]
pub struct EtCellularBasis<S> {
    n: usize,
    pub shapes: Vec<LambdaShape>,
    pub tableaux: Vec<Vec<LambdaTableau>>,
    pub index: Vec<CellIndex>,
    pub elements: Vec<EtElement<S>>,
    position: HashMap<CellIndex, usize>,
    blocks: HashMap<SetPartition, Block<S>>,
}

impl<S: HeckeRing> BraidsTies<S> {
    pub fn cellular_basis(&self, budget: usize) -> Result<EtCellularBasis<S>, AlgebraError> {
        EtCellularBasis::build(self, budget)
    }
}

impl<S: HeckeRing> EtCellularBasis<S> {
    pub fn build(et: &BraidsTies<S>, budget: usize) -> Result<Self, AlgebraError> {
        let n = et.n();
        let dim = et.dimension();
        if dim > budget {
            return Err(AlgebraError::BudgetExceeded { dim, budget });
        }
        let shapes = lambda_shapes(n);
        let tableaux: Vec<Vec<LambdaTableau>> = shapes.iter().map(|s| s.standard_tableaux()).collect();
        let mut index = Vec::with_capacity(dim);
        for (a, tabs) in tableaux.iter().enumerate() {
            for s in 0..tabs.len() {
                for t in 0..tabs.len() {
                    index.push(CellIndex { shape: a, s, t });
                }
            }
        }
        if index.len() != dim {
            return Err(AlgebraError::Unsupported(format!("{} standard pairs for dimension {dim}", index.len())));
        }
        // 𝔼 𝔹*_u x b 𝔹_v once per shape and pair of second components
        let cores: Vec<CoreTable<S>> = shapes
            .par_iter()
            .zip(tableaux.par_iter())
            .map(|(shape, tabs)| {
                let d = WreathDatum::new(shape);
                let mut us: Vec<Vec<Tableau>> = tabs.iter().map(|t| t.u.clone()).collect();
                us.sort();
                us.dedup();
                let mut m = HashMap::new();
                for u in &us {
                    for v in &us {
                        m.insert((u.clone(), v.clone()), et.m_core(&d, u, v));
                    }
                }
                m
            })
            .collect();
        let elements: Vec<EtElement<S>> = index
            .par_iter()
            .map(|ix| {
                let (s, t) = (&tableaux[ix.shape][ix.s], &tableaux[ix.shape][ix.t]);
                let core = &cores[ix.shape][&(s.u.clone(), t.u.clone())];
                et.left_mul_gw(&s.d_t().inverse(), &et.right_mul_gw(core, &t.d_t()))
            })
            .collect();
        let position = index.iter().enumerate().map(|(i, ix)| (*ix, i)).collect();

        let nw: usize = (1..=n).product();
        let mut members: HashMap<SetPartition, Vec<usize>> = HashMap::new();
        for (i, ix) in index.iter().enumerate() {
            members.entry(tableaux[ix.shape][ix.s].component_partition()).or_default().push(i);
        }
        let coords: Vec<Vec<S>> = elements
            .par_iter()
            .zip(index.par_iter())
            .map(|(x, ix)| {
                let p = tableaux[ix.shape][ix.s].component_partition();
                let mut c = et.bbe_coords(x);
                let row = c.remove(&p).unwrap_or_else(|| vec![S::zero(); nw]);
                if !c.is_empty() {
                    return Err(AlgebraError::NotInSpan);
                }
                Ok(row)
            })
            .collect::<Result<_, _>>()?;
        if members.len() != et.set_partitions().len() || members.values().any(|m| m.len() != nw) {
            return Err(AlgebraError::Unsupported("idempotent blocks are not square".into()));
        }
        let keys: Vec<SetPartition> = et.set_partitions().to_vec();
        let blocks: Vec<(SetPartition, Block<S>)> = keys
            .par_iter()
            .map(|p| {
                let mem = members[p].clone();
                let mat: Vec<Vec<S>> = mem.iter().map(|&i| coords[i].clone()).collect();
                match invert_over(&mat) {
                    Ok(Some(inverse)) => Ok((*p, Block { members: mem, inverse })),
                    Ok(None) => Err(AlgebraError::Unsupported(format!("block {p} is singular"))),
                    Err(_) => Err(AlgebraError::Unsupported(format!("block {p} is not invertible over the ring"))),
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(EtCellularBasis { n, shapes, tableaux, index, elements, position, blocks: blocks.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, ix: &CellIndex) -> Option<usize> {
        self.position.get(ix).copied()
    }

    pub fn tableau(&self, shape: usize, k: usize) -> &LambdaTableau {
        &self.tableaux[shape][k]
    }

    /// Coefficients of `x` in the cellular basis.
    pub fn express(&self, et: &BraidsTies<S>, x: &EtElement<S>) -> Result<Vec<S>, AlgebraError> {
        let mut out = vec![S::zero(); self.len()];
        for (p, row) in et.bbe_coords(x) {
            let b = self.blocks.get(&p).ok_or(AlgebraError::NotInSpan)?;
            for (&i, v) in b.members.iter().zip(vec_mat(&row, &b.inverse)) {
                out[i] = v;
            }
        }
        Ok(out)
    }

    pub fn reassemble(&self, et: &BraidsTies<S>, coeffs: &[S]) -> EtElement<S> {
        let mut out = et.zero();
        for (c, x) in coeffs.iter().zip(&self.elements) {
            if !c.is_zero() {
                out = et.add(&out, &et.scale(x, c));
            }
        }
        out
    }
}

pub fn et_cellular_check<S: HeckeRing>(
    et: &BraidsTies<S>,
    b: &EtCellularBasis<S>,
    seed: u64,
    samples: usize,
) -> Vec<Check> {
    let mut out = Vec::new();
    let pairs: usize = b.tableaux.iter().map(|t| t.len() * t.len()).sum();
    out.push(Check::new(
        "cellular-et: basis size is b_n n!",
        b.len() == et.dimension() && pairs == b.len(),
        format!("{} elements", b.len()),
    ));
    out.push(Check::pass(
        "cellular-et: change of basis invertible",
        format!("{} idempotent blocks of size {}", b.blocks.len(), (1..=et.n()).product::<usize>()),
    ));
    out.push(Check::all("cellular-et: m_st^* = m_ts", 0..b.len(), |&i| {
        let ix = b.index[i];
        let j = b.position(&CellIndex { shape: ix.shape, s: ix.t, t: ix.s }).expect("indexed");
        et.star(&b.elements[i]) == b.elements[j]
    }));
    let alphas: Vec<_> = b.shapes.iter().map(|s| et.bbe_alpha(&s.type_partition())).collect();
    out.push(Check::all("cellular-et: m_st lies in one E_alpha component", 0..b.len(), |&i| {
        let ix = b.index[i];
        et.mul(&b.elements[i], &alphas[ix.shape]) == b.elements[i]
    }));
    out.push(Check::all("cellular-et: E_{A(s)} m_st = m_st = m_st E_{A(t)}", 0..b.len(), |&i| {
        let ix = b.index[i];
        let (s, t) = (b.tableau(ix.shape, ix.s), b.tableau(ix.shape, ix.t));
        let m = &b.elements[i];
        et.mul(&et.bbe(&s.component_partition()), m) == *m && et.mul(m, &et.bbe(&t.component_partition())) == *m
    }));
    out.push(Check::new(
        "cellular-et: coordinates of 1",
        b.express(et, &et.one()).map(|c| b.reassemble(et, &c) == et.one()).unwrap_or(false),
        "reassembles",
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes: Vec<usize> = (0..b.shapes.len()).filter(|&a| b.tableaux[a].len() >= 2).collect();
    let mut law = Check::pass("cellular-et: multiplicative law", format!("{samples} samples"));
    let mut round = Check::pass("cellular-et: coordinates reassemble", format!("{samples} samples"));
    for _ in 0..samples {
        let h = et.random_element(&mut rng, 3);
        let c = b.express(et, &h);
        if round.pass && c.map(|c| b.reassemble(et, &c) != h).unwrap_or(true) {
            round = Check::fail("cellular-et: coordinates reassemble", format!("fails for {h:?}"));
        }
        if shapes.is_empty() {
            continue;
        }
        let a = shapes[rng.gen_range(0..shapes.len())];
        let m = b.tableaux[a].len();
        let s1 = rng.gen_range(0..m);
        let s2 = (s1 + rng.gen_range(1..m)) % m;
        let t = rng.gen_range(0..m);
        if law.pass {
            if let Some(w) = law_witness(et, b, a, s1, s2, t, &h) {
                law = Check::fail("cellular-et: multiplicative law", w);
            }
        }
    }
    out.push(law);
    out.push(round);
    out
}

/// Compares `m_{s1 t} h` and `m_{s2 t} h` modulo higher shapes.
fn law_witness<S: HeckeRing>(
    et: &BraidsTies<S>,
    b: &EtCellularBasis<S>,
    a: usize,
    s1: usize,
    s2: usize,
    t: usize,
    h: &EtElement<S>,
) -> Option<String> {
    let coeffs = |s: usize| {
        let x = et.mul(&b.elements[b.position(&CellIndex { shape: a, s, t })?], h);
        b.express(et, &x).ok()
    };
    let Some((c1, c2)) = coeffs(s1).zip(coeffs(s2)) else {
        return Some(format!("shape {}: product outside the span", b.shapes[a]));
    };
    for (k, ix) in b.index.iter().enumerate() {
        if ix.shape == a {
            if (ix.s != s1 && !c1[k].is_zero()) || (ix.s != s2 && !c2[k].is_zero()) {
                return Some(format!("shape {}: stray in-shape term", b.shapes[a]));
            }
        } else if !(c1[k].is_zero() && c2[k].is_zero()) && b.shapes[ix.shape].dominance(&b.shapes[a]) != DomOrd::Greater {
            return Some(format!("shape {}: term of non-higher shape {}", b.shapes[a], b.shapes[ix.shape]));
        }
    }
    for v in 0..b.tableaux[a].len() {
        let k1 = b.position(&CellIndex { shape: a, s: s1, t: v })?;
        let k2 = b.position(&CellIndex { shape: a, s: s2, t: v })?;
        if c1[k1] != c2[k2] {
            return Some(format!("shape {}: coefficient of v = {} depends on s", b.shapes[a], b.tableaux[a][v]));
        }
    }
    None
}

/// The block groups, the relations of `𝔹_i`, the `∘` action and the
/// commutation `𝔼 𝔹_y g_{d(s)} = 𝔼 g_{d(y∘s)} 𝔹_y` for every shape of
/// `ℒ_n`, every `y ∈ 𝔖^k_Λ` and every row standard `s` of the initial kind.
pub fn commutation_check<S: Ring>(et: &BraidsTies<S>) -> Vec<Check> {
    let n = et.n();
    let data: Vec<WreathDatum> = lambda_shapes(n).iter().map(WreathDatum::new).collect();
    let mut out = Vec::new();
    out.push(Check::all("bbB: S^m <= S^k <= stabilizer of A", 0..data.len(), |&k| {
        let d = &data[k];
        let a = d.set_partition();
        let m_in_k = d.m_generators().iter().all(|i| d.k_generators().contains(i));
        let stab = d.k_group().iter().all(|y| d.b_perm(y).map(|b| a.act(&b) == a).unwrap_or(false));
        m_in_k && stab
    }));
    out.push(Check::all("bbB: B_i from its word, B_y = B_i1 ... B_ik", 0..data.len(), |&k| {
        let d = &data[k];
        let words = d.k_generators().into_iter().all(|i| {
            let w = Perm::from_word(n, &d.b_word(i).expect("generator")).expect("valid word");
            let y = Perm::simple(d.m(), i).expect("valid");
            d.b_perm(&y) == Ok(w) && w.length() == d.sizes[i - 1].pow(2)
        });
        let products = d.k_group().into_iter().all(|y| {
            let prod = y.reduced_word().into_iter().fold(Perm::identity(n), |acc, i| {
                acc.compose(&d.b_perm(&Perm::simple(d.m(), i).expect("valid")).expect("generator"))
            });
            d.b_perm(&y) == Ok(prod)
        });
        words && products
    }));
    out.push(Check::all("bbB: B_i^2 = E_A, braid and commuting relations", 0..data.len(), |&k| {
        let d = &data[k];
        let e = et.bbe(&d.set_partition());
        let gens = d.k_generators();
        let bb: HashMap<usize, EtElement<S>> = gens.iter().map(|&i| (i, et.bb_i(d, i).expect("generator"))).collect();
        gens.iter().all(|&i| {
            let bi = &bb[&i];
            let sq = et.mul(bi, bi) == e;
            let rel = gens.iter().all(|&j| {
                let bj = &bb[&j];
                match i.abs_diff(j) {
                    1 => et.product(&[bi, bj, bi]) == et.product(&[bj, bi, bj]),
                    0 => true,
                    _ => et.mul(bi, bj) == et.mul(bj, bi),
                }
            });
            sq && rel
        })
    }));
    out.push(Check::all("bbB: B_y = E_A g_{B_y}", 0..data.len(), |&k| {
        let d = &data[k];
        let e = et.bbe(&d.set_partition());
        d.k_group().iter().all(|y| et.bb_y(d, y) == Ok(et.right_mul_gw(&e, &d.b_perm(y).expect("in group"))))
    }));
    out.push(Check::all("circle: an action preserving the initial kind, S^m fixes t^lambda", 0..data.len(), |&k| {
        let d = &data[k];
        let a = d.set_partition();
        let group = d.k_group();
        let t_lambda = MultiTableau::initial(&d.shape.lambda.rows());
        let initial: Vec<MultiTableau> =
            MultiTableau::row_standard(&d.shape.lambda.rows()).into_iter().filter(|s| s.holds_blocks(&a)).collect();
        initial.iter().all(|s| {
            group.iter().all(|y| {
                let ys = s.circle_action(y, &d.sizes).expect("block group");
                let fixed = !d.in_m_group(y) || *s != t_lambda || ys == *s;
                let kind = ys.holds_blocks(&a);
                let action = group.iter().all(|z| {
                    let zs = s.circle_action(z, &d.sizes).expect("block group");
                    zs.circle_action(y, &d.sizes).ok() == s.circle_action(&y.compose(z), &d.sizes).ok()
                });
                fixed && kind && action
            })
        })
    }));
    out.push(Check::all("commutation: E B_y g_d(s) = E g_d(y o s) B_y", 0..data.len(), |&k| {
        let d = &data[k];
        let a = d.set_partition();
        let initial: Vec<MultiTableau> =
            MultiTableau::row_standard(&d.shape.lambda.rows()).into_iter().filter(|s| s.holds_blocks(&a)).collect();
        d.k_group().iter().all(|y| {
            let by = et.bb_y(d, y).expect("in group");
            initial.iter().all(|s| {
                let ys = s.circle_action(y, &d.sizes).expect("block group");
                et.right_mul_gw(&by, &s.d()) == et.mul(&et.right_mul_gw(&et.bbe(&a), &ys.d()), &by)
            })
        })
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bell, factorial, MultiPartition, Partition};
    use crate::scalars::Scalar;

    fn shape(l: &[&[usize]], mu: &[&[usize]]) -> LambdaShape {
        let lam = MultiPartition(l.iter().map(|p| Partition(p.to_vec())).collect());
        LambdaShape::new(lam, mu.iter().map(|p| Partition(p.to_vec())).collect()).unwrap()
    }

    #[test]
    fn b_word_matches_transpositions() {
        let d = WreathDatum::new(&shape(&[&[1], &[1, 1], &[2]], &[&[1], &[1], &[1]]));
        assert_eq!(d.k_generators(), vec![2]);
        assert!(d.m_generators().is_empty());
        // blocks {2,3} and {4,5}: (2,4)(3,5)
        let w = Perm::from_word(5, &d.b_word(2).unwrap()).unwrap();
        assert_eq!(w.images(), vec![1, 4, 5, 2, 3]);
        assert!(d.b_word(1).is_err());
    }

    #[test]
    fn trivial_factors_give_the_idempotent() {
        let et = BraidsTies::new(3).unwrap();
        let s = shape(&[&[1], &[1, 1]], &[&[1], &[1]]);
        assert_eq!(et.m_lambda(&s), et.bbe(&s.set_partition()));
        let et1 = BraidsTies::new(1).unwrap();
        assert_eq!(et1.m_lambda(&shape(&[&[1]], &[&[1]])), et1.one());
    }

    #[test]
    fn bb_squares_to_idempotent() {
        let et = BraidsTies::<Scalar>::new(4).unwrap();
        let d = WreathDatum::new(&shape(&[&[2], &[2]], &[&[2]]));
        let b = et.bb_i(&d, 1).unwrap();
        assert_eq!(et.mul(&b, &b), et.bbe(&d.set_partition()));
        assert!(et.bb_y(&d, &Perm::identity(3)).is_err());
    }

    #[test]
    fn basis_sizes() {
        for n in 1..=3 {
            let et = BraidsTies::new(n).unwrap();
            let b = et.cellular_basis(10_000).unwrap();
            assert_eq!(b.len() as u128, bell(n) * factorial(n));
        }
        let et = BraidsTies::new(6).unwrap();
        assert!(matches!(et.cellular_basis(10_000), Err(AlgebraError::BudgetExceeded { .. })));
    }

    #[test]
    fn cellular_small() {
        for n in 1..=3 {
            let et = BraidsTies::new(n).unwrap();
            let b = et.cellular_basis(10_000).unwrap();
            for c in et_cellular_check(&et, &b, 3, 10).into_iter().chain(commutation_check(&et)) {
                assert!(c.pass, "n = {n}: {c}");
            }
        }
    }
}
