//! The braids and ties algebra `ℰ_n` in the normal form `E_A g_w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::combinatorics::{bell, factorial, mobius, partitions, Partition, SetPartition};
use crate::linalg::SparseVec;
use crate::scalars::{HeckeParams, Ring, Scalar};
use crate::symgroup::Perm;
use crate::yokonuma::{perm_rank, push_term, AlgebraError, YElement, Yokonuma};

mod cellular;
mod relations;
mod text;
mod wreath;

pub use cellular::{commutation_check, et_cellular_check, EtCellularBasis, WreathDatum};
pub use relations::{decompose_check, mobius_check, phi_check, relations_check};
pub use text::EtJson;
pub use wreath::{
    alpha_partition, lemamulti_check, orbit_representative, psi_check, wreath_check, wreath_dimension, wreath_part, PsiMap,
    PsiMatrix, WreathBasis,
};

/// Basis element `E_A g_w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EtKey {
    pub a: SetPartition,
    pub w: Perm,
}

/// Element of `ℰ_n` as a finite sum of `c · E_A g_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtElement<S> {
    n: usize,
    terms: BTreeMap<EtKey, S>,
}

impl<S: Ring> EtElement<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<EtKey, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &EtKey) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    fn push(&mut self, key: EtKey, c: &S) {
        push_term(&mut self.terms, key, c);
    }
}

/// Context for computing in `ℰ_n` over `S`. Only `q` is used from the
/// parameters; the coefficients never involve roots of unity.
#[derive(Clone, Debug)]
pub struct BraidsTies<S> {
    n: usize,
    params: HeckeParams<S>,
    parts: Vec<SetPartition>,
    part_index: HashMap<SetPartition, usize>,
    /// Indices of the coarsenings of each set partition.
    coarser: Vec<Vec<usize>>,
}

impl BraidsTies<Scalar> {
    pub fn new(n: usize) -> Result<Self, AlgebraError> {
        Self::with_params(n, HeckeParams::generic(1)?)
    }
}

impl<S: Ring> BraidsTies<S> {
    pub fn with_params(n: usize, params: HeckeParams<S>) -> Result<Self, AlgebraError> {
        if n == 0 || n > 7 {
            return Err(AlgebraError::Unsupported(format!("n = {n}; supported 1..=7")));
        }
        let parts = SetPartition::all(n);
        let part_index = parts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let coarser = parts
            .iter()
            .map(|a| parts.iter().enumerate().filter(|(_, c)| a.refines(c)).map(|(j, _)| j).collect())
            .collect();
        Ok(BraidsTies { n, params, parts, part_index, coarser })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &HeckeParams<S> {
        &self.params
    }

    /// `b_n · n!`
    pub fn dimension(&self) -> usize {
        (bell(self.n) * factorial(self.n)) as usize
    }

    /// All set partitions of `{1..n}` in the order used for coordinates.
    pub fn set_partitions(&self) -> &[SetPartition] {
        &self.parts
    }

    pub fn zero(&self) -> EtElement<S> {
        EtElement { n: self.n, terms: BTreeMap::new() }
    }

    pub fn monomial(&self, key: EtKey, c: S) -> EtElement<S> {
        let mut x = self.zero();
        x.push(key, &c);
        x
    }

    pub fn scalar(&self, c: S) -> EtElement<S> {
        self.monomial(EtKey { a: SetPartition::singletons(self.n), w: Perm::identity(self.n) }, c)
    }

    pub fn one(&self) -> EtElement<S> {
        self.scalar(S::one())
    }

    fn check_index(&self, i: usize, max: usize) -> Result<(), AlgebraError> {
        if i == 0 || i > max {
            Err(AlgebraError::BadIndex(i, self.n))
        } else {
            Ok(())
        }
    }

    fn check(&self, x: &EtElement<S>) -> Result<(), AlgebraError> {
        if x.n != self.n {
            Err(AlgebraError::Mismatch(1, x.n, 1, self.n))
        } else {
            Ok(())
        }
    }

    pub fn e_partition(&self, a: &SetPartition) -> EtElement<S> {
        self.monomial(EtKey { a: *a, w: Perm::identity(self.n) }, S::one())
    }

    /// `E_{{i,j}}`, the tie between `i` and `j`.
    pub fn e(&self, i: usize, j: usize) -> Result<EtElement<S>, AlgebraError> {
        self.check_index(i, self.n)?;
        self.check_index(j, self.n)?;
        Ok(self.e_partition(&SetPartition::singletons(self.n).join_pair(i, j)))
    }

    pub fn e_i(&self, i: usize) -> Result<EtElement<S>, AlgebraError> {
        self.check_index(i, self.n - 1)?;
        self.e(i, i + 1)
    }

    pub fn g(&self, i: usize) -> Result<EtElement<S>, AlgebraError> {
        self.check_index(i, self.n - 1)?;
        Ok(self.g_w(Perm::simple(self.n, i)?))
    }

    pub fn g_w(&self, w: Perm) -> EtElement<S> {
        self.monomial(EtKey { a: SetPartition::singletons(self.n), w }, S::one())
    }

    /// `g_i⁻¹ = g_i - (q - q⁻¹) e_i`
    pub fn g_inv(&self, i: usize) -> Result<EtElement<S>, AlgebraError> {
        let e = self.e_i(i)?;
        Ok(self.sub(&self.g(i)?, &self.scale(&e, &self.params.q_minus_qinv())))
    }

    pub fn add(&self, a: &EtElement<S>, b: &EtElement<S>) -> EtElement<S> {
        let mut out = a.clone();
        for (k, c) in &b.terms {
            out.push(*k, c);
        }
        out
    }

    pub fn sub(&self, a: &EtElement<S>, b: &EtElement<S>) -> EtElement<S> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &EtElement<S>) -> EtElement<S> {
        EtElement { n: a.n, terms: a.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }

    pub fn scale(&self, a: &EtElement<S>, c: &S) -> EtElement<S> {
        let mut out = self.zero();
        for (k, x) in &a.terms {
            out.push(*k, &x.mul_ref(c));
        }
        out
    }

    /// `x · E_B`, using `g_w E_B = E_{B w⁻¹} g_w`.
    pub fn right_mul_e(&self, x: &EtElement<S>, b: &SetPartition) -> EtElement<S> {
        let mut out = self.zero();
        for (key, c) in &x.terms {
            let a = key.a.join(&b.act(&key.w.inverse()));
            out.push(EtKey { a, w: key.w }, c);
        }
        out
    }

    /// `E_B · x`
    pub fn left_mul_e(&self, b: &SetPartition, x: &EtElement<S>) -> EtElement<S> {
        let mut out = self.zero();
        for (key, c) in &x.terms {
            out.push(EtKey { a: key.a.join(b), w: key.w }, c);
        }
        out
    }

    /// `x · g_i`
    pub fn right_mul_g(&self, x: &EtElement<S>, i: usize) -> EtElement<S> {
        let qmq = self.params.q_minus_qinv();
        let mut out = self.zero();
        for (key, c) in &x.terms {
            out.push(EtKey { a: key.a, w: key.w.mul_simple(i) }, c);
            if key.w.has_right_descent(i) {
                let a = key.a.join_pair(key.w.preimage(i), key.w.preimage(i + 1));
                out.push(EtKey { a, w: key.w }, &c.mul_ref(&qmq));
            }
        }
        out
    }

    pub fn right_mul_gw(&self, x: &EtElement<S>, w: &Perm) -> EtElement<S> {
        w.reduced_word().into_iter().fold(x.clone(), |acc, i| self.right_mul_g(&acc, i))
    }

    pub fn mul(&self, a: &EtElement<S>, b: &EtElement<S>) -> EtElement<S> {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        let mut by_w: BTreeMap<Perm, Vec<(SetPartition, &S)>> = BTreeMap::new();
        for (k, c) in &b.terms {
            by_w.entry(k.w).or_default().push((k.a, c));
        }
        let mut out = self.zero();
        for (w, es) in by_w {
            let mut z = self.zero();
            for (e, c) in es {
                for (k, x) in self.right_mul_e(a, &e).terms {
                    z.push(k, &x.mul_ref(c));
                }
            }
            for (k, x) in self.right_mul_gw(&z, &w).terms {
                out.push(k, &x);
            }
        }
        out
    }

    pub fn checked_mul(&self, a: &EtElement<S>, b: &EtElement<S>) -> Result<EtElement<S>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn product(&self, xs: &[&EtElement<S>]) -> EtElement<S> {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &EtElement<S>, k: u32) -> EtElement<S> {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// The anti-involution fixing `g_i` and `e_i`:
    /// `(E_A g_w)^* = g_{w⁻¹} E_A = E_{Aw} g_{w⁻¹}`.
    pub fn star(&self, x: &EtElement<S>) -> EtElement<S> {
        let mut out = self.zero();
        for (key, c) in &x.terms {
            out.push(EtKey { a: key.a.act(&key.w), w: key.w.inverse() }, c);
        }
        out
    }

    /// `g_w · x`
    pub fn left_mul_gw(&self, w: &Perm, x: &EtElement<S>) -> EtElement<S> {
        self.star(&self.right_mul_gw(&self.star(x), &w.inverse()))
    }

    pub fn random_element<R: rand::Rng>(&self, rng: &mut R, terms: usize) -> EtElement<S> {
        let perms = Perm::all(self.n);
        let mut out = self.zero();
        for _ in 0..terms {
            let a = self.parts[rng.gen_range(0..self.parts.len())];
            let w = perms[rng.gen_range(0..perms.len())];
            let mut c = S::from_int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
            match rng.gen_range(0..3) {
                0 => c = c.mul_ref(&self.params.q),
                1 => c = c.mul_ref(&self.params.q_inv),
                _ => {}
            }
            out.push(EtKey { a, w }, &c);
        }
        out
    }

    pub fn part_index(&self, a: &SetPartition) -> usize {
        self.part_index[a]
    }

    /// Position of a basis element in `0..b_n·n!`.
    pub fn key_index(&self, key: &EtKey) -> usize {
        self.part_index[&key.a] * factorial(self.n) as usize + perm_rank(&key.w)
    }

    /// Coordinates in the basis `{E_A g_w}`.
    pub fn coords(&self, x: &EtElement<S>) -> SparseVec<S> {
        let mut v: SparseVec<S> = x.terms.iter().map(|(k, c)| (self.key_index(k), c.clone())).collect();
        v.sort_by_key(|p| p.0);
        v
    }

    /// `𝔼_A = Σ_{A ⊆ B} μ(A, B) E_B`
    pub fn bbe(&self, a: &SetPartition) -> EtElement<S> {
        let mut out = self.zero();
        for &j in &self.coarser[self.part_index[a]] {
            let b = self.parts[j];
            let mu = i64::try_from(mobius(a, &b)).expect("small Möbius value");
            out.push(EtKey { a: b, w: Perm::identity(self.n) }, &S::from_int(mu));
        }
        out
    }

    /// `𝔼_α = Σ_{|A| = α} 𝔼_A`
    pub fn bbe_alpha(&self, alpha: &Partition) -> EtElement<S> {
        self.parts
            .iter()
            .filter(|a| &a.type_partition() == alpha)
            .fold(self.zero(), |acc, a| self.add(&acc, &self.bbe(a)))
    }

    /// Coefficients on the basis `𝔼_C g_w`, grouped by `C`: the coefficient
    /// of `𝔼_C g_w` is `Σ_{B ⊆ C} c_{B,w}`.
    pub fn bbe_coords(&self, x: &EtElement<S>) -> HashMap<SetPartition, Vec<S>> {
        let nw = factorial(self.n) as usize;
        let mut out: HashMap<SetPartition, Vec<S>> = HashMap::new();
        for (key, c) in &x.terms {
            let col = perm_rank(&key.w);
            for &j in &self.coarser[self.part_index[&key.a]] {
                let row = out.entry(self.parts[j]).or_insert_with(|| vec![S::zero(); nw]);
                row[col] += c;
            }
        }
        out.retain(|_, v| v.iter().any(|x| !x.is_zero()));
        out
    }

    /// `x 𝔼_α` for every `α ⊢ n` with a nonzero component.
    pub fn decompose(&self, x: &EtElement<S>) -> Vec<(Partition, EtElement<S>)> {
        partitions(self.n)
            .into_iter()
            .map(|alpha| {
                let c = self.mul(x, &self.bbe_alpha(&alpha));
                (alpha, c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `Σ_{w ∈ 𝔖_comp} q^{ℓ(w)} g_w`
    pub fn x_comp(&self, comp: &[usize]) -> EtElement<S> {
        let mut out = self.zero();
        for w in crate::symgroup::young_subgroup(comp) {
            out.push(EtKey { a: SetPartition::singletons(self.n), w }, &self.params.q.pow(w.length() as u32));
        }
        out
    }

    /// The homomorphism into `𝒴_{r,n}` with `g_i ↦ g_i`, `e_i ↦ e_i`.
    pub fn phi(&self, x: &EtElement<S>, y: &Yokonuma<S>) -> Result<YElement<S>, AlgebraError> {
        if y.n() != self.n {
            return Err(AlgebraError::Mismatch(1, self.n, y.r(), y.n()));
        }
        let mut ea: HashMap<SetPartition, YElement<S>> = HashMap::new();
        let mut out = y.zero();
        for (key, c) in &x.terms {
            let e = ea.entry(key.a).or_insert_with(|| y.e_partition(&key.a));
            out = y.add(&out, &y.scale(&y.right_mul_gw(e, &key.w), c));
        }
        Ok(out)
    }
}

impl fmt::Display for EtElement<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::format_et(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    #[test]
    fn quadratic_and_idempotent() {
        let et = BraidsTies::new(2).unwrap();
        let (g, e) = (et.g(1).unwrap(), et.e_i(1).unwrap());
        assert_eq!(et.mul(&e, &e), e);
        let rhs = et.add(&et.one(), &et.scale(&et.mul(&e, &g), &et.params().q_minus_qinv()));
        assert_eq!(et.mul(&g, &g), rhs);
        assert_eq!(et.mul(&g, &et.g_inv(1).unwrap()), et.one());
    }

    #[test]
    fn tie_relation_e4() {
        let et = BraidsTies::new(3).unwrap();
        let (g1, g2) = (et.g(1).unwrap(), et.g(2).unwrap());
        let lhs = et.product(&[&et.e_i(1).unwrap(), &g2, &g1]);
        let rhs = et.product(&[&g2, &g1, &et.e_i(2).unwrap()]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mobius_idempotent_example() {
        let et = BraidsTies::new(3).unwrap();
        let x = et.bbe(&SetPartition::singletons(3));
        let mut want = et.e_partition(&SetPartition::singletons(3));
        for b in ["{1,2|3}", "{1|2,3}", "{1,3|2}"] {
            want = et.sub(&want, &et.e_partition(&sp(b)));
        }
        want = et.add(&want, &et.scale(&et.e_partition(&SetPartition::full(3)), &Scalar::from_int(2)));
        assert_eq!(x, want);
        assert_eq!(et.bbe(&SetPartition::full(3)), et.e_partition(&SetPartition::full(3)));
    }

    #[test]
    fn star_reverses_products() {
        let et = BraidsTies::new(3).unwrap();
        let a = et.mul(&et.e_i(1).unwrap(), &et.g(2).unwrap());
        let b = et.mul(&et.g(1).unwrap(), &et.e(1, 3).unwrap());
        let ab = et.mul(&a, &b);
        assert_eq!(et.star(&ab), et.mul(&et.star(&b), &et.star(&a)));
        let w = Perm::from_images(&[3, 1, 2]).unwrap();
        assert_eq!(et.left_mul_gw(&w, &b), et.mul(&et.g_w(w), &b));
    }

    #[test]
    fn bbe_coordinates_invert_mobius() {
        let et = BraidsTies::new(3).unwrap();
        let a = sp("{1,3|2}");
        let c = et.bbe_coords(&et.bbe(&a));
        assert_eq!(c.len(), 1);
        assert!(c[&a][0].is_one());
    }

    #[test]
    fn phi_of_generators() {
        let et = BraidsTies::new(3).unwrap();
        let y = Yokonuma::new(2, 3).unwrap();
        assert_eq!(et.phi(&et.one(), &y).unwrap(), y.one());
        assert_eq!(et.phi(&et.e_i(1).unwrap(), &y).unwrap(), y.e_i(1).unwrap());
        let full = et.e_partition(&SetPartition::full(3));
        let want = y.mul(&y.e(1, 2).unwrap(), &y.e(2, 3).unwrap());
        assert_eq!(et.phi(&full, &y).unwrap(), want);
    }
}
