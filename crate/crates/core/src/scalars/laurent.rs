use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Field, Ring};

/// Laurent polynomial in `q`: `Σ c_k q^{lo+k}`.
///
/// Stored densely between the lowest and highest nonzero exponents, so the
/// representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<C> {
    lo: i64,
    c: Vec<C>,
}

impl<C: Ring> Laurent<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { lo: e, c: vec![c] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn q_inv() -> Self {
        Self::monomial(C::one(), -1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out += &Self::monomial(c, e);
        }
        out
    }

    fn normalize(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i64;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (self.lo + i as i64, x))
    }

    pub fn coeff(&self, e: i64) -> C {
        let i = e - self.lo;
        if i < 0 || i as usize >= self.c.len() {
            C::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    /// Lowest and highest exponents, `None` for zero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        if self.c.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.c.len() as i64 - 1))
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.exponent_range() {
            None => Some(C::zero()),
            Some((0, 0)) => Some(self.c[0].clone()),
            _ => None,
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        Laurent { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Laurent { lo: self.lo, c: self.c.iter().map(|x| x.mul_ref(s)).collect() };
        out.normalize();
        out
    }

    /// Dense coefficients starting at the lowest exponent.
    pub(crate) fn dense(&self) -> (i64, &[C]) {
        (self.lo, &self.c)
    }

    pub(crate) fn from_dense(lo: i64, c: Vec<C>) -> Self {
        let mut out = Laurent { lo, c };
        out.normalize();
        out
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_dense(self.lo, self.c.iter().map(f).collect())
    }
}

impl<C: Field> Laurent<C> {
    /// Substitute a nonzero value for `q`.
    pub fn eval(&self, x: &C) -> C {
        if self.c.is_empty() {
            return C::zero();
        }
        let mut acc = C::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        let p = if self.lo >= 0 {
            x.pow(self.lo as u32)
        } else {
            x.inv().expect("nonzero evaluation point").pow((-self.lo) as u32)
        };
        acc.mul_ref(&p)
    }
}

impl<C: Ring> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent { lo: 0, c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<C: Ring> One for Laurent<C> {
    fn one() -> Self {
        Laurent { lo: 0, c: vec![C::one()] }
    }
}

impl<'a, C: Ring> AddAssign<&'a Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &'a Self) {
        self.combine(rhs, |x, y| *x += y);
    }
}

impl<'a, C: Ring> SubAssign<&'a Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        self.combine(rhs, |x, y| *x -= y);
    }
}

impl<C: Ring> Laurent<C> {
    fn combine(&mut self, rhs: &Self, op: impl Fn(&mut C, &C)) {
        if rhs.c.is_empty() {
            return;
        }
        if self.c.is_empty() {
            self.lo = rhs.lo;
            self.c = vec![C::zero(); rhs.c.len()];
        }
        if rhs.lo < self.lo {
            let pad = (self.lo - rhs.lo) as usize;
            let mut v = vec![C::zero(); pad];
            v.append(&mut self.c);
            self.c = v;
            self.lo = rhs.lo;
        }
        let off = (rhs.lo - self.lo) as usize;
        if self.c.len() < off + rhs.c.len() {
            self.c.resize(off + rhs.c.len(), C::zero());
        }
        for (i, y) in rhs.c.iter().enumerate() {
            op(&mut self.c[off + i], y);
        }
        self.normalize();
    }
}

impl<C: Ring> Add for Laurent<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Ring> Sub for Laurent<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<C: Ring> Mul for Laurent<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<C: Ring> Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { lo: self.lo, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.c.is_empty() || rhs.c.is_empty() {
            return Self::zero();
        }
        if rhs.c.len() == 1 {
            return self.scale(&rhs.c[0]).shift(rhs.lo);
        }
        if self.c.len() == 1 {
            return rhs.scale(&self.c[0]).shift(self.lo);
        }
        let mut out = vec![C::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                out[i + j].add_mul(x, y);
            }
        }
        Laurent::from_dense(self.lo + rhs.lo, out)
    }

    fn from_int(v: i64) -> Self {
        Self::constant(C::from_int(v))
    }

    /// Units are the monomials with unit coefficient.
    fn unit_inverse(&self) -> Option<Self> {
        if self.c.len() != 1 {
            return None;
        }
        Some(Self::monomial(self.c[0].unit_inverse()?, -self.lo))
    }

    fn weight(&self) -> usize {
        self.c.iter().map(|x| x.weight()).sum::<usize>() + 4 * self.c.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, CycloQ, Scalar, Q};

    #[test]
    fn add_cancels_to_canonical_zero() {
        let a = Scalar::q() + Scalar::q_inv();
        let b = a.clone() - a;
        assert_eq!(b, Scalar::zero());
        assert_eq!(b.exponent_range(), None);
    }

    #[test]
    fn product_exponents() {
        let a = Scalar::q() - Scalar::q_inv();
        let sq = a.mul_ref(&a);
        let expect = Scalar::from_terms([(2, CycloQ::one()), (0, CycloQ::from_int(-2)), (-2, CycloQ::one())]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn monomials_are_units() {
        let m = Scalar::monomial(CycloQ::zeta_pow(3, 1), -4);
        let inv = m.unit_inverse().unwrap();
        assert_eq!(m.mul_ref(&inv), Scalar::one());
        assert!((Scalar::q() + Scalar::one()).unit_inverse().is_none());
    }

    #[test]
    fn evaluation() {
        let a = Scalar::q() - Scalar::q_inv();
        let v = a.eval(&CycloQ::from_int(2));
        assert_eq!(v, CycloQ::from_rational(rational(3, 2)));
        let b: Laurent<Q> = Laurent::from_terms([(-2, Q::from_int(1)), (3, Q::from_int(1))]);
        assert_eq!(b.eval(&Q::from_int(2)), rational(1, 4) + Q::from_int(8));
    }
}
