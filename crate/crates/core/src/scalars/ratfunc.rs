use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{poly, Field, Laurent, Ring};

/// Element of the fraction field of `C[q, q⁻¹]`.
///
/// Normal form: the denominator is a monic polynomial with nonzero constant
/// term, coprime to the numerator. Powers of `q` live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<C> {
    num: Laurent<C>,
    den: Laurent<C>,
}

impl<C: Field> RatFunc<C> {
    pub fn from_laurent(num: Laurent<C>) -> Self {
        RatFunc { num, den: Laurent::one() }
    }

    /// `num / den`; panics on a zero denominator.
    pub fn new(num: Laurent<C>, den: Laurent<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = RatFunc { num, den };
        out.normalize();
        out
    }

    pub fn numer(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn denom(&self) -> &Laurent<C> {
        &self.den
    }

    pub fn to_laurent(&self) -> Option<Laurent<C>> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Laurent::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let (dlo, _) = self.den.exponent_range().expect("nonzero denominator");
        if dlo != 0 {
            self.num = self.num.shift(-dlo);
            self.den = self.den.shift(-dlo);
        }
        if self.den.is_monomial() {
            let inv = self.den.unit_inverse().expect("monomial is a unit");
            self.num = self.num.mul_ref(&inv);
            self.den = Laurent::one();
            return;
        }
        let (nlo, nc) = self.num.dense();
        let (_, dc) = self.den.dense();
        let g = poly::gcd(nc, dc);
        let (nc, dc) = if g.len() > 1 {
            let (a, _) = poly::divrem(nc, &g);
            let (b, _) = poly::divrem(dc, &g);
            (a, b)
        } else {
            (nc.to_vec(), dc.to_vec())
        };
        let lead_inv = dc.last().expect("nonzero").inv().expect("field");
        self.num = Laurent::from_dense(nlo, poly::scale(&nc, &lead_inv));
        self.den = Laurent::from_dense(0, poly::scale(&dc, &lead_inv));
    }
}

impl<C: Field> Zero for RatFunc<C> {
    fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Field> One for RatFunc<C> {
    fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

impl<'a, C: Field> AddAssign<&'a RatFunc<C>> for RatFunc<C> {
    fn add_assign(&mut self, rhs: &'a Self) {
        if rhs.num.is_zero() {
            return;
        }
        if self.den == rhs.den {
            self.num += &rhs.num;
            if !self.den.is_one() {
                self.normalize();
            }
            return;
        }
        let num = self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den));
        let den = self.den.mul_ref(&rhs.den);
        *self = RatFunc::new(num, den);
    }
}

impl<'a, C: Field> SubAssign<&'a RatFunc<C>> for RatFunc<C> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        let neg = -rhs.clone();
        *self += &neg;
    }
}

impl<C: Field> Add for RatFunc<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Field> Sub for RatFunc<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<C: Field> Mul for RatFunc<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<C: Field> Neg for RatFunc<C> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<C: Field> Ring for RatFunc<C> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        let num = self.num.mul_ref(&rhs.num);
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(num);
        }
        RatFunc::new(num, self.den.mul_ref(&rhs.den))
    }

    fn from_int(v: i64) -> Self {
        Self::from_laurent(Laurent::from_int(v))
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    fn weight(&self) -> usize {
        self.num.weight() + if self.den.is_one() { 0 } else { 8 * self.den.weight() }
    }
}

impl<C: Field> Field for RatFunc<C> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CycloQ, RatFn, Scalar};

    fn lin(a: i64) -> Scalar {
        Scalar::q() + Scalar::from_int(a)
    }

    #[test]
    fn cancels_common_factors() {
        let f = RatFn::new(lin(1).mul_ref(&lin(2)), lin(1).mul_ref(&lin(3)));
        assert_eq!(f, RatFn::new(lin(2), lin(3)));
        assert_eq!(f.denom(), &lin(3));
    }

    #[test]
    fn monomial_denominators_disappear() {
        let f = RatFn::new(Scalar::one(), Scalar::monomial(CycloQ::from_int(2), 3));
        assert!(f.to_laurent().is_some());
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = RatFn::new(lin(1), lin(-2));
        let b = RatFn::new(lin(5), Scalar::q() - Scalar::q_inv());
        let s = a.add_ref(&b).sub_ref(&b);
        assert_eq!(s, a);
        let p = a.mul_ref(&b).mul_ref(&b.inv().unwrap());
        assert_eq!(p, a);
    }
}
