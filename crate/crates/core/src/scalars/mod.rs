//! Exact coefficient rings.
//!
//! Everything is built from arbitrary precision rationals: the cyclotomic
//! field `Cyclo<Q>` = ℚ(ζ_r), Laurent polynomials in `q` over it, and the
//! fraction field of the latter for linear solves.

use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

mod cyclo;
mod laurent;
pub(crate) mod poly;
mod ratfunc;
mod text;

pub use cyclo::{cyclotomic_polynomial, euler_phi, Cyclo};
pub use laurent::Laurent;
pub use ratfunc::RatFunc;
pub use text::{format_linear, format_rational, parse_rational, parse_scalar};

/// Arbitrary precision rationals.
pub type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cyclotomic orders differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order must be in 1..=15, got {0}")]
    BadOrder(u32),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("value is not a Laurent polynomial: {0}")]
    NotPolynomial(String),
}

/// Commutative ring with by-reference arithmetic.
///
/// `Zero` and `One` come from `num-traits`, so any ring here can be used with
/// the usual generic numeric code.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn from_int(v: i64) -> Self;

    /// Inverse of `self` if it is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// Rough storage size, used to pick cheap pivots.
    fn weight(&self) -> usize {
        1
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out += rhs;
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out -= rhs;
        out
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        *self += &p;
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
}

impl Ring for Q {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_int(v: i64) -> Self {
        Q::from_integer(v.into())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for Q {}

/// The ring all algebras are defined over: ℚ(ζ_r)[q, q⁻¹].
pub type CycloQ = Cyclo<Q>;
pub type Scalar = Laurent<CycloQ>;
pub type RatFn = RatFunc<CycloQ>;

/// Rings that carry the Hecke parameter `q`, the roots of unity and `1/r`.
///
/// `Scalar` is the generic choice; `CycloQ` with a fixed rational `q` is a
/// specialization used for fast rank certificates.
pub trait HeckeRing: Ring {
    /// Field of fractions used when solving linear systems.
    type Frac: Field;

    fn to_frac(&self) -> Self::Frac;

    /// Back from the fraction field, when the value lies in the ring.
    fn from_frac(f: &Self::Frac) -> Option<Self>;
}

impl HeckeRing for Scalar {
    type Frac = RatFn;

    fn to_frac(&self) -> RatFn {
        RatFunc::from_laurent(self.clone())
    }

    fn from_frac(f: &RatFn) -> Option<Self> {
        f.to_laurent()
    }
}

impl HeckeRing for CycloQ {
    type Frac = CycloQ;

    fn to_frac(&self) -> CycloQ {
        self.clone()
    }

    fn from_frac(f: &CycloQ) -> Option<Self> {
        Some(f.clone())
    }
}

/// The constants an algebra needs from its coefficient ring.
#[derive(Clone, Debug)]
pub struct HeckeParams<S> {
    pub r: u32,
    pub q: S,
    pub q_inv: S,
    /// `ξ^k` for `k` in `0..r`.
    pub xi: Vec<S>,
    pub inv_r: S,
}

impl<S: Ring> HeckeParams<S> {
    pub fn xi_pow(&self, k: i64) -> &S {
        &self.xi[k.rem_euclid(self.r as i64) as usize]
    }

    /// `q - q⁻¹`
    pub fn q_minus_qinv(&self) -> S {
        self.q.sub_ref(&self.q_inv)
    }
}

impl HeckeParams<Scalar> {
    /// Generic parameters: `q` an indeterminate.
    pub fn generic(r: u32) -> Result<Self, ScalarError> {
        check_order(r)?;
        let xi = (0..r)
            .map(|k| Scalar::constant(Cyclo::zeta_pow(r, k as i64)))
            .collect();
        Ok(HeckeParams {
            r,
            q: Scalar::q(),
            q_inv: Scalar::q_inv(),
            xi,
            inv_r: Scalar::constant(Cyclo::from_rational(Q::new(1.into(), (r as i64).into()))),
        })
    }
}

impl HeckeParams<CycloQ> {
    /// Parameters with `q` specialized to a nonzero rational.
    pub fn specialized(r: u32, q: Q) -> Result<Self, ScalarError> {
        check_order(r)?;
        if q.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let xi = (0..r).map(|k| Cyclo::zeta_pow(r, k as i64)).collect();
        Ok(HeckeParams {
            r,
            q_inv: Cyclo::from_rational(q.recip()),
            q: Cyclo::from_rational(q),
            xi,
            inv_r: Cyclo::from_rational(Q::new(1.into(), (r as i64).into())),
        })
    }
}

pub(crate) fn check_order(r: u32) -> Result<(), ScalarError> {
    if (1..=15).contains(&r) {
        Ok(())
    } else {
        Err(ScalarError::BadOrder(r))
    }
}

/// Quantum integer `[m]_q = (q^{2m} - 1)/(q^2 - 1)`.
pub fn quantum_integer(m: i64) -> Scalar {
    let mut out = Scalar::zero();
    if m >= 0 {
        for j in 0..m {
            out += &Scalar::monomial(CycloQ::one(), 2 * j);
        }
    } else {
        for j in m..0 {
            out -= &Scalar::monomial(CycloQ::one(), 2 * j);
        }
    }
    out
}

/// Inverse of `a` in the fraction field.
pub fn scalar_invert(a: &Scalar) -> Result<RatFn, ScalarError> {
    RatFunc::from_laurent(a.clone())
        .inv()
        .ok_or(ScalarError::DivisionByZero)
}

pub fn rational(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
