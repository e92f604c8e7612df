use std::collections::HashMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{poly, Field, Ring, ScalarError};

/// Euler's totient.
pub fn euler_phi(r: u32) -> u32 {
    let mut n = r;
    let mut out = r;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Integer coefficients of Φ_r, lowest degree first.
pub fn cyclotomic_polynomial(r: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&r) {
        return p.clone();
    }
    // z^r - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in 1..r {
        if r.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = int_exact_div(&num, &div);
        }
    }
    let out = Arc::new(num);
    cache.lock().unwrap().insert(r, out.clone());
    out
}

fn int_exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quo = vec![0i64; a.len() - db];
    for k in (0..quo.len()).rev() {
        let c = rem[k + db];
        quo[k] = c;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= c * y;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quo
}

/// An element of ℚ(ζ_r) = F[z]/Φ_r(z).
///
/// Coefficients are reduced modulo Φ_r, so the vector has fewer than φ(r)
/// entries after trimming. Rational values are stored with `r = 1`, which
/// keeps equality structural and lets them mix with any order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo<F> {
    r: u32,
    c: Vec<F>,
}

impl<F: Field> Cyclo<F> {
    /// Reduce an arbitrary coefficient vector in `z`.
    pub fn new(r: u32, coeffs: Vec<F>) -> Self {
        assert!(r >= 1, "cyclotomic order must be positive");
        let mut out = Cyclo { r, c: coeffs };
        out.reduce();
        out
    }

    pub fn from_rational(x: F) -> Self {
        let c = if x.is_zero() { Vec::new() } else { vec![x] };
        Cyclo { r: 1, c }
    }

    /// `ζ_r^k`, any integer `k`.
    pub fn zeta_pow(r: u32, k: i64) -> Self {
        let k = k.rem_euclid(r as i64) as usize;
        let mut c = vec![F::zero(); k + 1];
        c[k] = F::one();
        Self::new(r, c)
    }

    /// Order of the root of unity; 1 for rational values.
    pub fn order(&self) -> u32 {
        self.r
    }

    /// Coefficients of `1, z, z², …` modulo Φ_r.
    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn as_rational(&self) -> Option<F> {
        match self.c.len() {
            0 => Some(F::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn reduce(&mut self) {
        let r = self.r as usize;
        if self.c.len() > r {
            for i in r..self.c.len() {
                let v = std::mem::replace(&mut self.c[i], F::zero());
                self.c[i % r] += &v;
            }
            self.c.truncate(r);
        }
        let phi = euler_phi(self.r) as usize;
        if self.c.len() > phi {
            let cp = cyclotomic_polynomial(self.r);
            for d in (phi..self.c.len()).rev() {
                let lead = std::mem::replace(&mut self.c[d], F::zero());
                if lead.is_zero() {
                    continue;
                }
                for (j, &pj) in cp.iter().take(phi).enumerate() {
                    match pj {
                        0 => {}
                        1 => self.c[d - phi + j] -= &lead,
                        -1 => self.c[d - phi + j] += &lead,
                        _ => {
                            let t = lead.mul_ref(&F::from_int(pj));
                            self.c[d - phi + j] -= &t;
                        }
                    }
                }
            }
            self.c.truncate(phi);
        }
        poly::trim(&mut self.c);
        if self.c.len() <= 1 {
            self.r = 1;
        }
    }

    fn join_order(a: u32, b: u32) -> Result<u32, ScalarError> {
        match (a, b) {
            (1, x) | (x, 1) => Ok(x),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(ScalarError::ModulusMismatch(x, y)),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let r = Self::join_order(self.r, rhs.r)?;
        let mut c = self.c.clone();
        if c.len() < rhs.c.len() {
            c.resize(rhs.c.len(), F::zero());
        }
        for (x, y) in c.iter_mut().zip(&rhs.c) {
            *x += y;
        }
        poly::trim(&mut c);
        let r = if c.len() <= 1 { 1 } else { r };
        Ok(Cyclo { r, c })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let r = Self::join_order(self.r, rhs.r)?;
        if self.c.is_empty() || rhs.c.is_empty() {
            return Ok(Self::zero());
        }
        if self.c.len() == 1 || rhs.c.len() == 1 {
            let (s, v) = if self.c.len() == 1 { (&self.c[0], &rhs.c) } else { (&rhs.c[0], &self.c) };
            let c = v.iter().map(|x| x.mul_ref(s)).collect();
            return Ok(Cyclo { r: if v.len() <= 1 { 1 } else { r }, c });
        }
        Ok(Self::new(r, poly::mul(&self.c, &rhs.c)))
    }

    /// Multiplicative inverse, via extended gcd against Φ_r.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.c.is_empty() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.c.len() == 1 {
            return Ok(Self::from_rational(self.c[0].inv().ok_or(ScalarError::DivisionByZero)?));
        }
        let m: Vec<F> = cyclotomic_polynomial(self.r).iter().map(|&x| F::from_int(x)).collect();
        let (g, s) = poly::ext_gcd_left(&self.c, &m);
        debug_assert_eq!(g.len(), 1, "Φ_r is irreducible");
        Ok(Self::new(self.r, s))
    }
}

impl<F: Field> Zero for Cyclo<F> {
    fn zero() -> Self {
        Cyclo { r: 1, c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<F: Field> One for Cyclo<F> {
    fn one() -> Self {
        Cyclo { r: 1, c: vec![F::one()] }
    }
}

impl<F: Field> Add for Cyclo<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Sub for Cyclo<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&-rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Mul for Cyclo<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Neg for Cyclo<F> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for x in self.c.iter_mut() {
            *x = -std::mem::replace(x, F::zero());
        }
        self
    }
}

impl<'a, F: Field> AddAssign<&'a Cyclo<F>> for Cyclo<F> {
    fn add_assign(&mut self, rhs: &'a Self) {
        if rhs.c.is_empty() {
            return;
        }
        let r = Self::join_order(self.r, rhs.r).unwrap_or_else(|e| panic!("{e}"));
        if self.c.len() < rhs.c.len() {
            self.c.resize(rhs.c.len(), F::zero());
        }
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            *x += y;
        }
        poly::trim(&mut self.c);
        self.r = if self.c.len() <= 1 { 1 } else { r };
    }
}

impl<'a, F: Field> SubAssign<&'a Cyclo<F>> for Cyclo<F> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        if rhs.c.is_empty() {
            return;
        }
        let r = Self::join_order(self.r, rhs.r).unwrap_or_else(|e| panic!("{e}"));
        if self.c.len() < rhs.c.len() {
            self.c.resize(rhs.c.len(), F::zero());
        }
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            *x -= y;
        }
        poly::trim(&mut self.c);
        self.r = if self.c.len() <= 1 { 1 } else { r };
    }
}

impl<F: Field> Ring for Cyclo<F> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn from_int(v: i64) -> Self {
        Self::from_rational(F::from_int(v))
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn weight(&self) -> usize {
        self.c.iter().map(|x| x.weight()).sum::<usize>() + self.c.len()
    }
}

impl<F: Field> Field for Cyclo<F> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, CycloQ, Q};

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_values() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u32 + 1), e);
        }
    }

    #[test]
    fn one_plus_z_plus_z2_vanishes() {
        let s = CycloQ::one() + CycloQ::zeta_pow(3, 1) + CycloQ::zeta_pow(3, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_satisfies_its_polynomials() {
        for r in 1..=6u32 {
            let z = CycloQ::zeta_pow(r, 1);
            assert_eq!(z.pow(r), CycloQ::one(), "z^r = 1 for r = {r}");
            let mut phi = CycloQ::zero();
            for (k, &c) in cyclotomic_polynomial(r).iter().enumerate() {
                phi += &z.pow(k as u32).mul_ref(&CycloQ::from_int(c));
            }
            assert!(phi.is_zero(), "Φ_r(ζ) = 0 for r = {r}");
        }
    }

    #[test]
    fn differences_of_roots_are_invertible() {
        for r in 2..=6u32 {
            for i in 0..r as i64 {
                for j in 0..r as i64 {
                    if i == j {
                        continue;
                    }
                    let d = CycloQ::zeta_pow(r, i) - CycloQ::zeta_pow(r, j);
                    let inv = d.inverse().unwrap();
                    assert_eq!(d.mul_ref(&inv), CycloQ::one());
                }
            }
        }
    }

    #[test]
    fn order_two_difference() {
        let d = CycloQ::zeta_pow(2, 0) - CycloQ::zeta_pow(2, 1);
        assert_eq!(d, CycloQ::from_int(2));
        assert_eq!(d.inverse().unwrap(), CycloQ::from_rational(rational(1, 2)));
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = CycloQ::zeta_pow(3, 1);
        let b = CycloQ::zeta_pow(4, 1);
        assert_eq!(a.checked_add(&b), Err(ScalarError::ModulusMismatch(3, 4)));
        assert!(a.checked_mul(&CycloQ::from_rational(Q::from_int(2))).is_ok());
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(CycloQ::zero().inverse(), Err(ScalarError::DivisionByZero));
    }
}
