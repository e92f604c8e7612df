//! Dense univariate polynomials as coefficient vectors, lowest degree first.

use super::{Field, Ring};

pub fn trim<F: Ring>(p: &mut Vec<F>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn mul<F: Ring>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    trim(&mut out);
    out
}

pub fn sub<F: Ring>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out: Vec<F> = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), F::zero());
    }
    for (o, y) in out.iter_mut().zip(b) {
        *o -= y;
    }
    trim(&mut out);
    out
}

pub fn scale<F: Ring>(a: &[F], c: &F) -> Vec<F> {
    let mut out: Vec<F> = a.iter().map(|x| x.mul_ref(c)).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut rem: Vec<F> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![F::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem[rem.len() - 1].mul_ref(&lead_inv);
        for (j, y) in b.iter().enumerate() {
            let t = c.mul_ref(y);
            rem[k + j] -= &t;
        }
        quo[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quo);
    (quo, rem)
}

pub fn monic<F: Field>(a: &[F]) -> Vec<F> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(a, &l.inv().expect("nonzero")),
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = monic(&r);
    }
    monic(&x)
}

/// Returns `(g, s)` with `s*a ≡ g (mod m)` and `g = gcd(a, m)` monic.
pub fn ext_gcd_left<F: Field>(a: &[F], m: &[F]) -> (Vec<F>, Vec<F>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<F> = Vec::new();
    let mut s1: Vec<F> = vec![F::one()];
    while !r1.is_empty() {
        let (quo, rem) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&quo, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let l = r0.last().expect("gcd of nonzero input").inv().expect("nonzero");
    (scale(&r0, &l), scale(&s0, &l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, Q};

    fn p(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| rational(x, 1)).collect()
    }

    #[test]
    fn divrem_reassembles() {
        let a = p(&[3, 0, -2, 5, 1]);
        let b = p(&[1, 2, 3]);
        let (qu, r) = divrem(&a, &b);
        let mut back = mul(&qu, &b);
        back.resize(a.len().max(back.len()), Q::from_int(0));
        for (i, c) in r.iter().enumerate() {
            back[i] += c;
        }
        trim(&mut back);
        assert_eq!(back, a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, 1]);
        let g = p(&[-2, 0, 1]);
        let h = p(&[5, 1]);
        let a = mul(&f, &g);
        let b = mul(&f, &h);
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn ext_gcd_inverse() {
        let m = p(&[1, 1, 1]);
        let a = p(&[2, 3]);
        let (g, s) = ext_gcd_left(&a, &m);
        assert_eq!(g, p(&[1]));
        let (_, r) = divrem(&mul(&s, &a), &m);
        assert_eq!(r, p(&[1]));
    }
}
