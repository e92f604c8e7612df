//! Element grammar and JSON form for `𝒴_{r,n}`.
//!
//! ```text
//! t1^2*g[2,1,3] + (q - q^-1)*g1*g2 - 1/2*z*e1 + E{1,3|2}
//! ```
//! `t<i>^k`, `g<i>` (negative powers allowed), `g[w]` in one-line notation,
//! `e<i>`, `E{A}`, and the scalars `q`, `z`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, TVec, TermJson, YElement, YKey, Yokonuma};
use crate::combinatorics::SetPartition;
use crate::expr::{self, Atom, ExprTarget};
use crate::scalars::{format_linear, parse_scalar, Cyclo, CycloQ, Scalar, ScalarError, Q};
use crate::symgroup::Perm;

pub(crate) fn g_text(w: &Perm) -> String {
    match w.reduced_word().as_slice() {
        [] => String::new(),
        [i] => format!("g{i}"),
        _ => format!("g{}", w.one_line()),
    }
}

fn key_text(key: &YKey, n: usize) -> String {
    let mut parts = Vec::new();
    for i in 1..=n {
        match key.t.get(i) {
            0 => {}
            1 => parts.push(format!("t{i}")),
            k => parts.push(format!("t{i}^{k}")),
        }
    }
    let g = g_text(&key.w);
    if !g.is_empty() {
        parts.push(g);
    }
    parts.join("*")
}

pub(crate) fn format_y(x: &YElement<Scalar>) -> String {
    format_linear(x.terms.iter().map(|(k, c)| (c, key_text(k, x.n))))
}

struct Grammar<'a> {
    y: &'a Yokonuma<Scalar>,
}

impl Grammar<'_> {
    fn power(&self, x: &YElement<Scalar>, e: i64, inv: Option<YElement<Scalar>>) -> Result<YElement<Scalar>, String> {
        match (e, inv) {
            (e, _) if e >= 0 => Ok(self.y.pow(x, e as u32)),
            (e, Some(xi)) => Ok(self.y.pow(&xi, (-e) as u32)),
            _ => Err("negative power of a non-invertible generator".into()),
        }
    }
}

impl ExprTarget for Grammar<'_> {
    type Out = YElement<Scalar>;

    fn rational(&self, v: Q) -> Self::Out {
        self.y.scalar(Scalar::constant(Cyclo::from_rational(v)))
    }

    fn atom(&self, a: &Atom<'_>) -> Result<Self::Out, String> {
        let y = self.y;
        let n = y.n();
        let e = |err: AlgebraError| err.to_string();
        match (a.name, a.index, a.payload) {
            ("q", None, None) => Ok(y.scalar(Scalar::monomial(CycloQ::one(), a.exp))),
            ("z", None, None) => Ok(y.scalar(Scalar::constant(Cyclo::zeta_pow(y.r() as u32, a.exp)))),
            ("t", Some(i), None) => y.t(i, a.exp).map_err(e),
            ("g", Some(i), None) => {
                let g = y.g(i).map_err(e)?;
                let gi = y.g_inv(i).map_err(e)?;
                self.power(&g, a.exp, Some(gi))
            }
            ("g", None, Some(p)) => {
                let w = Perm::parse(p).map_err(|x| x.to_string())?;
                if w.degree() != n {
                    return Err(format!("permutation {} is not in S_{n}", w.one_line()));
                }
                let inv = w
                    .reduced_word()
                    .iter()
                    .rev()
                    .try_fold(y.one(), |acc, &i| y.g_inv(i).map(|gi| y.mul(&acc, &gi)))
                    .map_err(e)?;
                self.power(&y.g_w(w), a.exp, Some(inv))
            }
            ("e", Some(i), None) => {
                let x = y.e_i(i).map_err(e)?;
                self.power(&x, a.exp.min(1), None)
            }
            ("E", None, Some(p)) => {
                let sp = SetPartition::parse_blocks(p, Some(n)).map_err(|x| x.to_string())?;
                self.power(&y.e_partition(&sp), a.exp.min(1), None)
            }
            _ => Err(format!("unknown symbol '{}'", a.name)),
        }
    }

    fn add(&self, a: &Self::Out, b: &Self::Out) -> Self::Out {
        self.y.add(a, b)
    }

    fn mul(&self, a: &Self::Out, b: &Self::Out) -> Self::Out {
        self.y.mul(a, b)
    }

    fn neg(&self, a: &Self::Out) -> Self::Out {
        self.y.neg(a)
    }
}

/// JSON form of an element.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct YJson {
    pub r: usize,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl Yokonuma<Scalar> {
    pub fn parse(&self, s: &str) -> Result<YElement<Scalar>, ScalarError> {
        expr::parse(s, &Grammar { y: self })
    }

    pub fn to_json(&self, x: &YElement<Scalar>) -> YJson {
        YJson {
            r: self.r(),
            n: self.n(),
            terms: x
                .terms
                .iter()
                .map(|(k, c)| TermJson { coeff: c.to_string(), t: Some(k.t.to_vec(self.n())), a: None, w: k.w.images() })
                .collect(),
        }
    }

    pub fn from_json(&self, j: &YJson) -> Result<YElement<Scalar>, AlgebraError> {
        if j.r != self.r() || j.n != self.n() {
            return Err(AlgebraError::Mismatch(j.r, j.n, self.r(), self.n()));
        }
        let mut out = self.zero();
        for term in &j.terms {
            let c = parse_scalar(&term.coeff, self.r() as u32)?;
            let t = term.t.clone().unwrap_or_else(|| vec![0; self.n()]);
            if t.len() != self.n() || t.iter().any(|&k| k >= self.r()) {
                return Err(AlgebraError::Unsupported(format!("bad exponent vector {t:?}")));
            }
            let w = Perm::from_images(&term.w)?;
            if w.degree() != self.n() {
                return Err(AlgebraError::Unsupported(format!("permutation {:?} is not in S_{}", term.w, self.n())));
            }
            out.push(YKey { w, t: TVec::from_slice(&t, self.r()) }, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_quadratic_relation() {
        let y = Yokonuma::new(1, 2).unwrap();
        let g = y.g(1).unwrap();
        assert_eq!(y.mul(&g, &g).to_string(), "1 + (q - q^-1)*g1");
        let y2 = Yokonuma::new(2, 2).unwrap();
        let g = y2.g(1).unwrap();
        assert_eq!(
            y2.mul(&g, &g).to_string(),
            "1 + (1/2*q - 1/2*q^-1)*g1 + (1/2*q - 1/2*q^-1)*t1*t2*g1"
        );
    }

    #[test]
    fn parse_round_trip() {
        let y = Yokonuma::new(3, 3).unwrap();
        for s in ["t1^2*g[2,1,3] + (q - q^-1)*g1*g2", "g1^-1*t3 - 1/2*z*e1", "E{1,3|2}*g2 + q^2", "0", "g[3,2,1]^2"] {
            let x = y.parse(s).unwrap();
            let back = y.parse(&x.to_string()).unwrap();
            assert_eq!(x, back, "{s} printed as {x}");
            let j = y.to_json(&x);
            assert_eq!(y.from_json(&j).unwrap(), x);
        }
    }

    #[test]
    fn parse_errors_report_position() {
        let y = Yokonuma::new(2, 2).unwrap();
        let err = y.parse("g1 + t7").unwrap_err();
        assert!(matches!(err, ScalarError::Parse { pos: 5, .. }), "{err:?}");
        assert!(y.parse("g1 +").is_err());
    }
}
