//! Element grammar and JSON form for `ℰ_n`.
//!
//! ```text
//! E{1,3|2}*g[2,1,3] + q^2*e1 - g2^-1
//! ```
//! `g<i>` (negative powers allowed), `g[w]`, `e<i>`, `E{A}` and `q`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{BraidsTies, EtElement, EtKey};
use crate::combinatorics::SetPartition;
use crate::expr::{self, Atom, ExprTarget};
use crate::scalars::{format_linear, parse_scalar, Cyclo, CycloQ, Scalar, ScalarError, Q};
use crate::symgroup::Perm;
use crate::yokonuma::{AlgebraError, TermJson};

fn key_text(key: &EtKey, n: usize) -> String {
    let mut parts = Vec::new();
    if key.a != SetPartition::singletons(n) {
        parts.push(format!("E{key}", key = key.a));
    }
    let g = crate::yokonuma::g_text(&key.w);
    if !g.is_empty() {
        parts.push(g);
    }
    parts.join("*")
}

pub(crate) fn format_et(x: &EtElement<Scalar>) -> String {
    format_linear(x.terms.iter().map(|(k, c)| (c, key_text(k, x.n))))
}

struct Grammar<'a> {
    et: &'a BraidsTies<Scalar>,
}

impl ExprTarget for Grammar<'_> {
    type Out = EtElement<Scalar>;

    fn rational(&self, v: Q) -> Self::Out {
        self.et.scalar(Scalar::constant(Cyclo::from_rational(v)))
    }

    fn atom(&self, a: &Atom<'_>) -> Result<Self::Out, String> {
        let et = self.et;
        let n = et.n();
        let e = |err: AlgebraError| err.to_string();
        let power = |x: &EtElement<Scalar>, inv: Option<EtElement<Scalar>>| match (a.exp, inv) {
            (k, _) if k >= 0 => Ok(et.pow(x, k as u32)),
            (k, Some(xi)) => Ok(et.pow(&xi, (-k) as u32)),
            _ => Err("negative power of a non-invertible generator".to_string()),
        };
        match (a.name, a.index, a.payload) {
            ("q", None, None) => Ok(et.scalar(Scalar::monomial(CycloQ::one(), a.exp))),
            ("g", Some(i), None) => power(&et.g(i).map_err(e)?, Some(et.g_inv(i).map_err(e)?)),
            ("g", None, Some(p)) => {
                let w = Perm::parse(p).map_err(|x| x.to_string())?;
                if w.degree() != n {
                    return Err(format!("permutation {} is not in S_{n}", w.one_line()));
                }
                let inv = w
                    .reduced_word()
                    .iter()
                    .rev()
                    .try_fold(et.one(), |acc, &i| et.g_inv(i).map(|gi| et.mul(&acc, &gi)))
                    .map_err(e)?;
                power(&et.g_w(w), Some(inv))
            }
            ("e", Some(i), None) => {
                let x = et.e_i(i).map_err(e)?;
                Ok(if a.exp == 0 { et.one() } else { power(&x, None)? })
            }
            ("E", None, Some(p)) => {
                let sp = SetPartition::parse_blocks(p, Some(n)).map_err(|x| x.to_string())?;
                let x = et.e_partition(&sp);
                Ok(if a.exp == 0 { et.one() } else { power(&x, None)? })
            }
            _ => Err(format!("unknown symbol '{}'", a.name)),
        }
    }

    fn add(&self, a: &Self::Out, b: &Self::Out) -> Self::Out {
        self.et.add(a, b)
    }

    fn mul(&self, a: &Self::Out, b: &Self::Out) -> Self::Out {
        self.et.mul(a, b)
    }

    fn neg(&self, a: &Self::Out) -> Self::Out {
        self.et.neg(a)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct EtJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl BraidsTies<Scalar> {
    pub fn parse(&self, s: &str) -> Result<EtElement<Scalar>, ScalarError> {
        expr::parse(s, &Grammar { et: self })
    }

    pub fn to_json(&self, x: &EtElement<Scalar>) -> EtJson {
        EtJson {
            n: self.n(),
            terms: x
                .terms
                .iter()
                .map(|(k, c)| TermJson { coeff: c.to_string(), t: None, a: Some(k.a.blocks()), w: k.w.images() })
                .collect(),
        }
    }

    pub fn from_json(&self, j: &EtJson) -> Result<EtElement<Scalar>, AlgebraError> {
        if j.n != self.n() {
            return Err(AlgebraError::Mismatch(1, j.n, 1, self.n()));
        }
        let mut out = self.zero();
        for term in &j.terms {
            let c = parse_scalar(&term.coeff, 1)?;
            let a = match &term.a {
                Some(blocks) => SetPartition::from_blocks(self.n(), blocks)?,
                None => SetPartition::singletons(self.n()),
            };
            let w = Perm::from_images(&term.w)?;
            if w.degree() != self.n() {
                return Err(AlgebraError::Unsupported(format!("permutation {:?} is not in S_{}", term.w, self.n())));
            }
            out.push(EtKey { a, w }, &c);
        }
        Ok(out)
    }
}
