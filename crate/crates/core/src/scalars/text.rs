//! Text form of scalars: `1/2*z^2*q^-3 + 2`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{check_order, Cyclo, CycloQ, RatFn, Ring, Scalar, ScalarError, Q};
use crate::expr::{self, Atom, ExprTarget};

pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Q, ScalarError> {
    let bad = || ScalarError::Parse { pos: 0, msg: format!("not a rational: {s:?}") };
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Writes `Σ c z^k q^e` with `sign-aware` joins; `first` tracks position.
fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &Q,
    zk: usize,
    qe: i64,
) -> fmt::Result {
    let neg = c.is_negative();
    if *first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    *first = false;
    let a = c.abs();
    let mut body = Vec::new();
    match zk {
        0 => {}
        1 => body.push("z".to_string()),
        k => body.push(format!("z^{k}")),
    }
    match qe {
        0 => {}
        1 => body.push("q".to_string()),
        e => body.push(format!("q^{e}")),
    }
    if body.is_empty() {
        write!(f, "{}", format_rational(&a))
    } else if a.is_one() {
        write!(f, "{}", body.join("*"))
    } else {
        write!(f, "{}*{}", format_rational(&a), body.join("*"))
    }
}

impl fmt::Display for CycloQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if !c.is_zero() {
                write_monomial(f, &mut first, c, k, 0)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms: Vec<_> = self.terms().collect();
        for (e, c) in terms.into_iter().rev() {
            for (k, x) in c.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    write_monomial(f, &mut first, x, k, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({})/({})", self.numer(), self.denom())
        }
    }
}

/// Number of printed monomials of a scalar.
fn monomial_count(s: &Scalar) -> usize {
    s.terms().map(|(_, c)| c.coeffs().iter().filter(|x| !x.is_zero()).count()).sum()
}

/// Prints `Σ c·m` for basis monomials `m` given as text; an empty
/// monomial stands for the unit.
pub fn format_linear<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, m) in terms {
        let piece = if m.is_empty() {
            if monomial_count(c) > 1 && !out.is_empty() {
                format!("({c})")
            } else {
                c.to_string()
            }
        } else if c.is_one() {
            m
        } else if (-c.clone()).is_one() {
            format!("-{m}")
        } else if monomial_count(c) == 1 {
            format!("{c}*{m}")
        } else {
            format!("({c})*{m}")
        };
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

struct ScalarGrammar {
    r: u32,
}

impl ExprTarget for ScalarGrammar {
    type Out = Scalar;

    fn rational(&self, v: Q) -> Scalar {
        Scalar::constant(Cyclo::from_rational(v))
    }

    fn atom(&self, a: &Atom<'_>) -> Result<Scalar, String> {
        if a.index.is_some() || a.payload.is_some() {
            return Err(format!("unexpected symbol '{}' in a scalar", a.name));
        }
        match a.name {
            "q" => Ok(Scalar::monomial(CycloQ::one(), a.exp)),
            "z" => Ok(Scalar::constant(Cyclo::zeta_pow(self.r, a.exp))),
            other => Err(format!("unknown symbol '{other}' in a scalar")),
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.add_ref(b)
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.mul_ref(b)
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        -a.clone()
    }
}

/// Parse a scalar over ℚ(ζ_r)[q, q⁻¹]; `z` denotes ζ_r.
pub fn parse_scalar(s: &str, r: u32) -> Result<Scalar, ScalarError> {
    check_order(r)?;
    expr::parse(s, &ScalarGrammar { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational;

    #[test]
    fn spec_example_round_trips() {
        let s = parse_scalar("1/2*z^2*q^-3 + 2", 5).unwrap();
        let printed = s.to_string();
        assert_eq!(parse_scalar(&printed, 5).unwrap(), s);
        let expect = Scalar::monomial(Cyclo::zeta_pow(5, 2), -3).scale(&Cyclo::from_rational(rational(1, 2)))
            + Scalar::from_int(2);
        assert_eq!(s, expect);
    }

    #[test]
    fn printing_forms() {
        assert_eq!((Scalar::q() - Scalar::q_inv()).to_string(), "q - q^-1");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!((-Scalar::q()).to_string(), "-q");
        let s = parse_scalar("z^2", 3).unwrap();
        assert_eq!(s.to_string(), "-1 - z");
    }

    #[test]
    fn reduction_on_parse() {
        assert!(parse_scalar("1 + z + z^2", 3).unwrap().is_zero());
        assert_eq!(parse_scalar("q*q^-1", 2).unwrap(), Scalar::one());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_scalar("", 2).is_err());
        assert!(parse_scalar("1/0", 2).is_err());
        assert!(parse_scalar("x", 2).is_err());
        assert!(parse_scalar("q +", 2).is_err());
        assert!(parse_scalar("q", 0).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rational(-1, 2));
        assert_eq!(format_rational(&rational(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
    }
}
