//! Small expression parser shared by the scalar and element grammars.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number ['/' number] | atom ['^' int] | '(' expr ')' ['^' int]
//! atom   := letters [digits] ['[' ... ']' | '{' ... '}']
//! ```

use num_bigint::BigInt;

use crate::scalars::{ScalarError, Q};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Num(BigInt),
    Atom { name: String, index: Option<usize>, payload: Option<String> },
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

/// A generator or symbol as written, with its exponent.
#[derive(Debug, Clone)]
pub struct Atom<'a> {
    pub name: &'a str,
    pub index: Option<usize>,
    pub payload: Option<&'a str>,
    pub exp: i64,
}

pub trait ExprTarget: Sized {
    type Out: Clone;
    fn rational(&self, v: Q) -> Self::Out;
    fn atom(&self, a: &Atom<'_>) -> Result<Self::Out, String>;
    fn add(&self, a: &Self::Out, b: &Self::Out) -> Self::Out;
    fn mul(&self, a: &Self::Out, b: &Self::Out) -> Self::Out;
    fn neg(&self, a: &Self::Out) -> Self::Out;
}

fn err(pos: usize, msg: impl Into<String>) -> ScalarError {
    ScalarError::Parse { pos, msg: msg.into() }
}

pub fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = s[start..i].parse().map_err(|_| err(start, "bad number"))?;
                out.push((start, Tok::Num(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < b.len() && b[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name = s[start..i].to_string();
                let mut index = None;
                if i < b.len() && b[i].is_ascii_digit() {
                    let j = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    index = Some(s[j..i].parse().map_err(|_| err(j, "bad index"))?);
                }
                let mut payload = None;
                if i < b.len() && (b[i] == b'[' || b[i] == b'{') {
                    let close = if b[i] == b'[' { b']' } else { b'}' };
                    let j = i + 1;
                    let end = s[j..]
                        .bytes()
                        .position(|x| x == close)
                        .ok_or_else(|| err(i, "unclosed bracket"))?;
                    payload = Some(s[j..j + end].to_string());
                    i = j + end + 1;
                }
                out.push((start, Tok::Atom { name, index, payload }));
                continue;
            }
            _ => return Err(err(start, format!("unexpected character '{}'", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'t, T: ExprTarget> {
    toks: &'t [(usize, Tok)],
    pos: usize,
    end: usize,
    target: &'t T,
}

impl<'t, T: ExprTarget> Parser<'t, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<T::Out, ScalarError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.target.neg(&acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.target.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.target.add(&acc, &self.target.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<T::Out, ScalarError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.target.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn signed_int(&mut self) -> Result<i64, ScalarError> {
        let at = self.here();
        let neg = if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.peek() {
            Some(Tok::Num(v)) => {
                let v: i64 = v.try_into().map_err(|_| err(at, "exponent too large"))?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => Err(err(at, "expected integer exponent")),
        }
    }

    fn factor(&mut self) -> Result<T::Out, ScalarError> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut d = BigInt::from(1);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek() {
                        Some(Tok::Num(v)) if *v != BigInt::from(0) => {
                            d = v.clone();
                            self.pos += 1;
                        }
                        _ => return Err(err(self.here(), "expected nonzero denominator")),
                    }
                }
                Ok(self.target.rational(Q::new(n, d)))
            }
            Some(Tok::Atom { name, index, payload }) => {
                self.pos += 1;
                let mut exp = 1;
                if let Some(Tok::Caret) = self.peek() {
                    self.pos += 1;
                    exp = self.signed_int()?;
                }
                let a = Atom { name: &name, index, payload: payload.as_deref(), exp };
                self.target.atom(&a).map_err(|m| err(at, m))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => self.pos += 1,
                    _ => return Err(err(self.here(), "expected ')'")),
                }
                if let Some(Tok::Caret) = self.peek() {
                    self.pos += 1;
                    let e = self.signed_int()?;
                    if e < 0 {
                        return Err(err(at, "negative power of a parenthesised expression"));
                    }
                    let mut acc = self.target.rational(Q::from_integer(1.into()));
                    for _ in 0..e {
                        acc = self.target.mul(&acc, &inner);
                    }
                    return Ok(acc);
                }
                Ok(inner)
            }
            Some(t) => Err(err(at, format!("unexpected token {t:?}"))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

pub fn parse<T: ExprTarget>(s: &str, target: &T) -> Result<T::Out, ScalarError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser { toks: &toks, pos: 0, end: s.len(), target };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(out)
}
