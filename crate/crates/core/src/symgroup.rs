//! Permutations of `{1..n}` acting on the right.
//!
//! `w1 * w2` applies `w1` first. Permutations are packed four bits per
//! image, so `Perm` is `Copy` and at most 16 points are supported.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_POINTS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..{n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },
    #[error("at most {MAX_POINTS} points are supported, got {0}")]
    TooLarge(usize),
    #[error("generator s_{i} does not exist for n = {n}")]
    BadGenerator { i: usize, n: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("composition {comp:?} does not sum to {n}")]
    BadComposition { comp: Vec<usize>, n: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

/// The images `1·w, …, n·w`, packed with the first image most significant
/// so that the derived order is lexicographic for fixed `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    code: u64,
}

impl Perm {
    #[inline]
    fn shift(&self, i: usize) -> u32 {
        4 * (self.n as u32 - 1 - i as u32)
    }

    #[inline]
    fn get0(&self, i: usize) -> usize {
        ((self.code >> self.shift(i)) & 0xf) as usize
    }

    #[inline]
    fn set0(&mut self, i: usize, v: usize) {
        let s = self.shift(i);
        self.code = (self.code & !(0xf << s)) | ((v as u64) << s);
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "at most {MAX_POINTS} points");
        let mut p = Perm { n: n as u8, code: 0 };
        for i in 0..n {
            p.set0(i, i);
        }
        p
    }

    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n > MAX_POINTS {
            return Err(PermError::TooLarge(n));
        }
        let mut seen = [false; MAX_POINTS];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(PermError::NotAPermutation { n, images: images.to_vec() });
            }
            seen[x - 1] = true;
        }
        let mut p = Perm { n: n as u8, code: 0 };
        for (i, &x) in images.iter().enumerate() {
            p.set0(i, x - 1);
        }
        Ok(p)
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self, PermError> {
        if i == 0 || i >= n {
            return Err(PermError::BadGenerator { i, n });
        }
        Ok(Self::identity(n).mul_simple(i))
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.set0(a - 1, b - 1);
        p.set0(b - 1, a - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `i·w` for `i` in `1..=n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.get0(i - 1) + 1
    }

    pub fn images(&self) -> Vec<usize> {
        (1..=self.degree()).map(|i| self.apply(i)).collect()
    }

    /// `i·w⁻¹`: the position holding value `i` in one-line notation.
    #[inline]
    pub fn preimage(&self, i: usize) -> usize {
        (0..self.degree()).find(|&j| self.get0(j) == i - 1).expect("value present") + 1
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.get0(i) == i)
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut p = *self;
        for i in 0..self.degree() {
            p.set0(i, other.get0(self.get0(i)));
        }
        p
    }

    pub fn inverse(&self) -> Self {
        let mut p = *self;
        for i in 0..self.degree() {
            p.set0(self.get0(i), i);
        }
        p
    }

    /// `w * s_i`, which swaps the values `i` and `i+1`.
    #[inline]
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut p = *self;
        for j in 0..self.degree() {
            let v = self.get0(j);
            if v == i - 1 {
                p.set0(j, i);
            } else if v == i {
                p.set0(j, i - 1);
            }
        }
        p
    }

    /// `s_i * w`, which swaps the positions `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Self {
        let mut p = *self;
        let a = self.get0(i - 1);
        let b = self.get0(i);
        p.set0(i - 1, b);
        p.set0(i, a);
        p
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.preimage(i) > self.preimage(i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.get0(i) > self.get0(j) {
                    l += 1;
                }
            }
        }
        l
    }

    /// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    ///
    /// Built from the right by always removing the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..self.degree() {
                if w.has_right_descent(i) {
                    word.push(i);
                    w = w.mul_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, PermError> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(PermError::BadGenerator { i, n });
            }
            w = w.mul_simple(i);
        }
        Ok(w)
    }

    /// All permutations of `{1..n}` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm::from_images(&cur).expect("valid"));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Disjoint cycles of length at least two, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Parse one-line notation such as `[3,1,2]`.
    pub fn parse(s: &str) -> Result<Self, PermError> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(Self::identity(0));
        }
        let images: Result<Vec<usize>, _> = t.split(',').map(|x| x.trim().parse::<usize>()).collect();
        let images = images.map_err(|_| PermError::Parse(s.to_string()))?;
        Self::from_images(&images)
    }

    pub fn one_line(&self) -> String {
        let v: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        format!("[{}]", v.join(","))
    }
}

impl fmt::Display for Perm {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", v.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_images(&v).map_err(serde::de::Error::custom)
    }
}

/// Blocks of consecutive integers with the given sizes.
pub fn composition_blocks(comp: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::with_capacity(comp.len());
    let mut start = 1;
    for &c in comp {
        out.push(start..start + c);
        start += c;
    }
    out
}

/// Whether `w` is the minimal length element of its coset `𝔖_comp · w`.
pub fn is_distinguished(w: &Perm, comp: &[usize]) -> bool {
    composition_blocks(comp)
        .into_iter()
        .all(|b| b.clone().zip(b.skip(1)).all(|(i, j)| w.apply(i) < w.apply(j)))
}

/// Whether `y` lies in the Young subgroup of `comp`.
pub fn in_young_subgroup(y: &Perm, comp: &[usize]) -> bool {
    composition_blocks(comp).into_iter().all(|b| b.clone().all(|i| b.contains(&y.apply(i))))
}

/// Split `w = y * d` with `y ∈ 𝔖_comp` and `d` distinguished.
pub fn coset_decompose(w: &Perm, comp: &[usize]) -> Result<(Perm, Perm), PermError> {
    let n = w.degree();
    if comp.iter().sum::<usize>() != n {
        return Err(PermError::BadComposition { comp: comp.to_vec(), n });
    }
    let mut d = vec![0; n];
    for b in composition_blocks(comp) {
        let mut imgs: Vec<usize> = b.clone().map(|i| w.apply(i)).collect();
        imgs.sort_unstable();
        for (i, x) in b.zip(imgs) {
            d[i - 1] = x;
        }
    }
    let d = Perm::from_images(&d)?;
    let y = w.compose(&d.inverse());
    Ok((y, d))
}

/// Elements of the Young subgroup of consecutive blocks.
pub fn young_subgroup(comp: &[usize]) -> Vec<Perm> {
    let n: usize = comp.iter().sum();
    Perm::all(n).into_iter().filter(|w| in_young_subgroup(w, comp)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        let s1 = Perm::simple(3, 1).unwrap();
        let s2 = Perm::simple(3, 2).unwrap();
        // apply s1 first: 1 -> 2 -> 3
        assert_eq!(s1.compose(&s2).apply(1), 3);
        assert_eq!(s1.compose(&s2), s1.mul_simple(2));
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in Perm::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(5, &word).unwrap(), w);
        }
    }

    #[test]
    fn longest_element() {
        let w0 = Perm::from_images(&[4, 3, 2, 1]).unwrap();
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn cycle_display_and_parse() {
        let w = Perm::parse("[3,1,2]").unwrap();
        assert_eq!(w.to_string(), "(1 3 2)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm::parse(&w.one_line()).unwrap(), w);
        assert!(Perm::parse("[1,1,2]").is_err());
        assert!(Perm::parse("[a]").is_err());
    }

    #[test]
    fn coset_examples() {
        let s1 = Perm::simple(2, 1).unwrap();
        assert_eq!(coset_decompose(&s1, &[2]).unwrap(), (s1, Perm::identity(2)));
        assert_eq!(coset_decompose(&s1, &[1, 1]).unwrap(), (Perm::identity(2), s1));
        assert!(coset_decompose(&s1, &[1]).is_err());
    }

    #[test]
    fn coset_decomposition_is_length_additive() {
        for comp in [vec![2, 1, 1], vec![1, 3], vec![2, 0, 2], vec![4]] {
            for w in Perm::all(4) {
                let (y, d) = coset_decompose(&w, &comp).unwrap();
                assert_eq!(y.compose(&d), w);
                assert!(in_young_subgroup(&y, &comp));
                assert!(is_distinguished(&d, &comp));
                assert_eq!(y.length() + d.length(), w.length());
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Perm::all(5).len(), 120);
        assert_eq!(young_subgroup(&[2, 1, 2]).len(), 4);
    }
}
