use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partitions::{factorial, Partition};
use super::CombError;
use crate::symgroup::Perm;

/// A set partition of `{1..n}`, stored as a restricted growth string:
/// block labels numbered by first appearance, four bits per point.
///
/// Blocks are therefore ordered by their minima.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: u8,
    code: u64,
}

impl SetPartition {
    #[inline]
    pub fn label(&self, i: usize) -> usize {
        ((self.code >> (4 * (i - 1))) & 0xf) as usize
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// Canonical form of arbitrary labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        assert!(labels.len() <= 16, "at most 16 points");
        let mut map: Vec<(usize, usize)> = Vec::new();
        let mut code = 0u64;
        for (i, &l) in labels.iter().enumerate() {
            let c = match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, c)) => c,
                None => {
                    let c = map.len();
                    map.push((l, c));
                    c
                }
            };
            code |= (c as u64) << (4 * i);
        }
        SetPartition { n: labels.len() as u8, code }
    }

    pub fn labels(&self) -> Vec<usize> {
        (1..=self.degree()).map(|i| self.label(i)).collect()
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn full(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// Consecutive blocks with the given sizes.
    pub fn consecutive(sizes: &[usize]) -> Self {
        let labels: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
        Self::from_labels(&labels)
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, CombError> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x == 0 || x > n || labels[x - 1] != usize::MAX {
                    return Err(CombError::BadSetPartition(format!("{blocks:?} on 1..{n}")));
                }
                labels[x - 1] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(CombError::BadSetPartition(format!("{blocks:?} does not cover 1..{n}")));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn num_blocks(&self) -> usize {
        (1..=self.degree()).map(|i| self.label(i)).max().map_or(0, |m| m + 1)
    }

    /// Blocks ordered by minimum, entries ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for i in 1..=self.degree() {
            out[self.label(i)].push(i);
        }
        out
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.label(a) == self.label(b)
    }

    /// Finest partition coarser than both.
    pub fn join(&self, other: &Self) -> Self {
        let n = self.degree();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for part in [self, other] {
            let mut first = vec![usize::MAX; n];
            for i in 0..n {
                let l = part.label(i + 1);
                if first[l] == usize::MAX {
                    first[l] = i;
                } else {
                    let (a, b) = (find(&mut parent, first[l]), find(&mut parent, i));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        Self::from_labels(&labels)
    }

    /// Merge the blocks of `a` and `b`.
    pub fn join_pair(&self, a: usize, b: usize) -> Self {
        let (la, lb) = (self.label(a), self.label(b));
        if la == lb {
            return *self;
        }
        let labels: Vec<usize> = self.labels().into_iter().map(|l| if l == lb { la } else { l }).collect();
        Self::from_labels(&labels)
    }

    /// `self ⊆ other`: every block of `self` lies in a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        let mut map = [usize::MAX; 16];
        for i in 1..=self.degree() {
            let (a, b) = (self.label(i), other.label(i));
            if map[a] == usize::MAX {
                map[a] = b;
            } else if map[a] != b {
                return false;
            }
        }
        true
    }

    /// `A·w = {I·w : I ∈ A}`.
    pub fn act(&self, w: &Perm) -> Self {
        let n = self.degree();
        let mut labels = vec![0; n];
        for i in 1..=n {
            labels[w.apply(i) - 1] = self.label(i);
        }
        Self::from_labels(&labels)
    }

    /// Block sizes sorted into a partition.
    pub fn type_partition(&self) -> Partition {
        let mut sizes: Vec<usize> = self.blocks().iter().map(|b| b.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition(sizes)
    }

    /// All set partitions of `{1..n}`, in restricted growth string order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if cur.len() == n {
                out.push(SetPartition::from_labels(cur));
                return;
            }
            for l in 0..=max {
                cur.push(l);
                rec(n, if l == max { max + 1 } else { max }, cur, out);
                cur.pop();
            }
        }
        rec(n, 0, &mut cur, &mut out);
        out
    }

    /// Parse `{1,3|2,4}`; `n` is the largest entry.
    pub fn parse(s: &str) -> Result<Self, CombError> {
        let t = s.trim();
        let t = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| CombError::Parse(s.to_string()))?;
        Self::parse_blocks(t, None)
    }

    /// Parse the inside of `{…}`, optionally with a known degree.
    pub fn parse_blocks(t: &str, n: Option<usize>) -> Result<Self, CombError> {
        let mut blocks = Vec::new();
        for b in t.split('|') {
            let b = b.trim();
            if b.is_empty() {
                continue;
            }
            let v: Result<Vec<usize>, _> = b.split(',').map(|x| x.trim().parse()).collect();
            blocks.push(v.map_err(|_| CombError::Parse(t.to_string()))?);
        }
        let max = blocks.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max);
        // points not mentioned are singletons
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x <= n {
                seen[x] = true;
            }
        }
        for (x, &s) in seen.iter().enumerate().skip(1) {
            if !s {
                blocks.push(vec![x]);
            }
        }
        Self::from_blocks(n, &blocks)
    }

    /// Text inside the braces.
    pub fn body(&self) -> String {
        self.blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.body())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Möbius function of the refinement lattice: zero unless `a ⊆ b`.
pub fn mobius(a: &SetPartition, b: &SetPartition) -> BigInt {
    if !a.refines(b) {
        return BigInt::zero();
    }
    let r = a.num_blocks();
    let s = b.num_blocks();
    // r_i = number of blocks of b made of exactly i blocks of a
    let mut counts = vec![0usize; r + 2];
    for blk in b.blocks() {
        let mut labels: Vec<usize> = blk.iter().map(|&x| a.label(x)).collect();
        labels.sort_unstable();
        labels.dedup();
        counts[labels.len()] += 1;
    }
    let mut out = BigInt::one();
    for i in 1..r {
        let f = BigInt::from(factorial(i));
        for _ in 0..counts[i + 1] {
            out *= &f;
        }
    }
    if (r - s) % 2 == 1 {
        out = -out;
    }
    out
}

pub fn bell(n: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 1..=n {
        let mut next = vec![*row.last().expect("nonempty")];
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Number of set partitions of `{1..|α|}` of type `α`.
pub fn faa_di_bruno(alpha: &Partition) -> u128 {
    let n = alpha.size();
    let mut denom: u128 = 1;
    let parts = &alpha.0;
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&x| x == k).count();
        denom *= factorial(k).pow(m as u32) * factorial(m);
        i += m;
    }
    factorial(n) / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = SetPartition::from_blocks(4, &[vec![4, 2], vec![3, 1]]).unwrap();
        assert_eq!(a.blocks(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(a.to_string(), "{1,3|2,4}");
        assert_eq!(sp("{1,3|2,4}"), a);
    }

    #[test]
    fn bell_numbers() {
        let expect = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in expect.iter().enumerate() {
            assert_eq!(bell(n), b);
            assert_eq!(SetPartition::all(n).len() as u128, b);
        }
    }

    #[test]
    fn mobius_examples() {
        let s = SetPartition::singletons(3);
        assert_eq!(mobius(&s, &sp("{1,2,3}")), BigInt::from(2));
        assert_eq!(mobius(&s, &sp("{1,2|3}")), BigInt::from(-1));
        assert_eq!(mobius(&sp("{1,2|3}"), &sp("{1,3|2}")), BigInt::zero());
    }

    #[test]
    fn faa_di_bruno_examples() {
        assert_eq!(faa_di_bruno(&Partition(vec![2, 1])), 3);
        assert_eq!(faa_di_bruno(&Partition(vec![2, 2])), 3);
        for n in 0..7 {
            let total: u128 = partitions(n).iter().map(faa_di_bruno).sum();
            assert_eq!(total, bell(n));
        }
    }

    #[test]
    fn join_and_action() {
        let a = sp("{1,2|3|4}");
        let b = sp("{1|2,3|4}");
        assert_eq!(a.join(&b), sp("{1,2,3|4}"));
        assert_eq!(a.join_pair(3, 4), sp("{1,2|3,4}"));
        let w = Perm::from_images(&[3, 1, 2, 4]).unwrap();
        assert_eq!(a.act(&w), sp("{1,3|2|4}"));
        assert!(a.refines(&a.join(&b)));
        assert!(!a.join(&b).refines(&a));
    }
}
