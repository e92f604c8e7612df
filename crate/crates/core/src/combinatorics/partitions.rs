use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CombError, DomOrd};

pub type Composition = Vec<usize>;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Partition(pub Vec<usize>);

/// `r` partitions; empty components are kept.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MultiPartition(pub Vec<Partition>);

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn multinomial(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

fn partial_sums(c: &[usize], len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    let mut s = 0;
    for i in 0..len {
        s += c.get(i).copied().unwrap_or(0);
        out.push(s);
    }
    out
}

/// Dominance of compositions, comparing partial sums.
pub fn dominance_compositions(a: &[usize], b: &[usize]) -> DomOrd {
    let len = a.len().max(b.len());
    let (pa, pb) = (partial_sums(a, len), partial_sums(b, len));
    let ge = pa.iter().zip(&pb).all(|(x, y)| x >= y);
    let le = pa.iter().zip(&pb).all(|(x, y)| x <= y);
    match (ge, le) {
        (true, true) => DomOrd::Equal,
        (true, false) => DomOrd::Greater,
        (false, true) => DomOrd::Less,
        (false, false) => DomOrd::Incomparable,
    }
}

/// Componentwise dominance of multicompositions.
pub fn dominance_multicompositions(a: &[Vec<usize>], b: &[Vec<usize>]) -> Result<DomOrd, CombError> {
    if a.len() != b.len() {
        return Err(CombError::KindMismatch(format!(
            "{} components vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter()
        .zip(b)
        .fold(DomOrd::Equal, |acc, (x, y)| acc.meet(dominance_compositions(x, y))))
}

/// The total order used to sort components: size first, then
/// lexicographically, which extends dominance.
pub fn partition_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| a.0.cmp(&b.0))
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombError> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::BadShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dominance(&self, other: &Partition) -> DomOrd {
        dominance_compositions(&self.0, &other.0)
    }

    /// Parse `3,2,1`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self, CombError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts: Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse()).collect();
        Self::new(parts.map_err(|_| CombError::Parse(s.to_string()))?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}

impl MultiPartition {
    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.size()).sum()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|p| p.0.clone()).collect()
    }

    /// All row lengths, component after component.
    pub fn flat_rows(&self) -> Vec<usize> {
        self.0.iter().flat_map(|p| p.0.iter().copied()).collect()
    }

    /// Sizes of the components.
    pub fn norm(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.size()).collect()
    }

    pub fn dominance(&self, other: &MultiPartition) -> Result<DomOrd, CombError> {
        dominance_multicompositions(&self.rows(), &other.rows())
    }

    /// Parse `(3,1|2|)`.
    pub fn parse(s: &str) -> Result<Self, CombError> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| CombError::Parse(s.to_string()))?;
        let comps: Result<Vec<Partition>, _> = t.split('|').map(Partition::parse).collect();
        Ok(MultiPartition(comps?))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", v.join("|"))
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` into exactly `k` nonnegative parts.
pub fn compositions_with_zeros(n: usize, k: usize) -> Vec<Composition> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=n).rev() {
            cur.push(p);
            rec(n - p, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// `r`-multipartitions of `n`.
pub fn multipartitions(n: usize, r: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for comp in compositions_with_zeros(n, r) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &c in &comp {
            let ps = partitions(c);
            acc = acc
                .into_iter()
                .flat_map(|pre| {
                    ps.iter().map(move |p| {
                        let mut v = pre.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(MultiPartition));
    }
    out
}

/// Number of standard tableaux, by the hook length formula.
pub fn dim_partition(p: &Partition) -> u128 {
    let rows = &p.0;
    let mut hooks: u128 = 1;
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&l| l > j).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(p.size()) / hooks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn two_multipartitions_of_two() {
        let mps = multipartitions(2, 2);
        assert_eq!(mps.len(), 5);
        assert!(mps.contains(&MultiPartition::parse("(1|1)").unwrap()));
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(dim_partition(&Partition(vec![2, 1])), 2);
        assert_eq!(dim_partition(&Partition(vec![3, 2])), 5);
        assert_eq!(dim_partition(&Partition(vec![])), 1);
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_compositions(&[2, 1], &[1, 1, 1]), DomOrd::Greater);
        assert_eq!(dominance_compositions(&[3, 1, 1, 1], &[2, 2, 2]), DomOrd::Incomparable);
        assert_eq!(dominance_compositions(&[1, 2], &[1, 2, 0]), DomOrd::Equal);
    }

    #[test]
    fn total_order_extends_dominance() {
        for n in 1..7 {
            for a in partitions(n) {
                for b in partitions(n) {
                    if a.dominance(&b) == DomOrd::Greater {
                        assert_eq!(partition_cmp(&a, &b), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let m = MultiPartition::parse("(3,1|2|)").unwrap();
        assert_eq!(m.0.len(), 3);
        assert_eq!(m.to_string(), "(3,1|2|)");
        assert!(Partition::parse("1,2").is_err());
    }
}
