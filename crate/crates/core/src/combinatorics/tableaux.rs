use std::fmt;

use serde::{Deserialize, Serialize};

use super::partitions::{dominance_multicompositions, MultiPartition, Partition};
use super::{CombError, DomOrd};
use crate::symgroup::Perm;

/// Rows of a (row standard or standard) tableau.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Tableau(pub Vec<Vec<usize>>);

/// A tuple of tableaux; empty components are kept.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct MultiTableau(pub Vec<Tableau>);

impl Tableau {
    pub fn shape(&self) -> Vec<usize> {
        self.0.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|r| r.len()).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().flatten().copied()
    }

    pub fn min_entry(&self) -> Option<usize> {
        self.entries().min()
    }

    pub fn is_row_standard(&self) -> bool {
        self.0.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        let shape_ok = self.0.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self
            .0
            .windows(2)
            .all(|w| w[1].iter().enumerate().all(|(j, x)| w[0][j] < *x));
        shape_ok && cols_ok && self.is_row_standard()
    }

    pub fn initial(shape: &[usize]) -> Self {
        MultiTableau::initial(&[shape.to_vec()]).0.remove(0)
    }

    /// Standard tableaux of a partition shape, filled with `1..=n`.
    pub fn standard(p: &Partition) -> Vec<Tableau> {
        MultiTableau::standard(&MultiPartition(vec![p.clone()]))
            .into_iter()
            .map(|mut t| t.0.remove(0))
            .collect()
    }

    /// Permutation `d(t)` with `t = t^λ · d(t)`.
    pub fn d(&self) -> Perm {
        MultiTableau(vec![self.clone()]).d()
    }

    pub fn act(&self, w: &Perm) -> Tableau {
        Tableau(self.0.iter().map(|r| r.iter().map(|&x| w.apply(x)).collect()).collect())
    }

    pub fn dominance(&self, other: &Tableau) -> Result<DomOrd, CombError> {
        MultiTableau(vec![self.clone()]).dominance(&MultiTableau(vec![other.clone()]))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl MultiTableau {
    pub fn size(&self) -> usize {
        self.0.iter().map(|t| t.size()).sum()
    }

    pub fn shape(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|t| t.shape()).collect()
    }

    /// `t^λ`: rows of component 1, then component 2, …
    pub fn initial(shape: &[Vec<usize>]) -> Self {
        let mut next = 1;
        let comps = shape
            .iter()
            .map(|rows| {
                Tableau(
                    rows.iter()
                        .map(|&len| {
                            let r: Vec<usize> = (next..next + len).collect();
                            next += len;
                            r
                        })
                        .collect(),
                )
            })
            .collect();
        MultiTableau(comps)
    }

    /// Entries in row reading order.
    pub fn reading(&self) -> Vec<usize> {
        self.0.iter().flat_map(|t| t.entries()).collect()
    }

    /// `d(t)`, whose one-line notation is the row reading of `t`.
    pub fn d(&self) -> Perm {
        Perm::from_images(&self.reading()).expect("tableau entries form 1..n")
    }

    pub fn act(&self, w: &Perm) -> MultiTableau {
        MultiTableau(self.0.iter().map(|t| t.act(w)).collect())
    }

    pub fn is_row_standard(&self) -> bool {
        self.0.iter().all(|t| t.is_row_standard())
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|t| t.is_standard())
    }

    /// Validates that entries are exactly `1..=n`.
    pub fn check(&self) -> Result<(), CombError> {
        let mut v = self.reading();
        v.sort_unstable();
        if v.iter().enumerate().all(|(i, &x)| x == i + 1) {
            Ok(())
        } else {
            Err(CombError::BadTableau(format!("entries {v:?} are not 1..n")))
        }
    }

    fn locate(&self, j: usize) -> Option<(usize, usize, usize)> {
        for (c, t) in self.0.iter().enumerate() {
            for (x, row) in t.0.iter().enumerate() {
                if let Some(y) = row.iter().position(|&e| e == j) {
                    return Some((c, x, y));
                }
            }
        }
        None
    }

    /// 1-based component holding `j`.
    pub fn position(&self, j: usize) -> usize {
        self.locate(j).expect("entry present").0 + 1
    }

    /// Residue `column - row` of `j`.
    pub fn residue(&self, j: usize) -> i64 {
        let (_, x, y) = self.locate(j).expect("entry present");
        y as i64 - x as i64
    }

    /// Shape of the subtableau holding `1..=m`, as a multicomposition.
    pub fn restricted_shape(&self, m: usize) -> Vec<Vec<usize>> {
        self.0
            .iter()
            .map(|t| t.0.iter().map(|r| r.iter().filter(|&&x| x <= m).count()).collect())
            .collect()
    }

    /// `s ⊵ t` iff `Shape(s↓m) ⊵ Shape(t↓m)` for all `m`.
    pub fn dominance(&self, other: &MultiTableau) -> Result<DomOrd, CombError> {
        if self.0.len() != other.0.len() || self.size() != other.size() {
            return Err(CombError::KindMismatch("tableaux of different sizes".into()));
        }
        let mut acc = DomOrd::Equal;
        for m in 1..=self.size() {
            let d = dominance_multicompositions(&self.restricted_shape(m), &other.restricted_shape(m))?;
            acc = acc.meet(d);
            if acc == DomOrd::Incomparable {
                break;
            }
        }
        Ok(acc)
    }

    /// Standard multitableaux of shape `λ`, in a fixed order.
    pub fn standard(lambda: &MultiPartition) -> Vec<MultiTableau> {
        let shape = lambda.rows();
        let n = lambda.size();
        let mut cur: Vec<Vec<Vec<usize>>> = shape.iter().map(|c| vec![Vec::new(); c.len()]).collect();
        let mut out = Vec::new();
        fn rec(
            k: usize,
            n: usize,
            shape: &[Vec<usize>],
            cur: &mut Vec<Vec<Vec<usize>>>,
            out: &mut Vec<MultiTableau>,
        ) {
            if k > n {
                out.push(MultiTableau(cur.iter().map(|c| Tableau(c.clone())).collect()));
                return;
            }
            for c in 0..shape.len() {
                for row in 0..shape[c].len() {
                    let len = cur[c][row].len();
                    if len < shape[c][row] && (row == 0 || cur[c][row - 1].len() > len) {
                        cur[c][row].push(k);
                        rec(k + 1, n, shape, cur, out);
                        cur[c][row].pop();
                    }
                }
            }
        }
        rec(1, n, &shape, &mut cur, &mut out);
        out
    }

    /// Row standard multitableaux of a multicomposition shape.
    pub fn row_standard(shape: &[Vec<usize>]) -> Vec<MultiTableau> {
        let rows: Vec<usize> = shape.iter().flatten().copied().collect();
        let n: usize = rows.iter().sum();
        let mut out = Vec::new();
        let mut filled: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
        fn rec(k: usize, n: usize, rows: &[usize], filled: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if k > n {
                out.push(filled.clone());
                return;
            }
            for i in 0..rows.len() {
                if filled[i].len() < rows[i] {
                    filled[i].push(k);
                    rec(k + 1, n, rows, filled, out);
                    filled[i].pop();
                }
            }
        }
        let mut flat = Vec::new();
        rec(1, n, &rows, &mut filled, &mut flat);
        for f in flat {
            let mut it = f.into_iter();
            let comps = shape
                .iter()
                .map(|c| Tableau(c.iter().map(|_| it.next().expect("row")).collect()))
                .collect();
            out.push(MultiTableau(comps));
        }
        out
    }
}

impl fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", v.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{dim_partition, multipartitions, partitions};
    use crate::symgroup::{coset_decompose, is_distinguished};

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn dominance_examples() {
        let a = tab(&[&[1, 3], &[2, 5], &[4]]);
        let b = tab(&[&[2, 4], &[3, 5], &[1]]);
        let c = tab(&[&[4, 5], &[1, 3], &[2]]);
        assert_eq!(a.dominance(&b).unwrap(), DomOrd::Greater);
        assert_eq!(a.dominance(&c).unwrap(), DomOrd::Greater);
        assert_eq!(b.dominance(&c).unwrap(), DomOrd::Incomparable);
        assert_eq!(b.dominance(&a).unwrap(), DomOrd::Less);
    }

    #[test]
    fn standard_counts_match_hook_formula() {
        for n in 1..7 {
            for p in partitions(n) {
                assert_eq!(Tableau::standard(&p).len() as u128, dim_partition(&p));
            }
        }
    }

    #[test]
    fn d_of_tableau() {
        let lam = MultiPartition::parse("(2|1)").unwrap();
        let t0 = MultiTableau::initial(&lam.rows());
        assert!(t0.d().is_identity());
        for t in MultiTableau::standard(&lam) {
            assert_eq!(t0.act(&t.d()), t);
        }
    }

    #[test]
    fn contents_and_positions() {
        let t = MultiTableau(vec![tab(&[&[1, 2], &[4]]), tab(&[&[3]])]);
        assert_eq!(t.position(3), 2);
        assert_eq!(t.residue(2), 1);
        assert_eq!(t.residue(4), -1);
    }

    /// Row standard tableaux correspond to distinguished coset representatives.
    #[test]
    fn row_standard_versus_cosets() {
        for n in 1..=5 {
            for lam in multipartitions(n, 2) {
                let rows = lam.flat_rows();
                let tabs = MultiTableau::row_standard(&lam.rows());
                let reps = Perm::all(n)
                    .into_iter()
                    .filter(|w| is_distinguished(w, &rows))
                    .count();
                assert_eq!(tabs.len(), reps);
                for t in &tabs {
                    let (_, d) = coset_decompose(&t.d(), &rows).unwrap();
                    assert_eq!(d, t.d());
                }
            }
        }
    }
}
