//! Shapes `Λ = (λ | μ)` indexing the cellular basis of the braids and ties
//! algebra, and their tableaux.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partitions::{
    dim_partition, dominance_multicompositions, factorial, multinomial, partition_cmp, partitions,
    MultiPartition, Partition,
};
use super::setpart::SetPartition;
use super::tableaux::{MultiTableau, Tableau};
use super::{CombError, DomOrd};
use crate::symgroup::Perm;

/// `λ` is an increasing multipartition with nonempty components and `μ^(i)`
/// is a partition of the length of the `i`-th run of equal components.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LambdaShape {
    pub lambda: MultiPartition,
    pub mu: Vec<Partition>,
}

/// `(t | u)` with `t` a multitableau of shape `λ` and `u_i` of shape `μ^(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LambdaTableau {
    pub t: MultiTableau,
    pub u: Vec<Tableau>,
}

fn runs_of(lambda: &MultiPartition) -> Vec<(usize, usize)> {
    let comps = &lambda.0;
    let mut out = Vec::new();
    let mut i = 0;
    while i < comps.len() {
        let len = comps[i..].iter().take_while(|c| **c == comps[i]).count();
        out.push((i, len));
        i += len;
    }
    out
}

impl LambdaShape {
    pub fn new(lambda: MultiPartition, mu: Vec<Partition>) -> Result<Self, CombError> {
        if lambda.0.iter().any(|p| p.is_empty()) {
            return Err(CombError::BadShape(format!("{lambda} has an empty component")));
        }
        if lambda.0.windows(2).any(|w| partition_cmp(&w[0], &w[1]) == Ordering::Greater) {
            return Err(CombError::BadShape(format!("{lambda} is not increasing")));
        }
        let runs = runs_of(&lambda);
        if runs.len() != mu.len() || runs.iter().zip(&mu).any(|((_, len), m)| m.size() != *len) {
            return Err(CombError::BadShape(format!("μ does not match the runs of {lambda}")));
        }
        Ok(LambdaShape { lambda, mu })
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// `‖λ‖`, the component sizes.
    pub fn norm(&self) -> Vec<usize> {
        self.lambda.norm()
    }

    /// `(start, length)` of each run of equal components, 0-based.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        runs_of(&self.lambda)
    }

    /// `type(λ)`: the component sizes as a partition.
    pub fn type_partition(&self) -> Partition {
        let mut v = self.norm();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// `A_Λ`: consecutive blocks of sizes `‖λ‖`.
    pub fn set_partition(&self) -> SetPartition {
        SetPartition::consecutive(&self.norm())
    }

    pub fn initial_tableau(&self) -> LambdaTableau {
        LambdaTableau {
            t: MultiTableau::initial(&self.lambda.rows()),
            u: self.mu.iter().map(|m| Tableau::initial(&m.0)).collect(),
        }
    }

    fn is_increasing(&self, t: &MultiTableau) -> bool {
        self.runs().iter().all(|&(s, len)| {
            (s..s + len - 1).all(|i| t.0[i].min_entry() < t.0[i + 1].min_entry())
        })
    }

    /// `Std(Λ)`, in a fixed order.
    pub fn standard_tableaux(&self) -> Vec<LambdaTableau> {
        let ts: Vec<MultiTableau> = MultiTableau::standard(&self.lambda)
            .into_iter()
            .filter(|t| self.is_increasing(t))
            .collect();
        let mut us: Vec<Vec<Tableau>> = vec![Vec::new()];
        for m in &self.mu {
            let st = Tableau::standard(m);
            us = us
                .into_iter()
                .flat_map(|pre| {
                    st.iter().map(move |x| {
                        let mut v = pre.clone();
                        v.push(x.clone());
                        v
                    })
                })
                .collect();
        }
        let mut out = Vec::with_capacity(ts.len() * us.len());
        for t in &ts {
            for u in &us {
                out.push(LambdaTableau { t: t.clone(), u: u.clone() });
            }
        }
        out
    }

    pub fn is_standard(&self, s: &LambdaTableau) -> bool {
        s.t.shape() == self.lambda.rows()
            && s.t.check().is_ok()
            && s.t.is_standard()
            && self.is_increasing(&s.t)
            && s.u.len() == self.mu.len()
            && s.u.iter().zip(&self.mu).all(|(u, m)| {
                u.shape() == m.0 && u.is_standard() && {
                    let mut e: Vec<usize> = u.entries().collect();
                    e.sort_unstable();
                    e.iter().enumerate().all(|(i, &x)| x == i + 1)
                }
            })
    }

    /// Partial order on `ℒ_n`.
    pub fn dominance(&self, other: &LambdaShape) -> DomOrd {
        if self.norm() != other.norm() {
            return DomOrd::Incomparable;
        }
        if self.lambda == other.lambda {
            return self
                .mu
                .iter()
                .zip(&other.mu)
                .fold(DomOrd::Equal, |acc, (a, b)| acc.meet(a.dominance(b)));
        }
        if dominates_up_to_order(&self.lambda, &other.lambda) {
            DomOrd::Greater
        } else if dominates_up_to_order(&other.lambda, &self.lambda) {
            DomOrd::Less
        } else {
            DomOrd::Incomparable
        }
    }
}

/// Some reordering of the components of `a` dominates `b` componentwise.
fn dominates_up_to_order(a: &MultiPartition, b: &MultiPartition) -> bool {
    let m = a.0.len();
    if m != b.0.len() {
        return false;
    }
    let brows = b.rows();
    Perm::all(m).iter().any(|sigma| {
        let perm: Vec<Vec<usize>> = (1..=m).map(|i| a.0[sigma.apply(i) - 1].0.clone()).collect();
        dominance_multicompositions(&perm, &brows).map(|d| d.is_ge()).unwrap_or(false)
    })
}

impl fmt::Display for LambdaShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.lambda.0.iter().map(|p| format!("({p})")).collect();
        let m: Vec<String> = self.mu.iter().map(|p| format!("({p})")).collect();
        write!(f, "({} | {})", l.join(","), m.join(","))
    }
}

impl LambdaTableau {
    pub fn d_t(&self) -> Perm {
        self.t.d()
    }

    /// `d(u_i)` for each run.
    pub fn d_u(&self) -> Vec<Perm> {
        self.u.iter().map(|u| u.d()).collect()
    }

    /// Each component holds exactly the matching block of `A_Λ`.
    pub fn is_initial_kind(&self, shape: &LambdaShape) -> bool {
        let blocks = shape.set_partition().blocks();
        self.t.0.iter().zip(blocks).all(|(c, b)| {
            let mut e: Vec<usize> = c.entries().collect();
            e.sort_unstable();
            e == b
        })
    }

    /// Each component holds some block of `A_Λ`.
    pub fn is_wreath_type(&self, shape: &LambdaShape) -> bool {
        let blocks = shape.set_partition().blocks();
        self.t.0.iter().all(|c| {
            let mut e: Vec<usize> = c.entries().collect();
            e.sort_unstable();
            blocks.contains(&e)
        })
    }

    /// Set partition formed by the entries of the components.
    pub fn component_partition(&self) -> SetPartition {
        let n = self.t.size();
        let mut labels = vec![0; n];
        for (c, comp) in self.t.0.iter().enumerate() {
            for x in comp.entries() {
                labels[x - 1] = c;
            }
        }
        SetPartition::from_labels(&labels)
    }
}

impl fmt::Display for LambdaTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<String> = self.u.iter().map(|x| x.to_string()).collect();
        write!(f, "({} | {})", self.t, u.join(", "))
    }
}

/// All of `ℒ_n`: increasing multipartitions with every choice of `μ`.
pub fn lambda_shapes(n: usize) -> Vec<LambdaShape> {
    let mut pool: Vec<Partition> = (1..=n).flat_map(partitions).collect();
    pool.sort_by(partition_cmp);
    let mut lambdas = Vec::new();
    fn rec(pool: &[Partition], start: usize, left: usize, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if left == 0 {
            out.push(MultiPartition(cur.clone()));
            return;
        }
        for i in start..pool.len() {
            if pool[i].size() <= left {
                cur.push(pool[i].clone());
                rec(pool, i, left - pool[i].size(), cur, out);
                cur.pop();
            }
        }
    }
    if n > 0 {
        rec(&pool, 0, n, &mut Vec::new(), &mut lambdas);
    }
    let mut out = Vec::new();
    for lambda in lambdas {
        let runs = runs_of(&lambda);
        let mut mus: Vec<Vec<Partition>> = vec![Vec::new()];
        for (_, len) in &runs {
            let ps = partitions(*len);
            mus = mus
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
        for mu in mus {
            out.push(LambdaShape { lambda: lambda.clone(), mu });
        }
    }
    out
}

pub fn lambda_shapes_of_type(n: usize, alpha: &Partition) -> Vec<LambdaShape> {
    lambda_shapes(n).into_iter().filter(|s| &s.type_partition() == alpha).collect()
}

/// `|Std(Λ)|` from the closed formula.
pub fn std_count_formula(shape: &LambdaShape) -> u128 {
    let runs: u128 = shape.runs().iter().map(|&(_, len)| factorial(len)).product();
    let dl: u128 = shape.lambda.0.iter().map(dim_partition).product();
    let dm: u128 = shape.mu.iter().map(dim_partition).product();
    multinomial(&shape.norm()) * dl * dm / runs
}

/// `B_y`: moves the `k`-th point of block `b` to the `k`-th point of block
/// `b·y`, for consecutive blocks of the given sizes.
pub fn block_permutation(y: &Perm, sizes: &[usize]) -> Result<Perm, CombError> {
    if y.degree() != sizes.len() {
        return Err(CombError::KindMismatch("block permutation has the wrong degree".into()));
    }
    let starts: Vec<usize> = sizes
        .iter()
        .scan(1, |s, &x| {
            let v = *s;
            *s += x;
            Some(v)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let mut images = vec![0; n];
    for b in 0..sizes.len() {
        let c = y.apply(b + 1) - 1;
        if sizes[b] != sizes[c] {
            return Err(CombError::KindMismatch(format!("blocks {} and {} differ in size", b + 1, c + 1)));
        }
        for k in 0..sizes[b] {
            images[starts[b] + k - 1] = starts[c] + k;
        }
    }
    Ok(Perm::from_images(&images)?)
}

impl MultiTableau {
    /// `y ∘ s`: relabel by `B_{y⁻¹}` and permute components by `y`.
    pub fn circle_action(&self, y: &Perm, sizes: &[usize]) -> Result<MultiTableau, CombError> {
        let b = block_permutation(&y.inverse(), sizes)?;
        let s1 = self.act(&b);
        Ok(MultiTableau((1..=sizes.len()).map(|i| s1.0[y.apply(i) - 1].clone()).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::setpart::bell;

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn small_example_count() {
        let lam = MultiPartition(vec![Partition(vec![1]), Partition(vec![1])]);
        let shape = LambdaShape::new(lam, vec![Partition(vec![1, 1])]).unwrap();
        assert_eq!(shape.standard_tableaux().len(), 1);
        assert_eq!(std_count_formula(&shape), 1);
    }

    #[test]
    fn counting_identity_small() {
        for n in 1..=4 {
            let total: u128 = lambda_shapes(n)
                .iter()
                .map(|s| {
                    let c = s.standard_tableaux().len() as u128;
                    assert_eq!(c, std_count_formula(s), "{s}");
                    c * c
                })
                .sum();
            assert_eq!(total, bell(n) * factorial(n));
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let lam = MultiPartition(vec![Partition(vec![2]), Partition(vec![1])]);
        assert!(LambdaShape::new(lam, vec![Partition(vec![1]), Partition(vec![1])]).is_err());
        let lam = MultiPartition(vec![Partition(vec![1]), Partition(vec![1])]);
        assert!(LambdaShape::new(lam, vec![Partition(vec![1])]).is_err());
    }

    /// The worked example with fifteen points and six blocks.
    #[test]
    fn circle_action_example() {
        let s = MultiTableau(vec![
            tab(&[&[1, 2]]),
            tab(&[&[3], &[4]]),
            tab(&[&[5], &[6]]),
            tab(&[&[7, 9], &[8]]),
            tab(&[&[10, 11, 12]]),
            tab(&[&[13], &[14], &[15]]),
        ]);
        let sizes = [2, 2, 2, 3, 3, 3];
        let y = Perm::from_word(6, &[1, 2, 1, 4, 5]).unwrap();
        let b = block_permutation(&y.inverse(), &sizes).unwrap();
        let s1 = s.act(&b);
        let expect1 = MultiTableau(vec![
            tab(&[&[5, 6]]),
            tab(&[&[3], &[4]]),
            tab(&[&[1], &[2]]),
            tab(&[&[10, 12], &[11]]),
            tab(&[&[13, 14, 15]]),
            tab(&[&[7], &[8], &[9]]),
        ]);
        assert_eq!(s1, expect1);
        let expect = MultiTableau(vec![
            tab(&[&[1], &[2]]),
            tab(&[&[3], &[4]]),
            tab(&[&[5, 6]]),
            tab(&[&[7], &[8], &[9]]),
            tab(&[&[10, 12], &[11]]),
            tab(&[&[13, 14, 15]]),
        ]);
        assert_eq!(s.circle_action(&y, &sizes).unwrap(), expect);
        let bad = Perm::from_word(6, &[3]).unwrap();
        assert!(block_permutation(&bad, &sizes).is_err());
    }

    #[test]
    fn dominance_on_shapes() {
        let shapes = lambda_shapes(3);
        for a in &shapes {
            assert_eq!(a.dominance(a), DomOrd::Equal);
            for b in &shapes {
                let d = a.dominance(b);
                let e = b.dominance(a);
                let flipped = match d {
                    DomOrd::Less => DomOrd::Greater,
                    DomOrd::Greater => DomOrd::Less,
                    x => x,
                };
                assert_eq!(e, flipped);
            }
        }
    }
}
