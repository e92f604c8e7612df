//! Exact linear algebra over a field: incremental sparse echelon forms,
//! dense inversion, and ranks over ℚ(ζ_r)(q).

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalars::{Field, HeckeRing, Q, RatFunc, Ring, Scalar};

/// Sparse row: sorted `(column, value)` pairs with nonzero values.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_map<F: Ring>(m: BTreeMap<usize, F>) -> SparseVec<F> {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a - c·b`
fn axpy<F: Ring>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|x| x.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -c.mul_ref(&b[j].1)));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            v -= &c.mul_ref(&b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built one row at a time. Pivot rows are normalized to a
/// leading 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon<F> {
    pivots: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Residual of `row` modulo the span.
    pub fn reduce(&self, mut row: SparseVec<F>) -> SparseVec<F> {
        let mut start = 0;
        loop {
            let Some(k) = row[start..].iter().position(|(c, _)| self.pivots.contains_key(c)) else {
                return row;
            };
            let k = start + k;
            let (col, c) = row[k].clone();
            let p = &self.pivots[&col];
            row = axpy(&row, &c, p);
            start = k.min(row.len());
        }
    }

    pub fn contains(&self, row: SparseVec<F>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds `row`; returns whether it was independent.
    pub fn insert(&mut self, row: SparseVec<F>) -> bool {
        let r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv().expect("nonzero pivot");
        let r: SparseVec<F> = r.into_iter().map(|(c, v)| (c, v.mul_ref(&inv))).collect();
        self.pivots.insert(r[0].0, r);
        true
    }
}

pub fn rank<F: Field>(rows: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Inverse of a square dense matrix, `None` if singular.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut b: Vec<Vec<F>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect();
    for col in 0..n {
        // cheapest nonzero pivot keeps entries small
        let piv = (col..n)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].weight())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for x in b[col].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        let (prow_a, prow_b) = (a[col].clone(), b[col].clone());
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                if !prow_a[j].is_zero() {
                    let t = f.mul_ref(&prow_a[j]);
                    a[i][j] -= &t;
                }
                if !prow_b[j].is_zero() {
                    let t = f.mul_ref(&prow_b[j]);
                    b[i][j] -= &t;
                }
            }
        }
    }
    Some(b)
}

/// Row vector times matrix.
pub fn vec_mat<F: Ring>(v: &[F], m: &[Vec<F>]) -> Vec<F> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![F::zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            o.add_mul(x, y);
        }
    }
    out
}

/// Points at which `q` is specialized for rank certificates.
pub const SPECIALIZATION_POINTS: [(i64, i64); 3] = [(2, 1), (3, 1), (5, 3)];

/// Rank over the fraction field ℚ(ζ_r)(q).
///
/// Specializing `q` is a ring map, so a specialized rank never exceeds the
/// generic one. When some specialization already reaches the number of rows
/// the answer is certified; otherwise exact elimination over the fraction
/// field decides.
pub fn rank_over_fractions(rows: &[SparseVec<Scalar>]) -> usize {
    let full = rows.len();
    for &(a, b) in SPECIALIZATION_POINTS.iter() {
        let x = crate::scalars::Cyclo::from_rational(Q::new(a.into(), b.into()));
        let rk = rank(rows.iter().map(|r| specialize_row(r, &x)));
        if rk == full {
            return full;
        }
    }
    rank(
        rows.iter()
            .map(|r| r.iter().map(|(c, v)| (*c, RatFunc::from_laurent(v.clone()))).collect()),
    )
}

pub fn specialize_row(r: &SparseVec<Scalar>, x: &crate::scalars::CycloQ) -> SparseVec<crate::scalars::CycloQ> {
    r.iter()
        .filter_map(|(c, v)| {
            let e = v.eval(x);
            if e.is_zero() {
                None
            } else {
                Some((*c, e))
            }
        })
        .collect()
}

/// Exact inverse of a square matrix over a Hecke ring, computed in the
/// fraction field. Entries that fail to come back into the ring are
/// reported as `Err` with their position.
pub fn invert_over<S: HeckeRing>(m: &[Vec<S>]) -> Result<Option<Vec<Vec<S>>>, (usize, usize)> {
    let f: Vec<Vec<S::Frac>> = m.iter().map(|r| r.iter().map(|x| x.to_frac()).collect()).collect();
    let Some(inv) = invert(&f) else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(inv.len());
    for (i, row) in inv.iter().enumerate() {
        let mut r = Vec::with_capacity(row.len());
        for (j, x) in row.iter().enumerate() {
            r.push(S::from_frac(x).ok_or((i, j))?);
        }
        out.push(r);
    }
    Ok(Some(out))
}

/// Whether a square dense matrix over a Hecke ring is invertible over the
/// fraction field.
pub fn is_invertible_dense(m: &[Vec<Scalar>]) -> bool {
    let rows: Vec<SparseVec<Scalar>> = m
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect())
        .collect();
    m.iter().all(|r| r.len() == m.len()) && rank_over_fractions(&rows) == m.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rational, CycloQ};
    use num_traits::One;

    fn row(v: &[(usize, i64)]) -> SparseVec<Q> {
        v.iter().map(|&(c, x)| (c, rational(x, 1))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)]), row(&[(2, 1)])];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 1), (2, 1)]));
        e.insert(row(&[(1, 1), (2, -1)]));
        assert!(e.contains(row(&[(0, 1), (1, 1)])));
        assert!(!e.contains(row(&[(2, 1)])));
    }

    #[test]
    fn inverse_round_trip() {
        let m: Vec<Vec<Q>> = vec![
            vec![rational(2, 1), rational(1, 1), rational(0, 1)],
            vec![rational(1, 1), rational(3, 1), rational(1, 1)],
            vec![rational(0, 1), rational(1, 1), rational(4, 1)],
        ];
        let inv = invert(&m).unwrap();
        for (i, mi) in m.iter().enumerate() {
            let row = vec_mat(mi, &inv);
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { Q::one() } else { Q::zero() });
            }
        }
        let sing = vec![vec![rational(1, 1), rational(2, 1)], vec![rational(2, 1), rational(4, 1)]];
        assert!(invert(&sing).is_none());
    }

    /// A matrix of full rank except at q = 2 still gets the generic rank.
    #[test]
    fn fraction_field_rank_ignores_bad_points() {
        let q = Scalar::q();
        let two = Scalar::from_int(2);
        let rows = vec![
            vec![(0, Scalar::one()), (1, q.clone())],
            vec![(0, Scalar::one()), (1, two.clone())],
        ];
        assert_eq!(rank_over_fractions(&rows), 2);
        let dep = vec![vec![(0, q.clone()), (1, q.mul_ref(&q))], vec![(0, Scalar::one()), (1, q)]];
        assert_eq!(rank_over_fractions(&dep), 1);
    }

    #[test]
    fn laurent_inverse_matrix() {
        let q = Scalar::q();
        let m = vec![vec![q.clone(), Scalar::one()], vec![Scalar::zero(), q.clone()]];
        let inv = invert_over::<Scalar>(&m).unwrap().unwrap();
        assert_eq!(inv[0][0], Scalar::q_inv());
        assert_eq!(inv[0][1], -Scalar::monomial(CycloQ::one(), -2));
        let m2 = vec![vec![q.clone() + Scalar::one()]];
        assert_eq!(invert_over::<Scalar>(&m2), Err((0, 0)));
    }
}
