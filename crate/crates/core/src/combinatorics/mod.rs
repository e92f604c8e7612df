//! Partitions, tableaux, set partitions and the shapes indexing the cellular
//! bases.

use std::cmp::Ordering;

use thiserror::Error;

mod lambda;
mod partitions;
mod setpart;
mod tableaux;

pub use lambda::{
    block_permutation, lambda_shapes, lambda_shapes_of_type, std_count_formula, LambdaShape,
    LambdaTableau,
};
pub use partitions::{
    compositions_with_zeros, dim_partition, factorial, multinomial, multipartitions, partition_cmp,
    partitions, Composition, MultiPartition, Partition,
};
pub use setpart::{bell, faa_di_bruno, mobius, SetPartition};
pub use tableaux::{MultiTableau, Tableau};

use crate::symgroup::PermError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("invalid tableau: {0}")]
    BadTableau(String),
    #[error("invalid set partition: {0}")]
    BadSetPartition(String),
    #[error("cannot compare: {0}")]
    KindMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Outcome of comparing two elements of a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomOrd {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl DomOrd {
    /// Combine componentwise comparisons.
    pub fn meet(self, other: DomOrd) -> DomOrd {
        use DomOrd::*;
        match (self, other) {
            (Equal, x) | (x, Equal) => x,
            (Less, Less) => Less,
            (Greater, Greater) => Greater,
            _ => Incomparable,
        }
    }

    pub fn from_ordering(o: Ordering) -> DomOrd {
        match o {
            Ordering::Less => DomOrd::Less,
            Ordering::Equal => DomOrd::Equal,
            Ordering::Greater => DomOrd::Greater,
        }
    }

    /// `⊵`
    pub fn is_ge(self) -> bool {
        matches!(self, DomOrd::Greater | DomOrd::Equal)
    }
}
