//! Named verification suites over both algebras.

use rayon::prelude::*;
use thiserror::Error;

use crate::braidsties::{
    commutation_check, decompose_check, et_cellular_check, lemamulti_check, mobius_check, phi_check, psi_check,
    relations_check as et_relations_check, wreath_check, BraidsTies,
};
use crate::combinatorics::{
    bell, faa_di_bruno, factorial, lambda_shapes, partitions, std_count_formula, LambdaShape, Partition,
};
use crate::report::{Check, Report};
use crate::tensorrep::{
    faithfulness_rank, mak_check, phi_embedding_check, shoji_check, structure_dim_check, tensor_check, TensorSpace,
};
use crate::yokonuma::{
    cellular_check, jm_check, lusztig_check, relations_check as y_relations_check, AlgebraError, Yokonuma,
    DEFAULT_BUDGET,
};

pub const SUITES: [&str; 16] = [
    "relations-y",
    "relations-et",
    "tensor-rep",
    "faithful",
    "shoji",
    "mak",
    "lusztig",
    "cellular-y",
    "cellular-et",
    "jm",
    "mobius",
    "decompose",
    "wreath",
    "psi",
    "phi-embed",
    "counting",
];

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("{0}")]
    Usage(String),
    #[error("basis of size {dim} exceeds the budget {budget}")]
    Budget { dim: usize, budget: usize },
    #[error(transparent)]
    Algebra(AlgebraError),
}

impl From<AlgebraError> for VerifyError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::BudgetExceeded { dim, budget } => VerifyError::Budget { dim, budget },
            AlgebraError::Unsupported(m) => VerifyError::Usage(m),
            e => VerifyError::Algebra(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub r: usize,
    pub n: usize,
    pub alpha: Option<Partition>,
    pub budget: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { r: 2, n: 3, alpha: None, budget: DEFAULT_BUDGET, seed: 0, samples: 100 }
    }
}

impl VerifyConfig {
    fn yokonuma(&self) -> Result<Yokonuma<crate::scalars::Scalar>, VerifyError> {
        let y = Yokonuma::new(self.r, self.n)?;
        if y.dimension() > self.budget {
            return Err(VerifyError::Budget { dim: y.dimension(), budget: self.budget });
        }
        Ok(y)
    }

    fn et(&self) -> Result<BraidsTies<crate::scalars::Scalar>, VerifyError> {
        let et = BraidsTies::new(self.n)?;
        if et.dimension() > self.budget {
            return Err(VerifyError::Budget { dim: et.dimension(), budget: self.budget });
        }
        Ok(et)
    }

    fn alphas(&self) -> Result<Vec<Partition>, VerifyError> {
        match &self.alpha {
            Some(a) if a.size() != self.n => Err(VerifyError::Usage(format!("{a} is not a partition of {}", self.n))),
            Some(a) => Ok(vec![a.clone()]),
            None => Ok(partitions(self.n)),
        }
    }
}

/// `|Std(Λ)|` by the closed formula and by enumeration, the sum of squares
/// against `b_n n!`, and its refinement by type.
pub fn counting_check(n: usize) -> Vec<Check> {
    let shapes = lambda_shapes(n);
    let counts: Vec<(u128, u128)> =
        shapes.par_iter().map(|s| (std_count_formula(s), s.standard_tableaux().len() as u128)).collect();
    let nf = factorial(n);
    let total_formula: u128 = counts.iter().map(|c| c.0 * c.0).sum();
    let total_enum: u128 = counts.iter().map(|c| c.1 * c.1).sum();
    let paired: Vec<(&LambdaShape, &(u128, u128))> = shapes.iter().zip(&counts).collect();
    let mut out = vec![
        Check::all(format!("counting n = {n}: |Std(Lambda)| formula = enumeration"), paired, |(_, c)| c.0 == c.1),
        Check::new(
            format!("counting n = {n}: sum |Std(Lambda)|^2 = b_n n!"),
            total_formula == total_enum && total_enum == bell(n) * nf,
            format!("{total_enum} = {} * {nf}", bell(n)),
        ),
    ];
    out.push(Check::all(format!("counting n = {n}: per type sum = b_n(alpha) n!"), partitions(n), |alpha| {
        let s: u128 = shapes
            .iter()
            .zip(&counts)
            .filter(|(sh, _)| &sh.type_partition() == alpha)
            .map(|(_, c)| c.1 * c.1)
            .sum();
        s == faa_di_bruno(alpha) * nf
    }));
    out
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Report, VerifyError> {
    let (r, n, seed, samples) = (cfg.r, cfg.n, cfg.seed, cfg.samples);
    if r == 0 || n == 0 {
        return Err(VerifyError::Usage("r and n must be positive".into()));
    }
    let checks = match name {
        "relations-y" => y_relations_check(&cfg.yokonuma()?),
        "relations-et" => et_relations_check(&cfg.et()?),
        "tensor-rep" => tensor_check(&cfg.yokonuma()?, &TensorSpace::new(r, n, cfg.budget)?, seed, samples),
        "faithful" => {
            let y = cfg.yokonuma()?;
            let rank = faithfulness_rank(&y, &TensorSpace::new(r, n, cfg.budget)?)?;
            vec![Check::new(
                format!("faithful ({r},{n}): rank of rho = r^n n!"),
                rank == y.dimension(),
                format!("rank {rank}, r^n n! = {}", y.dimension()),
            )]
        }
        "shoji" => shoji_check(&TensorSpace::new(r, n, cfg.budget)?),
        "mak" => mak_check(&TensorSpace::new(r, n, cfg.budget)?),
        "lusztig" => {
            let y = cfg.yokonuma()?;
            lusztig_check(&y, &y.cellular_basis(cfg.budget)?)
        }
        "cellular-y" => {
            let y = cfg.yokonuma()?;
            cellular_check(&y, &y.cellular_basis(cfg.budget)?, seed, samples)
        }
        "jm" => {
            let y = cfg.yokonuma()?;
            jm_check(&y, &y.cellular_basis(cfg.budget)?)
        }
        "cellular-et" => {
            let et = cfg.et()?;
            let b = et.cellular_basis(cfg.budget)?;
            let mut c = et_cellular_check(&et, &b, seed, samples);
            c.extend(commutation_check(&et));
            for alpha in cfg.alphas()? {
                c.extend(lemamulti_check(&et, &alpha));
            }
            c
        }
        "mobius" => mobius_check(&cfg.et()?, seed, samples.min(20)),
        "decompose" => decompose_check(&cfg.et()?, seed, samples.min(20)),
        "wreath" => {
            let et = cfg.et()?;
            cfg.alphas()?.par_iter().flat_map(|a| wreath_check(&et, a)).collect()
        }
        "psi" => {
            let et = cfg.et()?;
            cfg.alphas()?.par_iter().flat_map(|a| psi_check(&et, a, seed, samples)).collect()
        }
        "phi-embed" => {
            let et = cfg.et()?;
            let mut c = phi_check(&et, &cfg.yokonuma()?, seed, samples.min(20));
            if r >= n {
                c.extend(phi_embedding_check(r, n, cfg.budget)?);
            }
            c
        }
        "counting" => {
            let mut c = counting_check(n);
            c.push(structure_dim_check(r, n));
            c
        }
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    };
    Ok(Report::new(name, seed, checks))
}

/// Runs several suites on a worker pool, keeping the requested order.
pub fn run_suites(names: &[&str], cfg: &VerifyConfig) -> Vec<Result<Report, VerifyError>> {
    names.par_iter().map(|s| run_suite(s, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_small() {
        for n in 1..=4 {
            assert!(counting_check(n).iter().all(|c| c.pass));
        }
        assert!(counting_check(4)[1].detail.starts_with("360 = 15 * 24"));
    }

    #[test]
    fn every_suite_runs_small() {
        let cfg = VerifyConfig { r: 2, n: 2, samples: 5, ..Default::default() };
        for s in SUITES {
            let rep = run_suite(s, &cfg).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn errors() {
        let cfg = VerifyConfig::default();
        assert!(matches!(run_suite("nope", &cfg), Err(VerifyError::UnknownSuite(_))));
        let small = VerifyConfig { budget: 10, ..Default::default() };
        assert!(matches!(run_suite("relations-y", &small), Err(VerifyError::Budget { .. })));
        let bad = VerifyConfig { alpha: Some(Partition(vec![2])), ..Default::default() };
        assert!(matches!(run_suite("psi", &bad), Err(VerifyError::Usage(_))));
    }
}
