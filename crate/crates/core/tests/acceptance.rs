//! Acceptance gate: twelve criteria, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use yhe_core::braidsties::{
    decompose_check, et_cellular_check, mobius_check, psi_check, relations_check as et_relations, BraidsTies,
};
use yhe_core::combinatorics::{bell, factorial, lambda_shapes, partitions, Partition, SetPartition};
use yhe_core::linalg::rank_over_fractions;
use yhe_core::report::Check;
use yhe_core::symgroup::Perm;
use yhe_core::tensorrep::{
    faithfulness_rank, mak_check, phi_embedding_rank, shoji_check, structure_dim_check, structure_dim_terms,
    TensorSpace,
};
use yhe_core::verify::counting_check;
use yhe_core::yokonuma::{cellular_check, jm_check, lusztig_check, relations_check as y_relations, Yokonuma};

/// Every comparison is exact: counts and ranks must match to the unit, and
/// algebra elements are compared as canonical normal forms.
const COUNT_TOLERANCE: usize = 0;
const SEED: u64 = 20_240_601;
const SAMPLES: usize = 100;

const LIMIT_RELATIONS: Duration = Duration::from_secs(30);
const LIMIT_FAITHFUL: Duration = Duration::from_secs(120);
const LIMIT_SHOJI: Duration = Duration::from_secs(60);
const LIMIT_CELLULAR_Y: Duration = Duration::from_secs(120);
const LIMIT_JM: Duration = Duration::from_secs(180);
const LIMIT_CELLULAR_ET: Duration = Duration::from_secs(300);
const LIMIT_STRUCTURE: Duration = Duration::from_secs(1);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: &[Check], detail: impl Into<String>) -> Self {
        match checks.iter().find(|c| !c.pass) {
            Some(c) => Outcome { pass: false, detail: c.to_string() },
            None => Outcome { pass: true, detail: format!("{} checks; {}", checks.len(), detail.into()) },
        }
    }

    fn within(mut self, elapsed: Duration, limit: Duration) -> Self {
        if elapsed > limit {
            self.pass = false;
            self.detail = format!("{} [took {elapsed:?}, limit {limit:?}]", self.detail);
        }
        self
    }
}

#[allow(clippy::absurd_extreme_comparisons)]
fn close(a: usize, b: usize) -> bool {
    a.abs_diff(b) <= COUNT_TOLERANCE
}

/// `b_n(α)` by enumerating set partitions, independent of the closed formula.
fn count_type(n: usize, alpha: &Partition) -> usize {
    SetPartition::all(n).iter().filter(|a| &a.type_partition() == alpha).count()
}

fn c1_relations() -> Outcome {
    let mut checks = Vec::new();
    for (r, n) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        checks.extend(y_relations(&Yokonuma::new(r, n).unwrap()));
    }
    for n in 1..=5 {
        checks.extend(et_relations(&BraidsTies::new(n).unwrap()));
    }
    Outcome::from_checks(&checks, "r1-r6 at 4 sizes, E1-E9 for n <= 5")
}

fn c2_faithful() -> Outcome {
    let mut checks = Vec::new();
    let mut ranks = Vec::new();
    for (r, n, want) in [(1, 2, 2), (2, 2, 8), (3, 2, 18), (2, 3, 48)] {
        let y = Yokonuma::new(r, n).unwrap();
        let ts = TensorSpace::new(r, n, 100_000).unwrap();
        let rank = faithfulness_rank(&y, &ts).unwrap();
        let oracle = r.pow(n as u32) * factorial(n) as usize;
        ranks.push(format!("({r},{n}) {rank}"));
        checks.push(Check::new(format!("rank ({r},{n})"), close(rank, want) && close(rank, oracle), rank.to_string()));
    }
    Outcome::from_checks(&checks, ranks.join(", "))
}

fn c3_shoji() -> Outcome {
    let mut checks = Vec::new();
    for (r, n) in [(2, 2), (2, 3), (3, 2)] {
        let ts = TensorSpace::new(r, n, 100_000).unwrap();
        checks.extend(shoji_check(&ts));
        checks.extend(mak_check(&ts));
    }
    Outcome::from_checks(&checks, "(2,2), (2,3), (3,2)")
}

fn c4_cellular_y() -> Outcome {
    let mut checks = Vec::new();
    for (r, n) in [(2, 2), (2, 3), (3, 2)] {
        let y = Yokonuma::new(r, n).unwrap();
        let b = y.cellular_basis(100_000).unwrap();
        let want = r.pow(n as u32) * factorial(n) as usize;
        checks.push(Check::new(format!("count ({r},{n})"), close(b.len(), want), b.len().to_string()));
        checks.extend(cellular_check(&y, &b, SEED, 20));
    }
    Outcome::from_checks(&checks, "(2,2), (2,3), (3,2)")
}

fn c5_lusztig() -> Outcome {
    let mut checks = Vec::new();
    for (r, n) in [(2, 2), (2, 3)] {
        let y = Yokonuma::new(r, n).unwrap();
        checks.extend(lusztig_check(&y, &y.cellular_basis(100_000).unwrap()));
    }
    Outcome::from_checks(&checks, "rl1-rl7 at (2,2), (2,3)")
}

fn c6_jm() -> Outcome {
    let mut checks = Vec::new();
    for (r, n) in [(2, 3), (3, 2)] {
        let y = Yokonuma::new(r, n).unwrap();
        checks.extend(jm_check(&y, &y.cellular_basis(100_000).unwrap()));
    }
    Outcome::from_checks(&checks, "(2,3), (3,2)")
}

fn c7_mobius() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=4 {
        let et = BraidsTies::new(n).unwrap();
        checks.extend(mobius_check(&et, SEED, 10));
        checks.extend(decompose_check(&et, SEED, 10));
        for alpha in partitions(n) {
            let want = count_type(n, &alpha) * factorial(n) as usize;
            let got = et.set_partitions().iter().filter(|a| a.type_partition() == alpha).count() * factorial(n) as usize;
            checks.push(Check::new(format!("b_n(alpha) n! for {alpha}"), close(got, want), got.to_string()));
        }
    }
    // dim E_3^(2,1) by rank, against the count of set partitions of type (2,1)
    let et = BraidsTies::new(3).unwrap();
    let alpha = Partition(vec![2, 1]);
    let rows: Vec<_> = SetPartition::all(3)
        .into_iter()
        .filter(|a| a.type_partition() == alpha)
        .flat_map(|a| Perm::all(3).into_iter().map(move |w| (a, w)))
        .map(|(a, w)| et.coords(&et.right_mul_gw(&et.bbe(&a), &w)))
        .collect();
    let rank = rank_over_fractions(&rows);
    checks.push(Check::new("dim E_3^(2,1)", close(rank, 18) && close(rank, count_type(3, &alpha) * 6), rank.to_string()));
    Outcome::from_checks(&checks, "n <= 4; dim E_3^(2,1) = 18")
}

fn c8_counting() -> Outcome {
    let mut checks = Vec::new();
    let mut totals = Vec::new();
    for n in 1..=5 {
        let c = counting_check(n);
        totals.push(c[1].detail.split(' ').next().unwrap_or("?").to_string());
        checks.extend(c);
    }
    // independent oracle: b_n by counting set partitions
    let stated = [1usize, 4, 30, 360];
    for (n, want) in (1..=4).zip(stated) {
        let b = SetPartition::all(n).len() * factorial(n) as usize;
        checks.push(Check::new(format!("stated total n = {n}"), close(b, want) && totals[n - 1] == want.to_string(), ""));
    }
    let n5 = SetPartition::all(5).len() * 120;
    checks.push(Check::new("n = 5 paths agree", totals[4] == n5.to_string() && bell(5) == 52, totals[4].clone()));
    Outcome::from_checks(&checks, format!("totals {} for n = 1..5", totals.join(", ")))
}

fn c9_cellular_et() -> Outcome {
    let mut checks = Vec::new();
    let mut sizes = Vec::new();
    for (n, want) in [(2, 4), (3, 30), (4, 360)] {
        let et = BraidsTies::new(n).unwrap();
        let b = et.cellular_basis(100_000).unwrap();
        let pairs: usize = lambda_shapes(n).iter().map(|s| s.standard_tableaux().len().pow(2)).sum();
        sizes.push(b.len().to_string());
        checks.push(Check::new(format!("count n = {n}"), close(b.len(), want) && close(pairs, want), ""));
        checks.extend(et_cellular_check(&et, &b, SEED, SAMPLES));
    }
    Outcome::from_checks(&checks, format!("sizes {}; {SAMPLES} law samples each", sizes.join(", ")))
}

fn c10_psi() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3 {
        let et = BraidsTies::new(n).unwrap();
        for alpha in partitions(n) {
            checks.extend(psi_check(&et, &alpha, SEED, SAMPLES));
        }
    }
    Outcome::from_checks(&checks, format!("n <= 3, every alpha, {SAMPLES} pairs"))
}

fn c11_phi() -> Outcome {
    let mut checks = Vec::new();
    let mut ranks = Vec::new();
    for (r, n, want) in [(2, 2, 4), (3, 3, 30)] {
        let rank = phi_embedding_rank(&Yokonuma::new(r, n).unwrap());
        let oracle = SetPartition::all(n).len() * factorial(n) as usize;
        ranks.push(format!("({r},{n}) {rank}"));
        checks.push(Check::new(format!("phi rank ({r},{n})"), close(rank, want) && close(rank, oracle), ""));
    }
    Outcome::from_checks(&checks, ranks.join(", "))
}

fn c12_structure() -> Outcome {
    let mut checks = Vec::new();
    for r in 1..=3 {
        for n in 1..=4 {
            checks.push(structure_dim_check(r, n));
            // oracle: the terms are indexed by compositions of n into r parts
            let comps = structure_dim_terms(r, n).len();
            let want = (1..r).fold(1usize, |acc, k| acc * (n + k) / k);
            checks.push(Check::new(format!("compositions ({r},{n})"), close(comps, want), ""));
        }
    }
    Outcome::from_checks(&checks, "r <= 3, n <= 4")
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 12] = [
        ("1 relation suites", c1_relations, Some(LIMIT_RELATIONS)),
        ("2 faithfulness", c2_faithful, Some(LIMIT_FAITHFUL)),
        ("3 Shoji identity and modified Ariki-Koike relations", c3_shoji, Some(LIMIT_SHOJI)),
        ("4 cellular basis of Y", c4_cellular_y, Some(LIMIT_CELLULAR_Y)),
        ("5 Lusztig presentation", c5_lusztig, None),
        ("6 JM triangularity", c6_jm, Some(LIMIT_JM)),
        ("7 Mobius idempotents and decomposition", c7_mobius, None),
        ("8 counting identities", c8_counting, None),
        ("9 cellular basis of E", c9_cellular_et, Some(LIMIT_CELLULAR_ET)),
        ("10 psi isomorphism", c10_psi, None),
        ("11 embedding phi", c11_phi, None),
        ("12 structure dimension identity", c12_structure, Some(LIMIT_STRUCTURE)),
    ];
    let mut failed = Vec::new();
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let mut out = f();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            out = out.within(elapsed, limit);
        }
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {} ({:.2?})", out.detail, elapsed);
        if !out.pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
