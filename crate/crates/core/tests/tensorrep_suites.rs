use std::time::Instant;

use yhe_core::report::Check;
use yhe_core::tensorrep::{faithfulness_rank, mak_check, phi_embedding_check, shoji_check, tensor_check, TensorSpace};
use yhe_core::yokonuma::{Yokonuma, DEFAULT_BUDGET};

fn assert_all(label: &str, checks: &[Check]) {
    for c in checks {
        println!("{label}: {c}");
    }
    assert!(checks.iter().all(|c| c.pass), "{label} failed");
}

#[test]
fn faithful_ranks() {
    for (r, n) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
        let now = Instant::now();
        let y = Yokonuma::new(r, n).unwrap();
        let ts = TensorSpace::new(r, n, DEFAULT_BUDGET).unwrap();
        assert_eq!(faithfulness_rank(&y, &ts).unwrap(), y.dimension());
        println!("({r},{n}) rank {} in {:?}", y.dimension(), now.elapsed());
    }
}

#[test]
fn shoji_and_mak() {
    for (r, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let now = Instant::now();
        let ts = TensorSpace::new(r, n, DEFAULT_BUDGET).unwrap();
        assert_all(&format!("({r},{n})"), &shoji_check(&ts));
        assert_all(&format!("({r},{n})"), &mak_check(&ts));
        println!("({r},{n}) shoji in {:?}", now.elapsed());
    }
}

#[test]
fn tensor_relations() {
    for (r, n) in [(2, 2), (2, 3), (3, 2)] {
        let now = Instant::now();
        let y = Yokonuma::new(r, n).unwrap();
        let ts = TensorSpace::new(r, n, DEFAULT_BUDGET).unwrap();
        assert_all(&format!("({r},{n})"), &tensor_check(&y, &ts, 7, 20));
        println!("({r},{n}) tensor in {:?}", now.elapsed());
    }
}

#[test]
fn phi_embedding() {
    for (r, n) in [(1, 1), (2, 2), (3, 3)] {
        let now = Instant::now();
        assert_all(&format!("({r},{n})"), &phi_embedding_check(r, n, DEFAULT_BUDGET).unwrap());
        println!("({r},{n}) phi in {:?}", now.elapsed());
    }
}
