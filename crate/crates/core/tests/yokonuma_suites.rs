use std::time::Instant;

use yhe_core::report::Check;
use yhe_core::yokonuma::{cellular_check, jm_check, lusztig_check, relations_check, Yokonuma, DEFAULT_BUDGET};

fn assert_all(label: &str, checks: &[Check]) {
    for c in checks {
        println!("{label}: {c}");
    }
    assert!(checks.iter().all(|c| c.pass), "{label} failed");
}

#[test]
fn defining_relations() {
    for (r, n) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        let now = Instant::now();
        let y = Yokonuma::new(r, n).unwrap();
        assert_all(&format!("({r},{n})"), &relations_check(&y));
        println!("({r},{n}) relations in {:?}", now.elapsed());
    }
}

#[test]
fn cellular_structure() {
    for (r, n) in [(2, 2), (2, 3), (3, 2)] {
        let now = Instant::now();
        let y = Yokonuma::new(r, n).unwrap();
        let b = y.cellular_basis(DEFAULT_BUDGET).unwrap();
        assert_all(&format!("({r},{n})"), &cellular_check(&y, &b, 0, 20));
        println!("({r},{n}) cellular in {:?}", now.elapsed());
    }
}

#[test]
fn lusztig_presentation() {
    for (r, n) in [(2, 2), (2, 3)] {
        let y = Yokonuma::new(r, n).unwrap();
        let b = y.cellular_basis(DEFAULT_BUDGET).unwrap();
        assert_all(&format!("({r},{n})"), &lusztig_check(&y, &b));
    }
}

#[test]
fn jucys_murphy() {
    for (r, n) in [(1, 2), (2, 3), (3, 2)] {
        let now = Instant::now();
        let y = Yokonuma::new(r, n).unwrap();
        let b = y.cellular_basis(DEFAULT_BUDGET).unwrap();
        assert_all(&format!("({r},{n})"), &jm_check(&y, &b));
        println!("({r},{n}) jm in {:?}", now.elapsed());
    }
}
