use std::time::Instant;

use yhe_core::braidsties::{
    commutation_check, decompose_check, et_cellular_check, lemamulti_check, mobius_check, psi_check, relations_check,
    wreath_check, BraidsTies,
};
use yhe_core::combinatorics::{partitions, Partition};
use yhe_core::report::Check;
use yhe_core::yokonuma::DEFAULT_BUDGET;

fn assert_all(label: &str, checks: &[Check]) {
    for c in checks {
        println!("{label}: {c}");
    }
    assert!(checks.iter().all(|c| c.pass), "{label} failed");
}

#[test]
fn defining_relations_and_idempotents() {
    for n in 2..=4 {
        let now = Instant::now();
        let et = BraidsTies::new(n).unwrap();
        assert_all(&format!("n = {n}"), &relations_check(&et));
        assert_all(&format!("n = {n}"), &mobius_check(&et, 7, 5));
        assert_all(&format!("n = {n}"), &decompose_check(&et, 7, 5));
        println!("n = {n} relations in {:?}", now.elapsed());
    }
}

#[test]
fn cellular_structure() {
    for n in 2..=4 {
        let now = Instant::now();
        let et = BraidsTies::new(n).unwrap();
        let b = et.cellular_basis(DEFAULT_BUDGET).unwrap();
        println!("n = {n} basis in {:?}", now.elapsed());
        assert_all(&format!("n = {n}"), &et_cellular_check(&et, &b, 11, 20));
        assert_all(&format!("n = {n}"), &commutation_check(&et));
        println!("n = {n} cellular in {:?}", now.elapsed());
    }
}

#[test]
fn wreath_subalgebra_and_matrix_form() {
    let et = BraidsTies::new(4).unwrap();
    for alpha in partitions(4) {
        let now = Instant::now();
        assert_all(&format!("{alpha}"), &wreath_check(&et, &alpha));
        assert_all(&format!("{alpha}"), &psi_check(&et, &alpha, 3, 10));
        println!("{alpha} in {:?}", now.elapsed());
    }
    let alpha = Partition(vec![2, 2]);
    assert_all("(2,2)", &lemamulti_check(&et, &alpha));
}
