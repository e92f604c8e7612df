use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use yhe_core::braidsties::BraidsTies;
use yhe_core::combinatorics::{mobius, partitions, SetPartition};
use yhe_core::scalars::{rational, Cyclo, CycloQ, Field, Laurent, Ring, Scalar};
use yhe_core::symgroup::{coset_decompose, in_young_subgroup, is_distinguished, Perm};
use yhe_core::yokonuma::Yokonuma;

fn cyclo(r: u32) -> impl Strategy<Value = CycloQ> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 0..=r as usize)
        .prop_map(move |c| Cyclo::new(r, c.into_iter().map(|(a, b)| rational(a, b)).collect()))
}

fn scalar(r: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, cyclo(r)), 0..4).prop_map(Laurent::from_terms)
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    (1u32..=6).prop_flat_map(|r| (scalar(r), scalar(r), scalar(r)))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    let all = Perm::all(n);
    (0..all.len()).prop_map(move |k| all[k])
}

fn composition(n: usize) -> impl Strategy<Value = Vec<usize>> {
    // cut points of 1..n
    prop::collection::vec(any::<bool>(), n - 1).prop_map(move |cuts| {
        let mut out = vec![1];
        for c in cuts {
            if c {
                out.push(1);
            } else {
                *out.last_mut().unwrap() += 1;
            }
        }
        out
    })
}

fn set_partition(n: usize) -> impl Strategy<Value = SetPartition> {
    let all = SetPartition::all(n);
    (0..all.len()).prop_map(move |k| all[k])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).sub_ref(&b), a);
    }

    #[test]
    fn cyclotomic_inverse(x in (1u32..=6).prop_flat_map(cyclo)) {
        if !x.is_zero() {
            let inv = x.inv().expect("field");
            prop_assert!(inv.mul_ref(&x).is_one());
        }
    }

    #[test]
    fn root_of_unity(r in 1u32..=6, i in 0i64..6, j in 0i64..6) {
        let z = |k| CycloQ::zeta_pow(r, k);
        prop_assert!(z(r as i64).is_one());
        prop_assert!(z(1).pow(r).is_one());
        let (i, j) = (i % r as i64, j % r as i64);
        if i != j {
            let d = z(i).sub_ref(&z(j));
            prop_assert!(d.inv().expect("unit").mul_ref(&d).is_one());
        }
    }

    #[test]
    fn reduced_words((n, w) in (1usize..=5).prop_flat_map(|n| (Just(n), perm(n)))) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Perm::from_word(n, &word).unwrap(), w);
        for i in 1..n {
            let l = w.mul_simple(i).length();
            prop_assert!(l == w.length() + 1 || l + 1 == w.length());
            prop_assert_eq!(w.has_right_descent(i), l < w.length());
        }
    }

    #[test]
    fn coset_decomposition((w, comp) in (1usize..=5).prop_flat_map(|n| (perm(n), composition(n)))) {
        let (y, d) = coset_decompose(&w, &comp).unwrap();
        prop_assert_eq!(y.compose(&d), w);
        prop_assert!(in_young_subgroup(&y, &comp));
        prop_assert!(is_distinguished(&d, &comp));
        prop_assert_eq!(y.length() + d.length(), w.length());
    }

    #[test]
    fn set_partition_lattice(
        (a, b, v, w) in (1usize..=5).prop_flat_map(|n| (set_partition(n), set_partition(n), perm(n), perm(n)))
    ) {
        let j = a.join(&b);
        prop_assert!(a.refines(&j) && b.refines(&j));
        for c in SetPartition::all(a.degree()) {
            if a.refines(&c) && b.refines(&c) {
                prop_assert!(j.refines(&c));
            }
        }
        prop_assert_eq!(a.act(&v).act(&w), a.act(&v.compose(&w)));
        prop_assert_eq!(a.act(&v).type_partition(), a.type_partition());
    }

    #[test]
    fn mobius_inversion((a, c) in (1usize..=4).prop_flat_map(|n| (set_partition(n), set_partition(n)))) {
        if a.refines(&c) {
            let s: num_bigint::BigInt = SetPartition::all(a.degree())
                .iter()
                .filter(|b| a.refines(b) && b.refines(&c))
                .map(|b| mobius(&a, b))
                .sum();
            prop_assert_eq!(s, num_bigint::BigInt::from((a == c) as i32));
        }
    }

    #[test]
    fn yokonuma_associative_and_star(r in 1usize..=3, n in 1usize..=3, seed in any::<u64>()) {
        let y = Yokonuma::new(r, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (y.random_element(&mut rng, 3), y.random_element(&mut rng, 3), y.random_element(&mut rng, 3));
        prop_assert_eq!(y.mul(&y.mul(&a, &b), &c), y.mul(&a, &y.mul(&b, &c)));
        prop_assert_eq!(y.star(&y.mul(&a, &b)), y.mul(&y.star(&b), &y.star(&a)));
        let s = a.to_string();
        prop_assert_eq!(y.parse(&s).unwrap(), a);
    }

    #[test]
    fn braids_ties_algebra(n in 1usize..=4, seed in any::<u64>()) {
        let et = BraidsTies::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (et.random_element(&mut rng, 3), et.random_element(&mut rng, 3), et.random_element(&mut rng, 3));
        prop_assert_eq!(et.mul(&et.mul(&a, &b), &c), et.mul(&a, &et.mul(&b, &c)));
        prop_assert_eq!(et.star(&et.mul(&a, &b)), et.mul(&et.star(&b), &et.star(&a)));
        prop_assert_eq!(et.parse(&a.to_string()).unwrap(), a.clone());
        for alpha in partitions(n) {
            let e = et.bbe_alpha(&alpha);
            prop_assert_eq!(et.mul(&e, &a), et.mul(&a, &e));
        }
        let sum = et.decompose(&a).into_iter().fold(et.zero(), |acc, (_, x)| et.add(&acc, &x));
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn phi_is_multiplicative(r in 1usize..=3, n in 1usize..=3, seed in any::<u64>()) {
        let et = BraidsTies::new(n).unwrap();
        let y = Yokonuma::new(r, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (et.random_element(&mut rng, 3), et.random_element(&mut rng, 3));
        let ab = et.mul(&a, &b);
        let phi = |x| et.phi(x, &y).unwrap();
        prop_assert_eq!(phi(&ab), y.mul(&phi(&a), &phi(&b)));
    }
}

#[test]
fn scalar_identities() {
    let q = Scalar::q();
    assert!(q.mul_ref(&Scalar::q_inv()).is_one());
    assert!(!Scalar::one().is_zero());
}
