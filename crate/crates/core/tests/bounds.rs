use num_bigint::BigUint;
use proptest::prelude::*;
use reebforge::bounds::{
    binomial, bound_closed, bound_general, bound_reeb, bound_sign_components, univariate_sign_components,
    BoundName, BoundParams, Polynomial,
};

fn linear_product(roots: &[i64]) -> Polynomial {
    roots.iter().fold(Polynomial::from_i64(&[1]), |acc, &r| acc.mul(&Polynomial::from_i64(&[-r, 1])))
}

// Evaluates the double sum term by term, independently of the library's prefix-sum form.
fn naive_double_sum(top: u64, d: u64, k: u64) -> BigUint {
    let mut total = BigUint::from(0u32);
    for i in 0..=k {
        for j in 0..=(k - i) {
            total += binomial(top, j) * BigUint::from(6u32).pow(j as u32) * d * BigUint::from(2 * d - 1).pow((k - 1) as u32);
        }
    }
    total
}

#[test]
fn hand_evaluated_values() {
    assert_eq!(bound_closed(1, 2, 1).unwrap(), BigUint::from(28u32));
    assert_eq!(bound_general(1, 2, 1).unwrap(), BigUint::from(40u32));
    assert_eq!(bound_sign_components(1, 1, 1).unwrap(), BigUint::from(4u32));
    assert_eq!(bound_reeb(2, 3, 2, 1, 2).unwrap(), BigUint::from(10077696u32));
}

#[test]
fn interval_is_within_the_closed_bound() {
    // {x^2 <= 1} is an interval: total Betti number 1
    assert!(BigUint::from(1u32) <= bound_closed(1, 2, 1).unwrap());
}

#[test]
fn sign_condition_counts_are_within_bound() {
    let families: Vec<Vec<&str>> = vec![vec!["X"], vec!["X", "X-1"], vec!["X^2-1"]];
    let expected = [3, 5, 5];
    for (family, want) in families.iter().zip(expected) {
        let polys: Vec<Polynomial> = family.iter().map(|p| p.parse().unwrap()).collect();
        let actual = univariate_sign_components(&polys).unwrap();
        assert_eq!(actual, want);
        let d = polys.iter().map(Polynomial::degree).max().unwrap() as u64;
        assert!(BigUint::from(actual) <= bound_sign_components(polys.len() as u64, d, 1).unwrap());
    }
}

#[test]
fn large_parameters_stay_exact() {
    let v = bound_general(10, 7, 6).unwrap();
    assert_eq!(v, naive_double_sum(2 * 6 * 10 + 1, 7, 6));
    assert!(v.bits() > 64);
}

fn params(s: u64, d: u64, k: u64) -> BoundParams {
    BoundParams { s, d, k, n: k, m: s, c: 1 + (d % 2) }
}

proptest! {
    #[test]
    fn closed_and_general_match_naive_sums(s in 1u64..6, d in 1u64..6, k in 1u64..5) {
        prop_assert_eq!(bound_closed(s, d, k).unwrap(), naive_double_sum(s + 1, d, k));
        prop_assert_eq!(bound_general(s, d, k).unwrap(), naive_double_sum(2 * k * s + 1, d, k));
        prop_assert!(bound_general(s, d, k).unwrap() >= bound_closed(s, d, k).unwrap());
    }

    #[test]
    fn bounds_are_monotone(s in 1u64..5, d in 1u64..5, k in 1u64..4, which in 0usize..6) {
        let base = params(s, d, k);
        let mut bigger = base;
        match which {
            0 => bigger.s += 1,
            1 => bigger.d += 1,
            2 => bigger.k += 1,
            3 => bigger.n += 1,
            4 => bigger.m += 1,
            _ => bigger.c += 1,
        }
        for name in BoundName::ALL {
            prop_assert!(name.evaluate(&bigger).unwrap() >= name.evaluate(&base).unwrap(), "{:?}", name);
        }
    }

    #[test]
    fn root_isolation_counts_distinct_roots(roots in prop::collection::vec(-6i64..7, 1..6), extra in 0usize..3) {
        let mut p = linear_product(&roots);
        // multiply by x^2 + 1 factors, which add no real roots
        for _ in 0..extra {
            p = p.mul(&Polynomial::from_i64(&[1, 0, 1]));
        }
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(univariate_sign_components(&[p.clone()]).unwrap(), 2 * distinct.len() + 1);
    }

    #[test]
    fn families_never_exceed_the_sign_bound(family in prop::collection::vec(prop::collection::vec(-4i64..5, 1..4), 1..4)) {
        let polys: Vec<Polynomial> = family.iter().map(|roots| linear_product(roots)).collect();
        let actual = univariate_sign_components(&polys).unwrap();
        let d = polys.iter().map(Polynomial::degree).max().unwrap() as u64;
        prop_assert!(BigUint::from(actual) <= bound_sign_components(polys.len() as u64, d, 1).unwrap());
    }
}
