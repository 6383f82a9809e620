//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. All equalities are exact integer identities with zero tolerance;
//! the stated wall-clock bounds are asserted as well.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;

use fecount::formulas::{
    fe_dedekind_free, fe_dedekind_module, fe_dedekind_nonfree, fe_dedekind_rank,
};
use fecount::monoid::{FiniteAbelianGroup, ModuleClass, PicardSpec};
use fecount::nu::{max_distinct_sizes, nu, nu_p, nu_table, nu_table_limited};
use fecount::oracle::{oracle_count_dedekind, oracle_count_product};
use fecount::partition::{count_partitions, partitions};
use fecount::BigCount;

fn finish(criterion: &str, start: Instant, budget_secs: u64) {
    let elapsed = start.elapsed();
    println!("criterion {criterion}: PASS ({elapsed:.2?})");
    assert!(
        elapsed.as_secs() < budget_secs,
        "criterion {criterion} exceeded its {budget_secs} s budget: {elapsed:?}"
    );
}

#[test]
fn c01_paper_values_nu_6_2() {
    let start = Instant::now();
    assert_eq!(nu(6, 2).unwrap(), BigCount::from(6u64));
    assert_eq!(nu_p(6, 2, 2).unwrap(), BigCount::from(1u64));
    finish("1 (nu(6,2) and nu(6,2,2))", start, 5);
}

#[test]
fn c02_nu_n_1_is_divisor_count() {
    let start = Instant::now();
    let table = nu_table(500).unwrap();
    for n in 1..=500 {
        assert_eq!(
            table.get(n, 1),
            &BigUint::from(common::divisor_count(n)),
            "nu({n},1)"
        );
    }
    finish("2 (nu(n,1) = div(n), n <= 500)", start, 5);
}

#[test]
fn c03_triangle_bound() {
    let start = Instant::now();
    let table = nu_table(200).unwrap();
    for n in 1..=200u64 {
        for k in 1..=n {
            if n < k * (k + 1) / 2 {
                assert!(table.get(n, k).is_zero(), "nu({n},{k}) below triangle bound");
            }
        }
    }
    finish("3 (nu(n,k) = 0 for n < k(k+1)/2, n <= 200)", start, 5);
}

#[test]
fn c04_row_sums_match_pentagonal_recurrence() {
    let start = Instant::now();
    let table = nu_table(200).unwrap();
    let pentagonal = common::pentagonal_partition_table(200);
    for n in 1..=200u64 {
        let sum: BigUint = table.row(n).iter().sum();
        assert_eq!(sum, pentagonal[n as usize], "row sum for n = {n}");
    }
    finish("4 (sum_k nu(n,k) = p(n) vs pentagonal, n <= 200)", start, 10);
}

#[test]
fn c05_product_oracle_matches_power_of_p() {
    let start = Instant::now();
    for n in 0..=8u64 {
        let p_n = count_partitions(n).unwrap();
        for t in 1..=3u64 {
            assert_eq!(
                oracle_count_product(n, t).unwrap(),
                p_n.pow(t as u32),
                "n = {n}, t = {t}"
            );
        }
    }
    finish("5 (oracle over N^t = p(n)^t, n <= 8, t <= 3)", start, 30);
}

#[test]
fn c06_rank_formula_matches_oracle_sum_over_targets() {
    let start = Instant::now();
    for d in [1u64, 2, 3, 4, 6] {
        let group = FiniteAbelianGroup::cyclic(d).unwrap();
        for n in 1..=10u64 {
            let mut oracle_total = BigCount::zero();
            for target in group.elements() {
                let x = ModuleClass::new(n, target).unwrap();
                oracle_total += oracle_count_dedekind(&x, &group).unwrap();
            }
            let formula = fe_dedekind_rank(n, &PicardSpec::Finite(group.clone())).unwrap();
            assert_eq!(oracle_total, formula, "n = {n}, d = {d}");
        }
    }
    finish(
        "6 (rank formula = oracle over all targets, n <= 10, d in {1,2,3,4,6})",
        start,
        60,
    );
}

#[test]
fn c07_free_and_nonfree_formulas_match_oracle() {
    let start = Instant::now();
    for p in [2u64, 3, 5] {
        let group = FiniteAbelianGroup::cyclic(p).unwrap();
        for n in 1..=12u64 {
            let free_formula = fe_dedekind_free(n, p).unwrap();
            let free_oracle =
                oracle_count_dedekind(&ModuleClass::free(n, &group), &group).unwrap();
            assert_eq!(free_formula, free_oracle, "free: n = {n}, p = {p}");

            let nonfree_formula = fe_dedekind_nonfree(n, p).unwrap();
            for r in 1..p {
                let target = group.element(&[r]).unwrap();
                let x = ModuleClass::new(n, target).unwrap();
                let nonfree_oracle = oracle_count_dedekind(&x, &group).unwrap();
                assert_eq!(
                    nonfree_formula, nonfree_oracle,
                    "non-free: n = {n}, p = {p}, target = {r}"
                );
            }
        }
    }
    finish(
        "7 (free/non-free formulas = oracle, n <= 12, p in {2,3,5})",
        start,
        120,
    );
}

#[test]
fn c08_picard_sum_identity() {
    let start = Instant::now();
    for p in [2u64, 3, 5, 7] {
        let pic = PicardSpec::Finite(FiniteAbelianGroup::cyclic(p).unwrap());
        for n in 1..=50u64 {
            let lhs = fe_dedekind_free(n, p).unwrap()
                + BigCount::from(p - 1) * fe_dedekind_nonfree(n, p).unwrap();
            let rhs = fe_dedekind_rank(n, &pic).unwrap();
            assert_eq!(lhs, rhs, "n = {n}, p = {p}");
        }
    }
    finish(
        "8 (fe_free + (p-1) fe_nonfree = sum_k nu(n,k) p^k, n <= 50)",
        start,
        5,
    );
}

#[test]
fn c09_scaling_identity_matches_filtered_enumeration() {
    let start = Instant::now();
    for p in [2u64, 3, 5] {
        for n in 1..=40u64 {
            let k_max = max_distinct_sizes(n).min(8);
            let mut brute = vec![0u64; k_max as usize + 1];
            for part in partitions(n) {
                let k = part.distinct_sizes();
                if k >= 1 && k <= k_max && part.distinct_size_set().iter().all(|s| s % p == 0) {
                    brute[k as usize] += 1;
                }
            }
            for k in 1..=k_max {
                assert_eq!(
                    nu_p(n, k, p).unwrap(),
                    BigCount::from(brute[k as usize]),
                    "n = {n}, k = {k}, p = {p}"
                );
            }
        }
    }
    finish(
        "9 (nu(n,k,p) scaling identity vs filtered enumeration, n <= 40)",
        start,
        30,
    );
}

#[test]
fn c10_extension_formula_matches_oracle_on_composite_groups() {
    let start = Instant::now();
    let groups = [
        FiniteAbelianGroup::cyclic(4).unwrap(),
        FiniteAbelianGroup::cyclic(6).unwrap(),
        FiniteAbelianGroup::new(vec![2, 2]).unwrap(),
    ];
    for group in &groups {
        for n in 1..=8u64 {
            for target in group.elements() {
                let formula = fe_dedekind_module(n, group, &target).unwrap();
                let x = ModuleClass::new(n, target.clone()).unwrap();
                let oracle = oracle_count_dedekind(&x, group).unwrap();
                assert_eq!(formula, oracle, "group {group}, n = {n}, target = {target}");
            }
        }
    }
    finish(
        "10 (extension formula = oracle over Z/4, Z/6, Z/2xZ/2, n <= 8)",
        start,
        120,
    );
}

#[test]
fn c11_performance_budget() {
    let start = Instant::now();
    let p1000 = count_partitions(1000).unwrap();
    assert_eq!(
        p1000,
        BigCount::Finite(
            "24061467864032622473692149727991"
                .parse::<BigUint>()
                .unwrap()
        )
    );
    let table = nu_table_limited(300, 300).unwrap();
    // Spot check against the pentagonal oracle.
    let pentagonal = common::pentagonal_partition_table(300);
    let sum: BigUint = table.row(300).iter().sum();
    assert_eq!(sum, pentagonal[300]);
    finish("11 (p(1000) and full nu table to n = 300)", start, 5);
}
