//! Independent oracles shared by the integration suites. These stay off
//! the implementation paths they check: the library counts partitions by
//! a DP over part sizes, the oracle here uses the Euler pentagonal
//! recurrence.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `p(0..=n_max)` via the pentagonal number recurrence
/// `p(i) = sum_k (-1)^(k+1) [ p(i - k(3k-1)/2) + p(i - k(3k+1)/2) ]`.
pub fn pentagonal_partition_table(n_max: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); n_max + 1];
    table[0] = BigUint::one();
    for i in 1..=n_max {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            if k % 2 == 1 {
                plus += &table[i - g1];
            } else {
                minus += &table[i - g1];
            }
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                if k % 2 == 1 {
                    plus += &table[i - g2];
                } else {
                    minus += &table[i - g2];
                }
            }
            k += 1;
        }
        table[i] = plus - minus;
    }
    table
}

/// Divisor count by trial division.
pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).count() as u64
}
