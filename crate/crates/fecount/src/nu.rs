//! The combinatorial numbers `nu(n,k)`: partitions of `n` with exactly `k`
//! distinct part sizes, and their divisibility refinements `nu(n,k,p)` and
//! `nu'(n,k,p)`.
//!
//! No closed form is known for `nu(n,k)`; the implementation is a dynamic
//! program over part sizes that tracks the number of distinct sizes used:
//!
//! `g(i,m,j)` = partitions of `m` with part sizes `<= i` and exactly `j`
//! distinct sizes, with `g(i,m,j) = g(i-1,m,j) + h(i,m,j)` where
//! `h(i,m,j) = g(i-1,m-i,j-1) + h(i,m-i,j)` counts those using size `i`
//! at least once. Then `nu(n,k) = g(n,n,k)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::partition::DEFAULT_CEILING;

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Largest `k` such that `k(k+1)/2 <= n`; partitions with more distinct
/// sizes than this cannot exist (the least is `(k, k-1, ..., 1)`).
pub fn max_distinct_sizes(n: u64) -> u64 {
    let mut k = 0u64;
    while (k + 1) * (k + 2) / 2 <= n {
        k += 1;
    }
    k
}

/// Runs the distinct-size DP for totals up to `n_max` and size bound
/// `n_max`, returning `g[m][j]` with `j <= j_max`. Row `g[m]` then holds
/// `nu(m, j)` for every `m <= n_max`, since parts of `m` never exceed `m`.
fn distinct_size_dp(n_max: usize, j_max: usize) -> Vec<Vec<BigUint>> {
    let mut g = vec![vec![BigUint::zero(); j_max + 1]; n_max + 1];
    g[0][0] = BigUint::one();
    let mut h = vec![vec![BigUint::zero(); j_max + 1]; n_max + 1];
    for size in 1..=n_max {
        for row in h.iter_mut() {
            for cell in row.iter_mut() {
                cell.set_zero();
            }
        }
        for m in size..=n_max {
            for j in 1..=j_max {
                let from_new_size = g[m - size][j - 1].clone();
                let from_repeat = h[m - size][j].clone();
                h[m][j] = from_new_size + from_repeat;
            }
        }
        for m in size..=n_max {
            for j in 1..=j_max {
                let add = h[m][j].clone();
                g[m][j] += add;
            }
        }
    }
    g
}

/// `nu(n,k)`: the number of partitions of `n` into exactly `k` different
/// summands. Requires `n >= 1`, `k >= 1`.
pub fn nu(n: u64, k: u64) -> Result<BigCount> {
    check_positive(n, k)?;
    if k > max_distinct_sizes(n) {
        return Ok(BigCount::zero());
    }
    let g = distinct_size_dp(n as usize, k as usize);
    Ok(BigCount::Finite(g[n as usize][k as usize].clone()))
}

/// The full row `nu(n, 1), ..., nu(n, n)` in one DP pass.
pub fn nu_row(n: u64) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Err(Error::IncompatibleSpec("nu requires n >= 1".into()));
    }
    let j_max = max_distinct_sizes(n) as usize;
    let g = distinct_size_dp(n as usize, j_max);
    let mut row = g[n as usize][1..].to_vec();
    row.resize(n as usize, BigUint::zero());
    Ok(row)
}

/// `nu(n,k,p)`: partitions counted by `nu(n,k)` in which every part size is
/// a multiple of the prime `p`. Computed by the scaling bijection that
/// divides each part size by `p`: `nu(n,k,p) = nu(n/p, k)` when `p | n`,
/// else `0`.
pub fn nu_p(n: u64, k: u64, p: u64) -> Result<BigCount> {
    check_positive(n, k)?;
    check_prime(p)?;
    if n % p != 0 {
        return Ok(BigCount::zero());
    }
    nu(n / p, k)
}

/// `nu'(n,k,p) = nu(n,k) - nu(n,k,p)`.
pub fn nu_prime_complement(n: u64, k: u64, p: u64) -> Result<BigCount> {
    let total = nu(n, k)?;
    let divisible = nu_p(n, k, p)?;
    Ok(total.saturating_finite_sub(&divisible))
}

/// The triangle `nu(n,k)` for `1 <= n <= n_max`, `1 <= k <= n`.
#[derive(Debug, Clone)]
pub struct NuTable {
    rows: Vec<Vec<BigUint>>,
}

impl NuTable {
    pub fn n_max(&self) -> u64 {
        self.rows.len() as u64
    }

    /// `nu(n,k)`; panics if out of range.
    pub fn get(&self, n: u64, k: u64) -> &BigUint {
        &self.rows[n as usize - 1][k as usize - 1]
    }

    /// Row `n` as `nu(n,1), ..., nu(n,n)`.
    pub fn row(&self, n: u64) -> &[BigUint] {
        &self.rows[n as usize - 1]
    }
}

/// Builds the `nu` triangle up to `n_max` in a single DP pass.
pub fn nu_table(n_max: u64) -> Result<NuTable> {
    nu_table_limited(n_max, DEFAULT_CEILING)
}

pub fn nu_table_limited(n_max: u64, ceiling: u64) -> Result<NuTable> {
    if n_max == 0 {
        return Err(Error::IncompatibleSpec("nu_table requires n_max >= 1".into()));
    }
    if n_max > ceiling {
        return Err(Error::ResourceLimit {
            what: "nu table n_max",
            requested: n_max,
            ceiling,
        });
    }
    let j_max = max_distinct_sizes(n_max) as usize;
    let g = distinct_size_dp(n_max as usize, j_max);
    let rows = (1..=n_max as usize)
        .map(|n| {
            let mut row = g[n][1..=j_max.min(n)].to_vec();
            row.resize(n, BigUint::zero());
            row
        })
        .collect();
    Ok(NuTable { rows })
}

fn check_positive(n: u64, k: u64) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::IncompatibleSpec(format!(
            "nu requires n >= 1 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}
