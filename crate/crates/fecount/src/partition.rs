//! Integer partitions as multiplicity vectors, exact counting and
//! enumeration.
//!
//! A partition of `n` is stored as the multiplicity vector `(z_1, ..., z_n)`
//! of the linear diophantine equation `n = z_1 + 2 z_2 + ... + n z_n`, where
//! `z_i` is the number of parts of size `i`. Counting is a dynamic program
//! over part sizes; enumeration emits partitions in reverse-lexicographic
//! order of their weakly decreasing part lists.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::BigCount;
use crate::error::{Error, Result};

/// Default ceiling on `n` for table-building operations.
pub const DEFAULT_CEILING: u64 = 10_000;

/// A partition of a nonnegative integer `n`, encoded by part multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: u64,
    mult: Vec<u64>,
}

impl Partition {
    /// Builds a partition from its multiplicity vector `(z_1, ..., z_n)`.
    /// The weighted sum `sum i * z_i` must equal `n` and the vector must
    /// have exactly `n` entries (empty for `n = 0`).
    pub fn from_mult(n: u64, mult: Vec<u64>) -> Result<Self> {
        if mult.len() as u64 != n {
            return Err(Error::IncompatibleSpec(format!(
                "multiplicity vector has {} entries, expected {n}",
                mult.len()
            )));
        }
        let total: u64 = mult
            .iter()
            .enumerate()
            .map(|(i, &z)| (i as u64 + 1) * z)
            .sum();
        if total != n {
            return Err(Error::IncompatibleSpec(format!(
                "multiplicities sum to {total}, expected {n}"
            )));
        }
        Ok(Partition { n, mult })
    }

    /// Builds a partition from a list of parts (any order).
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::IncompatibleSpec("parts must be positive".into()));
        }
        let n: u64 = parts.iter().sum();
        let mut mult = vec![0u64; n as usize];
        for &p in parts {
            mult[p as usize - 1] += 1;
        }
        Partition::from_mult(n, mult)
    }

    /// The partitioned total `n`.
    pub fn total(&self) -> u64 {
        self.n
    }

    /// The multiplicity vector `(z_1, ..., z_n)`.
    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> Vec<u64> {
        let mut parts = Vec::new();
        for (i, &z) in self.mult.iter().enumerate().rev() {
            for _ in 0..z {
                parts.push(i as u64 + 1);
            }
        }
        parts
    }

    /// Number of distinct part sizes, `|{ i : z_i > 0 }|`.
    pub fn distinct_sizes(&self) -> u64 {
        self.mult.iter().filter(|&&z| z > 0).count() as u64
    }

    /// The distinct part sizes, ascending.
    pub fn distinct_size_set(&self) -> Vec<u64> {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &z)| z > 0)
            .map(|(i, _)| i as u64 + 1)
            .collect()
    }
}

impl fmt::Display for Partition {
    /// Renders the weakly decreasing part list, e.g. `(3,2,1)`; the empty
    /// partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts().iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Counts the partitions of `n` with the default resource ceiling.
pub fn count_partitions(n: u64) -> Result<BigCount> {
    count_partitions_limited(n, DEFAULT_CEILING)
}

/// Counts the partitions of `n`, rejecting `n` above `ceiling`.
///
/// Dynamic program over part sizes: after processing sizes `1..=i`, the
/// table entry `dp[m]` holds the number of partitions of `m` into parts of
/// size at most `i`. O(n^2) additions, O(n) stored values.
pub fn count_partitions_limited(n: u64, ceiling: u64) -> Result<BigCount> {
    if n > ceiling {
        return Err(Error::ResourceLimit {
            what: "partition total n",
            requested: n,
            ceiling,
        });
    }
    let n = n as usize;
    let mut dp = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    for size in 1..=n {
        for m in size..=n {
            let add = dp[m - size].clone();
            dp[m] += add;
        }
    }
    Ok(BigCount::Finite(dp[n].clone()))
}

/// Iterator over all partitions of `n` in reverse-lexicographic order of
/// the weakly decreasing part lists, e.g. for `n = 4`:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions(n: u64) -> PartitionIter {
    PartitionIter {
        n,
        parts: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct PartitionIter {
    n: u64,
    parts: Vec<u64>,
    started: bool,
    done: bool,
}

impl PartitionIter {
    fn current(&self) -> Partition {
        let mut mult = vec![0u64; self.n as usize];
        for &p in &self.parts {
            mult[p as usize - 1] += 1;
        }
        Partition {
            n: self.n,
            mult,
        }
    }

    /// Rewrites `self.parts` into its successor in reverse-lex order.
    /// Returns false when the current partition is the last one (all ones).
    fn advance(&mut self) -> bool {
        // Strip trailing ones, then decrement the rightmost part > 1 and
        // redistribute the freed amount greedily.
        let mut rem = 0u64;
        while matches!(self.parts.last(), Some(&1)) {
            self.parts.pop();
            rem += 1;
        }
        let Some(last) = self.parts.last_mut() else {
            return false;
        };
        *last -= 1;
        rem += 1;
        let cap = *self.parts.last().expect("nonempty");
        while rem > cap {
            self.parts.push(cap);
            rem -= cap;
        }
        if rem > 0 {
            self.parts.push(rem);
        }
        true
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(Partition {
                    n: 0,
                    mult: Vec::new(),
                });
            }
            self.parts = vec![self.n];
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}
