//! Brute-force enumeration of solution tuples `(Z_1, ..., Z_n)` of the
//! direct-sum equation `X = Z_1 + Z_2^2 + ... + Z_n^n` in the monoids `N`,
//! `N^t` and `[N+ x G] u {0}`.
//!
//! Exhaustive by construction, with no symmetry reduction: this is the
//! ground truth every closed formula is checked against. Every yielded
//! tuple re-verifies its defining equation on emission.

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::monoid::{FiniteAbelianGroup, GroupElement, ModuleClass};
use crate::partition::{partitions, Partition};

/// Default ceiling on the rank of `X` for Dedekind-monoid enumeration;
/// the search space is `p(n) * |G|^k`.
pub const DEFAULT_DEDEKIND_CEILING: u64 = 14;

/// Default ceiling on `n * t` for product-monoid enumeration; the stream
/// has `p(n)^t` entries.
pub const DEFAULT_PRODUCT_CEILING: u64 = 40;

/// All multiplicity vectors `(z_1, ..., z_n)` with `sum i * z_i = n`, in
/// the canonical partition order. Bijective with `partitions(n)`.
pub fn enumerate_rank_solutions(n: u64) -> impl Iterator<Item = Vec<u64>> {
    partitions(n).map(move |p| {
        let mult = p.multiplicities().to_vec();
        let total: u64 = mult
            .iter()
            .enumerate()
            .map(|(i, &z)| (i as u64 + 1) * z)
            .sum();
        assert_eq!(total, n, "rank solution fails its equation");
        mult
    })
}

/// All solutions of the `t` simultaneous rank equations over `N^t`: each
/// entry of a yielded tuple is the length-`t` vector `(z_i^(1), ...,
/// z_i^(t))`. The stream has `p(n)^t` entries, first component most
/// significant in the emission order.
pub fn enumerate_product_solutions(
    n: u64,
    t: u64,
) -> Result<impl Iterator<Item = Vec<Vec<u64>>>> {
    enumerate_product_solutions_limited(n, t, DEFAULT_PRODUCT_CEILING)
}

pub fn enumerate_product_solutions_limited(
    n: u64,
    t: u64,
    ceiling: u64,
) -> Result<impl Iterator<Item = Vec<Vec<u64>>>> {
    if t == 0 {
        return Err(Error::IncompatibleSpec("product needs t >= 1".into()));
    }
    if n * t > ceiling {
        return Err(Error::ResourceLimit {
            what: "product enumeration n * t",
            requested: n * t,
            ceiling,
        });
    }
    let parts: Vec<Partition> = partitions(n).collect();
    let t = t as usize;
    Ok(MultiIndex::new(parts.len(), t).map(move |choice| {
        let tuple: Vec<Vec<u64>> = (0..n as usize)
            .map(|i| {
                choice
                    .iter()
                    .map(|&c| parts[c].multiplicities()[i])
                    .collect()
            })
            .collect();
        for component in 0..t {
            let total: u64 = tuple
                .iter()
                .enumerate()
                .map(|(i, zs)| (i as u64 + 1) * zs[component])
                .sum();
            assert_eq!(total, n, "product solution fails component {component}");
        }
        tuple
    }))
}

/// All tuples `(Z_1, ..., Z_n)` of module classes, `n = rank(X)`, whose
/// weighted direct sum equals `X`. Rank solutions run in the canonical
/// partition order; determinant assignments for the nonzero entries run
/// in odometer (lexicographic residue-vector) order.
pub fn enumerate_dedekind_solutions<'a>(
    x: &ModuleClass,
    group: &'a FiniteAbelianGroup,
) -> Result<impl Iterator<Item = Vec<ModuleClass>> + 'a> {
    enumerate_dedekind_solutions_limited(x, group, DEFAULT_DEDEKIND_CEILING)
}

pub fn enumerate_dedekind_solutions_limited<'a>(
    x: &ModuleClass,
    group: &'a FiniteAbelianGroup,
    ceiling: u64,
) -> Result<impl Iterator<Item = Vec<ModuleClass>> + 'a> {
    let ModuleClass::Class { rank: n, det: target } = x else {
        return Err(Error::IncompatibleSpec(
            "dedekind enumeration needs a non-zero state class".into(),
        ));
    };
    if target.group() != group {
        return Err(Error::GroupMismatch(format!(
            "state determinant lives in {}, expected {}",
            target.group(),
            group
        )));
    }
    if *n > ceiling {
        return Err(Error::ResourceLimit {
            what: "dedekind enumeration rank",
            requested: *n,
            ceiling,
        });
    }
    let n = *n;
    let target = target.clone();
    let x = x.clone();
    let elements: Vec<GroupElement> = group.elements().collect();
    Ok(partitions(n).flat_map(move |part| {
        let support = part.distinct_size_set();
        let mult = part.multiplicities().to_vec();
        let target = target.clone();
        let x = x.clone();
        let elements = elements.clone();
        MultiIndex::new(elements.len(), support.len()).filter_map(move |choice| {
            // Determinant equation: sum over nonzero entries of i * a_i.
            let mut det_sum = target.group().identity();
            for (&size, &c) in support.iter().zip(&choice) {
                det_sum = det_sum.add(&elements[c].scale(size)).expect("same group");
            }
            if det_sum != target {
                return None;
            }
            let mut entries = vec![ModuleClass::Zero; n as usize];
            for (&size, &c) in support.iter().zip(&choice) {
                let idx = size as usize - 1;
                entries[idx] = ModuleClass::Class {
                    rank: mult[idx],
                    det: elements[c].clone(),
                };
            }
            // Self-check: the weighted direct sum must reproduce X.
            let mut sum = ModuleClass::Zero;
            for (i, z) in entries.iter().enumerate() {
                sum = sum
                    .direct_sum(&z.repeated(i as u64 + 1))
                    .expect("same group");
            }
            assert_eq!(sum, x, "dedekind solution fails its equation");
            Some(entries)
        })
    }))
}

/// Exact length of the rank-solution stream.
pub fn oracle_count_rank(n: u64) -> BigCount {
    BigCount::from(enumerate_rank_solutions(n).count() as u64)
}

/// Exact length of the product-solution stream.
pub fn oracle_count_product(n: u64, t: u64) -> Result<BigCount> {
    Ok(BigCount::from(
        enumerate_product_solutions(n, t)?.count() as u64
    ))
}

/// Exact length of the Dedekind-solution stream.
pub fn oracle_count_dedekind(x: &ModuleClass, group: &FiniteAbelianGroup) -> Result<BigCount> {
    Ok(BigCount::from(
        enumerate_dedekind_solutions(x, group)?.count() as u64,
    ))
}

/// Odometer over `digits` positions with the given base, first position
/// most significant. Yields the single empty choice when `digits == 0`.
struct MultiIndex {
    base: usize,
    current: Vec<usize>,
    done: bool,
}

impl MultiIndex {
    fn new(base: usize, digits: usize) -> Self {
        MultiIndex {
            base,
            current: vec![0; digits],
            done: base == 0 && digits > 0,
        }
    }
}

impl Iterator for MultiIndex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut pos = self.current.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.current[pos] += 1;
            if self.current[pos] < self.base {
                break;
            }
            self.current[pos] = 0;
        }
        Some(out)
    }
}
