//! Closed formulas for the number of feedback-equivalence classes,
//! dispatching on the ring description.
//!
//! Projectively trivial rings reduce to the partition function; finite
//! products multiply per-factor counts; Dedekind domains combine the rank
//! equation over the naturals with a determinant equation in the Picard
//! group. The prime-order Picard formulas come with closed forms in terms
//! of `nu(n,k,p)`; arbitrary finite Picard groups are handled by summing
//! exact linear-congruence solution counts over the partitions of `n`,
//! which generalizes the prime-order statements and is gated by the
//! brute-force oracle in the test suite.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::monoid::{FiniteAbelianGroup, GroupElement, ModuleClass, PicardSpec, RingSpec};
use crate::nu::{check_prime, nu_row};
use crate::partition::{count_partitions, partitions};

/// Which result a count came from: a formula proved in the source theory,
/// the oracle-gated generalization to arbitrary finite Picard groups, or
/// direct brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    PaperFormula,
    ExtensionFormula,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Provenance::PaperFormula => "paper-formula",
            Provenance::ExtensionFormula => "extension-formula",
            Provenance::Oracle => "oracle",
        };
        write!(f, "{tag}")
    }
}

/// Feedback classes over a projectively trivial ring with free state space
/// of rank `n`: the partition function `p(n)`.
pub fn fe_trivial(n: u64) -> Result<BigCount> {
    count_partitions(n)
}

/// Feedback classes over a finite product of rings with state space free
/// of rank `n`: the product of the per-factor counts.
pub fn fe_product(factors: &[RingSpec], n: u64) -> Result<BigCount> {
    if factors.is_empty() {
        return Err(Error::IncompatibleSpec(
            "a product ring needs at least one factor".into(),
        ));
    }
    let mut total = BigCount::one();
    for factor in factors {
        let count = match factor.normalize() {
            RingSpec::ProjectivelyTrivial => fe_trivial(n)?,
            RingSpec::Dedekind(PicardSpec::Infinite) => {
                if n == 0 {
                    BigCount::one()
                } else {
                    BigCount::Infinite
                }
            }
            RingSpec::Dedekind(PicardSpec::Finite(group)) => {
                fe_dedekind_module(n, &group, &group.identity())?
            }
            RingSpec::Product(inner) => fe_product(&inner, n)?,
        };
        total *= count;
    }
    Ok(total)
}

/// Feedback classes over a Dedekind domain counted across all state spaces
/// of rank `n` (free and non-free together): `sum_k nu(n,k) d^k` for a
/// Picard group of order `d`, or `Infinite` when the Picard group is
/// infinite.
pub fn fe_dedekind_rank(n: u64, pic: &PicardSpec) -> Result<BigCount> {
    if n == 0 {
        // Empty decomposition of the zero state space.
        return Ok(BigCount::one());
    }
    let d = match pic {
        PicardSpec::Infinite => return Ok(BigCount::Infinite),
        PicardSpec::Finite(group) => BigUint::from(group.order()),
    };
    let row = nu_row(n)?;
    let mut total = BigUint::zero();
    for (idx, coeff) in row.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let k = idx as u32 + 1;
        total += coeff * d.pow(k);
    }
    Ok(BigCount::Finite(total))
}

/// Feedback classes over a Dedekind domain with prime-order Picard group
/// and free state space of rank `n`:
/// `sum_k [ nu(n,k,p) p^k + nu'(n,k,p) p^(k-1) ]`.
pub fn fe_dedekind_free(n: u64, p: u64) -> Result<BigCount> {
    check_prime(p)?;
    if n == 0 {
        return Ok(BigCount::one());
    }
    let (nu_all, nu_div) = nu_rows_with_scaled(n, p)?;
    let pb = BigUint::from(p);
    let mut total = BigUint::zero();
    for k in 1..=n as usize {
        let divisible = &nu_div[k - 1];
        let complement = &nu_all[k - 1] - divisible;
        total += divisible * pb.pow(k as u32) + complement * pb.pow(k as u32 - 1);
    }
    Ok(BigCount::Finite(total))
}

/// Feedback classes over a Dedekind domain with prime-order Picard group
/// and non-free state space `R^(n-1) + L`, `L` non-trivial:
/// `sum_k nu'(n,k,p) p^(k-1)`. The value does not depend on which
/// non-trivial `L` is chosen.
pub fn fe_dedekind_nonfree(n: u64, p: u64) -> Result<BigCount> {
    check_prime(p)?;
    if n == 0 {
        // The zero module is free; there is no non-free class of rank 0.
        return Ok(BigCount::zero());
    }
    let (nu_all, nu_div) = nu_rows_with_scaled(n, p)?;
    let pb = BigUint::from(p);
    let mut total = BigUint::zero();
    for k in 1..=n as usize {
        let complement = &nu_all[k - 1] - &nu_div[k - 1];
        total += complement * pb.pow(k as u32 - 1);
    }
    Ok(BigCount::Finite(total))
}

/// Returns (`nu(n,k)` row, `nu(n,k,p)` row), both indexed by `k-1`.
fn nu_rows_with_scaled(n: u64, p: u64) -> Result<(Vec<BigUint>, Vec<BigUint>)> {
    let nu_all = nu_row(n)?;
    let mut nu_div = vec![BigUint::zero(); n as usize];
    if n % p == 0 {
        let scaled = nu_row(n / p)?;
        nu_div[..scaled.len()].clone_from_slice(&scaled);
    }
    Ok((nu_all, nu_div))
}

/// Number of solutions of `sum_{s in sizes} s * a_s = target` with each
/// `a_s` ranging over the whole group.
///
/// Per cyclic factor `Z/m`: with `g = gcd(m, sizes...)`, the map has image
/// `g Z/m`, every fiber has size `m^(|sizes|-1) * g`, so the factor
/// contributes that when `g` divides the target residue and `0` otherwise.
pub fn count_det_solutions(
    sizes: &[u64],
    target: &GroupElement,
    group: &FiniteAbelianGroup,
) -> Result<BigCount> {
    if sizes.is_empty() {
        return Err(Error::IncompatibleSpec(
            "count_det_solutions needs a nonempty size set".into(),
        ));
    }
    if target.group() != group {
        return Err(Error::GroupMismatch(format!(
            "target lives in {}, expected {}",
            target.group(),
            group
        )));
    }
    let k = sizes.len() as u32;
    let mut total = BigUint::from(1u32);
    for (&m, &b) in group.cyclic_orders().iter().zip(target.residues()) {
        let g = sizes.iter().fold(m, |acc, &s| acc.gcd(&s));
        if b % g != 0 {
            return Ok(BigCount::zero());
        }
        total *= BigUint::from(m).pow(k - 1) * BigUint::from(g);
    }
    Ok(BigCount::Finite(total))
}

/// Feedback classes over a Dedekind domain with arbitrary finite Picard
/// group and state space of rank `n` with determinant `target`: sums the
/// determinant-equation solution count over every rank-equation solution,
/// keyed by its set of distinct part sizes.
///
/// For prime-order groups this agrees with the closed forms; for
/// composite or non-cyclic groups it is the oracle-gated extension.
pub fn fe_dedekind_module(
    n: u64,
    group: &FiniteAbelianGroup,
    target: &GroupElement,
) -> Result<BigCount> {
    if target.group() != group {
        return Err(Error::GroupMismatch(format!(
            "target lives in {}, expected {}",
            target.group(),
            group
        )));
    }
    if n == 0 {
        return Ok(if target.is_identity() {
            BigCount::one()
        } else {
            BigCount::zero()
        });
    }
    // The determinant count depends on the partition only through its
    // distinct-size set, so cache per set.
    let mut cache: HashMap<Vec<u64>, BigCount> = HashMap::new();
    let mut total = BigCount::zero();
    for partition in partitions(n) {
        let sizes = partition.distinct_size_set();
        let count = match cache.get(&sizes) {
            Some(c) => c.clone(),
            None => {
                let c = count_det_solutions(&sizes, target, group)?;
                cache.insert(sizes, c.clone());
                c
            }
        };
        total += count;
    }
    Ok(total)
}

/// The state space a count is requested for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateQuery {
    /// All classes of projective state spaces of the given rank together.
    RankClasses(u64),
    /// The free state space of the given rank.
    FreeRank(u64),
    /// One specific module class.
    Module(ModuleClass),
}

/// Routes a (ring, state) query to the applicable formula and reports
/// where the resulting count comes from.
pub fn fe_dispatch(ring: &RingSpec, state: &StateQuery) -> Result<(BigCount, Provenance)> {
    match ring.normalize() {
        RingSpec::ProjectivelyTrivial => match state {
            StateQuery::FreeRank(n) | StateQuery::RankClasses(n) => {
                Ok((fe_trivial(*n)?, Provenance::PaperFormula))
            }
            StateQuery::Module(ModuleClass::Zero) => Ok((BigCount::one(), Provenance::PaperFormula)),
            StateQuery::Module(_) => Err(Error::IncompatibleSpec(
                "over a projectively trivial ring every class is free; query a rank instead".into(),
            )),
        },
        RingSpec::Product(factors) => match state {
            StateQuery::FreeRank(n) => {
                let provenance = if factors.iter().any(needs_extension) {
                    Provenance::ExtensionFormula
                } else {
                    Provenance::PaperFormula
                };
                Ok((fe_product(&factors, *n)?, provenance))
            }
            _ => Err(Error::IncompatibleSpec(
                "product rings are only counted over free state spaces".into(),
            )),
        },
        RingSpec::Dedekind(pic) => dispatch_dedekind(&pic, state),
    }
}

fn dispatch_dedekind(pic: &PicardSpec, state: &StateQuery) -> Result<(BigCount, Provenance)> {
    match pic {
        PicardSpec::Infinite => match state {
            StateQuery::FreeRank(n) | StateQuery::RankClasses(n) => {
                let count = if *n == 0 {
                    BigCount::one()
                } else {
                    BigCount::Infinite
                };
                Ok((count, Provenance::PaperFormula))
            }
            StateQuery::Module(_) => Err(Error::IncompatibleSpec(
                "module-level counts need a concrete finite Picard group".into(),
            )),
        },
        PicardSpec::Finite(group) => match state {
            StateQuery::RankClasses(n) => Ok((
                fe_dedekind_rank(*n, pic)?,
                Provenance::PaperFormula,
            )),
            StateQuery::FreeRank(n) => fe_target(*n, group, &group.identity()),
            StateQuery::Module(ModuleClass::Zero) => Ok((BigCount::one(), Provenance::PaperFormula)),
            StateQuery::Module(ModuleClass::Class { rank, det }) => {
                if det.group() != group {
                    return Err(Error::IncompatibleSpec(format!(
                        "module determinant lives in {}, ring Picard group is {}",
                        det.group(),
                        group
                    )));
                }
                fe_target(*rank, group, det)
            }
        },
    }
}

/// Count for a fixed rank and determinant target, picking the prime-order
/// closed form when it applies.
fn fe_target(
    n: u64,
    group: &FiniteAbelianGroup,
    target: &GroupElement,
) -> Result<(BigCount, Provenance)> {
    let order = group.order();
    if order == 1 {
        return Ok((fe_trivial(n)?, Provenance::PaperFormula));
    }
    if let Ok(p) = u64::try_from(order) {
        if crate::nu::is_prime(p) {
            let count = if target.is_identity() {
                fe_dedekind_free(n, p)?
            } else {
                fe_dedekind_nonfree(n, p)?
            };
            return Ok((count, Provenance::PaperFormula));
        }
    }
    Ok((
        fe_dedekind_module(n, group, target)?,
        Provenance::ExtensionFormula,
    ))
}

fn needs_extension(spec: &RingSpec) -> bool {
    match spec {
        RingSpec::ProjectivelyTrivial => false,
        RingSpec::Product(inner) => inner.iter().any(needs_extension),
        RingSpec::Dedekind(PicardSpec::Infinite) => false,
        RingSpec::Dedekind(PicardSpec::Finite(group)) => {
            let order = group.order();
            order != 1 && u64::try_from(order).map(|o| !crate::nu::is_prime(o)).unwrap_or(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn trivial_counts() {
        assert_eq!(fe_trivial(0).unwrap(), n(1));
        assert_eq!(fe_trivial(1).unwrap(), n(1));
        assert_eq!(fe_trivial(6).unwrap(), n(11));
    }

    #[test]
    fn product_counts() {
        let t = RingSpec::ProjectivelyTrivial;
        assert_eq!(fe_product(&[t.clone(), t.clone()], 6).unwrap(), n(121));
        assert_eq!(fe_product(&[t.clone()], 6).unwrap(), n(11));
        assert_eq!(fe_product(&[t.clone(), t.clone(), t.clone()], 2).unwrap(), n(8));
        assert_eq!(
            fe_product(&[t, RingSpec::Dedekind(PicardSpec::Infinite)], 3).unwrap(),
            BigCount::Infinite
        );
    }

    #[test]
    fn dedekind_rank_counts() {
        let d1 = PicardSpec::Finite(FiniteAbelianGroup::trivial());
        assert_eq!(fe_dedekind_rank(6, &d1).unwrap(), n(11));
        let d2 = PicardSpec::Finite(FiniteAbelianGroup::cyclic(2).unwrap());
        // 4*2 + 6*4 + 1*8 from the nu(6,.) row.
        assert_eq!(fe_dedekind_rank(6, &d2).unwrap(), n(40));
        assert_eq!(
            fe_dedekind_rank(3, &PicardSpec::Infinite).unwrap(),
            BigCount::Infinite
        );
    }

    #[test]
    fn dedekind_free_counts() {
        assert_eq!(fe_dedekind_free(1, 2).unwrap(), n(1));
        assert_eq!(fe_dedekind_free(1, 7).unwrap(), n(1));
        assert_eq!(fe_dedekind_free(2, 2).unwrap(), n(3));
        // k-terms 6 + 14 + 4 from the nu(6,.,2) values.
        assert_eq!(fe_dedekind_free(6, 2).unwrap(), n(24));
        assert!(matches!(fe_dedekind_free(3, 6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn dedekind_nonfree_counts() {
        assert_eq!(fe_dedekind_nonfree(2, 2).unwrap(), n(1));
        assert_eq!(fe_dedekind_nonfree(1, 3).unwrap(), n(1));
        // 2*1 + 5*2 + 1*4.
        assert_eq!(fe_dedekind_nonfree(6, 2).unwrap(), n(16));
    }

    #[test]
    fn det_solution_counts() {
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let any = FiniteAbelianGroup::new(vec![4, 3]).unwrap();
        let t = any.element(&[3, 1]).unwrap();
        assert_eq!(count_det_solutions(&[1], &t, &any).unwrap(), n(1));
        assert_eq!(
            count_det_solutions(&[2, 4], &z2.identity(), &z2).unwrap(),
            n(4)
        );
        assert_eq!(
            count_det_solutions(&[2, 4], &z2.element(&[1]).unwrap(), &z2).unwrap(),
            n(0)
        );
        assert_eq!(
            count_det_solutions(&[1, 2], &z2.element(&[1]).unwrap(), &z2).unwrap(),
            n(2)
        );
    }

    #[test]
    fn det_solution_totals_over_all_targets() {
        for orders in [vec![2], vec![4], vec![8], vec![2, 2], vec![2, 4], vec![6]] {
            let g = FiniteAbelianGroup::new(orders).unwrap();
            for sizes in [vec![1u64], vec![2], vec![2, 3], vec![2, 4, 6], vec![1, 2, 3, 4]] {
                let total: BigCount = g
                    .elements()
                    .map(|t| count_det_solutions(&sizes, &t, &g).unwrap())
                    .fold(BigCount::zero(), |acc, c| acc + c);
                assert_eq!(
                    total,
                    BigCount::Finite(BigUint::from(g.order()).pow(sizes.len() as u32)),
                    "group {g}, sizes {sizes:?}"
                );
            }
        }
    }

    #[test]
    fn module_formula_matches_prime_order_forms() {
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert_eq!(
            fe_dedekind_module(2, &z2, &z2.identity()).unwrap(),
            fe_dedekind_free(2, 2).unwrap()
        );
        assert_eq!(
            fe_dedekind_module(2, &z2, &z2.element(&[1]).unwrap()).unwrap(),
            fe_dedekind_nonfree(2, 2).unwrap()
        );
        let triv = FiniteAbelianGroup::trivial();
        assert_eq!(
            fe_dedekind_module(6, &triv, &triv.identity()).unwrap(),
            n(11)
        );
    }

    #[test]
    fn picard_sum_identity_small() {
        for p in [2u64, 3, 5] {
            for total in 1..=12u64 {
                let free = fe_dedekind_free(total, p).unwrap();
                let nonfree = fe_dedekind_nonfree(total, p).unwrap();
                let rank = fe_dedekind_rank(
                    total,
                    &PicardSpec::Finite(FiniteAbelianGroup::cyclic(p).unwrap()),
                )
                .unwrap();
                assert_eq!(free + n(p - 1) * nonfree, rank, "n = {total}, p = {p}");
            }
        }
    }

    #[test]
    fn dispatch_routes_and_rejects() {
        let (c, prov) =
            fe_dispatch(&RingSpec::ProjectivelyTrivial, &StateQuery::FreeRank(6)).unwrap();
        assert_eq!(c, n(11));
        assert_eq!(prov, Provenance::PaperFormula);

        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let ring = RingSpec::Dedekind(PicardSpec::Finite(z2.clone()));
        let (c, prov) = fe_dispatch(&ring, &StateQuery::FreeRank(2)).unwrap();
        assert_eq!(c, n(3));
        assert_eq!(prov, Provenance::PaperFormula);

        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let ring4 = RingSpec::Dedekind(PicardSpec::Finite(z4.clone()));
        let (_, prov) = fe_dispatch(&ring4, &StateQuery::FreeRank(3)).unwrap();
        assert_eq!(prov, Provenance::ExtensionFormula);
        // Rank-level counts stay on the proved formula for any finite order.
        let (_, prov) = fe_dispatch(&ring4, &StateQuery::RankClasses(3)).unwrap();
        assert_eq!(prov, Provenance::PaperFormula);

        let nonfree = ModuleClass::new(2, z2.element(&[1]).unwrap()).unwrap();
        assert!(matches!(
            fe_dispatch(&RingSpec::ProjectivelyTrivial, &StateQuery::Module(nonfree)),
            Err(Error::IncompatibleSpec(_))
        ));
    }

    #[test]
    fn dispatch_rejects_group_mismatch() {
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let ring = RingSpec::Dedekind(PicardSpec::Finite(z2));
        let m = ModuleClass::new(2, z3.element(&[1]).unwrap()).unwrap();
        assert!(fe_dispatch(&ring, &StateQuery::Module(m)).is_err());
    }
}
