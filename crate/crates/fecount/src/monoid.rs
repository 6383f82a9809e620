//! Data model for the monoid of projective-module classes over a Dedekind
//! domain and for finite abelian Picard groups.
//!
//! A class is either the zero module or a pair (rank >= 1, determinant),
//! with direct sum acting as `(r, a) + (s, b) = (r + s, a + b)`. The Picard
//! group is given as input data, a product of cyclic groups; no ideal-class
//! computation from an actual ring is attempted.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abelian group `Z/m_1 x ... x Z/m_s`, each `m_j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        if cyclic_orders.is_empty() {
            return Err(Error::IncompatibleSpec(
                "a group needs at least one cyclic factor".into(),
            ));
        }
        if cyclic_orders.contains(&0) {
            return Err(Error::IncompatibleSpec("cyclic orders must be >= 1".into()));
        }
        Ok(FiniteAbelianGroup { cyclic_orders })
    }

    /// The trivial group, represented as `Z/1`.
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            cyclic_orders: vec![1],
        }
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        FiniteAbelianGroup::new(vec![m])
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> u128 {
        self.cyclic_orders.iter().map(|&m| m as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            residues: vec![0; self.cyclic_orders.len()],
        }
    }

    /// Element with the given residues, reduced modulo each cyclic order.
    pub fn element(&self, residues: &[u64]) -> Result<GroupElement> {
        if residues.len() != self.cyclic_orders.len() {
            return Err(Error::GroupMismatch(format!(
                "expected {} residues, got {}",
                self.cyclic_orders.len(),
                residues.len()
            )));
        }
        Ok(GroupElement {
            group: self.clone(),
            residues: residues
                .iter()
                .zip(&self.cyclic_orders)
                .map(|(&r, &m)| r % m)
                .collect(),
        })
    }

    /// All elements in odometer (lexicographic residue-vector) order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        ResidueOdometer::new(self.cyclic_orders.clone()).map(move |residues| GroupElement {
            group: self.clone(),
            residues,
        })
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.cyclic_orders.iter().map(|m| m.to_string()).collect();
        write!(f, "Z/{}", orders.join(" x Z/"))
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = Error;

    /// Parses the CLI group syntax `m1xm2x...`, e.g. `2x3` for `Z/2 x Z/3`.
    fn from_str(s: &str) -> Result<Self> {
        let orders = s
            .split('x')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::IncompatibleSpec(format!("bad cyclic order `{tok}`")))
            })
            .collect::<Result<Vec<u64>>>()?;
        FiniteAbelianGroup::new(orders)
    }
}

/// Iterates residue vectors `(r_1, ..., r_s)` with `r_j < m_j`,
/// last coordinate fastest.
struct ResidueOdometer {
    orders: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl ResidueOdometer {
    fn new(orders: Vec<u64>) -> Self {
        let current = vec![0; orders.len()];
        ResidueOdometer {
            orders,
            current,
            done: false,
        }
    }
}

impl Iterator for ResidueOdometer {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        for j in (0..self.orders.len()).rev() {
            self.current[j] += 1;
            if self.current[j] < self.orders[j] {
                return Some(out);
            }
            self.current[j] = 0;
        }
        self.done = true;
        Some(out)
    }
}

/// An element of a [`FiniteAbelianGroup`], stored as a reduced residue
/// vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: FiniteAbelianGroup,
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    /// Componentwise sum modulo each cyclic order.
    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!(
                "{} vs {}",
                self.group, other.group
            )));
        }
        Ok(GroupElement {
            group: self.group.clone(),
            residues: self
                .residues
                .iter()
                .zip(&other.residues)
                .zip(self.group.cyclic_orders())
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect(),
        })
    }

    /// `c`-fold repeated addition; `scale(0)` is the identity.
    pub fn scale(&self, c: u64) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            residues: self
                .residues
                .iter()
                .zip(self.group.cyclic_orders())
                .map(|(&a, &m)| (((a as u128) * (c as u128)) % (m as u128)) as u64)
                .collect(),
        }
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            residues: self
                .residues
                .iter()
                .zip(self.group.cyclic_orders())
                .map(|(&a, &m)| (m - a) % m)
                .collect(),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Isomorphism class of a finitely generated projective module over a
/// Dedekind domain: the zero module, or a pair (rank >= 1, determinant).
///
/// A rank-0 class is exactly `Zero`; pairs `(0, g)` are unrepresentable,
/// matching the set `[N+ x Pic(R)] u {0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleClass {
    Zero,
    Class { rank: u64, det: GroupElement },
}

impl ModuleClass {
    /// The class of the free module of rank `n`, with identity determinant.
    pub fn free(n: u64, group: &FiniteAbelianGroup) -> ModuleClass {
        if n == 0 {
            ModuleClass::Zero
        } else {
            ModuleClass::Class {
                rank: n,
                det: group.identity(),
            }
        }
    }

    pub fn new(rank: u64, det: GroupElement) -> Result<ModuleClass> {
        if rank == 0 {
            return Err(Error::IncompatibleSpec(
                "a nonzero class needs rank >= 1; use Zero for rank 0".into(),
            ));
        }
        Ok(ModuleClass::Class { rank, det })
    }

    pub fn rank(&self) -> u64 {
        match self {
            ModuleClass::Zero => 0,
            ModuleClass::Class { rank, .. } => *rank,
        }
    }

    pub fn det(&self) -> Option<&GroupElement> {
        match self {
            ModuleClass::Zero => None,
            ModuleClass::Class { det, .. } => Some(det),
        }
    }

    /// Direct sum: `Zero` is the identity, otherwise ranks add and
    /// determinants multiply in the Picard group.
    pub fn direct_sum(&self, other: &ModuleClass) -> Result<ModuleClass> {
        match (self, other) {
            (ModuleClass::Zero, q) => Ok(q.clone()),
            (p, ModuleClass::Zero) => Ok(p.clone()),
            (
                ModuleClass::Class { rank: r, det: a },
                ModuleClass::Class { rank: s, det: b },
            ) => Ok(ModuleClass::Class {
                rank: r + s,
                det: a.add(b)?,
            }),
        }
    }

    /// The `c`-fold direct sum of `self` with itself.
    pub fn repeated(&self, c: u64) -> ModuleClass {
        match self {
            ModuleClass::Zero => ModuleClass::Zero,
            ModuleClass::Class { rank, det } => {
                if c == 0 {
                    ModuleClass::Zero
                } else {
                    ModuleClass::Class {
                        rank: rank * c,
                        det: det.scale(c),
                    }
                }
            }
        }
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleClass::Zero => write!(f, "0"),
            ModuleClass::Class { rank, det } => write!(f, "[rk {rank}, det {det}]"),
        }
    }
}

/// The Picard group of a Dedekind ring spec: a concrete finite abelian
/// group, or the marker that it has infinite order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PicardSpec {
    Finite(FiniteAbelianGroup),
    Infinite,
}

/// Abstract description of the base ring. Rings enter only through this
/// spec; no ring-element arithmetic happens anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingSpec {
    /// Every finitely generated projective module is free (fields, local
    /// rings, PIDs, polynomial rings over those).
    ProjectivelyTrivial,
    /// A finite product of rings; factors are counted componentwise.
    Product(Vec<RingSpec>),
    /// A Dedekind domain with the given Picard group.
    Dedekind(PicardSpec),
}

impl RingSpec {
    /// Flattens nested products; a singleton product collapses to its
    /// factor.
    pub fn normalize(&self) -> RingSpec {
        match self {
            RingSpec::Product(factors) => {
                let mut flat = Vec::new();
                for f in factors {
                    match f.normalize() {
                        RingSpec::Product(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                if flat.len() == 1 {
                    flat.pop().unwrap()
                } else {
                    RingSpec::Product(flat)
                }
            }
            other => other.clone(),
        }
    }
}
