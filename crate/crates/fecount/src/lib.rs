//! Exact enumeration of feedback-equivalence classes of locally Brunovsky
//! linear systems over commutative rings.
//!
//! The number of feedback classes over a state space is the number of
//! solutions of the direct-sum equation `X = Z_1 + Z_2^2 + ... + Z_n^n`
//! in the monoid of projective-module classes of the base ring. This
//! crate computes those counts exactly:
//!
//! - [`partition`]: integer partitions as multiplicity vectors, the
//!   solutions of the rank equation `n = z_1 + 2 z_2 + ... + n z_n`.
//! - [`nu`]: the numbers `nu(n,k)` of partitions of `n` into `k` distinct
//!   part sizes, plus the divisibility refinements `nu(n,k,p)`.
//! - [`monoid`]: module classes `(rank, determinant)` over Dedekind
//!   domains, finite abelian Picard groups, and abstract ring specs.
//! - [`formulas`]: the closed class-count formulas for projectively
//!   trivial rings, finite products, and Dedekind domains.
//! - [`oracle`]: brute-force enumeration of actual solution tuples, the
//!   ground truth the formulas are verified against.
//!
//! All counts are exact big integers ([`BigCount`]), with a distinguished
//! `Infinite` value for infinite Picard groups.

pub mod count;
pub mod error;
pub mod formulas;
pub mod monoid;
pub mod nu;
pub mod oracle;
pub mod partition;

pub use count::BigCount;
pub use error::{Error, Result};
pub use formulas::{
    count_det_solutions, fe_dedekind_free, fe_dedekind_module, fe_dedekind_nonfree,
    fe_dedekind_rank, fe_dispatch, fe_product, fe_trivial, Provenance, StateQuery,
};
pub use monoid::{FiniteAbelianGroup, GroupElement, ModuleClass, PicardSpec, RingSpec};
pub use nu::{nu, nu_p, nu_prime_complement, nu_table, NuTable};
pub use partition::{count_partitions, partitions, Partition};
