//! Exact nonnegative counts with a distinguished infinite value.
//!
//! All class counts in this crate are [`BigCount`] values: either an exact
//! arbitrary-precision nonnegative integer or `Infinite` (the count over a
//! Dedekind domain with infinite Picard group). Arithmetic on finite values
//! is exact; any operation touching `Infinite` yields `Infinite`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BigCount {
    Finite(BigUint),
    Infinite,
}

impl BigCount {
    pub fn zero() -> Self {
        BigCount::Finite(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount::Finite(BigUint::one())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BigCount::Infinite)
    }

    /// Finite value, if any.
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            BigCount::Finite(v) => Some(v),
            BigCount::Infinite => None,
        }
    }

    /// Exponentiation; `x^0 = 1` for every `x`, including `Infinite`.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return BigCount::one();
        }
        match self {
            BigCount::Finite(v) => BigCount::Finite(v.pow(exp)),
            BigCount::Infinite => BigCount::Infinite,
        }
    }

    /// Subtraction of finite values; panics on underflow or `Infinite`
    /// operands. Used only where the math guarantees the difference is
    /// nonnegative (e.g. complements within a known total).
    pub fn saturating_finite_sub(&self, rhs: &BigCount) -> BigCount {
        match (self, rhs) {
            (BigCount::Finite(a), BigCount::Finite(b)) => {
                assert!(a >= b, "count underflow: {a} - {b}");
                BigCount::Finite(a - b)
            }
            _ => panic!("subtraction is only defined for finite counts"),
        }
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount::Finite(BigUint::from(v))
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        BigCount::Finite(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount::Finite(v)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        match (self, rhs) {
            (BigCount::Finite(a), BigCount::Finite(b)) => BigCount::Finite(a + b),
            _ => BigCount::Infinite,
        }
    }
}

impl AddAssign for BigCount {
    fn add_assign(&mut self, rhs: BigCount) {
        let lhs = std::mem::replace(self, BigCount::Infinite);
        *self = lhs + rhs;
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        match (self, rhs) {
            (BigCount::Finite(a), BigCount::Finite(b)) => BigCount::Finite(a * b),
            _ => BigCount::Infinite,
        }
    }
}

impl MulAssign for BigCount {
    fn mul_assign(&mut self, rhs: BigCount) {
        let lhs = std::mem::replace(self, BigCount::Infinite);
        *self = lhs * rhs;
    }
}

impl PartialOrd for BigCount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigCount {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BigCount::Finite(a), BigCount::Finite(b)) => a.cmp(b),
            (BigCount::Finite(_), BigCount::Infinite) => Ordering::Less,
            (BigCount::Infinite, BigCount::Finite(_)) => Ordering::Greater,
            (BigCount::Infinite, BigCount::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for BigCount {
    /// Finite counts render as exact decimal strings; the infinite count
    /// renders as the reserved word `infinite`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigCount::Finite(v) => write!(f, "{v}"),
            BigCount::Infinite => write!(f, "infinite"),
        }
    }
}
