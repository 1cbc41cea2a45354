use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A non-negative arbitrary-precision sequence value.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_even(&self) -> bool {
        !self.0.bit(0)
    }

    /// Converts a signed intermediate result, failing if it is negative.
    pub(crate) fn from_signed(value: BigInt, context: &str) -> Result<Self> {
        value
            .to_biguint()
            .map(Count)
            .ok_or_else(|| Error::Internal(format!("{context} is negative: {value}")))
    }
}

impl From<BigUint> for Count {
    fn from(value: BigUint) -> Self {
        Count(value)
    }
}

impl From<u64> for Count {
    fn from(value: u64) -> Self {
        Count(BigUint::from(value))
    }
}

impl From<Count> for BigUint {
    fn from(value: Count) -> Self {
        value.0
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse().map(Count)
    }
}

/// `numerator / denominator` where the quotient must be an integer.
pub(crate) fn exact_div(numerator: &BigInt, denominator: &BigInt, context: &str) -> Result<BigInt> {
    use num_integer::Integer;
    let (q, r) = numerator.div_rem(denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!(
            "{context}: {numerator} is not divisible by {denominator}"
        )))
    }
}
