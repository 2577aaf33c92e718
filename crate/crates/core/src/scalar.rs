use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// Exact coefficient field for [`SymFunc`](crate::SymFunc).
///
/// Everything the symmetric-function layer needs beyond field arithmetic is
/// conversion from small integers and fractions and an integrality test.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;

    /// `numer / denom`; `denom` must be nonzero.
    fn ratio(numer: i64, denom: i64) -> Self;

    /// `Some(v)` when the value is an integer that fits in `i64`.
    fn to_i64_exact(&self) -> Option<i64>;
}

impl Scalar for Ratio<i64> {
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(value)
    }

    fn ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn to_i64_exact(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }

    fn ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}
