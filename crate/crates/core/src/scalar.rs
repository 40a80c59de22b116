//! Coefficient trait for the polynomial layer.
//!
//! Everything generic in this crate is written against [`Scalar`], a field-like
//! bound assembled from `num-traits`. The exact instantiation used by the rest
//! of the library is `num::BigRational` (re-exported at the crate root as
//! [`crate::Rational`]); `f32`/`f64` also satisfy the bound for callers that
//! only need approximate arithmetic.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Signed};

/// Field-like coefficient: exact equality, signed arithmetic, conversion from
/// machine integers (used when differentiating), printable.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Signed + FromPrimitive + Neg<Output = Self>
{
    /// Coefficient built from a machine integer. Total for every instantiation
    /// we care about; the panic guards against exotic saturating types.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer does not embed into scalar type")
    }

    /// Nonnegative integer built from a decimal digit string of any length.
    /// Exact for arbitrary-precision scalars; the caller guarantees the
    /// string is nonempty and all ASCII digits.
    fn from_decimal_digits(digits: &str) -> Self {
        let ten = Self::from_int(10);
        let mut acc = Self::zero();
        for ch in digits.bytes() {
            debug_assert!(ch.is_ascii_digit());
            acc = acc * ten.clone() + Self::from_int(i64::from(ch - b'0'));
        }
        acc
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Signed + FromPrimitive + Neg<Output = T>
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    #[test]
    fn rational_and_floats_satisfy_the_bound() {
        fn takes_scalar<S: Scalar>(s: S) -> S {
            s
        }
        takes_scalar(BigRational::from_int(3));
        takes_scalar(2.0f64);
        takes_scalar(2.0f32);
    }

    #[test]
    fn from_int_matches_display() {
        assert_eq!(BigRational::from_int(-7).to_string(), "-7");
    }
}
