//! Small helpers for exact rational values.

use num::{BigInt, BigRational};

/// `numer/denom` as an exact rational.
pub(crate) fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Lossless `numerator/denominator` rendering, e.g. `-2/5` or `0/1`.
///
/// Unlike the `Display` impl of [`BigRational`] this never drops the
/// denominator, so emitted values can be parsed back without guessing.
pub fn fraction_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_string_keeps_unit_denominator() {
        assert_eq!(fraction_string(&integer(3)), "3/1");
        assert_eq!(fraction_string(&ratio(-4, 10)), "-2/5");
        assert_eq!(fraction_string(&ratio(0, 7)), "0/1");
    }
}
