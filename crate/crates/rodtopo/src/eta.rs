//! Eta-invariant of the signature operator of lens spaces, as an exact
//! rational, plus the closed forms it specializes to on the
//! three-turning-point boundary.

use num::{BigInt, BigRational, Integer};
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum EtaError {
    #[error("eta_lens needs p >= 1, 0 <= q < p, gcd(p,q) = 1; got (p,q) = ({p},{q})")]
    DomainError { p: i64, q: i64 },
    #[error("no closed form covers (a,b) = ({a},{b})")]
    OutOfCaseRange { a: i64, b: i64 },
}

/// `eta_S(L(p,q)) = (p-1)(2pq - 3p - q + 3)/(3p) - (2/p) sum_{k=1}^{q-1} floor(kp/q)^2`.
///
/// The sum is empty for `q <= 1`; in particular `eta_S(S^3) = 0`.
/// `q = 0` is admitted only with `p = 1`: for `p >= 2` it fails the
/// coprimality precondition and is a [`EtaError::DomainError`], never a
/// silent zero. The floor sum grows like `p^2 q`, so everything is
/// accumulated in big integers.
pub fn eta_lens(p: i64, q: i64) -> Result<BigRational, EtaError> {
    if p < 1 || q < 0 || q >= p || p.gcd(&q) != 1 {
        return Err(EtaError::DomainError { p, q });
    }
    let mut floor_sum = BigInt::from(0);
    for k in 1..q {
        // exact floor: all quantities non-negative
        let f = BigInt::from((k as i128 * p as i128) / q as i128);
        floor_sum += &f * &f;
    }
    let p_big = BigInt::from(p);
    let q_big = BigInt::from(q);
    let head = BigRational::new(
        (&p_big - 1) * (2 * &p_big * &q_big - 3 * &p_big - &q_big + 3),
        3 * &p_big,
    );
    let tail = BigRational::new(2 * floor_sum, p_big);
    Ok(head - tail)
}

/// Closed forms of the boundary eta-invariant for the three-turning-point
/// family with diagonal `(a, b)`, split by the sign pattern of `(a, b)`:
///
/// * `a < 0 < b`:            `-ab(a+b) / (3(1-ab))`
/// * `a, b < -1`:            `ab(a+b) / (3(ab-1)) + 2`
/// * `a = -1, b < -1`:       `(b+2)(b+3) / (3(b+1))`
/// * `a < -1, b = -1`:       `(a+2)(a+3) / (3(a+1))`
///
/// Every covered pair agrees with [`eta_lens`] at the boundary lens
/// parameters of the corresponding rod structure; that cross-check is this
/// module's primary correctness oracle.
pub fn eta_closed_form_3pt(a: i64, b: i64) -> Result<BigRational, EtaError> {
    let a_big = BigInt::from(a);
    let b_big = BigInt::from(b);
    let two = BigRational::from_integer(BigInt::from(2));
    let value = if a < 0 && b > 0 {
        BigRational::new(
            -(&a_big * &b_big) * (&a_big + &b_big),
            3 * (1 - &a_big * &b_big),
        )
    } else if a < -1 && b < -1 {
        BigRational::new(
            &a_big * &b_big * (&a_big + &b_big),
            3 * (&a_big * &b_big - 1),
        ) + two
    } else if a == -1 && b < -1 {
        BigRational::new((&b_big + 2) * (&b_big + 3), 3 * (&b_big + 1))
    } else if b == -1 && a < -1 {
        BigRational::new((&a_big + 2) * (&a_big + 3), 3 * (&a_big + 1))
    } else {
        return Err(EtaError::OutOfCaseRange { a, b });
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn sphere_and_l21_vanish() {
        assert_eq!(eta_lens(1, 0).unwrap(), ratio(0, 1));
        assert_eq!(eta_lens(2, 1).unwrap(), ratio(0, 1));
    }

    #[test]
    fn l3_values() {
        assert_eq!(eta_lens(3, 1).unwrap(), ratio(-2, 9));
        assert_eq!(eta_lens(3, 2).unwrap(), ratio(2, 9));
    }

    #[test]
    fn domain_errors() {
        assert_eq!(eta_lens(0, 0), Err(EtaError::DomainError { p: 0, q: 0 }));
        assert_eq!(eta_lens(2, 0), Err(EtaError::DomainError { p: 2, q: 0 }));
        assert_eq!(eta_lens(4, 2), Err(EtaError::DomainError { p: 4, q: 2 }));
        assert_eq!(eta_lens(3, 3), Err(EtaError::DomainError { p: 3, q: 3 }));
        assert_eq!(eta_lens(3, -1), Err(EtaError::DomainError { p: 3, q: -1 }));
    }

    #[test]
    fn closed_forms_match_pinned_values() {
        assert_eq!(eta_closed_form_3pt(-1, 2).unwrap(), ratio(2, 9));
        assert_eq!(eta_closed_form_3pt(-2, -2).unwrap(), ratio(2, 9));
        assert_eq!(eta_closed_form_3pt(-2, -3).unwrap(), ratio(0, 1));
    }

    #[test]
    fn closed_form_case_split_boundaries() {
        assert_eq!(
            eta_closed_form_3pt(-1, -1),
            Err(EtaError::OutOfCaseRange { a: -1, b: -1 })
        );
        assert_eq!(
            eta_closed_form_3pt(1, 1),
            Err(EtaError::OutOfCaseRange { a: 1, b: 1 })
        );
        assert_eq!(
            eta_closed_form_3pt(0, 3),
            Err(EtaError::OutOfCaseRange { a: 0, b: 3 })
        );
        assert_eq!(
            eta_closed_form_3pt(2, -1),
            Err(EtaError::OutOfCaseRange { a: 2, b: -1 })
        );
        assert!(eta_closed_form_3pt(-1, -2).is_ok());
        assert!(eta_closed_form_3pt(-2, -1).is_ok());
    }

    #[test]
    fn denominator_divides_3p() {
        for p in 1..=40i64 {
            for q in 0..p {
                let Ok(eta) = eta_lens(p, q) else { continue };
                let three_p = BigInt::from(3 * p);
                assert!(
                    (&three_p % eta.denom()).is_zero(),
                    "eta(L({p},{q})) = {eta} has denominator not dividing 3p"
                );
            }
        }
    }
}
