//! The lens space at the boundary at infinity, and compatibility of a rod
//! structure with the ALE and ALF asymptotic classes.

use std::fmt;

use num::Integer;

use crate::rod::RodStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    /// `p = 0`, the convention `L(0,1) = S^2 x S^1`.
    S2xS1,
    /// `p = 1`.
    S3,
    /// `p >= 2`.
    Lens,
}

/// The boundary at infinity `L(p, q)`.
///
/// `q` is reduced into `[0, p)` when `p >= 1` (with `q = 1` by convention
/// when `p = 0`); `q_raw` keeps the unreduced determinant value. Reduction
/// does not change the lens space, but downstream formulas consume the
/// reduced value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensBoundary {
    pub p: i64,
    pub q_raw: i64,
    pub q: i64,
    pub kind: BoundaryKind,
}

impl fmt::Display for LensBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BoundaryKind::S2xS1 => f.write_str("S^2 x S^1"),
            BoundaryKind::S3 => f.write_str("S^3"),
            BoundaryKind::Lens => write!(f, "L({},{})", self.p, self.q),
        }
    }
}

/// `p = |det(v_0, v_n)|`, `q_raw = sgn(det(v_0, v_n)) det(v_1, v_n)`,
/// `q = q_raw mod p`.
///
/// For `n = 1` this gives `p = 1`, `q = 0` (the boundary is `S^3`).
/// `gcd(p, q) = 1` holds for every valid rod structure; it is asserted,
/// not returned as an error.
pub fn boundary_lens(rs: &RodStructure) -> LensBoundary {
    let rods = rs.rods();
    let v0 = &rods[0];
    let v1 = &rods[1];
    let vn = &rods[rods.len() - 1];
    let det0n = v0.det(vn);
    let p = i64::try_from(det0n.abs()).expect("boundary order overflows i64");
    let q_raw =
        i64::try_from(det0n.signum() * v1.det(vn)).expect("boundary twist overflows i64");
    if p == 0 {
        return LensBoundary {
            p: 0,
            q_raw,
            q: 1,
            kind: BoundaryKind::S2xS1,
        };
    }
    let q = q_raw.rem_euclid(p);
    assert_eq!(
        p.gcd(&q),
        1,
        "internal: gcd(p, q) != 1 for a valid rod structure"
    );
    LensBoundary {
        p,
        q_raw,
        q,
        kind: if p == 1 {
            BoundaryKind::S3
        } else {
            BoundaryKind::Lens
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsymptoticClass {
    Ale,
    Alf,
}

impl fmt::Display for AsymptoticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AsymptoticClass::Ale => "ALE",
            AsymptoticClass::Alf => "ALF",
        })
    }
}

/// Why a rod structure is ruled out for an asymptotic class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectionReason {
    /// The boundary is `S^2 x S^1`; no ALE space has that boundary.
    BoundaryNotLens,
    /// `p = 1` with more than one turning point: an asymptotically
    /// Euclidean Ricci-flat space is flat `R^4` by the positive mass
    /// theorem, contradicting `chi > 1`.
    PositiveMass,
    /// ALF needs the reduced `q` to be `1` or `p - 1`.
    QNotPmOne,
    /// The Hitchin-Thorpe inequality fails.
    InequalityViolated,
    /// The inequality holds with equality, which forces a hyper-Kaehler
    /// model, but the topology (`chi = p`, even intersection diagonal)
    /// does not match any such model.
    HyperKahlerObstruction,
}

/// Outcome of matching a rod structure against an asymptotic class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Compatibility {
    /// ALE is possible; the boundary is `S^3/Gamma` with `|Gamma| = p`.
    Ale,
    /// ALF is possible with the listed candidate Euler numbers `e` of the
    /// asymptotic circle bundle: `[0]` for the AF case `p = 0`, a single
    /// sign-determined value for `p >= 3`, and both signs for
    /// `p` in `{1, 2}` where the sign is not topologically determined.
    Alf { e_candidates: Vec<i64> },
    Incompatible(RejectionReason),
}

pub fn classify_compatibility(rs: &RodStructure, class: AsymptoticClass) -> Compatibility {
    let boundary = boundary_lens(rs);
    match class {
        AsymptoticClass::Ale => {
            if boundary.p == 0 {
                Compatibility::Incompatible(RejectionReason::BoundaryNotLens)
            } else if boundary.p == 1 && rs.turning_points() > 1 {
                Compatibility::Incompatible(RejectionReason::PositiveMass)
            } else {
                Compatibility::Ale
            }
        }
        AsymptoticClass::Alf => {
            let p = boundary.p;
            if p == 0 {
                Compatibility::Alf {
                    e_candidates: vec![0],
                }
            } else if p <= 2 {
                // q = 1 and q = p - 1 coincide mod p here, and the e-sign
                // is metric-dependent: report both candidates.
                Compatibility::Alf {
                    e_candidates: vec![-p, p],
                }
            } else if boundary.q == 1 {
                Compatibility::Alf {
                    e_candidates: vec![-p],
                }
            } else if boundary.q == p - 1 {
                Compatibility::Alf {
                    e_candidates: vec![p],
                }
            } else {
                Compatibility::Incompatible(RejectionReason::QNotPmOne)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rods(raw: &[(i64, i64)]) -> RodStructure {
        RodStructure::validate(raw).unwrap()
    }

    #[test]
    fn schwarzschild_boundary_is_s2xs1() {
        let b = boundary_lens(&rods(&[(0, 1), (-1, 0), (0, -1)]));
        assert_eq!(b.p, 0);
        assert_eq!(b.kind, BoundaryKind::S2xS1);
        assert_eq!(b.q, 1);
    }

    #[test]
    fn eguchi_hanson_boundary_is_l21() {
        let b = boundary_lens(&rods(&[(1, 1), (-1, 0), (1, -1)]));
        assert_eq!((b.p, b.q, b.q_raw), (2, 1, -1));
        assert_eq!(b.kind, BoundaryKind::Lens);
        assert_eq!(b.to_string(), "L(2,1)");
    }

    #[test]
    fn reduction_of_negative_q_raw() {
        let b = boundary_lens(&RodStructure::from_d_vector(&[2, 2]));
        assert_eq!((b.p, b.q_raw, b.q), (3, -2, 1));
    }

    #[test]
    fn minimal_structure_boundary_is_s3() {
        let b = boundary_lens(&rods(&[(0, 1), (-1, 0)]));
        assert_eq!((b.p, b.q, b.q_raw), (1, 0, 0));
        assert_eq!(b.kind, BoundaryKind::S3);
    }

    #[test]
    fn ale_rejects_s2xs1_boundary() {
        let rs = RodStructure::from_d_vector(&[1, 1]);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Ale),
            Compatibility::Incompatible(RejectionReason::BoundaryNotLens)
        );
    }

    #[test]
    fn ale_rejects_p1_with_many_turning_points() {
        // d = (1, 0): p = |1 - 0| = 1 with chi = 3
        let rs = RodStructure::from_d_vector(&[1, 0]);
        assert_eq!(boundary_lens(&rs).p, 1);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Ale),
            Compatibility::Incompatible(RejectionReason::PositiveMass)
        );
    }

    #[test]
    fn ale_accepts_flat_space() {
        let rs = rods(&[(0, 1), (-1, 0)]);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Ale),
            Compatibility::Ale
        );
    }

    #[test]
    fn alf_af_case_has_zero_euler_number() {
        let rs = RodStructure::from_d_vector(&[1, 1]);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Alf),
            Compatibility::Alf {
                e_candidates: vec![0]
            }
        );
    }

    #[test]
    fn alf_sign_determined_for_p_at_least_three() {
        let rs = RodStructure::from_d_vector(&[2, 2]);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Alf),
            Compatibility::Alf {
                e_candidates: vec![-3]
            }
        );
        let rs = RodStructure::from_d_vector(&[-2, -2]);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Alf),
            Compatibility::Alf {
                e_candidates: vec![3]
            }
        );
    }

    #[test]
    fn alf_both_signs_for_small_p() {
        let rs = rods(&[(0, 1), (-1, 0)]);
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Alf),
            Compatibility::Alf {
                e_candidates: vec![-1, 1]
            }
        );
    }

    #[test]
    fn alf_rejects_twist_not_pm_one() {
        // d = (-2, -3): p = 5, q = 3
        let rs = RodStructure::from_d_vector(&[-2, -3]);
        let b = boundary_lens(&rs);
        assert_eq!((b.p, b.q), (5, 3));
        assert_eq!(
            classify_compatibility(&rs, AsymptoticClass::Alf),
            Compatibility::Incompatible(RejectionReason::QNotPmOne)
        );
    }

    #[test]
    fn p_vanishes_exactly_when_end_rods_collinear() {
        for d in [[1i64, 1], [0, 0], [2, 2], [-1, 3]] {
            let rs = RodStructure::from_d_vector(&d);
            let rods = rs.rods();
            let (v0, vn) = (rods[0], rods[rods.len() - 1]);
            let collinear = v0 == vn || v0 == vn.negated();
            assert_eq!(boundary_lens(&rs).p == 0, collinear, "d = {d:?}");
        }
    }
}
