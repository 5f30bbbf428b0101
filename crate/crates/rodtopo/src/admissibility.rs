//! Hitchin-Thorpe screening of rod structures for the ALE and ALF
//! asymptotic classes.
//!
//! The inequalities are necessary conditions: a failing structure carries
//! no toric instanton of that class, while a passing one makes no
//! existence claim. Equality is rigid. For ALE it means the space is
//! hyper-Kaehler. For ALF it forces a hyper-Kaehler multi-Taub-NUT model,
//! which pins the topology down to `chi = p` with an even intersection
//! diagonal; an equality case whose topology cannot match is therefore
//! ruled out entirely. All slack values are exact rationals and every
//! comparison is exact.

use num::{BigRational, Signed, Zero};

use crate::boundary::{
    boundary_lens, classify_compatibility, AsymptoticClass, Compatibility, LensBoundary,
    RejectionReason,
};
use crate::eta::eta_lens;
use crate::invariants::{euler_characteristic, intersection_data};
use crate::rational::{integer, ratio};
use crate::rod::RodStructure;

/// One tested Euler number for the asymptotic circle bundle of an ALF
/// structure, with the exact slack of the inequality at that sign.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerCandidate {
    pub e: i64,
    pub slack: BigRational,
    pub equality: bool,
}

/// Verdict of one Hitchin-Thorpe check.
///
/// `slack` is the left side minus the right side of the inequality, `None`
/// when the structure was rejected before the inequality could be
/// evaluated. For ALF it is the slack of an equality candidate when one
/// exists, otherwise the best slack over the tested `e` candidates. `eta`
/// is filled for ALE only; `e_candidates` for ALF only.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    pub class: AsymptoticClass,
    pub admissible: bool,
    pub equality: bool,
    pub slack: Option<BigRational>,
    pub chi: i64,
    pub tau: i64,
    pub boundary: LensBoundary,
    pub eta: Option<BigRational>,
    pub e_candidates: Vec<EulerCandidate>,
    pub rejection_reason: Option<RejectionReason>,
}

/// `2(chi - 1/p) >= 3 |tau + eta_S(L(p,q))|`, evaluated exactly.
///
/// Equality means the space is hyper-Kaehler: toric instantons are simply
/// connected, so the universal-cover clause of the compact statement
/// applies to the space itself.
pub fn check_ale(rs: &RodStructure) -> AdmissibilityReport {
    let chi = euler_characteristic(rs);
    let data = intersection_data(rs);
    let boundary = boundary_lens(rs);
    match classify_compatibility(rs, AsymptoticClass::Ale) {
        Compatibility::Incompatible(reason) => AdmissibilityReport {
            class: AsymptoticClass::Ale,
            admissible: false,
            equality: false,
            slack: None,
            chi,
            tau: data.tau,
            boundary,
            eta: None,
            e_candidates: Vec::new(),
            rejection_reason: Some(reason),
        },
        Compatibility::Ale => {
            let eta = eta_lens(boundary.p, boundary.q).expect("boundary yields valid (p,q)");
            let slack = integer(2) * (integer(chi) - ratio(1, boundary.p))
                - integer(3) * (integer(data.tau) + &eta).abs();
            let admissible = !slack.is_negative();
            AdmissibilityReport {
                class: AsymptoticClass::Ale,
                admissible,
                equality: slack.is_zero(),
                slack: Some(slack),
                chi,
                tau: data.tau,
                boundary,
                eta: Some(eta),
                e_candidates: Vec::new(),
                rejection_reason: (!admissible).then_some(RejectionReason::InequalityViolated),
            }
        }
        Compatibility::Alf { .. } => unreachable!("ALE classification cannot yield ALF"),
    }
}

/// `2 chi >= 3 |tau - e/3 + sgn(e)|` for each candidate Euler number `e`
/// (`e = 0` with `sgn(0) = 0` in the AF case), evaluated exactly.
///
/// A candidate passes with strict slack, or with zero slack when the
/// hyper-Kaehler model forced by equality is topologically possible
/// (`chi = p` and every diagonal entry even). A zero-slack candidate
/// without a matching model rules the structure out:
/// [`RejectionReason::HyperKahlerObstruction`].
pub fn check_alf(rs: &RodStructure) -> AdmissibilityReport {
    let chi = euler_characteristic(rs);
    let data = intersection_data(rs);
    let boundary = boundary_lens(rs);
    match classify_compatibility(rs, AsymptoticClass::Alf) {
        Compatibility::Incompatible(reason) => AdmissibilityReport {
            class: AsymptoticClass::Alf,
            admissible: false,
            equality: false,
            slack: None,
            chi,
            tau: data.tau,
            boundary,
            eta: None,
            e_candidates: Vec::new(),
            rejection_reason: Some(reason),
        },
        Compatibility::Alf { e_candidates } => {
            let model_matches = chi == boundary.p && data.diagonal.iter().all(|d| d % 2 == 0);
            let candidates: Vec<EulerCandidate> = e_candidates
                .into_iter()
                .map(|e| {
                    let slack = integer(2 * chi)
                        - integer(3)
                            * (integer(data.tau) - ratio(e, 3) + integer(e.signum())).abs();
                    let equality = slack.is_zero() && model_matches;
                    EulerCandidate { e, slack, equality }
                })
                .collect();
            let equality = candidates.iter().any(|c| c.equality);
            let admissible = candidates
                .iter()
                .any(|c| c.equality || c.slack.is_positive());
            let slack = candidates
                .iter()
                .find(|c| c.equality)
                .map(|c| c.slack.clone())
                .or_else(|| candidates.iter().map(|c| c.slack.clone()).max());
            let rejection_reason = if admissible {
                None
            } else if candidates.iter().any(|c| c.slack.is_zero()) {
                Some(RejectionReason::HyperKahlerObstruction)
            } else {
                Some(RejectionReason::InequalityViolated)
            };
            AdmissibilityReport {
                class: AsymptoticClass::Alf,
                admissible,
                equality,
                slack,
                chi,
                tau: data.tau,
                boundary,
                eta: None,
                e_candidates: candidates,
                rejection_reason,
            }
        }
        Compatibility::Ale => unreachable!("ALF classification cannot yield ALE"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckMode {
    Ale,
    Alf,
    Both,
}

pub fn check(rs: &RodStructure, mode: CheckMode) -> Vec<AdmissibilityReport> {
    match mode {
        CheckMode::Ale => vec![check_ale(rs)],
        CheckMode::Alf => vec![check_alf(rs)],
        CheckMode::Both => vec![check_ale(rs), check_alf(rs)],
    }
}
