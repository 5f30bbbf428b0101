//! Euler characteristic, the tridiagonal intersection form, and its exact
//! inertia, computed two independent ways.
//!
//! The second homology of a toric instanton with `n` turning points is
//! `Z^{n-1}`, and in the sphere basis the intersection form is the
//! symmetric tridiagonal matrix with diagonal `(d_1, ..., d_{n-1})` and
//! unit off-diagonals. Its signature is the instanton's signature `tau`.
//! Both inertia routines below are exact; eigenvalues are never
//! approximated.

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::rod::RodStructure;

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn size(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    /// `tau`: positive count minus negative count.
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// The intersection form of a rod structure: diagonal, inertia, and
/// signature. The matrix itself is never materialized; the off-diagonal
/// entries are implicitly 1 on the first sub/superdiagonal and 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionData {
    pub diagonal: Vec<i64>,
    pub inertia: Inertia,
    pub tau: i64,
}

impl IntersectionData {
    /// Rank of `H_2`, i.e. the second Betti number `n - 1`.
    pub fn size(&self) -> usize {
        self.diagonal.len()
    }
}

/// `chi = n`, the number of turning points.
pub fn euler_characteristic(rs: &RodStructure) -> i64 {
    rs.turning_points() as i64
}

/// Diagonal `d_i = -det(v_{i-1}, v_{i+1})` of the intersection matrix;
/// empty when `n = 1` (`H_2 = 0`).
pub fn intersection_diagonal(rs: &RodStructure) -> Vec<i64> {
    rs.d_entries()
}

pub fn intersection_data(rs: &RodStructure) -> IntersectionData {
    let diagonal = intersection_diagonal(rs);
    let inertia = inertia(&diagonal);
    IntersectionData {
        tau: inertia.signature(),
        diagonal,
        inertia,
    }
}

/// `tau` of the intersection form; 0 when `n = 1`.
pub fn signature(rs: &RodStructure) -> i64 {
    inertia(&intersection_diagonal(rs)).signature()
}

/// Exact inertia of the symmetric tridiagonal matrix with the given
/// diagonal and unit off-diagonals, by congruence reduction over the
/// rationals.
///
/// A nonzero leading entry is a 1x1 pivot: clearing its row and column
/// shifts the next diagonal entry by `-1/pivot` and leaves everything else
/// untouched. A zero leading entry pairs with its unit off-diagonal into a
/// 2x2 block pivot of determinant -1, contributing one positive and one
/// negative eigenvalue and no correction to the rest; a zero in the last
/// position is a zero row. Sylvester's law of inertia makes the counts
/// those of the original matrix.
pub fn inertia(diagonal: &[i64]) -> Inertia {
    let mut counts = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let n = diagonal.len();
    let mut carried: Option<BigRational> = None;
    let mut i = 0;
    while i < n {
        let pivot = carried
            .take()
            .unwrap_or_else(|| BigRational::from_integer(BigInt::from(diagonal[i])));
        if pivot.is_zero() {
            if i + 1 == n {
                counts.zero += 1;
                i += 1;
            } else {
                // block pivot [[0,1],[1,*]]
                counts.positive += 1;
                counts.negative += 1;
                i += 2;
            }
            continue;
        }
        if pivot.is_positive() {
            counts.positive += 1;
        } else {
            counts.negative += 1;
        }
        if i + 1 < n {
            carried = Some(BigRational::from_integer(BigInt::from(diagonal[i + 1])) - pivot.recip());
        }
        i += 1;
    }
    counts
}

/// Largest matrix size [`inertia_oracle`] accepts.
pub const ORACLE_MAX_SIZE: usize = 12;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("inertia oracle handles sizes up to {ORACLE_MAX_SIZE}, got {0}")]
pub struct SizeTooLarge(pub usize);

/// Independent inertia computation for cross-checking [`inertia`].
///
/// Builds the characteristic polynomial of the tridiagonal matrix through
/// its three-term recurrence `p_k = (x - d_k) p_{k-1} - p_{k-2}` with exact
/// integer coefficients, strips the zero root with its multiplicity, and
/// counts positive and negative roots by Descartes' rule of signs on
/// `p(x)` and `p(-x)`. Descartes' rule is exact for real-rooted
/// polynomials, and characteristic polynomials of symmetric matrices are
/// real-rooted.
pub fn inertia_oracle(diagonal: &[i64]) -> Result<Inertia, SizeTooLarge> {
    if diagonal.len() > ORACLE_MAX_SIZE {
        return Err(SizeTooLarge(diagonal.len()));
    }
    if diagonal.is_empty() {
        return Ok(Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        });
    }
    // ascending coefficients
    let mut prev = vec![BigInt::one()];
    let mut cur = vec![BigInt::from(-diagonal[0]), BigInt::one()];
    for &d in &diagonal[1..] {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= BigInt::from(d) * c;
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    let zero = cur.iter().take_while(|c| c.is_zero()).count();
    let reduced = &cur[zero..];
    let positive = sign_changes(reduced.iter().cloned());
    let negative = sign_changes(
        reduced
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() }),
    );
    Ok(Inertia {
        positive,
        negative,
        zero,
    })
}

fn sign_changes(coefficients: impl Iterator<Item = BigInt>) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for c in coefficients {
        if c.is_zero() {
            continue;
        }
        let sign = c.is_positive();
        if last == Some(!sign) {
            changes += 1;
        }
        last = Some(sign);
    }
    changes
}
