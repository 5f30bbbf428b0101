//! Rod vectors and rod structures: validation, sign normalization,
//! canonical form under `SL(2,Z)`, orientation reversal, and the
//! correspondence with d-vectors.
//!
//! All values are immutable after construction and every operation is a
//! pure function returning a new value, so everything here can be shared
//! freely across threads. Integer arithmetic is checked: determinants are
//! computed in `i128` (exact for `i64` entries) and the d-vector recurrence
//! uses checked `i64` operations, so overflow can never silently corrupt a
//! determinant.

use std::fmt;

use num::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum RodError {
    #[error("a rod structure needs at least two rod vectors")]
    TooShort,
    #[error("rod vector at index {0} is not a coprime pair")]
    NonCoprimeEntry(usize),
    #[error("determinant of the rod pair ending at index {index} is {value}, expected 1")]
    BadDeterminant { index: usize, value: i128 },
    #[error("determinant of the rod pair ending at index {index} is not \u{b1}1")]
    NotUnitDeterminant { index: usize },
}

/// A coprime pair of integer windings, naming the circle subgroup
/// `T^2(a, b)` of the torus. `(0, 0)` is excluded.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RodVector {
    a: i64,
    b: i64,
}

impl RodVector {
    /// Returns `None` unless `gcd(|a|, |b|) = 1`.
    pub fn new(a: i64, b: i64) -> Option<RodVector> {
        if a.unsigned_abs().gcd(&b.unsigned_abs()) == 1 {
            Some(RodVector { a, b })
        } else {
            None
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `-v` names the same circle subgroup: `T^2(v) = T^2(-v)`.
    pub fn negated(&self) -> RodVector {
        RodVector {
            a: self.a.checked_neg().expect("rod entry overflow"),
            b: self.b.checked_neg().expect("rod entry overflow"),
        }
    }

    /// Determinant of the 2x2 matrix with columns `self` and `other`.
    /// Exact: `i64` entries cannot overflow an `i128` product.
    pub fn det(&self, other: &RodVector) -> i128 {
        self.a as i128 * other.b as i128 - self.b as i128 * other.a as i128
    }

    pub fn as_pair(&self) -> (i64, i64) {
        (self.a, self.b)
    }
}

impl fmt::Display for RodVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for RodVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// An ordered sequence `(v_0, ..., v_n)` of rod vectors, `n >= 1`, with
/// `det(v_{i-1}, v_i) = 1` for every consecutive pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RodStructure {
    rods: Vec<RodVector>,
}

fn coprime_vectors(raw: &[(i64, i64)]) -> Result<Vec<RodVector>, RodError> {
    raw.iter()
        .enumerate()
        .map(|(i, &(a, b))| RodVector::new(a, b).ok_or(RodError::NonCoprimeEntry(i)))
        .collect()
}

impl RodStructure {
    /// Checks all invariants on a raw list of integer pairs. The input is
    /// not modified in any way; a single non-unit determinant is an error.
    pub fn validate(raw: &[(i64, i64)]) -> Result<RodStructure, RodError> {
        if raw.len() < 2 {
            return Err(RodError::TooShort);
        }
        let rods = coprime_vectors(raw)?;
        for i in 1..rods.len() {
            let value = rods[i - 1].det(&rods[i]);
            if value != 1 {
                return Err(RodError::BadDeterminant { index: i, value });
            }
        }
        Ok(RodStructure { rods })
    }

    /// Repairs determinant signs by flipping vectors. Scanning `i = 1..n`
    /// left to right, `v_i` is replaced by `-v_i` whenever the determinant
    /// with the (already fixed) predecessor is `-1`; `v_0` is never
    /// touched. Each isotropy subgroup is unchanged since
    /// `T^2(v) = T^2(-v)`.
    pub fn normalize_signs(raw: &[(i64, i64)]) -> Result<RodStructure, RodError> {
        if raw.len() < 2 {
            return Err(RodError::TooShort);
        }
        let mut rods = coprime_vectors(raw)?;
        for i in 1..rods.len() {
            match rods[i - 1].det(&rods[i]) {
                1 => {}
                -1 => rods[i] = rods[i].negated(),
                _ => return Err(RodError::NotUnitDeterminant { index: i }),
            }
        }
        Ok(RodStructure { rods })
    }

    /// Builds the structure with `v_0 = (0,1)`, `v_1 = (-1,0)` and
    /// `v_{i+1} = -d_i v_i - v_{i-1}`. Any integer tuple is realizable;
    /// the empty tuple gives the minimal two-rod structure.
    pub fn from_d_vector(diagonal: &[i64]) -> RodStructure {
        let mut rods = Vec::with_capacity(diagonal.len() + 2);
        rods.push(RodVector { a: 0, b: 1 });
        rods.push(RodVector { a: -1, b: 0 });
        for &d in diagonal {
            let last = rods[rods.len() - 1];
            let prev = rods[rods.len() - 2];
            rods.push(RodVector {
                a: recurrence_step(d, last.a, prev.a),
                b: recurrence_step(d, last.b, prev.b),
            });
        }
        RodStructure { rods }
    }

    pub fn rods(&self) -> &[RodVector] {
        &self.rods
    }

    /// Number of turning points `n`; the fixed points of the torus action.
    pub fn turning_points(&self) -> usize {
        self.rods.len() - 1
    }

    /// The unique det-1 relabeling sending `v_0` to `(0,1)` and `v_1` to
    /// `(-1,0)`, together with the relabeled structure. The d-vector is
    /// unchanged by any det-1 map.
    pub fn canonicalize(&self) -> (RodStructure, UnimodularMap) {
        let map = UnimodularMap::to_standard_frame(self.rods[0], self.rods[1]);
        (self.transform(&map), map)
    }

    /// Applies a det-1 map to every rod. Consecutive determinants are
    /// preserved, so the result is again a valid rod structure.
    pub fn transform(&self, map: &UnimodularMap) -> RodStructure {
        RodStructure {
            rods: self.rods.iter().map(|v| map.apply(*v)).collect(),
        }
    }

    /// The structure traversed in the opposite orientation:
    /// `(v_n, ..., v_0)` with signs renormalized.
    pub fn reverse(&self) -> RodStructure {
        let raw: Vec<(i64, i64)> = self.rods.iter().rev().map(RodVector::as_pair).collect();
        RodStructure::normalize_signs(&raw).expect("reversal keeps unit determinants")
    }

    /// The diagonal `d_i = -det(v_{i-1}, v_{i+1})` of the intersection
    /// form. Errors with [`RodError::TooShort`] when `n < 2` (a single
    /// turning point has no d-vector).
    pub fn d_vector(&self) -> Result<DVector, RodError> {
        if self.turning_points() < 2 {
            return Err(RodError::TooShort);
        }
        Ok(DVector(self.d_entries()))
    }

    /// Same as [`RodStructure::d_vector`] but empty for `n = 1`.
    pub(crate) fn d_entries(&self) -> Vec<i64> {
        (1..self.rods.len().saturating_sub(1))
            .map(|i| {
                let d = -self.rods[i - 1].det(&self.rods[i + 1]);
                i64::try_from(d).expect("intersection diagonal entry overflows i64")
            })
            .collect()
    }
}

fn recurrence_step(d: i64, last: i64, prev: i64) -> i64 {
    d.checked_mul(last)
        .and_then(i64::checked_neg)
        .and_then(|x| x.checked_sub(prev))
        .expect("rod entry overflow in d-vector recurrence")
}

impl fmt::Display for RodStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.rods.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RodStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RodStructure[{self}]")
    }
}

/// A 2x2 integer matrix of determinant +1, acting on rod vectors and
/// relabeling the torus factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    rows: [[i64; 2]; 2],
}

impl UnimodularMap {
    /// Returns `None` unless the determinant is exactly +1.
    pub fn new(rows: [[i64; 2]; 2]) -> Option<UnimodularMap> {
        let det = rows[0][0] as i128 * rows[1][1] as i128 - rows[0][1] as i128 * rows[1][0] as i128;
        (det == 1).then_some(UnimodularMap { rows })
    }

    pub fn identity() -> UnimodularMap {
        UnimodularMap {
            rows: [[1, 0], [0, 1]],
        }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        self.rows
    }

    pub fn apply(&self, v: RodVector) -> RodVector {
        let mul = |row: [i64; 2]| {
            row[0]
                .checked_mul(v.a)
                .and_then(|x| row[1].checked_mul(v.b).and_then(|y| x.checked_add(y)))
                .expect("overflow applying unimodular map")
        };
        // A det-1 image of a coprime pair is coprime.
        RodVector {
            a: mul(self.rows[0]),
            b: mul(self.rows[1]),
        }
    }

    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let a = self.rows;
        let b = other.rows;
        let cell = |i: usize, j: usize| {
            a[i][0]
                .checked_mul(b[0][j])
                .and_then(|x| a[i][1].checked_mul(b[1][j]).and_then(|y| x.checked_add(y)))
                .expect("overflow composing unimodular maps")
        };
        UnimodularMap {
            rows: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }

    /// The unique det-1 map with `U v0 = (0,1)` and `U v1 = (-1,0)`;
    /// requires `det(v0, v1) = 1`. Written out, `U = C (v0 v1)^{-1}` with
    /// `C` the column matrix of the targets, which collapses to the rows
    /// below.
    fn to_standard_frame(v0: RodVector, v1: RodVector) -> UnimodularMap {
        debug_assert_eq!(v0.det(&v1), 1);
        UnimodularMap {
            rows: [
                [v0.b, v0.a.checked_neg().expect("rod entry overflow")],
                [v1.b, v1.a.checked_neg().expect("rod entry overflow")],
            ],
        }
    }
}

/// The diagonal of the intersection form, `d_i = -det(v_{i-1}, v_{i+1})`.
/// Any integer tuple arises from some rod structure, so there are no
/// invariants beyond integrality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DVector(pub Vec<i64>);

impl DVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// The d-vector of the orientation-reversed structure: entries
    /// reversed and negated.
    pub fn orientation_reversed(&self) -> DVector {
        DVector(self.0.iter().rev().map(|&d| -d).collect())
    }
}

impl fmt::Display for DVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for DVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DVector{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rods(raw: &[(i64, i64)]) -> RodStructure {
        RodStructure::validate(raw).expect("valid structure")
    }

    fn pairs(rs: &RodStructure) -> Vec<(i64, i64)> {
        rs.rods().iter().map(RodVector::as_pair).collect()
    }

    #[test]
    fn validate_accepts_minimal_structure() {
        let rs = rods(&[(0, 1), (-1, 0)]);
        assert_eq!(rs.turning_points(), 1);
    }

    #[test]
    fn validate_rejects_wrong_determinant() {
        assert_eq!(
            RodStructure::validate(&[(0, 1), (1, 0)]),
            Err(RodError::BadDeterminant { index: 1, value: -1 })
        );
    }

    #[test]
    fn validate_rejects_non_coprime_entry() {
        assert_eq!(
            RodStructure::validate(&[(0, 2), (-1, 0)]),
            Err(RodError::NonCoprimeEntry(0))
        );
        assert_eq!(
            RodStructure::validate(&[(0, 0), (-1, 0)]),
            Err(RodError::NonCoprimeEntry(0))
        );
    }

    #[test]
    fn validate_rejects_single_rod() {
        assert_eq!(RodStructure::validate(&[(0, 1)]), Err(RodError::TooShort));
    }

    #[test]
    fn normalize_signs_is_identity_on_valid_input() {
        let rs = RodStructure::normalize_signs(&[(0, 1), (-1, 0)]).unwrap();
        assert_eq!(pairs(&rs), vec![(0, 1), (-1, 0)]);
    }

    #[test]
    fn normalize_signs_flips_left_to_right() {
        let rs = RodStructure::normalize_signs(&[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(pairs(&rs), vec![(0, 1), (-1, 0), (0, -1)]);

        let rs = RodStructure::normalize_signs(&[(-1, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(pairs(&rs), vec![(-1, 1), (-1, 0), (-1, -1)]);
    }

    #[test]
    fn normalize_signs_rejects_non_unit_determinant() {
        assert_eq!(
            RodStructure::normalize_signs(&[(0, 1), (2, 1)]),
            Err(RodError::NotUnitDeterminant { index: 1 })
        );
    }

    #[test]
    fn normalized_output_always_validates() {
        // every +-1 determinant chain is repaired to all +1
        let rs = RodStructure::normalize_signs(&[(1, 0), (0, 1), (1, 1), (1, 2)]).unwrap();
        assert!(RodStructure::validate(&pairs(&rs)).is_ok());
    }

    #[test]
    fn canonicalize_fixes_the_leading_frame() {
        let rs = rods(&[(0, 1), (-1, 0), (1, -1)]);
        let (canon, map) = rs.canonicalize();
        assert_eq!(map, UnimodularMap::identity());
        assert_eq!(canon, rs);

        let rs = rods(&[(1, 1), (-1, 0), (1, -1)]);
        let (canon, map) = rs.canonicalize();
        assert_eq!(map.rows(), [[1, -1], [0, 1]]);
        assert_eq!(pairs(&canon), vec![(0, 1), (-1, 0), (2, -1)]);
    }

    #[test]
    fn canonicalize_preserves_d_vector() {
        let rs = rods(&[(1, 1), (-1, 0), (1, -1)]);
        let (canon, _) = rs.canonicalize();
        assert_eq!(canon.d_vector().unwrap(), rs.d_vector().unwrap());
    }

    #[test]
    fn reverse_renormalizes_signs() {
        let rs = rods(&[(0, 1), (-1, 0)]);
        assert_eq!(pairs(&rs.reverse()), vec![(-1, 0), (0, -1)]);
    }

    #[test]
    fn double_reversal_restores_d_vector() {
        let rs = RodStructure::from_d_vector(&[2, -1, 3]);
        assert_eq!(
            rs.reverse().reverse().d_vector().unwrap(),
            rs.d_vector().unwrap()
        );
    }

    #[test]
    fn from_d_vector_applies_recurrence() {
        assert_eq!(
            pairs(&RodStructure::from_d_vector(&[1, 1])),
            vec![(0, 1), (-1, 0), (1, -1), (0, 1)]
        );
        assert_eq!(
            pairs(&RodStructure::from_d_vector(&[2, 2])),
            vec![(0, 1), (-1, 0), (2, -1), (-3, 2)]
        );
        assert_eq!(pairs(&RodStructure::from_d_vector(&[])), vec![(0, 1), (-1, 0)]);
    }

    #[test]
    fn from_d_vector_generic_shape() {
        // v_2 = (a, -1), v_3 = (1 - ab, b)
        for (a, b) in [(3, 5), (-4, 7), (0, 0), (17, -17)] {
            let rs = RodStructure::from_d_vector(&[a, b]);
            assert_eq!(pairs(&rs)[2], (a, -1));
            assert_eq!(pairs(&rs)[3], (1 - a * b, b));
        }
    }

    #[test]
    fn d_vector_requires_two_turning_points() {
        let rs = rods(&[(0, 1), (-1, 0)]);
        assert_eq!(rs.d_vector(), Err(RodError::TooShort));
    }

    #[test]
    fn d_vector_round_trips() {
        let d = vec![3, -2, 0, 5];
        let rs = RodStructure::from_d_vector(&d);
        assert_eq!(rs.d_vector().unwrap().0, d);

        let rs = rods(&[(1, 1), (-1, 0), (1, -1)]);
        let d = rs.d_vector().unwrap();
        assert_eq!(RodStructure::from_d_vector(d.as_slice()), rs.canonicalize().0);
    }

    #[test]
    fn transform_preserves_d_vector() {
        let u = UnimodularMap::new([[2, 1], [1, 1]]).unwrap();
        let rs = RodStructure::from_d_vector(&[1, -3, 2]);
        assert_eq!(
            rs.transform(&u).d_vector().unwrap(),
            rs.d_vector().unwrap()
        );
    }

    #[test]
    fn unimodular_map_rejects_other_determinants() {
        assert!(UnimodularMap::new([[1, 0], [0, -1]]).is_none());
        assert!(UnimodularMap::new([[2, 0], [0, 1]]).is_none());
        assert!(UnimodularMap::new([[1, 5], [0, 1]]).is_some());
    }

    #[test]
    fn orientation_reversed_d_vector() {
        let d = DVector(vec![1, -2, 3]);
        assert_eq!(d.orientation_reversed().0, vec![-3, 2, -1]);
    }
}
