//! Exact topological invariants of toric gravitational instantons, computed
//! from their rod structures.
//!
//! A rod structure is an ordered sequence of coprime integer 2-vectors
//! `(v_0, ..., v_n)` with `det(v_{i-1}, v_i) = 1` for every consecutive
//! pair. It records the circle isotropy subgroups along the boundary of the
//! orbit space of a torus-symmetric gravitational instanton, and it
//! determines the topology of the instanton:
//!
//! * the Euler characteristic is the number of turning points `n`,
//! * the intersection form is tridiagonal with diagonal
//!   `d_i = -det(v_{i-1}, v_{i+1})` and unit off-diagonals,
//! * the boundary at infinity is the lens space `L(p, q)` with
//!   `p = |det(v_0, v_n)|` (with `L(0,1) = S^2 x S^1`, `L(1,*) = S^3`).
//!
//! On top of these, the [`admissibility`] module evaluates the
//! Hitchin-Thorpe inequalities for the ALE and ALF asymptotic classes with
//! exact rational arithmetic, and [`families`] runs exhaustive scans over
//! boxes of d-vectors. No floating point appears anywhere in the crate.
//!
//! Start with the runnable programs under `examples/`, one per capability,
//! or with [`catalog::catalog_entries`] for the classical instantons.

pub mod admissibility;
pub mod boundary;
pub mod catalog;
pub mod cli;
pub mod eta;
pub mod families;
pub mod grid;
pub mod invariants;
pub mod rational;
pub mod report;
pub mod rod;
pub mod rodfile;

pub use admissibility::{check, check_ale, check_alf, AdmissibilityReport, CheckMode, EulerCandidate};
pub use boundary::{
    boundary_lens, classify_compatibility, AsymptoticClass, BoundaryKind, Compatibility,
    LensBoundary, RejectionReason,
};
pub use catalog::{catalog_entries, find_entry, CatalogEntry};
pub use eta::{eta_closed_form_3pt, eta_lens, EtaError};
pub use families::{
    enumerate_d_box, scan_four_point_af, scan_three_point, three_point_structure, GridCell, Marker,
};
pub use invariants::{
    euler_characteristic, inertia, inertia_oracle, intersection_data, intersection_diagonal,
    signature, Inertia, IntersectionData, SizeTooLarge,
};
pub use rod::{DVector, RodError, RodStructure, RodVector, UnimodularMap};
pub use rodfile::{parse_rod_file, ParseError};
