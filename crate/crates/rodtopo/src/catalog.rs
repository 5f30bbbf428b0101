//! Rod structures of the classical toric gravitational instantons,
//! together with the invariants they are expected to reproduce. The
//! entries double as golden tests and as the source of the "known"
//! markers in grid scans.
//!
//! The isotropy data of an instanton fixes its rod structure only up to
//! relabeling and traversal direction; each entry below is ordered so that
//! the recomputed signature carries the published sign. Instantons sharing
//! a rod structure share an entry.

use crate::boundary::{AsymptoticClass, BoundaryKind};
use crate::rod::RodStructure;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Stable name used to address the entry from the command line.
    pub name: &'static str,
    /// Display title naming the instanton(s).
    pub title: &'static str,
    pub rods: RodStructure,
    pub expected_chi: i64,
    pub expected_tau: i64,
    pub expected_boundary: BoundaryKind,
    /// Asymptotic geometry, as usually quoted.
    pub asymptotics: &'static str,
    /// Whether the instanton metric is hyper-Kaehler. For every class in
    /// `checked_classes`, the equality flag of the admissibility check
    /// must equal this.
    pub hyperkahler: bool,
    /// Asymptotic classes under which the entry is screened.
    pub checked_classes: &'static [AsymptoticClass],
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "euclidean-taub-nut",
            title: "Euclidean space / Taub-NUT",
            // both actions have the polar isotropy pattern of flat R^4
            rods: RodStructure::validate(&[(0, 1), (-1, 0)]).unwrap(),
            expected_chi: 1,
            expected_tau: 0,
            expected_boundary: BoundaryKind::S3,
            asymptotics: "ALE with trivial group / ALF-A_0",
            hyperkahler: true,
            checked_classes: &[AsymptoticClass::Ale, AsymptoticClass::Alf],
        },
        CatalogEntry {
            name: "kerr-schwarzschild",
            title: "Kerr / Schwarzschild",
            // isotropy (0,1),(1,0),(0,1) along theta = 0, the horizon,
            // theta = pi; sign-normalized
            rods: RodStructure::validate(&[(0, 1), (-1, 0), (0, -1)]).unwrap(),
            expected_chi: 2,
            expected_tau: 0,
            expected_boundary: BoundaryKind::S2xS1,
            asymptotics: "ALF-A_{-1} (AF)",
            hyperkahler: false,
            checked_classes: &[AsymptoticClass::Alf],
        },
        CatalogEntry {
            name: "taub-bolt",
            title: "Taub-bolt",
            // isotropy (0,1),(1,1),(1,0); the traversal with tau = +1
            rods: RodStructure::from_d_vector(&[1]),
            expected_chi: 2,
            expected_tau: 1,
            expected_boundary: BoundaryKind::S3,
            asymptotics: "ALF-A_0",
            hyperkahler: false,
            checked_classes: &[AsymptoticClass::Alf],
        },
        CatalogEntry {
            name: "eguchi-hanson",
            title: "Eguchi-Hanson",
            // isotropy (-1,1),(1,0),(1,1); the traversal with tau = +1,
            // relabeled
            rods: RodStructure::validate(&[(1, 1), (-1, 0), (1, -1)]).unwrap(),
            expected_chi: 2,
            expected_tau: 1,
            expected_boundary: BoundaryKind::Lens,
            asymptotics: "ALE with group Z_2",
            hyperkahler: true,
            checked_classes: &[AsymptoticClass::Ale],
        },
        CatalogEntry {
            name: "chen-teo",
            title: "Chen-Teo",
            // isotropy (0,1),(1,0),(1,1),(0,1); the traversal with tau = +1
            rods: RodStructure::from_d_vector(&[1, 1]),
            expected_chi: 3,
            expected_tau: 1,
            expected_boundary: BoundaryKind::S2xS1,
            asymptotics: "ALF-A_{-1} (AF)",
            hyperkahler: false,
            checked_classes: &[AsymptoticClass::Alf],
        },
    ]
}

pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    catalog_entries().into_iter().find(|e| e.name == name)
}
