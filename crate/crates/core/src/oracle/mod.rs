//! Brute-force ground truth: vertices and full face lattices enumerated
//! straight from the interlacing inequalities, plus a check of the cube
//! projection against them.
//!
//! Exponential in `s`; meant for `s <= 6`.

mod fiber;
mod lattice;
pub mod rank;
mod table;

pub use fiber::{
    cube_face_of, fiber_decomposition_check, fiber_decomposition_check_on, tracked_cells,
    CubeFaceTally, FiberReport,
};
pub use lattice::{
    enumerate_vertices, face_lattice, face_lattice_with, Face, FaceLattice, LatticeSummary,
};
pub use table::{Constraint, Node, TriangularTable};

/// Environment variable overriding [`OracleLimits::max_s`].
pub const MAX_S_ENV: &str = "GTFACE_ORACLE_MAX_S";

/// Budget for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest sequence length accepted.
    pub max_s: usize,
    /// Largest number of integer points visited during vertex search.
    pub max_candidates: u64,
    /// Largest number of faces materialized.
    pub max_faces: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_s: 6,
            max_candidates: 20_000_000,
            max_faces: 1_000_000,
        }
    }
}

impl OracleLimits {
    /// Defaults, with `max_s` taken from the environment when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(s) = std::env::var(MAX_S_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_s = s;
        }
        limits
    }
}
