//! Checks the projection onto the cube against an enumerated face lattice.
//!
//! For each face `G` the tracked second-row coordinates of its vertices must
//! cover every corner of a cube face `A` (so the image is exactly `A`), and
//! for every `A` the histogram of `dim G - dim A` over faces mapping onto it
//! must equal the f-vector of the fiber class over the barycenter of `A`,
//! itself enumerated by the oracle.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::Result;
use crate::recurrence::{fiber_child, Pick, PickVector};
use crate::signature::Signature;

use super::lattice::{face_lattice, Face, FaceLattice};
use super::OracleLimits;

/// Faces of the polytope hanging over one face of the cube.
#[derive(Clone, Debug, Serialize)]
pub struct CubeFaceTally {
    pub pick: String,
    pub cube_dim: usize,
    pub fiber: Signature,
    /// `observed[d]` = faces `G` over this cube face with `dim G - dim A = d`.
    pub observed: Vec<u64>,
    /// f-vector of the fiber, enumerated independently.
    pub expected: Vec<u64>,
}

impl CubeFaceTally {
    pub fn matches(&self) -> bool {
        self.observed == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub signature: Signature,
    pub faces_checked: usize,
    pub cube_faces: Vec<CubeFaceTally>,
    /// First failure found, if any.
    pub failure: Option<String>,
}

impl FiberReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Cells `(1, c)` sitting under two distinct top values, in cube order.
pub fn tracked_cells(lattice: &FaceLattice) -> Vec<usize> {
    let top = lattice.table.top();
    (0..top.len().saturating_sub(1))
        .filter(|&c| top[c] < top[c + 1])
        .map(|c| lattice.table.cell_index(1, c))
        .collect()
}

/// The cube face that is the image of `face`, or a description of why the
/// image is not a cube face.
pub fn cube_face_of(
    lattice: &FaceLattice,
    tracked: &[usize],
    face: &Face,
) -> std::result::Result<PickVector, String> {
    let projected: HashSet<Vec<i64>> = face
        .vertices
        .ones()
        .map(|v| tracked.iter().map(|&c| lattice.vertices[v][c]).collect())
        .collect();
    let mut picks = Vec::with_capacity(tracked.len());
    for (j, _) in tracked.iter().enumerate() {
        let lo = j as i64 + 1;
        let values: HashSet<i64> = projected.iter().map(|p| p[j]).collect();
        if values.iter().any(|&v| v != lo && v != lo + 1) {
            return Err(format!(
                "direction {} takes values {values:?} outside {{{lo}, {}}}",
                j + 1,
                lo + 1
            ));
        }
        picks.push(match (values.contains(&lo), values.contains(&(lo + 1))) {
            (true, true) => Pick::Mid,
            (true, false) => Pick::Low,
            _ => Pick::High,
        });
    }
    // The image is conv(projected) inside the box; it is the whole box iff
    // every corner of the box is itself a projected vertex.
    let free: Vec<usize> = (0..picks.len())
        .filter(|&j| picks[j] == Pick::Mid)
        .collect();
    for mask in 0u64..(1 << free.len()) {
        let corner: Vec<i64> = picks
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let lo = j as i64 + 1;
                match p {
                    Pick::Low => lo,
                    Pick::High => lo + 1,
                    Pick::Mid => {
                        let bit = free.iter().position(|&f| f == j).unwrap();
                        lo + ((mask >> bit) & 1) as i64
                    }
                }
            })
            .collect();
        if !projected.contains(&corner) {
            return Err(format!("image misses cube corner {corner:?}"));
        }
    }
    Ok(PickVector(picks))
}

fn pick_label(pv: &PickVector) -> String {
    pv.0.iter()
        .map(|p| match p {
            Pick::Low => 'L',
            Pick::Mid => 'M',
            Pick::High => 'H',
        })
        .collect()
}

/// Runs both checks on `GZ(sig)`.
pub fn fiber_decomposition_check(sig: &Signature, limits: &OracleLimits) -> Result<FiberReport> {
    fiber_decomposition_check_on(&face_lattice(sig, limits)?, limits)
}

/// Same as [`fiber_decomposition_check`] on an already enumerated lattice.
/// Fiber lattices are still enumerated under `limits`.
pub fn fiber_decomposition_check_on(
    lattice: &FaceLattice,
    limits: &OracleLimits,
) -> Result<FiberReport> {
    let sig = &lattice.signature;
    let mut report = FiberReport {
        signature: sig.clone(),
        faces_checked: lattice.faces.len(),
        cube_faces: Vec::new(),
        failure: None,
    };
    if sig.k() < 2 {
        // the cube is a point and the fiber is the polytope itself
        return Ok(report);
    }
    let tracked = tracked_cells(lattice);
    debug_assert_eq!(tracked.len(), sig.k() - 1);

    let mut hist: BTreeMap<PickVector, Vec<u64>> = BTreeMap::new();
    for (idx, face) in lattice.faces.iter().enumerate() {
        let pick = match cube_face_of(lattice, &tracked, face) {
            Ok(p) => p,
            Err(why) => {
                report.failure = Some(format!(
                    "face #{idx} (vertices {:?}) does not project onto a cube face: {why}",
                    face.vertex_indices()
                ));
                return Ok(report);
            }
        };
        let cube_dim = pick.cube_dim();
        let Some(shift) = face.dim.checked_sub(cube_dim) else {
            report.failure = Some(format!(
                "face #{idx} has dimension {} below its image's {cube_dim}",
                face.dim
            ));
            return Ok(report);
        };
        let counts = hist.entry(pick).or_default();
        if counts.len() <= shift {
            counts.resize(shift + 1, 0);
        }
        counts[shift] += 1;
    }

    for pick in PickVector::all(sig.k() - 1) {
        let child = fiber_child(sig, &pick)?;
        let expected = face_lattice(&child.child, limits)?.f_vector;
        let observed = hist.remove(&pick).unwrap_or_default();
        let tally = CubeFaceTally {
            pick: pick_label(&pick),
            cube_dim: child.cube_dim,
            fiber: child.child,
            observed,
            expected,
        };
        if report.failure.is_none() && !tally.matches() {
            report.failure = Some(format!(
                "cube face {} (fiber {}): observed {:?}, fiber f-vector {:?}",
                tally.pick, tally.fiber, tally.observed, tally.expected
            ));
        }
        report.cube_faces.push(tally);
    }
    Ok(report)
}
