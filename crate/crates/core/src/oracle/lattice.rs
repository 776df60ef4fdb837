//! Face lattices from vertex-constraint incidences.

use fixedbitset::FixedBitSet;
use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Parallelism};
use crate::signature::Signature;

use super::rank::affine_dim;
use super::table::TriangularTable;
use super::OracleLimits;

/// A nonempty face, identified by its vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: FixedBitSet,
    pub dim: usize,
}

impl Face {
    pub fn vertex_indices(&self) -> Vec<usize> {
        self.vertices.ones().collect()
    }
}

/// Every nonempty face of a GT polytope.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub signature: Signature,
    pub table: TriangularTable,
    pub vertices: Vec<Vec<i64>>,
    /// Sorted by dimension, then by vertex set.
    pub faces: Vec<Face>,
    pub f_vector: Vec<u64>,
}

/// Serializable summary used by reports.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeSummary {
    pub signature: Signature,
    pub vertices: usize,
    pub faces: usize,
    pub f_vector: Vec<u64>,
}

impl FaceLattice {
    pub fn summary(&self) -> LatticeSummary {
        LatticeSummary {
            signature: self.signature.clone(),
            vertices: self.vertices.len(),
            faces: self.faces.len(),
            f_vector: self.f_vector.clone(),
        }
    }

    /// `sum_d (-1)^d f_d`.
    pub fn euler_sum(&self) -> i64 {
        self.f_vector
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// For each constraint, the vertices where it holds with equality.
    pub fn tight_sets(&self) -> Vec<FixedBitSet> {
        tight_sets(&self.table, &self.vertices)
    }
}

fn tight_sets(table: &TriangularTable, vertices: &[Vec<i64>]) -> Vec<FixedBitSet> {
    table
        .constraints()
        .iter()
        .map(|c| {
            let mut set = FixedBitSet::with_capacity(vertices.len());
            for (i, v) in vertices.iter().enumerate() {
                if table.is_tight(v, c) {
                    set.insert(i);
                }
            }
            set
        })
        .collect()
}

/// Enumerates the vertices of `GZ(sig)`.
pub fn enumerate_vertices(sig: &Signature, limits: &OracleLimits) -> Result<Vec<Vec<i64>>> {
    TriangularTable::new(sig).enumerate_vertices(limits)
}

/// Builds the face lattice of `GZ(sig)`.
///
/// Faces are exactly the nonempty intersections of the full vertex set with
/// tight sets of constraints, so the lattice is the closure of
/// `{all vertices}` under intersection with each tight set in turn.
pub fn face_lattice(sig: &Signature, limits: &OracleLimits) -> Result<FaceLattice> {
    face_lattice_with(sig, limits, Parallelism::default())
}

pub fn face_lattice_with(
    sig: &Signature,
    limits: &OracleLimits,
    parallelism: Parallelism,
) -> Result<FaceLattice> {
    let table = TriangularTable::new(sig);
    let vertices = table.enumerate_vertices(limits)?;
    let nv = vertices.len();

    let mut full = FixedBitSet::with_capacity(nv);
    full.insert_range(..);
    let mut generators: Vec<FixedBitSet> = tight_sets(&table, &vertices);
    generators.sort();
    generators.dedup();

    let mut sets: IndexSet<FixedBitSet> = IndexSet::new();
    sets.insert(full);
    for gen in &generators {
        let before = sets.len();
        for i in 0..before {
            let mut meet = sets[i].clone();
            meet.intersect_with(gen);
            if !meet.is_clear() {
                sets.insert(meet);
            }
            if sets.len() > limits.max_faces {
                return Err(Error::ResourceLimit(format!(
                    "more than {} faces",
                    limits.max_faces
                )));
            }
        }
    }
    let sets: Vec<FixedBitSet> = sets.into_iter().collect();

    let dims = par::map(parallelism, &sets, |set| {
        affine_dim(set.ones().map(|i| vertices[i].as_slice())).expect("faces are nonempty")
    });
    let mut faces: Vec<Face> = sets
        .into_iter()
        .zip(dims)
        .map(|(vertices, dim)| Face { vertices, dim })
        .collect();
    faces.sort_by(|a, b| {
        a.dim
            .cmp(&b.dim)
            .then_with(|| a.vertex_indices().cmp(&b.vertex_indices()))
    });

    let top = faces.last().map_or(0, |f| f.dim);
    let mut f_vector = vec![0u64; top + 1];
    for f in &faces {
        f_vector[f.dim] += 1;
    }
    Ok(FaceLattice {
        signature: sig.clone(),
        table,
        vertices,
        faces,
        f_vector,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sig(m: &[usize]) -> Signature {
        Signature::new(m.to_vec()).unwrap()
    }

    fn lattice(m: &[usize]) -> FaceLattice {
        face_lattice(&sig(m), &OracleLimits::default()).unwrap()
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(lattice(&[1, 1, 1]).f_vector, vec![7, 11, 6, 1]);
        let point = lattice(&[2]);
        assert_eq!(point.f_vector, vec![1]);
        assert_eq!(point.faces.len(), 1);
        assert_eq!(lattice(&[2, 1]).f_vector, vec![3, 3, 1]);
        assert_eq!(lattice(&[1, 1]).f_vector, vec![2, 1]);
        assert_eq!(lattice(&[1]).f_vector, vec![1]);
    }

    #[test]
    fn lattice_sanity() {
        for m in [
            [1usize, 1, 1].as_slice(),
            &[1, 2, 1],
            &[2, 2],
            &[1, 1, 2],
            &[3, 1],
        ] {
            let l = lattice(m);
            let g = sig(m);
            assert_eq!(l.euler_sum(), 1, "{m:?}");
            assert_eq!(l.f_vector.len(), g.dimension() + 1);
            assert_eq!(l.f_vector[g.dimension()], 1);
            let top = l.faces.last().unwrap();
            assert_eq!(top.vertices.count_ones(..), l.vertices.len());
            assert_eq!(
                l.faces
                    .iter()
                    .filter(|f| f.vertices.count_ones(..) == 1)
                    .count() as u64,
                l.f_vector[0]
            );
            let k = g.k() as i64;
            assert!(l.vertices.iter().flatten().all(|&v| (1..=k).contains(&v)));

            // every face is the meet of the tight sets of constraints tight on all of it
            let tight = l.tight_sets();
            for face in &l.faces {
                let mut closure = FixedBitSet::with_capacity(l.vertices.len());
                closure.insert_range(..);
                for t in tight.iter().filter(|t| face.vertices.is_subset(t)) {
                    closure.intersect_with(t);
                }
                assert_eq!(closure, face.vertices);
            }
            let distinct: HashSet<_> = l.faces.iter().map(|f| f.vertices.clone()).collect();
            assert_eq!(distinct.len(), l.faces.len());
        }
    }

    #[test]
    fn parallel_and_sequential_lattices_agree() {
        let limits = OracleLimits::default();
        for m in [[1usize, 1, 1, 1].as_slice(), &[1, 2, 1], &[2, 1, 1]] {
            let a = face_lattice_with(&sig(m), &limits, Parallelism::Sequential).unwrap();
            let b = face_lattice_with(&sig(m), &limits, Parallelism::Parallel).unwrap();
            assert_eq!(a.faces, b.faces);
            assert_eq!(a.f_vector, b.f_vector);
        }
    }

    #[test]
    fn face_limit_is_enforced() {
        let limits = OracleLimits {
            max_faces: 10,
            ..OracleLimits::default()
        };
        assert!(matches!(
            face_lattice(&sig(&[1, 1, 1]), &limits),
            Err(Error::ResourceLimit(_))
        ));
    }
}
