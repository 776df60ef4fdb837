//! The cube-projection recurrence for f-polynomials.
//!
//! Project `GZ(1^{i_1} ... k^{i_k})` onto the cube `1 <= u_1 <= 2 <= ... <= u_{k-1} <= k`
//! formed by the second-row cells that sit under two distinct top values.
//! Every nonempty face of the cube is named by a [`PickVector`]: per
//! direction `j`, the face either pins `u_j` to `j` or `j + 1`, or leaves it
//! free, in which case its barycenter has `u_j = j + 1/2`. The fiber over
//! that barycenter is again a GT polytope, whose top row is
//! `1^{i_1-1} ○ 2^{i_2-1} ○ ... ○ k^{i_k-1}` with the circles filled by
//! the barycenter's coordinates. Faces of the polytope correspond
//! bijectively to pairs (cube face, face of its fiber), with dimensions
//! adding, so
//!
//! ```text
//! f(t) = sum over picks of t^{#free directions} * f_fiber(t)
//! ```
//!
//! Fibers have one fewer top entry, so the recursion bottoms out at points.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::par::{self, Parallelism};
use crate::poly::IntPoly;
use crate::signature::{LevelSequence, Signature};

/// What a cube face does in one direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pick {
    /// `u_j = j`
    Low,
    /// `u_j` free; barycenter coordinate `j + 1/2`
    Mid,
    /// `u_j = j + 1`
    High,
}

impl Pick {
    pub const ALL: [Pick; 3] = [Pick::Low, Pick::Mid, Pick::High];

    /// Barycenter coordinate in half-units for direction `j` (1-based).
    pub fn half_value(self, j: usize) -> i64 {
        let base = 2 * j as i64;
        match self {
            Pick::Low => base,
            Pick::Mid => base + 1,
            Pick::High => base + 2,
        }
    }
}

/// One choice per cube direction; indexes a face of the cube and a
/// monomial of `prod_j (x_j + x_{j+1/2} + x_{j+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PickVector(pub Vec<Pick>);

impl PickVector {
    /// Dimension of the cube face.
    pub fn cube_dim(&self) -> usize {
        self.0.iter().filter(|&&p| p == Pick::Mid).count()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `3^len` pick vectors, first direction varying slowest.
    pub fn all(len: usize) -> Vec<PickVector> {
        let mut out = vec![PickVector(Vec::with_capacity(len))];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|pv| {
                    Pick::ALL.iter().map(move |&p| {
                        let mut v = pv.0.clone();
                        v.push(p);
                        PickVector(v)
                    })
                })
                .collect();
        }
        out
    }
}

/// A summand of the recurrence: a cube face and the class of its fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberChild {
    pub pick: PickVector,
    pub cube_dim: usize,
    pub child: Signature,
}

/// Top row of the fiber over the barycenter selected by `pick`.
pub fn fiber_sequence(sig: &Signature, pick: &PickVector) -> Result<LevelSequence> {
    let k = sig.k();
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "{sig} has {k} distinct value(s); the cube needs at least 2"
        )));
    }
    if pick.len() != k - 1 {
        return Err(Error::InvalidArgument(format!(
            "pick vector of length {} for {sig}, expected {}",
            pick.len(),
            k - 1
        )));
    }
    let mut halves = Vec::with_capacity(sig.total_len() - 1);
    for (q, &mult) in sig.mults().iter().enumerate() {
        let value = 2 * (q as i64 + 1);
        halves.extend(std::iter::repeat_n(value, mult - 1));
        if let Some(p) = pick.0.get(q) {
            halves.push(p.half_value(q + 1));
        }
    }
    LevelSequence::from_halves(halves)
}

/// The fiber class over the barycenter named by `pick`.
pub fn fiber_child(sig: &Signature, pick: &PickVector) -> Result<FiberChild> {
    let child = fiber_sequence(sig, pick)?.canonicalize();
    assert_eq!(
        child.total_len() + 1,
        sig.total_len(),
        "fiber of {sig} must have one fewer top entry"
    );
    Ok(FiberChild {
        cube_dim: pick.cube_dim(),
        pick: pick.clone(),
        child,
    })
}

/// All `3^{k-1}` summands of the recurrence for `sig`.
pub fn cube_children(sig: &Signature) -> Result<Vec<FiberChild>> {
    if sig.k() < 2 {
        return Err(Error::InvalidArgument(format!(
            "{sig} has a single distinct value; there is no cube to project on"
        )));
    }
    PickVector::all(sig.k() - 1)
        .iter()
        .map(|pick| fiber_child(sig, pick))
        .collect()
}

/// f-polynomial of the `m`-simplex: `((1 + t)^{m+1} - 1) / t`.
pub fn simplex_f(m: usize) -> IntPoly {
    let full = IntPoly::from_coeffs(vec![1, 1]).pow(m as u32 + 1);
    IntPoly::from_coeffs(full.into_coeffs().into_iter().skip(1).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Answer `(1, m)` and `(m, 1)` with the simplex formula.
    pub simplex_shortcut: bool,
    /// Key the memo table by the reversal normal form.
    pub fold_reversal: bool,
    pub parallelism: Parallelism,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            simplex_shortcut: true,
            fold_reversal: true,
            parallelism: Parallelism::default(),
        }
    }
}

/// Memoizing evaluator of the recurrence.
///
/// The memo table is shared between threads; two threads may race to fill
/// the same entry, in which case both compute the same value.
#[derive(Debug, Default)]
pub struct Engine {
    config: EngineConfig,
    cache: RwLock<HashMap<Signature, IntPoly>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_config(config: EngineConfig) -> Self {
        Engine {
            config,
            cache: RwLock::default(),
        }
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("memo lock poisoned").len()
    }

    pub fn f_polynomial(&self, sig: &Signature) -> IntPoly {
        let key = if self.config.fold_reversal {
            sig.reverse_normal_form()
        } else {
            sig.clone()
        };
        if let Some(hit) = self.cache.read().expect("memo lock poisoned").get(&key) {
            return hit.clone();
        }
        let f = self.evaluate(&key);
        self.cache
            .write()
            .expect("memo lock poisoned")
            .entry(key)
            .or_insert_with(|| f.clone());
        f
    }

    /// `h(s) = f(s - 1)`.
    pub fn h_polynomial(&self, sig: &Signature) -> IntPoly {
        self.f_polynomial(sig).substitute_shift(-1)
    }

    fn evaluate(&self, sig: &Signature) -> IntPoly {
        if sig.k() == 1 {
            return IntPoly::one();
        }
        if self.config.simplex_shortcut {
            if let Some(m) = sig.simplex_dim() {
                return simplex_f(m);
            }
        }
        // Many picks share a fiber class; sum each class once with its count.
        let mut groups: BTreeMap<(usize, Signature), u64> = BTreeMap::new();
        for fc in cube_children(sig).expect("k >= 2 here") {
            let child = if self.config.fold_reversal {
                fc.child.reverse_normal_form()
            } else {
                fc.child
            };
            *groups.entry((fc.cube_dim, child)).or_default() += 1;
        }
        let groups: Vec<_> = groups.into_iter().collect();
        par::map(self.config.parallelism, &groups, |((dim, child), count)| {
            self.f_polynomial(child)
                .shift_up(*dim)
                .scale(&BigInt::from(*count))
        })
        .into_iter()
        .sum()
    }
}

fn shared_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

/// f-polynomial of `GZ(sig)` using a process-wide memo table.
///
/// The coefficient of `t^d` counts `d`-dimensional faces, the polytope
/// itself included.
pub fn f_polynomial(sig: &Signature) -> IntPoly {
    shared_engine().f_polynomial(sig)
}

/// h-polynomial of `GZ(sig)` using the process-wide memo table.
pub fn h_polynomial(sig: &Signature) -> IntPoly {
    shared_engine().h_polynomial(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Pick::*;

    fn sig(m: &[usize]) -> Signature {
        Signature::new(m.to_vec()).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.to_vec())
    }

    fn child_of(s: &[usize], picks: &[Pick]) -> FiberChild {
        fiber_child(&sig(s), &PickVector(picks.to_vec())).unwrap()
    }

    #[test]
    fn children_of_gz123() {
        let c = child_of(&[1, 1, 1], &[Mid, Mid]);
        assert_eq!((c.cube_dim, c.child), (2, sig(&[1, 1])));
        let c = child_of(&[1, 1, 1], &[Low, High]);
        assert_eq!((c.cube_dim, c.child), (0, sig(&[1, 1])));
        let c = child_of(&[1, 1, 1], &[Low, Mid]);
        assert_eq!((c.cube_dim, c.child), (1, sig(&[1, 1])));
        // vertex (2,2) of the square hangs a single point
        let c = child_of(&[1, 1, 1], &[High, Low]);
        assert_eq!((c.cube_dim, c.child), (0, sig(&[2])));
    }

    #[test]
    fn fiber_values_fill_the_circles() {
        let seq = fiber_sequence(&sig(&[1, 1, 1]), &PickVector(vec![Mid, Mid])).unwrap();
        assert_eq!(seq.halves(), &[3, 5]);
        let seq = fiber_sequence(&sig(&[2, 3, 1]), &PickVector(vec![High, Mid])).unwrap();
        assert_eq!(seq.halves(), &[2, 4, 4, 4, 5]);
    }

    #[test]
    fn high_low_gives_a_point_for_12k3() {
        for k in 1..8 {
            let c = child_of(&[1, k, 1], &[High, Low]);
            assert_eq!((c.cube_dim, c.child), (0, sig(&[k + 1])));
        }
    }

    #[test]
    fn cube_children_counts() {
        for s in 2..=7 {
            for g in Signature::all_with_total(s)
                .into_iter()
                .filter(|g| g.k() >= 2)
            {
                let children = cube_children(&g).unwrap();
                assert_eq!(children.len(), 3usize.pow(g.k() as u32 - 1));
                assert!(children.iter().all(|c| c.child.total_len() == s - 1));
                assert!(children.iter().all(|c| c.cube_dim < g.k()));
            }
        }
    }

    #[test]
    fn cube_children_rejects_points() {
        assert!(matches!(
            cube_children(&sig(&[3])),
            Err(Error::InvalidArgument(_))
        ));
        assert!(fiber_sequence(&sig(&[1, 1]), &PickVector(vec![])).is_err());
    }

    #[test]
    fn f_polynomial_examples() {
        assert_eq!(f_polynomial(&sig(&[1, 1, 1])), p(&[7, 11, 6, 1]));
        assert_eq!(f_polynomial(&sig(&[3])), IntPoly::one());
        assert_eq!(f_polynomial(&sig(&[1, 3])), p(&[4, 6, 4, 1]));
        assert_eq!(f_polynomial(&sig(&[2, 1])), p(&[3, 3, 1]));
        assert_eq!(
            f_polynomial(&sig(&[1, 2, 1])).substitute_shift(-1),
            p(&[1, 2, 3, 4, 3, 1])
        );
    }

    #[test]
    fn h_polynomial_examples() {
        assert_eq!(h_polynomial(&sig(&[1, 1, 1])), p(&[1, 2, 3, 1]));
        assert_eq!(
            h_polynomial(&sig(&[1, 5, 1])),
            p(&[1, 2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 1])
        );
        assert_eq!(h_polynomial(&sig(&[6])), IntPoly::one());
    }

    #[test]
    fn simplex_formula() {
        assert_eq!(simplex_f(0), IntPoly::one());
        assert_eq!(simplex_f(1), p(&[2, 1]));
        assert_eq!(simplex_f(3), p(&[4, 6, 4, 1]));
    }

    #[test]
    fn shortcut_matches_recursion() {
        let plain = Engine::with_config(EngineConfig {
            simplex_shortcut: false,
            ..EngineConfig::default()
        });
        for m in 1..=6 {
            assert_eq!(plain.f_polynomial(&sig(&[1, m])), simplex_f(m));
            assert_eq!(plain.f_polynomial(&sig(&[m, 1])), simplex_f(m));
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let seq = Engine::with_config(EngineConfig {
            parallelism: Parallelism::Sequential,
            ..EngineConfig::default()
        });
        let par = Engine::with_config(EngineConfig {
            parallelism: Parallelism::Parallel,
            ..EngineConfig::default()
        });
        for g in Signature::all_with_total(7) {
            assert_eq!(seq.f_polynomial(&g), par.f_polynomial(&g));
        }
    }

    #[test]
    fn memo_folds_reversals() {
        let e = Engine::new();
        e.f_polynomial(&sig(&[1, 2, 3]));
        let n = e.cache_len();
        e.f_polynomial(&sig(&[3, 2, 1]));
        assert_eq!(e.cache_len(), n);
    }

    #[test]
    fn pick_vectors_enumerate_the_cube() {
        let all = PickVector::all(3);
        assert_eq!(all.len(), 27);
        // faces of the 3-cube by dimension: 8 vertices, 12 edges, 6 squares, 1 cube
        let mut by_dim = [0; 4];
        for pv in &all {
            by_dim[pv.cube_dim()] += 1;
        }
        assert_eq!(by_dim, [8, 12, 6, 1]);
        assert_eq!(PickVector::all(0), vec![PickVector(vec![])]);
    }
}
