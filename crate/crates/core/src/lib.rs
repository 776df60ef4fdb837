//! Exact face numbers of Gelfand-Tsetlin polytopes.
//!
//! [`recurrence`] computes f-polynomials through the projection onto a cube,
//! [`closedforms`] evaluates the explicit formulas for the families
//! `GZ(1 2^k 3)`, `GZ(1 2 3^k)` and `GZ(2^2 3^k)`, and [`oracle`] enumerates
//! face lattices directly from the interlacing inequalities so that both can
//! be checked independently on small inputs.

pub mod cli;
pub mod closedforms;
pub mod error;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod recurrence;
pub mod signature;

pub use error::{Error, Result};
pub use par::Parallelism;
pub use poly::{IntPoly, SeriesRational};
pub use recurrence::{f_polynomial, h_polynomial, Engine, EngineConfig};
pub use signature::{parse_sequence, LevelSequence, Signature};
