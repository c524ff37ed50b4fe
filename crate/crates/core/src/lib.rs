//! Exact computation in polycyclic monoids `P_λ`.
//!
//! * [`words`]: the free monoid and its suffix combinatorics.
//! * [`polycyclic`]: normal-form arithmetic, the rewriting reducer, and the
//!   bicyclic monoid.
//! * [`green`]: Green's relations, D-class witnesses, ω-chains of idempotents.
//! * [`matrixunits`]: the matrix-unit semigroup `B_λ`.
//! * [`topology`]: the neighbourhood base at zero of the minimal inverse
//!   semigroup topology, with continuity witnesses and ball checks.
//! * [`extension`]: a topological inverse monoid containing `P_2` as a dense
//!   discrete subsemigroup.
//! * [`analysis`]: law-checking suites and the congruence saturation oracle.

pub mod analysis;
mod error;
pub mod extension;
pub mod green;
pub mod matrixunits;
pub mod par;
pub mod polycyclic;
pub mod report;
pub mod topology;
pub mod words;

pub use error::{Error, Result};
pub use par::Exec;
pub use polycyclic::{invert, multiply, PElement};
pub use words::{Word, WordSet};
