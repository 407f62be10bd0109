//! topolab: a laboratory for finite topological spaces.
//!
//! The crate represents spaces on up to 16 points as packed bitmask
//! families and computes, exactly and exhaustively:
//!
//! - the classical operators (closure, interior, delta-closure,
//!   delta-interior, regular open/closed families) in [`space`];
//! - the generalized open-set families (semiopen, preopen, b-open,
//!   beta-open, e-open, e*-open), their kind-closures, the theta-operators
//!   built from e*-open and beta-open sets, and the generalized-closed
//!   variants in [`genop`];
//! - space-level properties: every regularity and normality variant,
//!   extremal disconnectedness, R0 and the T0/T1/T2 axioms, together with
//!   multi-clause characterization theorems evaluated clause by clause in
//!   [`axioms`];
//! - function classes between spaces and their preservation theorems in
//!   [`maps`];
//! - exhaustive enumeration of small topologies, canonical forms under
//!   point permutation, corpus persistence, verification campaigns and
//!   counterexample search in [`zoo`] and [`scan`].
//!
//! Every decision procedure either confirms a property or produces a
//! replayable [`verdict::Witness`]. Verification campaigns treat a failing
//! clause as a first-class discrepancy report, not an error: the point of
//! the tool is to check the statements, not to presume them.

pub mod analysis;
pub mod axioms;
pub mod genop;
pub mod io;
pub mod maps;
pub mod scan;
pub mod space;
pub mod subset;
pub mod verdict;
pub mod zoo;

pub use analysis::Analysis;
pub use space::{validate_space, Fingerprint, Space, SpaceError};
pub use subset::{Point, Subset, SubsetError, MAX_POINTS};
pub use verdict::{ClauseVector, Verdict, Witness, WitnessValue};
