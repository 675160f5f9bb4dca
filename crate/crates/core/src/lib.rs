//! Synchronizing automata toolkit.
//!
//! * [`automaton`]: complete DFAs, words, state sets, congruences, JSON.
//! * [`engine`]: synchronization tests, exact reset thresholds and the
//!   constructive reset-word solvers.
//! * [`families`]: generators for the extremal series with their known
//!   reset thresholds.
//! * [`classifier`]: class-membership predicates and the bound registry.
//! * [`monoid`]: transition monoids and the monoid-theoretic predicates.
//! * [`harness`]: random and exhaustive instance sources and the
//!   verification suite.

pub mod automaton;
pub mod classifier;
pub mod engine;
mod error;
pub mod families;
pub mod harness;
mod limits;
pub mod monoid;

pub use automaton::{Congruence, Dfa, Multigraph, StateSet, Transformation, Word};
pub use engine::{Method, SolveResult};
pub use error::{Error, Result};
pub use limits::{Limits, HARD_STATE_CAP};
