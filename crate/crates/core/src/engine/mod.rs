//! Synchronization testing, exact reset thresholds and the constructive
//! reset-word solvers.
//!
//! Every solver returns a [`SolveResult`] whose word has been checked to
//! reset the automaton. Breadth-first searches expand letters in index
//! order, so equal-length candidates are resolved deterministically.

mod eppstein;
mod exact;
mod extension;
mod greedy;
mod idempotent;
mod numbers;
mod sync;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::automaton::{Dfa, Word};
use crate::error::{Error, Result};

pub use eppstein::eppstein_orientable_word;
pub use exact::{exact_reset_threshold, exact_reset_threshold_with};
pub use extension::{
    extensibility_profile, extensibility_profile_with, reset_word_via_extension,
    shortest_extending_word, ExtensibilityProfile,
};
pub use greedy::{greedy_compression_word, shortest_compressing_word};
pub use idempotent::{a10_binary_idempotent_word, c7_height_word, simple_idempotent};
pub use numbers::{frobenius_largest_gap, greatest_prime_below, is_prime};
pub use sync::{is_synchronizing, mergeable_pairs};

/// Which algorithm produced a reset word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Power-set breadth-first search; the word is a shortest reset word.
    Bfs,
    Greedy,
    Extension,
    Eppstein,
    A10,
    C7,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Bfs,
        Method::Greedy,
        Method::Extension,
        Method::Eppstein,
        Method::A10,
        Method::C7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bfs => "bfs",
            Method::Greedy => "greedy",
            Method::Extension => "extension",
            Method::Eppstein => "eppstein",
            Method::A10 => "a10",
            Method::C7 => "c7",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown method {s:?}")))
    }
}

/// A reset word together with the state it resets to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveResult {
    pub method: Method,
    pub word: Word,
    pub target: usize,
}

impl SolveResult {
    /// Checks that `word` resets `d` and records its target.
    ///
    /// Panics if it does not: solvers only call this on words their
    /// construction guarantees, so a failure is a bug.
    pub(crate) fn verified(d: &Dfa, method: Method, word: Word) -> SolveResult {
        let target = d
            .reset_target(&word)
            .unwrap_or_else(|| panic!("{method} solver produced a non-reset word {word:?}"));
        SolveResult {
            method,
            word,
            target,
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `{ "method", "word": [letter names], "length", "target" }`.
    pub fn to_json(&self, d: &Dfa) -> Value {
        json!({
            "method": self.method.as_str(),
            "word": d.word_names(&self.word),
            "length": self.len(),
            "target": self.target,
        })
    }
}

/// Runs the named solver with default limits.
pub fn solve(d: &Dfa, method: Method) -> Result<SolveResult> {
    match method {
        Method::Bfs => exact_reset_threshold(d),
        Method::Greedy => greedy_compression_word(d),
        Method::Extension => reset_word_via_extension(d),
        Method::Eppstein => {
            let order = crate::classifier::find_order(d, crate::classifier::OrderClass::Orientable)?
                .ok_or_else(|| Error::domain("automaton is not orientable under any order"))?;
            eppstein_orientable_word(d, &order)
        }
        Method::A10 => a10_binary_idempotent_word(d),
        Method::C7 => c7_height_word(d),
    }
}
