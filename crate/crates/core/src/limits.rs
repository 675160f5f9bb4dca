use serde::{Deserialize, Serialize};

/// Largest state count a [`StateSet`](crate::automaton::StateSet) can hold.
pub const HARD_STATE_CAP: usize = 64;

/// Tunable caps for the exhaustive algorithms.
///
/// Every cap produces [`Error::CapExceeded`](crate::Error::CapExceeded) when
/// hit; checkers turn that into an `unknown` verdict, never into `out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// State count for power-set BFS (exact threshold).
    pub bfs_states: usize,
    /// State count for the all-subsets extensibility profile.
    pub extension_states: usize,
    /// State count for complete-reachability BFS.
    pub reachability_states: usize,
    /// State count for linear-order searches.
    pub order_states: usize,
    /// Alphabet size for the pseudo-Eulerian feasibility solver.
    pub weight_letters: usize,
    /// Distinct transformations visited while building the Rystsov graph.
    pub rystsov_transformations: usize,
    /// Transition monoid size for aperiodicity and involution checks.
    pub monoid_size: usize,
    /// Monoid size for the DS / EDS ideal checks.
    pub ds_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bfs_states: 20,
            extension_states: 16,
            reachability_states: 16,
            order_states: 9,
            weight_letters: 6,
            rystsov_transformations: 1_000_000,
            monoid_size: 200_000,
            ds_size: 2000,
        }
    }
}
