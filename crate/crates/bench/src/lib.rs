//! Benchmark fixtures.

use synchro_core::families;
use synchro_core::harness::random;
use synchro_core::Dfa;

pub fn cerny(n: usize) -> Dfa {
    families::gen_cerny(n).expect("n >= 2").dfa
}

/// Fixed-seed random synchronizing binary automata with `n` states.
pub fn random_binary(n: usize, count: usize) -> Vec<Dfa> {
    (0..count as u64)
        .map(|seed| random::random_synchronizing(n, 2, seed).expect("sampler succeeds"))
        .collect()
}

pub fn simple_idempotent(n: usize) -> Dfa {
    random::random_binary_simple_idempotent(n, 0).expect("sampler succeeds")
}
