//! Seeded random instance sources. All samplers are deterministic per seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::Dfa;
use crate::engine::is_synchronizing;
use crate::error::{Error, Result};

/// Rejection attempts before a sampler gives up.
pub const REJECTION_BUDGET: usize = 100_000;

/// `a, b, c, ...` up to 26 letters, then `x0, x1, ...`.
pub fn letter_names(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..k).map(|i| format!("x{i}")).collect()
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::input("need at least one state and one letter"));
    }
    Ok(())
}

fn sample<R: Rng>(
    rng: &mut R,
    what: &'static str,
    mut draw: impl FnMut(&mut R) -> Result<Dfa>,
    accept: impl Fn(&Dfa) -> bool,
) -> Result<Dfa> {
    for _ in 0..REJECTION_BUDGET {
        let d = draw(rng)?;
        if accept(&d) {
            return Ok(d);
        }
    }
    Err(Error::CapExceeded {
        what,
        cap: REJECTION_BUDGET,
        got: REJECTION_BUDGET + 1,
    })
}

/// A uniformly random transition table.
pub fn random_dfa<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<Dfa> {
    check(n, k)?;
    let rows = (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    Dfa::new(n, letter_names(k), rows)
}

/// Uniform tables, rejected until synchronizing.
pub fn random_synchronizing(n: usize, k: usize, seed: u64) -> Result<Dfa> {
    check(n, k)?;
    let mut r = rng(seed);
    sample(&mut r, "synchronizing rejection attempts", |r| random_dfa(r, n, k), is_synchronizing)
}

/// A random simple idempotent: one state sent to another, the rest fixed.
fn simple_idempotent_row<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let e = rng.gen_range(0..n);
    let mut t = rng.gen_range(0..n - 1);
    if t >= e {
        t += 1;
    }
    (0..n).map(|q| if q == e { t } else { q }).collect()
}

/// Binary, letter `a` a simple idempotent, `b` uniform; synchronizing.
pub fn random_binary_simple_idempotent(n: usize, seed: u64) -> Result<Dfa> {
    if n < 2 {
        return Err(Error::input("a simple idempotent needs at least 2 states"));
    }
    let mut r = rng(seed);
    sample(
        &mut r,
        "simple-idempotent rejection attempts",
        |r| {
            let a = simple_idempotent_row(r, n);
            let b = (0..n).map(|_| r.gen_range(0..n)).collect();
            Dfa::new(n, letter_names(2), vec![a, b])
        },
        is_synchronizing,
    )
}

/// `k` simple idempotent letters; synchronizing.
pub fn random_simple_idempotents(n: usize, k: usize, seed: u64) -> Result<Dfa> {
    check(n, k)?;
    if n < 2 {
        return Err(Error::input("a simple idempotent needs at least 2 states"));
    }
    let mut r = rng(seed);
    sample(
        &mut r,
        "simple-idempotent rejection attempts",
        |r| {
            let rows = (0..k).map(|_| simple_idempotent_row(r, n)).collect();
            Dfa::new(n, letter_names(k), rows)
        },
        is_synchronizing,
    )
}

/// Uniform over tables in which every state has in-degree `k`, rejected
/// until weakly connected and synchronizing.
pub fn random_eulerian(n: usize, k: usize, seed: u64) -> Result<Dfa> {
    check(n, k)?;
    let mut r = rng(seed);
    sample(
        &mut r,
        "Eulerian rejection attempts",
        |r| {
            let mut targets: Vec<usize> = (0..n).flat_map(|q| std::iter::repeat_n(q, k)).collect();
            targets.shuffle(r);
            let rows = targets.chunks(n).map(<[usize]>::to_vec).collect();
            Dfa::new(n, letter_names(k), rows)
        },
        |d| d.underlying_graph().is_weakly_connected() && is_synchronizing(d),
    )
}
