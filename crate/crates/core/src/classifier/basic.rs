//! Structural checks that need only the letter transformations.

use crate::automaton::{Dfa, Transformation};
use crate::engine::{is_prime, simple_idempotent};

/// A state fixed by every letter.
pub fn has_zero(d: &Dfa) -> Option<usize> {
    (0..d.n()).find(|&q| d.is_fixed_by_all(q))
}

/// A letter acting as one cycle through all states.
pub fn is_circular(d: &Dfa) -> Option<usize> {
    (0..d.k()).find(|&a| {
        let t = d.letter_transformation(a);
        t.is_permutation() && t.cycle_lengths() == [d.n()]
    })
}

/// Letters whose functional graph has a single cycle, with that cycle's
/// length.
pub fn one_cluster_letters(d: &Dfa) -> Vec<(usize, usize)> {
    (0..d.k())
        .filter_map(|a| match d.letter_transformation(a).cycle_lengths()[..] {
            [len] => Some((a, len)),
            _ => None,
        })
        .collect()
}

/// A one-cluster letter whose cycle length is prime.
pub fn is_one_cluster_prime(d: &Dfa) -> Option<(usize, usize)> {
    one_cluster_letters(d)
        .into_iter()
        .find(|&(_, len)| is_prime(len as u64))
}

/// Total length of the letter's cycles minus the longest one.
pub fn quasi_one_cluster_degree(d: &Dfa, a: usize) -> usize {
    let lens = d.letter_transformation(a).cycle_lengths();
    lens.iter().sum::<usize>() - lens.iter().max().copied().unwrap_or(0)
}

/// Smallest quasi-one-cluster degree over all letters, with the letter.
pub fn min_quasi_one_cluster_degree(d: &Dfa) -> (usize, usize) {
    (0..d.k())
        .map(|a| (quasi_one_cluster_degree(d, a), a))
        .min()
        .map(|(deg, a)| (a, deg))
        .expect("at least one letter")
}

/// Uniform in-degree `|Σ|` plus weak connectivity. On failure returns the
/// first state with a different in-degree, or `None` when only
/// connectivity fails.
pub fn eulerian_violation(d: &Dfa) -> Option<Option<usize>> {
    let g = d.underlying_graph();
    if let Some(q) = (0..d.n()).find(|&q| g.in_degree(q) != d.k()) {
        return Some(Some(q));
    }
    if !g.is_weakly_connected() {
        return Some(None);
    }
    None
}

pub fn is_eulerian(d: &Dfa) -> bool {
    eulerian_violation(d).is_none()
}

/// A letter `a` with `|Q·a|^3 <= 6|Q| - 6`.
pub fn small_rank_letter(d: &Dfa) -> Option<usize> {
    let limit = 6 * d.n() as i64 - 6;
    (0..d.k()).find(|&a| (d.letter_transformation(a).rank() as i64).pow(3) <= limit)
}

/// Which clause of the 2-junction definition a letter satisfies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JunctionClause {
    /// At most two exceptional states, each moved by exactly one other letter.
    AtMostTwoOnce,
    /// One exceptional state, moved by exactly two other letters.
    OneTwice,
}

/// Tests both clauses for letter `a`.
pub fn junction_clause(d: &Dfa, a: usize) -> Option<JunctionClause> {
    let moved_by_others = |q: usize| (0..d.k()).filter(|&b| b != a && d.next(q, b) != q).count();
    let exceptional: Vec<usize> = (0..d.n())
        .filter(|&q| d.next(q, a) != q)
        .map(moved_by_others)
        .filter(|&c| c > 0)
        .collect();
    if exceptional.len() <= 2 && exceptional.iter().all(|&c| c == 1) {
        Some(JunctionClause::AtMostTwoOnce)
    } else if exceptional == [2] {
        Some(JunctionClause::OneTwice)
    } else {
        None
    }
}

/// The first letter satisfying neither clause.
pub fn two_junction_violation(d: &Dfa) -> Option<usize> {
    (0..d.k()).find(|&a| junction_clause(d, a).is_none())
}

pub fn simple_idempotent_letters(d: &Dfa) -> Vec<usize> {
    (0..d.k())
        .filter(|&a| simple_idempotent(d, a).is_some())
        .collect()
}

pub fn idempotent_letters(d: &Dfa) -> Vec<usize> {
    (0..d.k())
        .filter(|&a| d.letter_transformation(a).is_idempotent())
        .collect()
}

/// Why an automaton fails the transitive-permutation-letters test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum D6Violation {
    /// A letter of deficiency at least 2.
    Deficiency { letter: usize, deficiency: usize },
    /// States not reachable from 0 by permutation letters.
    Intransitive { unreached: usize },
}

pub fn d6_violation(d: &Dfa) -> Option<D6Violation> {
    let ts: Vec<Transformation> = d.letter_transformations();
    if let Some((a, t)) = ts.iter().enumerate().find(|(_, t)| t.deficiency() > 1) {
        return Some(D6Violation::Deficiency {
            letter: a,
            deficiency: t.deficiency(),
        });
    }
    let perms: Vec<&Transformation> = ts.iter().filter(|t| t.is_permutation()).collect();
    let mut seen = vec![false; d.n()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(q) = stack.pop() {
        for t in &perms {
            let r = t.apply(q);
            if !std::mem::replace(&mut seen[r], true) {
                stack.push(r);
            }
        }
    }
    seen.iter()
        .position(|&s| !s)
        .map(|unreached| D6Violation::Intransitive { unreached })
}
