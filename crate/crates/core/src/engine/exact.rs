use std::collections::HashMap;

use super::{is_synchronizing, Method, SolveResult};
use crate::automaton::{Dfa, StateSet, Word};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Breadth-first search over images, starting at `start`, until `goal`
/// accepts a subset. Returns the lexicographically least shortest word.
///
/// Letters are expanded in index order and nodes are dequeued in discovery
/// order, so nodes of one depth are dequeued in lexicographic order of
/// their words; the first accepted discovery is therefore least.
pub(crate) fn image_bfs(
    d: &Dfa,
    start: StateSet,
    mut goal: impl FnMut(StateSet) -> bool,
) -> Option<Word> {
    if goal(start) {
        return Some(Word::empty());
    }
    let mut parent: HashMap<u64, (u64, u16)> = HashMap::new();
    parent.insert(start.bits(), (start.bits(), u16::MAX));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for a in 0..d.k() {
                let y = d.image_letter(x, a);
                if parent.contains_key(&y.bits()) {
                    continue;
                }
                parent.insert(y.bits(), (x.bits(), a as u16));
                if goal(y) {
                    return Some(trace_back(&parent, start, y));
                }
                next.push(y);
            }
        }
        frontier = next;
    }
    None
}

/// Rebuilds the word leading from `start` to `end` (letters appended on
/// the way forward).
fn trace_back(parent: &HashMap<u64, (u64, u16)>, start: StateSet, end: StateSet) -> Word {
    let mut letters = Vec::new();
    let mut cur = end.bits();
    while cur != start.bits() {
        let (prev, a) = parent[&cur];
        letters.push(a as usize);
        cur = prev;
    }
    letters.reverse();
    Word::new(letters)
}

/// The reset threshold with default limits; see
/// [`exact_reset_threshold_with`].
pub fn exact_reset_threshold(d: &Dfa) -> Result<SolveResult> {
    exact_reset_threshold_with(d, &Limits::default())
}

/// A shortest reset word, lexicographically least among the shortest
/// (letters compared by index). Its length is the reset threshold.
pub fn exact_reset_threshold_with(d: &Dfa, limits: &Limits) -> Result<SolveResult> {
    if !is_synchronizing(d) {
        return Err(Error::NotSynchronizing);
    }
    d.require_subset_capable()?;
    if d.n() > limits.bfs_states {
        return Err(Error::CapExceeded {
            what: "power-set search states",
            cap: limits.bfs_states,
            got: d.n(),
        });
    }
    let word = image_bfs(d, d.all_states(), StateSet::is_singleton)
        .expect("synchronizing automata reach a singleton");
    Ok(SolveResult::verified(d, Method::Bfs, word))
}
