use std::collections::HashMap;

use super::{is_synchronizing, Method, SolveResult};
use crate::automaton::{Dfa, StateSet, Word};
use crate::classifier::{is_oriented_interval, order_violation, OrderClass};
use crate::error::{Error, Result};

/// Shortest reset word of an orientable automaton, found by growing
/// oriented intervals backwards from every singleton.
///
/// Preimages of oriented intervals under orientable letters are again
/// oriented intervals, so the search never leaves the `(n-1)^2 + n`
/// intervals. A preimage that is not an interval panics.
pub fn eppstein_orientable_word(d: &Dfa, order: &[usize]) -> Result<SolveResult> {
    if let Some(a) = order_violation(d, OrderClass::Orientable, order)? {
        return Err(Error::domain(format!(
            "letter {} is not orientable under the given order",
            d.letter_name(a)
        )));
    }
    if !is_synchronizing(d) {
        return Err(Error::NotSynchronizing);
    }
    d.require_subset_capable()?;
    let full = d.all_states();
    // interval -> (successor interval, letter); sources map to themselves
    let mut parent: HashMap<StateSet, (StateSet, usize)> = HashMap::new();
    let mut frontier = Vec::new();
    for q in 0..d.n() {
        let s = StateSet::singleton(q);
        parent.insert(s, (s, usize::MAX));
        frontier.push(s);
    }
    let mut found = parent.contains_key(&full).then_some(full);
    while found.is_none() && !frontier.is_empty() {
        let mut next = Vec::new();
        'layer: for &i in &frontier {
            for a in 0..d.k() {
                let j = d.preimage_letter(i, a);
                if j.is_empty() || parent.contains_key(&j) {
                    continue;
                }
                assert!(
                    is_oriented_interval(j, order),
                    "preimage {j} of interval {i} is not an oriented interval"
                );
                parent.insert(j, (i, a));
                if j == full {
                    found = Some(j);
                    break 'layer;
                }
                next.push(j);
            }
        }
        frontier = next;
    }
    let mut cur = found.expect("a synchronizing automaton reaches the full set");
    let mut letters = Vec::new();
    loop {
        let (succ, a) = parent[&cur];
        if a == usize::MAX {
            break;
        }
        letters.push(a);
        cur = succ;
    }
    Ok(SolveResult::verified(d, Method::Eppstein, Word::new(letters)))
}
