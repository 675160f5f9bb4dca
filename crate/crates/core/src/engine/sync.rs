use std::collections::VecDeque;

use crate::automaton::Dfa;

/// Inverse transition lists: `inv[a][t]` holds every `q` with `q·a = t`.
pub(crate) fn inverse_lists(d: &Dfa) -> Vec<Vec<Vec<usize>>> {
    (0..d.k())
        .map(|a| {
            let mut inv = vec![Vec::new(); d.n()];
            for q in 0..d.n() {
                inv[d.next(q, a)].push(q);
            }
            inv
        })
        .collect()
}

/// `merge[p * n + q]` (for `p < q`) is true iff some word maps `p` and `q`
/// to the same state.
///
/// Backward search in the pair automaton: seed with pairs merged by a
/// single letter, then close under letter preimages.
pub fn mergeable_pairs(d: &Dfa) -> Vec<bool> {
    let n = d.n();
    let inv = inverse_lists(d);
    let mut merge = vec![false; n * n];
    let mut queue = VecDeque::new();
    let mark = |p: usize, q: usize, merge: &mut Vec<bool>, queue: &mut VecDeque<(usize, usize)>| {
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        if !merge[p * n + q] {
            merge[p * n + q] = true;
            queue.push_back((p, q));
        }
    };
    for lists in &inv {
        for sources in lists {
            for (i, &p) in sources.iter().enumerate() {
                for &q in &sources[i + 1..] {
                    mark(p, q, &mut merge, &mut queue);
                }
            }
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        for lists in &inv {
            for &p in &lists[x] {
                for &q in &lists[y] {
                    if p != q {
                        mark(p, q, &mut merge, &mut queue);
                    }
                }
            }
        }
    }
    merge
}

/// True iff some word maps every state to one state.
///
/// Uses the pair characterization: an automaton is synchronizing iff every
/// pair of states can be merged. No subset search is involved, so this
/// works for any number of states.
pub fn is_synchronizing(d: &Dfa) -> bool {
    let n = d.n();
    let merge = mergeable_pairs(d);
    (0..n).all(|p| (p + 1..n).all(|q| merge[p * n + q]))
}
