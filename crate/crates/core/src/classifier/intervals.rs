//! Intervals of a directed graph on the state set, and the check that an
//! automaton respects them.
//!
//! `[p, r]` for `p != r` is empty when `r` is unreachable from `p`, and
//! otherwise holds `p`, `r` and every vertex on a walk from `p` to `r`
//! that does not pass through `p` or `r` in between. `[p, p]` is `{p}`
//! together with every vertex on a closed walk through `p` that does not
//! revisit `p`. The singleton clause is only tested for distinct `p, r`,
//! and an empty interval never counts as a singleton.

use serde::{Deserialize, Serialize};

use crate::automaton::{Dfa, Multigraph, StateSet};
use crate::error::{Error, Result};

/// Graph JSON: `{ "n": int, "edges": [[u, v], ...] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Multigraph> {
        if let Some(&(u, v)) = self.edges.iter().find(|(u, v)| *u >= self.n || *v >= self.n) {
            return Err(Error::parse(
                "edges",
                format!("edge ({u}, {v}) leaves the {} vertices", self.n),
            ));
        }
        Ok(Multigraph::from_edges(self.n, self.edges))
    }
}

/// All intervals `[p, r]`, indexed `p * n + r`.
pub struct Intervals {
    n: usize,
    sets: Vec<StateSet>,
}

impl Intervals {
    pub fn new(g: &Multigraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > crate::HARD_STATE_CAP {
            return Err(Error::CapExceeded {
                what: "interval graph vertices",
                cap: crate::HARD_STATE_CAP,
                got: n,
            });
        }
        let mut sets = vec![StateSet::EMPTY; n * n];
        for p in 0..n {
            for r in 0..n {
                sets[p * n + r] = interval(g, p, r);
            }
        }
        Ok(Intervals { n, sets })
    }

    pub fn get(&self, p: usize, r: usize) -> StateSet {
        self.sets[p * self.n + r]
    }
}

fn interval(g: &Multigraph, p: usize, r: usize) -> StateSet {
    let blocked = [p, r];
    let starts: Vec<usize> = g.successors(p).filter(|v| !blocked.contains(v)).collect();
    let ends: Vec<usize> = g.predecessors(r).filter(|v| !blocked.contains(v)).collect();
    let fwd = g.reachable_avoiding(&starts, &blocked, true);
    let bwd = g.reachable_avoiding(&ends, &blocked, false);
    let inner: StateSet = (0..g.vertex_count()).filter(|&q| fwd[q] && bwd[q]).collect();
    if p == r {
        return inner.union(StateSet::singleton(p));
    }
    if g.multiplicity(p, r) > 0 || !inner.is_empty() {
        inner.union(StateSet::singleton(p)).union(StateSet::singleton(r))
    } else {
        StateSet::EMPTY
    }
}

/// A violated clause of interval respect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalViolation {
    pub clause: u8,
    pub p: usize,
    pub r: usize,
    pub letter: usize,
}

/// The first violation over `p`, `r`, letters in index order.
pub fn respects_intervals(d: &Dfa, g: &Multigraph) -> Result<Option<IntervalViolation>> {
    if g.vertex_count() != d.n() {
        return Err(Error::input(format!(
            "graph has {} vertices, automaton has {} states",
            g.vertex_count(),
            d.n()
        )));
    }
    let iv = Intervals::new(g)?;
    let n = d.n();
    for p in 0..n {
        for r in 0..n {
            let pr = iv.get(p, r);
            let rp = iv.get(r, p);
            for a in 0..d.k() {
                let (pa, ra) = (d.next(p, a), d.next(r, a));
                let violation = |clause| Some(IntervalViolation { clause, p, r, letter: a });
                if !pr.is_empty() && iv.get(pa, ra).is_empty() {
                    return Ok(violation(1));
                }
                if !pr.is_empty()
                    && !rp.is_empty()
                    && !d.image_letter(pr, a).is_subset(iv.get(pa, ra))
                {
                    return Ok(violation(2));
                }
                if p != r
                    && pa == ra
                    && !d.image_letter(pr, a).is_singleton()
                    && !d.image_letter(rp, a).is_singleton()
                {
                    return Ok(violation(3));
                }
            }
        }
    }
    Ok(None)
}

/// A triple `(p, q, r)` in one strongly connected component with `q`
/// outside both `[p, r]` and `[r, p]`.
pub fn density_violation(g: &Multigraph) -> Result<Option<(usize, usize, usize)>> {
    let iv = Intervals::new(g)?;
    for comp in g.strongly_connected_components() {
        for &p in &comp {
            for &r in &comp {
                let both = iv.get(p, r).union(iv.get(r, p));
                if let Some(&q) = comp.iter().find(|&&q| !both.contains(q)) {
                    return Ok(Some((p, q, r)));
                }
            }
        }
    }
    Ok(None)
}
