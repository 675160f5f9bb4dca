//! Linear-order classes: monotonic, weakly monotonic, orientable, weakly
//! orientable and 0-monotonic automata.
//!
//! An order is given as the list of states from least to greatest. For the
//! 0-monotonic class the list omits the zero state.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automaton::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderClass {
    /// Every letter is non-decreasing.
    Monotonic,
    /// Every letter is non-decreasing or non-increasing.
    WeaklyMonotonic,
    /// Every letter's image sequence is a rotation of a non-decreasing one.
    Orientable,
    /// As orientable, allowing the reversed image sequence.
    WeaklyOrientable,
    /// Order on the non-zero states; letters are monotone wherever both
    /// images avoid the zero.
    ZeroMonotonic,
}

impl OrderClass {
    pub const ALL: [OrderClass; 5] = [
        OrderClass::Monotonic,
        OrderClass::WeaklyMonotonic,
        OrderClass::Orientable,
        OrderClass::WeaklyOrientable,
        OrderClass::ZeroMonotonic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OrderClass::Monotonic => "monotonic",
            OrderClass::WeaklyMonotonic => "weakly_monotonic",
            OrderClass::Orientable => "orientable",
            OrderClass::WeaklyOrientable => "weakly_orientable",
            OrderClass::ZeroMonotonic => "zero_monotonic",
        }
    }

    fn is_cyclic(self) -> bool {
        matches!(self, OrderClass::Orientable | OrderClass::WeaklyOrientable)
    }
}

impl fmt::Display for OrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrderClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s || c.as_str().replace('_', "-") == s)
            .ok_or_else(|| Error::input(format!("unknown order class {s:?}")))
    }
}

fn non_decreasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] <= w[1])
}

fn non_increasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1])
}

/// A rotation of a non-decreasing sequence: at most one cyclic descent.
pub fn is_properly_oriented(seq: &[usize]) -> bool {
    let n = seq.len();
    (0..n).filter(|&i| seq[i] > seq[(i + 1) % n]).count() <= 1
}

/// Positions of states in `order`; `usize::MAX` for states not listed.
fn positions(order: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (i, &q) in order.iter().enumerate() {
        pos[q] = i;
    }
    pos
}

fn check_order_shape(d: &Dfa, class: OrderClass, order: &[usize]) -> Result<Option<usize>> {
    let n = d.n();
    let expected = if class == OrderClass::ZeroMonotonic { n - 1 } else { n };
    if order.len() != expected {
        return Err(Error::input(format!(
            "order lists {} states, expected {expected}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &q in order {
        if q >= n || std::mem::replace(&mut seen[q], true) {
            return Err(Error::input("order is not a list of distinct states"));
        }
    }
    if class != OrderClass::ZeroMonotonic {
        return Ok(None);
    }
    let zero = seen.iter().position(|&s| !s).expect("one state omitted");
    if !d.is_fixed_by_all(zero) {
        return Err(Error::input(format!(
            "the omitted state {zero} is not a zero"
        )));
    }
    Ok(Some(zero))
}

/// The first letter violating `class` under `order`, if any.
pub fn order_violation(d: &Dfa, class: OrderClass, order: &[usize]) -> Result<Option<usize>> {
    let zero = check_order_shape(d, class, order)?;
    let pos = positions(order, d.n());
    for a in 0..d.k() {
        let ok = match class {
            OrderClass::ZeroMonotonic => {
                let z = zero.expect("zero checked");
                let seq: Vec<usize> = order
                    .iter()
                    .map(|&q| d.next(q, a))
                    .filter(|&t| t != z)
                    .map(|t| pos[t])
                    .collect();
                non_decreasing(&seq)
            }
            _ => {
                let seq: Vec<usize> = order.iter().map(|&q| pos[d.next(q, a)]).collect();
                match class {
                    OrderClass::Monotonic => non_decreasing(&seq),
                    OrderClass::WeaklyMonotonic => non_decreasing(&seq) || non_increasing(&seq),
                    OrderClass::Orientable => is_properly_oriented(&seq),
                    OrderClass::WeaklyOrientable => {
                        let mut rev = seq.clone();
                        rev.reverse();
                        is_properly_oriented(&seq) || is_properly_oriented(&rev)
                    }
                    OrderClass::ZeroMonotonic => unreachable!(),
                }
            }
        };
        if !ok {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

pub fn find_order(d: &Dfa, class: OrderClass) -> Result<Option<Vec<usize>>> {
    find_order_with(d, class, &Limits::default())
}

/// Exhaustive search for an order witnessing `class`.
///
/// Orders are enumerated in lexicographic order of the state list; for the
/// cyclic classes the first state is fixed to 0, since rotating an order
/// preserves orientation. Monotone classes prune prefixes with pairwise
/// constraints.
pub fn find_order_with(d: &Dfa, class: OrderClass, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let n = d.n();
    if n > limits.order_states {
        return Err(Error::CapExceeded {
            what: "order search states",
            cap: limits.order_states,
            got: n,
        });
    }
    if class == OrderClass::ZeroMonotonic {
        for z in (0..n).filter(|&z| d.is_fixed_by_all(z)) {
            let states: Vec<usize> = (0..n).filter(|&q| q != z).collect();
            let mut search = Search::new(d, class, Some(z));
            if let Some(order) = search.run(&states, &[]) {
                return Ok(Some(order));
            }
        }
        return Ok(None);
    }
    let states: Vec<usize> = (0..n).collect();
    let mut search = Search::new(d, class, None);
    if class.is_cyclic() {
        Ok(search.run(&states[1..], &[0]))
    } else {
        Ok(search.run(&states, &[]))
    }
}

struct Search<'a> {
    d: &'a Dfa,
    class: OrderClass,
    zero: Option<usize>,
    pos: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(d: &'a Dfa, class: OrderClass, zero: Option<usize>) -> Self {
        Search {
            d,
            class,
            zero,
            pos: vec![usize::MAX; d.n()],
        }
    }

    fn run(&mut self, free: &[usize], prefix: &[usize]) -> Option<Vec<usize>> {
        let mut order = prefix.to_vec();
        for (i, &q) in prefix.iter().enumerate() {
            self.pos[q] = i;
        }
        let mut used = vec![false; self.d.n()];
        for &q in prefix {
            used[q] = true;
        }
        if self.extend(free, &mut order, &mut used) {
            Some(order)
        } else {
            None
        }
    }

    fn extend(&mut self, free: &[usize], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() == free.len() + order.iter().filter(|q| !free.contains(q)).count() {
            return order_violation(self.d, self.class, order)
                .expect("search builds well-formed orders")
                .is_none();
        }
        for &q in free {
            if used[q] {
                continue;
            }
            used[q] = true;
            self.pos[q] = order.len();
            order.push(q);
            if self.prefix_feasible(order) && self.extend(free, order, used) {
                return true;
            }
            order.pop();
            self.pos[q] = usize::MAX;
            used[q] = false;
        }
        false
    }

    /// Pairwise check of the placed prefix: an unplaced state will sit
    /// after every placed one.
    fn prefix_feasible(&self, order: &[usize]) -> bool {
        if !matches!(self.class, OrderClass::Monotonic | OrderClass::ZeroMonotonic) {
            return true;
        }
        let placed = order.len();
        let rank = |t: usize| {
            if self.pos[t] == usize::MAX || self.pos[t] >= placed {
                None
            } else {
                Some(self.pos[t])
            }
        };
        let r = *order.last().expect("non-empty prefix");
        for a in 0..self.d.k() {
            for &p in &order[..placed - 1] {
                for (lo, hi) in [(p, r)] {
                    let (x, y) = (self.d.next(lo, a), self.d.next(hi, a));
                    if self.zero.is_some_and(|z| x == z || y == z) {
                        continue;
                    }
                    match (rank(x), rank(y)) {
                        (Some(i), Some(j)) if i > j => return false,
                        (None, Some(_)) => return false,
                        _ => {}
                    }
                }
            }
        }
        // pairs placed earlier whose images just got placed
        for a in 0..self.d.k() {
            for (i, &p) in order.iter().enumerate() {
                for &q in &order[i + 1..] {
                    let (x, y) = (self.d.next(p, a), self.d.next(q, a));
                    if self.zero.is_some_and(|z| x == z || y == z) {
                        continue;
                    }
                    if let (Some(i), Some(j)) = (rank(x), rank(y)) {
                        if i > j {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// True iff `set` is a non-empty arc of consecutive states in the cyclic
/// reading of `order` (the full set included).
pub fn is_oriented_interval(set: StateSet, order: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let n = order.len();
    if set.len() == n {
        return true;
    }
    let arc_ends = (0..n)
        .filter(|&i| set.contains(order[i]) && !set.contains(order[(i + 1) % n]))
        .count();
    arc_ends == 1
}
