use std::collections::{HashMap, VecDeque};

use num::rational::Ratio;

use super::{is_synchronizing, Method, SolveResult};
use crate::automaton::{Dfa, StateSet, Word};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Shortest word `v` with `|Pv⁻¹| > |P|`, or `None` if there is none.
///
/// Breadth-first search over preimages: a node `X = Pv⁻¹` has children
/// `Xa⁻¹ = P(av)⁻¹`, so words grow by prepending letters.
pub fn shortest_extending_word(d: &Dfa, p: StateSet) -> Option<Word> {
    let size = p.len();
    // child -> (parent, letter prepended)
    let mut parent: HashMap<u64, (u64, u16)> = HashMap::new();
    parent.insert(p.bits(), (p.bits(), u16::MAX));
    let mut queue = VecDeque::from([p]);
    while let Some(x) = queue.pop_front() {
        for a in 0..d.k() {
            let y = d.preimage_letter(x, a);
            if parent.contains_key(&y.bits()) {
                continue;
            }
            parent.insert(y.bits(), (x.bits(), a as u16));
            if y.len() > size {
                // y = P(a_1 a_2 … a_m)⁻¹ where a_1 is the last prepended letter
                let mut letters = Vec::new();
                let mut cur = y.bits();
                while cur != p.bits() {
                    let (prev, b) = parent[&cur];
                    letters.push(b as usize);
                    cur = prev;
                }
                return Some(Word::new(letters));
            }
            queue.push_back(y);
        }
    }
    None
}

/// Shortest extending-word lengths over all proper non-singleton subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensibilityProfile {
    n: usize,
    /// `(P, shortest |v|)` for every proper subset with `2 <= |P| < n`,
    /// ordered by bit pattern.
    lengths: Vec<(StateSet, usize)>,
}

impl ExtensibilityProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &[(StateSet, usize)] {
        &self.lengths
    }

    pub fn length_of(&self, p: StateSet) -> Option<usize> {
        self.lengths
            .binary_search_by_key(&p, |&(s, _)| s)
            .ok()
            .map(|i| self.lengths[i].1)
    }

    /// Maximum shortest length among subsets of each size `s`, indexed by
    /// `s` (entries for `s < 2` and `s >= n` are `None`).
    pub fn max_by_size(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n + 1];
        for &(p, len) in &self.lengths {
            let slot = &mut out[p.len()];
            *slot = Some(slot.map_or(len, |m: usize| m.max(len)));
        }
        out
    }

    /// Longest shortest extending word; 0 when there are no such subsets.
    pub fn max_length(&self) -> usize {
        self.lengths.iter().map(|&(_, l)| l).max().unwrap_or(0)
    }

    /// The least `α` for which the automaton is `α`-extensible.
    pub fn alpha(&self) -> Ratio<usize> {
        Ratio::new(self.max_length(), self.n)
    }

    /// `1 + αn(n-2)`, the reset threshold bound implied by the profile for
    /// `n > 2`.
    pub fn reset_bound(&self) -> usize {
        1 + self.max_length() * self.n.saturating_sub(2)
    }
}

pub fn extensibility_profile(d: &Dfa) -> Result<ExtensibilityProfile> {
    extensibility_profile_with(d, &Limits::default())
}

/// Computes the shortest extending word length of every proper
/// non-singleton subset. Fails on the first subset (in bit order) that
/// cannot be extended.
pub fn extensibility_profile_with(d: &Dfa, limits: &Limits) -> Result<ExtensibilityProfile> {
    d.require_subset_capable()?;
    let n = d.n();
    if n > limits.extension_states {
        return Err(Error::CapExceeded {
            what: "extensibility profile states",
            cap: limits.extension_states,
            got: n,
        });
    }
    let mut lengths = Vec::new();
    for bits in 1..d.all_states().bits() {
        let p = StateSet::from_bits(bits);
        if p.len() < 2 {
            continue;
        }
        match shortest_extending_word(d, p) {
            Some(v) => lengths.push((p, v.len())),
            None => return Err(Error::NotExtensible { subset: p }),
        }
    }
    Ok(ExtensibilityProfile { n, lengths })
}

/// Bottom-up construction `v_m ⋯ v_2 v_1`.
///
/// Starts from the first state (in index order) with a preimage of size at
/// least two under some letter `c`; `v_1 = c`. Each further step prepends
/// a shortest word strictly growing the current preimage.
pub fn reset_word_via_extension(d: &Dfa) -> Result<SolveResult> {
    d.require_subset_capable()?;
    if d.n() == 1 {
        return Ok(SolveResult::verified(d, Method::Extension, Word::empty()));
    }
    if !is_synchronizing(d) {
        return Err(Error::NotSynchronizing);
    }
    let full = d.all_states();
    let (start, seed) = (0..d.n())
        .find_map(|s| {
            (0..d.k())
                .find(|&a| d.preimage_letter(StateSet::singleton(s), a).len() >= 2)
                .map(|a| (s, a))
        })
        .expect("a synchronizing automaton has a merging letter");
    let mut current = d.preimage_letter(StateSet::singleton(start), seed);
    let mut word = Word::new(vec![seed]);
    while current != full {
        let v = shortest_extending_word(d, current)
            .ok_or(Error::NotExtensible { subset: current })?;
        current = d.preimage_unchecked(current, &v);
        word = v.concat(&word);
    }
    Ok(SolveResult::verified(d, Method::Extension, word))
}
