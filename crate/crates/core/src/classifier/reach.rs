use std::collections::HashSet;

use crate::automaton::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub fn completely_reachable_violation(d: &Dfa) -> Result<Option<StateSet>> {
    completely_reachable_violation_with(d, &Limits::default())
}

/// Forward BFS over images of `Q`. Returns the least (by bit pattern)
/// non-empty subset that is not an image, if any.
pub fn completely_reachable_violation_with(d: &Dfa, limits: &Limits) -> Result<Option<StateSet>> {
    let n = d.n();
    if n > limits.reachability_states {
        return Err(Error::CapExceeded {
            what: "complete reachability states",
            cap: limits.reachability_states,
            got: n,
        });
    }
    let seen = reachable_images(d);
    let total = (1u64 << n) - 1;
    if seen.len() as u64 == total {
        return Ok(None);
    }
    Ok((1..=total)
        .map(StateSet::from_bits)
        .find(|s| !seen.contains(s)))
}

/// Every image `Q·w`.
pub fn reachable_images(d: &Dfa) -> HashSet<StateSet> {
    let mut seen = HashSet::from([d.all_states()]);
    let mut stack = vec![d.all_states()];
    while let Some(s) = stack.pop() {
        for a in 0..d.k() {
            let t = d.image_letter(s, a);
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cerny, gen_chain};

    #[test]
    fn examples() {
        for n in 2..=8 {
            assert_eq!(
                completely_reachable_violation(&gen_cerny(n).unwrap().dfa).unwrap(),
                None
            );
        }
        // images of Q under a^i are {0..n-1-i}
        let m3 = gen_chain(3).unwrap().dfa;
        let bad = completely_reachable_violation(&m3).unwrap().unwrap();
        assert_eq!(bad, StateSet::singleton(1));
        assert_eq!(reachable_images(&m3).len(), 3);
        let perm = Dfa::new(2, vec!["s"], vec![vec![1, 0]]).unwrap();
        assert!(completely_reachable_violation(&perm).unwrap().is_some());
        assert!(completely_reachable_violation(&gen_cerny(17).unwrap().dfa)
            .unwrap_err()
            .is_cap());
    }
}
