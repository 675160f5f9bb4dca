//! Solvers for automata with simple idempotent letters.

use std::collections::VecDeque;

use num::integer::gcd;

use super::{greedy_compression_word, is_synchronizing, reset_word_via_extension, Method, SolveResult};
use crate::automaton::{Dfa, StateSet, Word};
use crate::error::{Error, Result};

/// A letter of deficiency 1 that fixes its image. Returns `(e, d)` where
/// `e` is the state off the image and `d = e·a`.
pub fn simple_idempotent(d: &Dfa, a: usize) -> Option<(usize, usize)> {
    let t = d.letter_transformation(a);
    if t.deficiency() != 1 || !t.is_idempotent() {
        return None;
    }
    let image: StateSet = t.images().collect();
    let e = d.all_states().difference(image).first()?;
    Some((e, d.next(e, a)))
}

/// Height-based compression for automata whose letters are all simple
/// idempotents. The word has length exactly `n - 1`.
pub fn c7_height_word(d: &Dfa) -> Result<SolveResult> {
    if let Some(a) = (0..d.k()).find(|&a| simple_idempotent(d, a).is_none()) {
        return Err(Error::domain(format!(
            "letter {} is not a simple idempotent",
            d.letter_name(a)
        )));
    }
    if !is_synchronizing(d) {
        return Err(Error::NotSynchronizing);
    }
    let n = d.n();
    if n == 1 {
        return Ok(SolveResult::verified(d, Method::C7, Word::empty()));
    }
    let q0 = greedy_compression_word(d)?.target;

    // backward BFS from q0 gives heights
    let mut preds = vec![Vec::new(); n];
    for a in 0..d.k() {
        for q in 0..n {
            preds[d.next(q, a)].push(q);
        }
    }
    let mut height = vec![usize::MAX; n];
    height[q0] = 0;
    let mut queue = VecDeque::from([q0]);
    while let Some(r) = queue.pop_front() {
        for &q in &preds[r] {
            if height[q] == usize::MAX {
                height[q] = height[r] + 1;
                queue.push_back(q);
            }
        }
    }
    let first_letter: Vec<usize> = (0..n)
        .map(|q| {
            if q == q0 {
                return usize::MAX;
            }
            (0..d.k())
                .find(|&a| height[d.next(q, a)] + 1 == height[q])
                .expect("every state reaches the reset target")
        })
        .collect();

    let mut image = d.all_states();
    let mut word = Word::empty();
    for _ in 1..n {
        let q = image
            .difference(StateSet::singleton(q0))
            .iter()
            .max_by_key(|&q| (height[q], std::cmp::Reverse(q)))
            .expect("image still has a state other than the target");
        let a = first_letter[q];
        word.push(a);
        image = d.image_letter(image, a);
    }
    assert_eq!(image, StateSet::singleton(q0), "height construction did not reset");
    Ok(SolveResult::verified(d, Method::C7, word))
}

/// Reset word for a binary automaton with a simple idempotent letter,
/// of length at most `(n-1)^2`.
///
/// The idempotent letter is taken to be the first letter if it qualifies,
/// otherwise the second.
pub fn a10_binary_idempotent_word(d: &Dfa) -> Result<SolveResult> {
    if d.k() != 2 {
        return Err(Error::domain(format!(
            "automaton is not binary ({} letters)",
            d.k()
        )));
    }
    let (a, b) = if simple_idempotent(d, 0).is_some() {
        (0, 1)
    } else if simple_idempotent(d, 1).is_some() {
        (1, 0)
    } else {
        return Err(Error::domain("neither letter is a simple idempotent"));
    };
    if !is_synchronizing(d) {
        return Err(Error::NotSynchronizing);
    }
    let word = a10_word(d, a, b)?;
    let n = d.n();
    let r = SolveResult::verified(d, Method::A10, word);
    assert!(
        r.len() <= (n - 1) * (n - 1),
        "A10 word of length {} exceeds (n-1)^2",
        r.len()
    );
    Ok(r)
}

fn a10_word(d: &Dfa, a: usize, b: usize) -> Result<Word> {
    let n = d.n();
    let (e, da) = simple_idempotent(d, a).expect("checked by the caller");
    let tb = d.letter_transformation(b);
    let cycles = tb.cycles();
    if cycles.iter().any(|c| !c.contains(&e)) {
        // such a cycle is a zero; greedy stays within n(n-1)/2
        return Ok(greedy_compression_word(d)?.word);
    }
    let cycle = &cycles[0];
    let m = cycle.len();
    if m == 1 {
        return Ok(Word::power_of(b, n - 1));
    }
    let mut word = Word::power_of(b, n - m);
    let on_cycle: StateSet = cycle.iter().copied().collect();
    if on_cycle.contains(da) {
        // Case 1: the cycle is closed under both letters
        if m == n {
            word.extend_from(&reset_word_via_extension(d)?.word);
        } else {
            let (sub, map) = d.subautomaton(cycle)?;
            let inner = a10_word(&sub, a, b)?;
            debug_assert_eq!(map.len(), m);
            word.extend_from(&inner);
        }
        return Ok(word);
    }
    // Case 2
    let mut k = 0;
    let mut r = da;
    while !on_cycle.contains(r) {
        r = d.next(r, b);
        k += 1;
    }
    let mut ell = 0;
    let mut q = e;
    while q != r {
        q = d.next(q, b);
        ell += 1;
    }
    let diff = (k as i64 - ell as i64).unsigned_abs() as usize;
    assert_eq!(gcd(m, diff), 1, "gcd(m, k - l) != 1 with m={m} k={k} l={ell}");
    let mut v = if ell == 0 {
        Word::empty()
    } else {
        Word::power_of(b, m - ell)
    };
    v.push(a);
    let block = v.concat(&Word::power_of(b, k));
    word.extend_from(&block.repeat(m - 1));
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::tests::cerny;
    use crate::engine::exact_reset_threshold;
    use crate::families::{gen_dnk, gen_elevator};

    #[test]
    fn c7_elevator() {
        let d = gen_elevator(5).unwrap().dfa;
        let r = c7_height_word(&d).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(exact_reset_threshold(&d).unwrap().len(), 4);
    }

    #[test]
    fn c7_two_states() {
        let d = Dfa::new(2, vec!["a"], vec![vec![1, 1]]).unwrap();
        assert_eq!(c7_height_word(&d).unwrap().len(), 1);
        assert!(matches!(c7_height_word(&cerny(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn a10_cerny() {
        for n in 3..=7 {
            let r = a10_binary_idempotent_word(&cerny(n)).unwrap();
            assert!(r.len() <= (n - 1) * (n - 1));
        }
    }

    #[test]
    fn a10_loop_cycle() {
        // b: 1->0, 2->1, 0->0 ; a sends 0 to 1
        let d = Dfa::new(3, vec!["a", "b"], vec![vec![1, 1, 2], vec![0, 0, 1]]).unwrap();
        let r = a10_binary_idempotent_word(&d).unwrap();
        assert_eq!(r.word, Word::power_of(1, 2));
    }

    #[test]
    fn a10_case_two() {
        // C = {0,1,2} via b, e = 0, e·a = 3 off the cycle, 3·b = 0:
        // k = 1, r = e, so v = a and the word is b(ab)^2
        let d = Dfa::new(
            4,
            vec!["a", "b"],
            vec![vec![3, 1, 2, 3], vec![1, 2, 0, 0]],
        )
        .unwrap();
        assert!(is_synchronizing(&d));
        let r = a10_binary_idempotent_word(&d).unwrap();
        assert_eq!(d.format_word(&r.word), "babab");
    }

    #[test]
    fn a10_rejects_non_idempotent() {
        let d = gen_dnk(5, 3).unwrap().dfa;
        assert!(matches!(a10_binary_idempotent_word(&d), Err(Error::Domain(_))));
    }
}
