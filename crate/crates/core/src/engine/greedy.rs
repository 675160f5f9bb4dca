use super::exact::image_bfs;
use super::{is_synchronizing, Method, SolveResult};
use crate::automaton::{Dfa, StateSet, Word};
use crate::error::{Error, Result};

/// Shortest word `u` with `|P·u| < |P|`, lexicographically least among
/// the shortest; `None` if `P` cannot be compressed.
pub fn shortest_compressing_word(d: &Dfa, p: StateSet) -> Option<Word> {
    let size = p.len();
    image_bfs(d, p, |s| s.len() < size).filter(|w| !w.is_empty())
}

/// Greedy compression: repeatedly append a shortest word that shrinks the
/// current image until it is a singleton.
pub fn greedy_compression_word(d: &Dfa) -> Result<SolveResult> {
    if !is_synchronizing(d) {
        return Err(Error::NotSynchronizing);
    }
    d.require_subset_capable()?;
    let mut image = d.all_states();
    let mut word = Word::empty();
    while image.len() > 1 {
        let u = shortest_compressing_word(d, image)
            .expect("every image of a synchronizing automaton can be compressed");
        image = d.image_unchecked(image, &u);
        word.extend_from(&u);
    }
    Ok(SolveResult::verified(d, Method::Greedy, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::tests::cerny;
    use crate::families::gen_rystsov;

    #[test]
    fn examples() {
        let r = greedy_compression_word(&cerny(4)).unwrap();
        assert!(r.len() <= 10);
        let constant = Dfa::new(3, vec!["a", "c"], vec![vec![1, 2, 0], vec![2, 2, 2]]).unwrap();
        let r = greedy_compression_word(&constant).unwrap();
        assert_eq!(r.word.letters(), &[1]);
        let r4 = gen_rystsov(4).unwrap().dfa;
        assert!(greedy_compression_word(&r4).unwrap().len() <= 6);
    }

    #[test]
    fn rejects_non_synchronizing() {
        let perms = Dfa::new(2, vec!["a"], vec![vec![1, 0]]).unwrap();
        assert_eq!(greedy_compression_word(&perms), Err(Error::NotSynchronizing));
    }
}
