//! Complete deterministic automata and the set dynamics of their words.
//!
//! States are dense indices `0..n`, letters are indices into the ordered
//! list of letter names. A word acts on the right: `q·(uv) = (q·u)·v`.

mod congruence;
mod graph;
mod io;
mod state_set;
mod transformation;
mod word;

pub use congruence::Congruence;
pub use graph::Multigraph;
pub use io::{from_json_str, to_json_string, to_json_value, AutomatonJson};
pub use state_set::StateSet;
pub use transformation::Transformation;
pub use word::Word;

use crate::error::{Error, Result};
use crate::limits::HARD_STATE_CAP;

/// A complete deterministic finite automaton `⟨Q, Σ, δ⟩`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    name: Option<String>,
    n: usize,
    letters: Vec<String>,
    // delta[a * n + q] = q·a
    delta: Vec<u32>,
}

impl Dfa {
    /// Builds an automaton from one successor row per letter.
    pub fn new<S: Into<String>>(n: usize, letters: Vec<S>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if n == 0 {
            return Err(Error::input("an automaton needs at least one state"));
        }
        if n > u32::MAX as usize {
            return Err(Error::input("too many states"));
        }
        if letters.is_empty() {
            return Err(Error::input("an automaton needs at least one letter"));
        }
        if rows.len() != letters.len() {
            return Err(Error::input(format!(
                "{} letters but {} transition rows",
                letters.len(),
                rows.len()
            )));
        }
        for (i, name) in letters.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::input(format!("letter {i} has an empty name")));
            }
            if letters[..i].contains(name) {
                return Err(Error::input(format!("duplicate letter name {name:?}")));
            }
        }
        let mut delta = Vec::with_capacity(n * letters.len());
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row of letter {:?} has {} entries, expected {n}",
                    letters[a],
                    row.len()
                )));
            }
            for (q, &t) in row.iter().enumerate() {
                if t >= n {
                    return Err(Error::input(format!(
                        "{q}·{} = {t} is not a state of a {n}-state automaton",
                        letters[a]
                    )));
                }
                delta.push(t as u32);
            }
        }
        Ok(Dfa {
            name: None,
            n,
            letters,
            delta,
        })
    }

    /// Builds an automaton from one transformation per letter.
    pub fn from_transformations<S: Into<String>>(
        letters: Vec<S>,
        maps: &[Transformation],
    ) -> Result<Self> {
        let n = maps.first().map_or(0, Transformation::degree);
        if maps.iter().any(|t| t.degree() != n) {
            return Err(Error::input("letter transformations differ in degree"));
        }
        Dfa::new(n, letters, maps.iter().map(|t| t.images().collect()).collect())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Number of states.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of letters.
    pub fn k(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn letter_name(&self, a: usize) -> &str {
        &self.letters[a]
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l == name)
    }

    /// `q·a` without bounds checks beyond slice indexing.
    #[inline]
    pub fn next(&self, q: usize, a: usize) -> usize {
        self.delta[a * self.n + q] as usize
    }

    /// The successor row of letter `a`.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.delta[a * self.n..(a + 1) * self.n]
            .iter()
            .map(|&q| q as usize)
    }

    pub fn letter_transformation(&self, a: usize) -> Transformation {
        Transformation::from_raw(self.delta[a * self.n..(a + 1) * self.n].into())
    }

    pub fn letter_transformations(&self) -> Vec<Transformation> {
        (0..self.k()).map(|a| self.letter_transformation(a)).collect()
    }

    pub fn check_state(&self, q: usize) -> Result<()> {
        if q >= self.n {
            return Err(Error::input(format!(
                "state {q} out of range for a {}-state automaton",
                self.n
            )));
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.iter().find(|&&a| a >= self.k()) {
            Some(a) => Err(Error::input(format!(
                "letter index {a} out of range for a {}-letter alphabet",
                self.k()
            ))),
            None => Ok(()),
        }
    }

    /// Parses a word written with letter names. Single-character alphabets
    /// allow juxtaposition (`"abbb"`); otherwise names are separated by
    /// whitespace or commas.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let single = self.letters.iter().all(|l| l.chars().count() == 1);
        let tokens: Vec<String> = if single && !text.contains([' ', ',']) {
            text.chars().map(String::from).collect()
        } else {
            text.split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect()
        };
        tokens
            .iter()
            .map(|t| {
                self.letter_index(t)
                    .ok_or_else(|| Error::input(format!("unknown letter {t:?}")))
            })
            .collect()
    }

    /// Renders a word with letter names: juxtaposed for single-character
    /// alphabets, space-separated otherwise. The empty word renders as `ε`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let single = self.letters.iter().all(|l| l.chars().count() == 1);
        let names: Vec<&str> = w.iter().map(|&a| self.letter_name(a)).collect();
        names.join(if single { "" } else { " " })
    }

    pub fn word_names(&self, w: &Word) -> Vec<String> {
        w.iter().map(|&a| self.letters[a].clone()).collect()
    }

    /// `q·w`.
    pub fn apply_word(&self, q: usize, w: &Word) -> Result<usize> {
        self.check_state(q)?;
        self.check_word(w)?;
        Ok(self.run(q, w))
    }

    #[inline]
    pub(crate) fn run(&self, q: usize, w: &[usize]) -> usize {
        w.iter().fold(q, |p, &a| self.next(p, a))
    }

    pub fn word_transformation(&self, w: &Word) -> Result<Transformation> {
        self.check_word(w)?;
        Ok(Transformation::from_raw(
            (0..self.n).map(|q| self.run(q, w) as u32).collect(),
        ))
    }

    /// Fails when the state count is beyond what a [`StateSet`] can hold.
    pub fn require_subset_capable(&self) -> Result<()> {
        if self.n > HARD_STATE_CAP {
            return Err(Error::CapExceeded {
                what: "state sets",
                cap: HARD_STATE_CAP,
                got: self.n,
            });
        }
        Ok(())
    }

    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.n.min(HARD_STATE_CAP))
    }

    /// `P·a`.
    #[inline]
    pub fn image_letter(&self, p: StateSet, a: usize) -> StateSet {
        let row = &self.delta[a * self.n..(a + 1) * self.n];
        let mut out = 0u64;
        for q in p {
            out |= 1 << row[q];
        }
        StateSet::from_bits(out)
    }

    /// `P·a⁻¹ = {q | q·a ∈ P}`.
    #[inline]
    pub fn preimage_letter(&self, p: StateSet, a: usize) -> StateSet {
        let row = &self.delta[a * self.n..(a + 1) * self.n];
        let mut out = 0u64;
        for (q, &t) in row.iter().enumerate() {
            if p.contains(t as usize) {
                out |= 1 << q;
            }
        }
        StateSet::from_bits(out)
    }

    pub(crate) fn image_unchecked(&self, p: StateSet, w: &[usize]) -> StateSet {
        w.iter().fold(p, |s, &a| self.image_letter(s, a))
    }

    pub(crate) fn preimage_unchecked(&self, p: StateSet, w: &[usize]) -> StateSet {
        w.iter().rev().fold(p, |s, &a| self.preimage_letter(s, a))
    }

    fn check_set(&self, p: StateSet) -> Result<()> {
        self.require_subset_capable()?;
        if !p.is_subset(self.all_states()) {
            return Err(Error::input(format!(
                "{p} is not a subset of the {} states",
                self.n
            )));
        }
        Ok(())
    }

    /// `P·w = {p·w | p ∈ P}` for non-empty `P`.
    pub fn image(&self, p: StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(p)?;
        self.check_word(w)?;
        if p.is_empty() {
            return Err(Error::input("image of the empty set"));
        }
        Ok(self.image_unchecked(p, w))
    }

    /// `Pw⁻¹ = {q | q·w ∈ P}`.
    pub fn preimage(&self, p: StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(p)?;
        self.check_word(w)?;
        Ok(self.preimage_unchecked(p, w))
    }

    /// True iff `w` maps every state to one state.
    pub fn is_reset_word(&self, w: &Word) -> bool {
        if self.check_word(w).is_err() {
            return false;
        }
        let target = self.run(0, w);
        (1..self.n).all(|q| self.run(q, w) == target)
    }

    /// The state `w` resets to, if it is a reset word.
    pub fn reset_target(&self, w: &Word) -> Option<usize> {
        self.is_reset_word(w).then(|| self.run(0, w))
    }

    /// The underlying multigraph, labels dropped.
    pub fn underlying_graph(&self) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for a in 0..self.k() {
            for q in 0..self.n {
                g.add_edge(q, self.next(q, a));
            }
        }
        g
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.underlying_graph().is_strongly_connected()
    }

    pub fn is_fixed_by_all(&self, q: usize) -> bool {
        (0..self.k()).all(|a| self.next(q, a) == q)
    }

    /// The first violation of the congruence condition, if any.
    pub fn congruence_violation(&self, pi: &Congruence) -> Option<(usize, usize, usize)> {
        if pi.len() != self.n {
            return Some((0, 0, usize::MAX));
        }
        // comparing each state with its class representative suffices
        let reps = pi.representatives();
        for a in 0..self.k() {
            for q in 0..self.n {
                let r = reps[pi.class_of(q)];
                if !pi.same_class(self.next(q, a), self.next(r, a)) {
                    return Some((r, q, a));
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, pi: &Congruence) -> bool {
        self.congruence_violation(pi).is_none()
    }

    /// `A/π`: states are the classes of `π`, numbered as in `π`.
    pub fn quotient(&self, pi: &Congruence) -> Result<Dfa> {
        if pi.len() != self.n {
            return Err(Error::input(format!(
                "partition covers {} states, automaton has {}",
                pi.len(),
                self.n
            )));
        }
        if let Some((p, q, letter)) = self.congruence_violation(pi) {
            return Err(Error::NotCongruence { p, q, letter });
        }
        let reps = pi.representatives();
        let rows = (0..self.k())
            .map(|a| reps.iter().map(|&r| pi.class_of(self.next(r, a))).collect())
            .collect();
        let mut d = Dfa::new(pi.class_count(), self.letters.clone(), rows)?;
        d.name = self.name.as_ref().map(|s| format!("{s}/π"));
        Ok(d)
    }

    /// The subautomaton on a closed set `S`, with `map[i]` the original
    /// index of the new state `i` (increasing).
    pub fn subautomaton(&self, s: &[usize]) -> Result<(Dfa, Vec<usize>)> {
        let mut map: Vec<usize> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        if map.is_empty() {
            return Err(Error::input("subautomaton on the empty set"));
        }
        for &q in &map {
            self.check_state(q)?;
        }
        let mut back = vec![usize::MAX; self.n];
        for (i, &q) in map.iter().enumerate() {
            back[q] = i;
        }
        let mut rows = Vec::with_capacity(self.k());
        for a in 0..self.k() {
            let mut row = Vec::with_capacity(map.len());
            for &q in &map {
                let t = self.next(q, a);
                if back[t] == usize::MAX {
                    return Err(Error::NotClosed {
                        state: q,
                        letter: a,
                    });
                }
                row.push(back[t]);
            }
            rows.push(row);
        }
        Ok((Dfa::new(map.len(), self.letters.clone(), rows)?, map))
    }

    /// Relabels states: old state `q` becomes `perm[q]`.
    pub fn permute_states(&self, perm: &[usize]) -> Result<Dfa> {
        check_permutation(perm, self.n)?;
        let mut rows = vec![vec![0; self.n]; self.k()];
        for (a, row) in rows.iter_mut().enumerate() {
            for q in 0..self.n {
                row[perm[q]] = perm[self.next(q, a)];
            }
        }
        let mut d = Dfa::new(self.n, self.letters.clone(), rows)?;
        d.name = self.name.clone();
        Ok(d)
    }

    /// Reorders letters: new letter `i` is old letter `order[i]`.
    pub fn reorder_letters(&self, order: &[usize]) -> Result<Dfa> {
        check_permutation(order, self.k())?;
        let letters = order.iter().map(|&a| self.letters[a].clone()).collect();
        let rows = order.iter().map(|&a| self.row(a).collect()).collect();
        let mut d = Dfa::new(self.n, letters, rows)?;
        d.name = self.name.clone();
        Ok(d)
    }

    /// The transition table, letter-major.
    pub fn table(&self) -> &[u32] {
        &self.delta
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::input("permutation has the wrong length"));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::input("not a permutation"));
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The Černý automaton `C_n`: `0·a = 1`, `a` fixes the rest, `b` adds one.
    pub(crate) fn cerny(n: usize) -> Dfa {
        let a = (0..n).map(|m| if m == 0 { 1 % n } else { m }).collect();
        let b = (0..n).map(|m| (m + 1) % n).collect();
        Dfa::new(n, vec!["a", "b"], vec![a, b]).unwrap()
    }

    /// `M_n`: `i·a = i - 1`, `0·a = 0`.
    pub(crate) fn chain(n: usize) -> Dfa {
        let a = (0..n).map(|i| i.saturating_sub(1)).collect();
        Dfa::new(n, vec!["a"], vec![a]).unwrap()
    }

    fn set(states: &[usize]) -> StateSet {
        states.iter().copied().collect()
    }

    #[test]
    fn apply_word_examples() {
        let c4 = cerny(4);
        let w = c4.parse_word("abbb").unwrap();
        assert_eq!(c4.apply_word(0, &w).unwrap(), 0);
        assert_eq!(c4.apply_word(2, &Word::empty()).unwrap(), 2);
        assert_eq!(c4.apply_word(3, &c4.parse_word("b").unwrap()).unwrap(), 0);
    }

    #[test]
    fn apply_word_rejects_bad_input() {
        let c4 = cerny(4);
        assert!(matches!(c4.apply_word(4, &Word::empty()), Err(Error::Input(_))));
        assert!(matches!(
            c4.apply_word(0, &Word::new(vec![2])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn image_examples() {
        let c4 = cerny(4);
        let a = c4.parse_word("a").unwrap();
        assert_eq!(c4.image(set(&[0, 1]), &a).unwrap(), set(&[1]));
        assert_eq!(c4.image(set(&[0, 2]), &Word::empty()).unwrap(), set(&[0, 2]));
        let reset = c4.parse_word("abbbabbba").unwrap();
        assert_eq!(c4.image(c4.all_states(), &reset).unwrap(), set(&[1]));
        assert!(matches!(c4.image(StateSet::EMPTY, &a), Err(Error::Input(_))));
    }

    #[test]
    fn preimage_examples() {
        let c4 = cerny(4);
        let a = c4.parse_word("a").unwrap();
        assert_eq!(c4.preimage(set(&[1]), &a).unwrap(), set(&[0, 1]));
        assert_eq!(c4.preimage(set(&[2]), &a).unwrap(), set(&[2]));
        let w = c4.parse_word("abab").unwrap();
        assert_eq!(c4.preimage(c4.all_states(), &w).unwrap(), c4.all_states());
    }

    #[test]
    fn underlying_graph_examples() {
        let g = cerny(3).underlying_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 6));
        let m3 = chain(3).underlying_graph();
        assert_eq!(m3.edge_count(), 3);
        assert_eq!(m3.multiplicity(0, 0), 1);
        assert_eq!(cerny(4).underlying_graph().in_degree(1), 3);
    }

    #[test]
    fn strong_connectivity() {
        assert!(cerny(5).is_strongly_connected());
        assert!(!chain(4).is_strongly_connected());
        assert!(chain(1).is_strongly_connected());
    }

    #[test]
    fn quotient_trivial_partitions() {
        let c4 = cerny(4);
        assert_eq!(c4.quotient(&Congruence::identity(4)).unwrap(), c4);
        let one = c4.quotient(&Congruence::universal(4)).unwrap();
        assert_eq!(one.n(), 1);
    }

    #[test]
    fn quotient_rejects_non_congruence() {
        let c4 = cerny(4);
        let pi = Congruence::from_classes(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        // {0,1}·b = {1,2} crosses classes
        assert!(matches!(c4.quotient(&pi), Err(Error::NotCongruence { .. })));
        // even/odd residues are a congruence for b alone
        let b_only = Dfa::new(4, vec!["b"], vec![vec![1, 2, 3, 0]]).unwrap();
        let parity = Congruence::from_classes(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let q = b_only.quotient(&parity).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.row(0).collect::<Vec<_>>(), vec![1, 0]);
    }

    #[test]
    fn subautomaton_examples() {
        let m4 = chain(4);
        let (z, map) = m4.subautomaton(&[0]).unwrap();
        assert_eq!((z.n(), map), (1, vec![0]));
        let c4 = cerny(4);
        assert_eq!(c4.subautomaton(&[0, 1, 2, 3]).unwrap().0, c4);
        assert_eq!(
            c4.subautomaton(&[1, 2]),
            Err(Error::NotClosed { state: 2, letter: 1 })
        );
    }

    #[test]
    fn constructor_validation() {
        assert!(Dfa::new(2, vec!["a"], vec![vec![0, 2]]).is_err());
        assert!(Dfa::new(2, vec!["a", "a"], vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(Dfa::new(2, vec![""], vec![vec![0, 1]]).is_err());
        assert!(Dfa::new(0, Vec::<String>::new(), vec![]).is_err());
    }

    #[test]
    fn word_parsing_round_trip() {
        let c4 = cerny(4);
        let w = c4.parse_word("abba").unwrap();
        assert_eq!(c4.format_word(&w), "abba");
        let r = Dfa::new(2, vec!["a1", "a2"], vec![vec![0, 0], vec![1, 0]]).unwrap();
        let w = r.parse_word("a1 a2,a1").unwrap();
        assert_eq!(w.letters(), &[0, 1, 0]);
        assert_eq!(r.format_word(&w), "a1 a2 a1");
    }
}
