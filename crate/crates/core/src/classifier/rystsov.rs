use std::collections::{BTreeMap, HashSet};

use serde_json::{json, Value};

use crate::automaton::{Dfa, Multigraph, Transformation, Word};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Edges `excl(w) -> dupl(w)` over deficiency-1 words of length at most
/// `n`, each with the first word found for it.
#[derive(Clone, Debug)]
pub struct RystsovGraph {
    pub n: usize,
    pub edges: BTreeMap<(usize, usize), Word>,
}

impl RystsovGraph {
    pub fn graph(&self) -> Multigraph {
        Multigraph::from_edges(self.n, self.edges.keys().copied())
    }

    /// `[{"from", "to", "word": [letter names]}, ...]`.
    pub fn to_json(&self, d: &Dfa) -> Value {
        self.edges
            .iter()
            .map(|(&(from, to), w)| json!({"from": from, "to": to, "word": d.word_names(w)}))
            .collect()
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.graph().is_strongly_connected()
    }

    /// Recomputes every edge from its witness word.
    pub fn edges_rederive(&self, d: &Dfa) -> bool {
        self.edges.iter().all(|(&e, w)| {
            w.len() <= d.n()
                && d.word_transformation(w)
                    .ok()
                    .and_then(|t| excl_dupl(&t))
                    == Some(e)
        })
    }
}

/// `(excl, dupl)` of a deficiency-1 transformation.
pub fn excl_dupl(t: &Transformation) -> Option<(usize, usize)> {
    if t.deficiency() != 1 {
        return None;
    }
    let n = t.degree();
    let mut count = vec![0u8; n];
    for q in t.images() {
        count[q] += 1;
    }
    let excl = count.iter().position(|&c| c == 0)?;
    let dupl = count.iter().position(|&c| c == 2)?;
    Some((excl, dupl))
}

pub fn restricted_rystsov_graph(d: &Dfa) -> Result<RystsovGraph> {
    restricted_rystsov_graph_with(d, &Limits::default())
}

/// Breadth-first census of word-induced transformations up to length `n`,
/// deduplicated by transformation.
pub fn restricted_rystsov_graph_with(d: &Dfa, limits: &Limits) -> Result<RystsovGraph> {
    let n = d.n();
    let letters = d.letter_transformations();
    let id = Transformation::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![(id, Word::empty())];
    let mut edges = BTreeMap::new();
    for _ in 0..n {
        let mut next = Vec::new();
        for (t, w) in &frontier {
            for (a, ta) in letters.iter().enumerate() {
                let u = t.then(ta);
                if seen.contains(&u) {
                    continue;
                }
                if seen.len() >= limits.rystsov_transformations {
                    return Err(Error::CapExceeded {
                        what: "Rystsov graph transformations",
                        cap: limits.rystsov_transformations,
                        got: seen.len() + 1,
                    });
                }
                seen.insert(u.clone());
                let mut v = w.clone();
                v.push(a);
                if let Some(e) = excl_dupl(&u) {
                    edges.entry(e).or_insert_with(|| v.clone());
                }
                next.push((u, v));
            }
        }
        frontier = next;
    }
    Ok(RystsovGraph { n, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cerny, gen_chain};

    #[test]
    fn cerny_cycle_edges() {
        for n in 2..=7 {
            let d = gen_cerny(n).unwrap().dfa;
            let g = restricted_rystsov_graph(&d).unwrap();
            for i in 0..n {
                assert!(g.edges.contains_key(&(i, (i + 1) % n)), "n={n} i={i}");
            }
            assert!(g.is_strongly_connected());
            assert!(g.edges_rederive(&d));
        }
        // excl(ab^i) = i, dupl(ab^i) = i + 1
        let c5 = gen_cerny(5).unwrap().dfa;
        let t = c5.word_transformation(&c5.parse_word("abb").unwrap()).unwrap();
        assert_eq!(excl_dupl(&t), Some((2, 3)));
    }

    #[test]
    fn permutations_give_no_edges() {
        let d = Dfa::new(3, vec!["b"], vec![vec![1, 2, 0]]).unwrap();
        let g = restricted_rystsov_graph(&d).unwrap();
        assert!(g.edges.is_empty());
        assert!(!g.is_strongly_connected());
    }

    #[test]
    fn chain_census() {
        // a: deficiency 1, excl 3, dupl 0; a^2 and beyond have deficiency >= 2
        let d = gen_chain(4).unwrap().dfa;
        let g = restricted_rystsov_graph(&d).unwrap();
        assert_eq!(g.edges.keys().copied().collect::<Vec<_>>(), vec![(3, 0)]);
        assert!(!g.is_strongly_connected());
    }

    #[test]
    fn cap() {
        let d = gen_cerny(6).unwrap().dfa;
        let limits = Limits {
            rystsov_transformations: 10,
            ..Limits::default()
        };
        assert!(restricted_rystsov_graph_with(&d, &limits).unwrap_err().is_cap());
    }
}
