//! Transition monoids and the monoid-theoretic class predicates.

use std::collections::{HashMap, VecDeque};

use crate::automaton::{Dfa, Transformation, Word};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite monoid of transformations, closed under the generators, with
/// one shortlex-least generator word per element.
#[derive(Clone, Debug)]
pub struct TransitionMonoid {
    degree: usize,
    generators: Vec<Transformation>,
    elements: Vec<Transformation>,
    words: Vec<Word>,
    index: HashMap<Transformation, usize>,
}

impl TransitionMonoid {
    /// Breadth-first closure from the identity. Element 0 is the identity.
    pub fn generate(
        degree: usize,
        generators: Vec<Transformation>,
        cap: usize,
        what: &'static str,
    ) -> Result<Self> {
        let id = Transformation::identity(degree);
        let mut m = TransitionMonoid {
            degree,
            generators,
            elements: vec![id.clone()],
            words: vec![Word::empty()],
            index: HashMap::from([(id, 0)]),
        };
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in 0..m.generators.len() {
                let t = m.elements[i].then(&m.generators[g]);
                if m.index.contains_key(&t) {
                    continue;
                }
                if m.elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        what,
                        cap,
                        got: m.elements.len() + 1,
                    });
                }
                let mut w = m.words[i].clone();
                w.push(g);
                m.index.insert(t.clone(), m.elements.len());
                queue.push_back(m.elements.len());
                m.elements.push(t);
                m.words.push(w);
            }
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    /// The witness word of element `i`, over generator indices.
    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Index of `elements[i] · elements[j]` (apply `i`, then `j`).
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let t = self.elements[i].then(&self.elements[j]);
        self.index_of(&t).expect("monoid is closed")
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.elements[i].is_idempotent())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].then(&g[j]) == g[j].then(&g[i])))
    }
}

/// The transition monoid with the letters as generators.
pub fn transition_monoid(d: &Dfa, cap: usize) -> Result<TransitionMonoid> {
    TransitionMonoid::generate(d.n(), d.letter_transformations(), cap, "transition monoid size")
}

/// An element whose functional graph has a cycle longer than 1.
pub fn aperiodicity_violation(m: &TransitionMonoid) -> Option<usize> {
    (0..m.len()).find(|&i| m.elements[i].cycle_lengths().iter().any(|&l| l > 1))
}

/// An element `t` and state `q` with `q·t² = q != q·t`.
pub fn involution_violation(m: &TransitionMonoid) -> Option<(usize, usize)> {
    (0..m.len()).find_map(|i| {
        let t = &m.elements[i];
        (0..m.degree)
            .find(|&q| t.apply(q) != q && t.apply(t.apply(q)) == q)
            .map(|q| (i, q))
    })
}

pub fn is_aperiodic(d: &Dfa, limits: &Limits) -> Result<bool> {
    Ok(aperiodicity_violation(&transition_monoid(d, limits.monoid_size)?).is_none())
}

pub fn is_involution_free(d: &Dfa, limits: &Limits) -> Result<bool> {
    Ok(involution_violation(&transition_monoid(d, limits.monoid_size)?).is_none())
}

/// Interned principal two-sided ideals: `ideal[i]` is the id of `M x_i M`.
fn principal_ideals(m: &TransitionMonoid) -> Vec<usize> {
    let size = m.len();
    let words = size.div_ceil(64);
    let gens: Vec<usize> = m
        .generators
        .iter()
        .map(|g| m.index_of(g).expect("generator in monoid"))
        .collect();
    let mut interned: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut ideal = Vec::with_capacity(size);
    for x in 0..size {
        let mut bits = vec![0u64; words];
        bits[x / 64] |= 1 << (x % 64);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &g in &gens {
                for z in [m.mul(y, g), m.mul(g, y)] {
                    if bits[z / 64] & (1 << (z % 64)) == 0 {
                        bits[z / 64] |= 1 << (z % 64);
                        stack.push(z);
                    }
                }
            }
        }
        let next = interned.len();
        ideal.push(*interned.entry(bits).or_insert(next));
    }
    ideal
}

/// Elements `(x, y, z)` with `MxM = MyM = MzM = Mx²M` but `MyzM != MxM`.
pub fn ds_violation(m: &TransitionMonoid, cap: usize) -> Result<Option<(usize, usize, usize)>> {
    if m.len() > cap {
        return Err(Error::CapExceeded {
            what: "DS monoid size",
            cap,
            got: m.len(),
        });
    }
    let ideal = principal_ideals(m);
    let classes = ideal.iter().max().map_or(0, |&c| c + 1);
    let mut members = vec![Vec::new(); classes];
    for (x, &c) in ideal.iter().enumerate() {
        members[c].push(x);
    }
    for class in &members {
        let c = ideal[class[0]];
        let Some(&x) = class.iter().find(|&&x| ideal[m.mul(x, x)] == c) else {
            continue;
        };
        for &y in class {
            for &z in class {
                if ideal[m.mul(y, z)] != c {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// The submonoid generated by the idempotents of `m`.
pub fn idempotent_submonoid(m: &TransitionMonoid, cap: usize) -> Result<TransitionMonoid> {
    let gens = m
        .idempotents()
        .into_iter()
        .filter(|&i| !m.elements[i].is_identity())
        .map(|i| m.elements[i].clone())
        .collect();
    TransitionMonoid::generate(m.degree, gens, cap, "idempotent submonoid size")
}

/// A DS violation inside the idempotent-generated submonoid, as
/// transformations.
pub fn eds_violation(
    m: &TransitionMonoid,
    cap: usize,
) -> Result<Option<[Transformation; 3]>> {
    let e = idempotent_submonoid(m, cap)?;
    Ok(ds_violation(&e, cap)?.map(|(x, y, z)| {
        [
            e.elements[x].clone(),
            e.elements[y].clone(),
            e.elements[z].clone(),
        ]
    }))
}
