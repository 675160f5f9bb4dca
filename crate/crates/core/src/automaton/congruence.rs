use crate::error::{Error, Result};

/// A partition of `0..n`, stored as a class id per state.
///
/// Class ids are normalized: classes are numbered in order of their
/// smallest member. Whether the partition is compatible with an automaton
/// is checked by [`Dfa::is_congruence`](super::Dfa::is_congruence).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: usize,
}

impl Congruence {
    /// From arbitrary labels; equal labels mean the same class.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        Congruence {
            classes: renumber.len(),
            class_of,
        }
    }

    /// From an explicit list of classes covering `0..n` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &q in class {
                if q >= n {
                    return Err(Error::input(format!("state {q} out of range")));
                }
                if labels[q] != usize::MAX {
                    return Err(Error::input(format!("state {q} appears in two classes")));
                }
                labels[q] = c;
            }
        }
        if let Some(q) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::input(format!("state {q} is in no class")));
        }
        Ok(Congruence::from_labels(&labels))
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
            classes: n,
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence {
            class_of: vec![0; n],
            classes: usize::from(n > 0),
        }
    }

    /// Number of states covered.
    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, q: usize) -> usize {
        self.class_of[q]
    }

    pub fn same_class(&self, p: usize, q: usize) -> bool {
        self.class_of[p] == self.class_of[q]
    }

    /// Smallest member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.classes];
        for (q, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = q;
            }
        }
        reps
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (q, &c) in self.class_of.iter().enumerate() {
            out[c].push(q);
        }
        out
    }
}
