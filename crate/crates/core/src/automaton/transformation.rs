use std::fmt;

/// A total map `0..n -> 0..n`, the action of some word.
///
/// Composition follows the left-to-right convention of word actions:
/// `t.then(u)` maps `q` to `u(t(q))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Box<[u32]>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u32).collect())
    }

    /// Builds a transformation from its image list; panics on out-of-range
    /// images (callers validate first).
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        assert!(images.iter().all(|&q| q < n), "image out of range");
        Transformation(images.into_iter().map(|q| q as u32).collect())
    }

    pub(crate) fn from_raw(images: Box<[u32]>) -> Self {
        Transformation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, q: usize) -> usize {
        self.0[q] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&q| q as usize)
    }

    pub fn then(&self, next: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&q| next.0[q as usize]).collect())
    }

    /// `t^k`, with `t^0` the identity.
    pub fn pow(&self, k: usize) -> Transformation {
        let mut acc = Transformation::identity(self.degree());
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    /// Image as a sorted list of distinct states.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &q in self.0.iter() {
            seen[q as usize] = true;
        }
        (0..self.degree()).filter(|&q| seen[q]).collect()
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    /// `|Q \ image|`.
    pub fn deficiency(&self) -> usize {
        self.degree() - self.rank()
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.iter().all(|&q| self.0[q as usize] == q)
    }

    pub fn is_permutation(&self) -> bool {
        self.deficiency() == 0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &q)| i == q as usize)
    }

    /// Lengths of the cycles of the functional graph, in order of their
    /// smallest state.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// The cycles of the functional graph, each starting at its smallest
    /// state and listed in order of that state.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let cyclic = self.cyclic_states();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for q in 0..n {
            if !cyclic[q] || done[q] {
                continue;
            }
            let mut cycle = vec![q];
            done[q] = true;
            let mut p = self.apply(q);
            while p != q {
                done[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// `cyclic[q]` iff `q` lies on a cycle of the functional graph.
    pub fn cyclic_states(&self) -> Vec<bool> {
        let n = self.degree();
        // states reachable after n steps are exactly the cyclic ones' orbits
        let mut cyclic = vec![false; n];
        for q in 0..n {
            let mut p = q;
            for _ in 0..n {
                p = self.apply(p);
            }
            cyclic[p] = true;
        }
        // every state of a cycle is hit by some walk of length n from it
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..n {
                if cyclic[q] && !cyclic[self.apply(q)] {
                    cyclic[self.apply(q)] = true;
                    changed = true;
                }
            }
        }
        cyclic
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
