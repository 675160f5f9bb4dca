//! Pseudo-Eulerian weights: positive letter weights summing to 1 such that
//! the weight entering every state is 1.
//!
//! Solved exactly: Gaussian elimination over the rationals, then
//! Fourier–Motzkin elimination for positivity over the free variables.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::limits::Limits;

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn pseudo_eulerian_weights(d: &Dfa) -> Result<Option<Vec<Q>>> {
    pseudo_eulerian_weights_with(d, &Limits::default())
}

/// A positive weight vector, or `None` if the system has no positive
/// solution. The uniform vector is tried first.
pub fn pseudo_eulerian_weights_with(d: &Dfa, limits: &Limits) -> Result<Option<Vec<Q>>> {
    let k = d.k();
    if k > limits.weight_letters {
        return Err(Error::CapExceeded {
            what: "pseudo-Eulerian weight letters",
            cap: limits.weight_letters,
            got: k,
        });
    }
    let rows = system(d);
    let uniform = vec![Q::new(BigInt::one(), BigInt::from(k)); k];
    if satisfies(&rows, &uniform) {
        return Ok(Some(uniform));
    }
    let Some(affine) = solve_affine(rows.clone(), k) else {
        return Ok(None);
    };
    // positivity of every variable, written over the free variables
    let constraints: Vec<Ineq> = affine
        .iter()
        .map(|(c0, coef)| Ineq {
            coef: coef.clone(),
            constant: c0.clone(),
            strict: true,
        })
        .collect();
    let free_count = affine.first().map_or(0, |(_, c)| c.len());
    let Some(point) = fourier_motzkin(constraints, free_count) else {
        return Ok(None);
    };
    let weights: Vec<Q> = affine
        .iter()
        .map(|(c0, coef)| c0 + dot(coef, &point))
        .collect();
    assert!(satisfies(&rows, &weights), "weight solution fails the system");
    assert!(weights.iter().all(|w| w.is_positive()));
    Ok(Some(weights))
}

/// Rows `[c_1 .. c_k | rhs]`: one per state (incoming weight 1) plus the
/// normalisation row.
fn system(d: &Dfa) -> Vec<Vec<Q>> {
    let k = d.k();
    let mut rows = vec![vec![q(0); k + 1]; d.n()];
    for (target, row) in rows.iter_mut().enumerate() {
        for (a, cell) in row.iter_mut().take(k).enumerate() {
            let count = (0..d.n()).filter(|&p| d.next(p, a) == target).count();
            *cell = q(count as i64);
        }
        row[k] = q(1);
    }
    rows.push(vec![q(1); k + 1]);
    rows
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Q::zero(), |s, v| s + v)
}

fn satisfies(rows: &[Vec<Q>], w: &[Q]) -> bool {
    let k = w.len();
    rows.iter().all(|r| dot(&r[..k], w) == r[k])
}

/// Reduced row echelon form. Each variable is returned as
/// `constant + coef · free`, or `None` if the system is inconsistent.
fn solve_affine(mut rows: Vec<Vec<Q>>, k: usize) -> Option<Vec<(Q, Vec<Q>)>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    *x = &*x - &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    let mut out = vec![(q(0), vec![q(0); free.len()]); k];
    for (fi, &c) in free.iter().enumerate() {
        out[c].1[fi] = q(1);
    }
    for (ri, &c) in pivots.iter().enumerate() {
        let coef = free.iter().map(|&f| -rows[ri][f].clone()).collect();
        out[c] = (rows[ri][k].clone(), coef);
    }
    Some(out)
}

/// `coef · t + constant > 0` (or `>= 0` when not strict).
#[derive(Clone, Debug)]
struct Ineq {
    coef: Vec<Q>,
    constant: Q,
    strict: bool,
}

impl Ineq {
    fn holds_at_constant(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }
}

/// Finds a point satisfying every inequality, eliminating the last
/// variable first and substituting back.
fn fourier_motzkin(constraints: Vec<Ineq>, vars: usize) -> Option<Vec<Q>> {
    let mut levels = vec![constraints];
    for j in (0..vars).rev() {
        let cur = levels.last().expect("at least one level");
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cur {
            if c.coef[j].is_positive() {
                lower.push(c);
            } else if c.coef[j].is_negative() {
                upper.push(c);
            } else {
                rest.push(c.clone());
            }
        }
        for l in &lower {
            for u in &upper {
                // scale so the t_j coefficients cancel
                let (lf, uf) = (-u.coef[j].clone(), l.coef[j].clone());
                let coef = (0..vars)
                    .map(|i| &l.coef[i] * &lf + &u.coef[i] * &uf)
                    .collect();
                rest.push(Ineq {
                    coef,
                    constant: &l.constant * &lf + &u.constant * &uf,
                    strict: l.strict || u.strict,
                });
            }
        }
        levels.push(rest);
    }
    if !levels.last().expect("final level").iter().all(Ineq::holds_at_constant) {
        return None;
    }
    let mut point = vec![q(0); vars];
    for j in 0..vars {
        // constraints in t_0..t_j, after t_0..t_{j-1} are fixed
        let level = &levels[vars - 1 - j];
        let mut lo: Option<(Q, bool)> = None;
        let mut hi: Option<(Q, bool)> = None;
        for c in level {
            let a = &c.coef[j];
            if a.is_zero() {
                continue;
            }
            let rest = &c.constant + dot(&c.coef[..j], &point[..j]);
            let bound = -rest / a;
            if a.is_positive() {
                if lo.as_ref().is_none_or(|(b, _)| bound > *b) {
                    lo = Some((bound, c.strict));
                } else if lo.as_ref().is_some_and(|(b, _)| bound == *b) && c.strict {
                    lo = Some((bound, true));
                }
            } else if hi.as_ref().is_none_or(|(b, _)| bound < *b) {
                hi = Some((bound, c.strict));
            } else if hi.as_ref().is_some_and(|(b, _)| bound == *b) && c.strict {
                hi = Some((bound, true));
            }
        }
        point[j] = match (lo, hi) {
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => (l + h) / q(2),
            (Some((l, _)), None) => l + q(1),
            (None, Some((h, _))) => h - q(1),
            (None, None) => q(0),
        };
    }
    Some(point)
}
