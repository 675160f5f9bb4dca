//! Generators for the explicitly defined extremal families.
//!
//! States are always `0..n`. Families whose states are numbered `1..=n`
//! are shifted down by one; `state_labels` records the original names.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::automaton::{Dfa, Word};
use crate::engine::frobenius_largest_gap;
use crate::error::{Error, Result};

/// A generated automaton with its closed-form reset threshold.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub dfa: Dfa,
    pub family: &'static str,
    pub params: BTreeMap<&'static str, usize>,
    pub expected_rt: Option<usize>,
    /// A reset word of length `expected_rt`, when the family comes with one.
    pub witness: Option<Word>,
    pub warnings: Vec<String>,
    pub state_labels: Vec<String>,
}

impl FamilyInstance {
    fn new(dfa: Dfa, family: &'static str, params: &[(&'static str, usize)]) -> Self {
        let state_labels = (0..dfa.n()).map(|q| q.to_string()).collect();
        FamilyInstance {
            dfa,
            family,
            params: params.iter().copied().collect(),
            expected_rt: None,
            witness: None,
            warnings: Vec::new(),
            state_labels,
        }
    }

    fn one_based(mut self) -> Self {
        self.state_labels = (1..=self.dfa.n()).map(|q| q.to_string()).collect();
        self
    }

    fn expect(mut self, rt: usize) -> Self {
        self.expected_rt = Some(rt);
        self
    }

    /// Sidecar metadata: family, parameters, expected threshold, witness
    /// and the state labelling.
    pub fn metadata(&self) -> Value {
        json!({
            "family": self.family,
            "params": self.params,
            "expected_rt": self.expected_rt,
            "witness": self.witness.as_ref().map(|w| self.dfa.word_names(w)),
            "warnings": self.warnings,
            "state_labels": self.state_labels,
        })
    }
}

/// Family names accepted by [`generate`].
pub const FAMILIES: [&str; 7] = [
    "cerny",
    "dnk",
    "rystsov",
    "v",
    "chain",
    "two_idempotent",
    "elevator",
];

/// Dispatches on a family name; `k` is used only by `dnk`.
pub fn generate(family: &str, n: usize, k: Option<usize>) -> Result<FamilyInstance> {
    match family {
        "cerny" => gen_cerny(n),
        "dnk" => gen_dnk(n, k.ok_or_else(|| Error::input("family dnk needs --k"))?),
        "rystsov" => gen_rystsov(n),
        "v" => gen_v(n),
        "chain" => gen_chain(n),
        "two_idempotent" => gen_two_idempotent(n),
        "elevator" => gen_elevator(n),
        _ => Err(Error::input(format!(
            "unknown family {family:?} (expected one of {})",
            FAMILIES.join(", ")
        ))),
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::domain(msg()))
    }
}

fn indexed_letters(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("a{i}")).collect()
}

/// `C_n`: `0·a = 1`, `a` fixes the rest, `m·b = m + 1 (mod n)`.
pub fn gen_cerny(n: usize) -> Result<FamilyInstance> {
    require(n >= 2, || format!("cerny needs n >= 2, got {n}"))?;
    let a = (0..n).map(|m| if m == 0 { 1 } else { m }).collect();
    let b = (0..n).map(|m| (m + 1) % n).collect();
    let dfa = Dfa::new(n, vec!["a", "b"], vec![a, b])?.with_name(format!("C{n}"));
    let mut inst = FamilyInstance::new(dfa, "cerny", &[("n", n)]).expect((n - 1) * (n - 1));
    // (a b^{n-1})^{n-2} a
    let mut block = Word::new(vec![0]);
    block.extend_from(&Word::power_of(1, n - 1));
    let mut w = block.repeat(n - 2);
    w.push(0);
    inst.witness = Some(w);
    Ok(inst)
}

/// `D_{n,k}`: `b` adds one; `a` adds one except `(k-1)·a = 0` and
/// `(n-1)·a = n - k`. Reset threshold `k(n-2)+2` for coprime `n, k`.
pub fn gen_dnk(n: usize, k: usize) -> Result<FamilyInstance> {
    require(k >= 1 && k < n, || format!("dnk needs 1 <= k < n, got n={n}, k={k}"))?;
    frobenius_largest_gap(n as u64, k as u64)?;
    let a = (0..n)
        .map(|m| {
            if m == k - 1 {
                0
            } else if m == n - 1 {
                n - k
            } else {
                m + 1
            }
        })
        .collect();
    let b = (0..n).map(|m| (m + 1) % n).collect();
    let dfa = Dfa::new(n, vec!["a", "b"], vec![a, b])?.with_name(format!("D{n},{k}"));
    let mut inst = FamilyInstance::new(dfa, "dnk", &[("n", n), ("k", k)]).expect(k * (n - 2) + 2);
    // (a b^{k-1})^{n-2} b a
    let mut block = Word::new(vec![0]);
    block.extend_from(&Word::power_of(1, k - 1));
    let mut w = block.repeat(n - 2);
    w.push(1);
    w.push(0);
    if !inst.dfa.is_reset_word(&w) {
        inst.warnings.push(format!("the word (ab^{})^{}ba does not reset D{n},{k}", k - 1, n - 2));
    }
    inst.witness = Some(w);
    if 2 * k <= n {
        inst.warnings.push(format!(
            "k={k} <= n/2: not one-cluster for a"
        ));
    }
    Ok(inst)
}

/// Transposition of `i - 1` and `i` as a row.
fn swap_row(n: usize, i: usize) -> Vec<usize> {
    (0..n)
        .map(|q| match q {
            _ if q == i - 1 => i,
            _ if q == i => i - 1,
            _ => q,
        })
        .collect()
}

fn one_to_zero_row(n: usize) -> Vec<usize> {
    (0..n).map(|q| if q == 1 { 0 } else { q }).collect()
}

/// `R_n`: `a1` sends 1 to 0; `a_i` (`i >= 2`) swaps `i - 1` and `i`.
pub fn gen_rystsov(n: usize) -> Result<FamilyInstance> {
    require(n >= 2, || format!("rystsov needs n >= 2, got {n}"))?;
    let mut rows = vec![one_to_zero_row(n)];
    rows.extend((2..n).map(|i| swap_row(n, i)));
    let dfa = Dfa::new(n, indexed_letters(n - 1), rows)?.with_name(format!("R{n}"));
    Ok(FamilyInstance::new(dfa, "rystsov", &[("n", n)]).expect(n * (n - 1) / 2))
}

/// `V_n`: `a_n` sends 1 to 0; `a_i` (`i < n`) swaps `i - 1` and `i`.
pub fn gen_v(n: usize) -> Result<FamilyInstance> {
    require(n >= 3, || format!("v needs n >= 3, got {n}"))?;
    let mut rows: Vec<Vec<usize>> = (1..n).map(|i| swap_row(n, i)).collect();
    rows.push(one_to_zero_row(n));
    let dfa = Dfa::new(n, indexed_letters(n), rows)?.with_name(format!("V{n}"));
    Ok(FamilyInstance::new(dfa, "v", &[("n", n)]).expect(n * (n - 1) / 2))
}

/// `M_n`: `i·a = i - 1`, `0·a = 0`.
pub fn gen_chain(n: usize) -> Result<FamilyInstance> {
    require(n >= 1, || "chain needs n >= 1".to_string())?;
    let a = (0..n).map(|i| i.saturating_sub(1)).collect();
    let dfa = Dfa::new(n, vec!["a"], vec![a])?.with_name(format!("M{n}"));
    Ok(FamilyInstance::new(dfa, "chain", &[("n", n)]).expect(n - 1))
}

/// Two idempotent letters on states `1..=n`: `a` moves even `i < n` to
/// `i + 1`, `b` moves odd `i < n` to `i + 1`.
pub fn gen_two_idempotent(n: usize) -> Result<FamilyInstance> {
    require(n >= 2, || format!("two_idempotent needs n >= 2, got {n}"))?;
    let step = |odd: bool| -> Vec<usize> {
        (1..=n)
            .map(|i| if i < n && (i % 2 == 1) == odd { i } else { i - 1 })
            .collect()
    };
    let dfa = Dfa::new(n, vec!["a", "b"], vec![step(false), step(true)])?
        .with_name(format!("I{n}"));
    Ok(FamilyInstance::new(dfa, "two_idempotent", &[("n", n)])
        .one_based()
        .expect(n - 1))
}

/// States `1..=n`; `a_i` sends `i` to `i + 1` and fixes the rest.
pub fn gen_elevator(n: usize) -> Result<FamilyInstance> {
    require(n >= 2, || format!("elevator needs n >= 2, got {n}"))?;
    let rows = (0..n - 1)
        .map(|i| (0..n).map(|q| if q == i { i + 1 } else { q }).collect())
        .collect();
    let dfa = Dfa::new(n, indexed_letters(n - 1), rows)?.with_name(format!("E{n}"));
    Ok(FamilyInstance::new(dfa, "elevator", &[("n", n)])
        .one_based()
        .expect(n - 1))
}
