//! Exhaustive enumeration of small automata up to isomorphism.
//!
//! Tables are visited in odometer order over the flat letter-major table
//! `delta[a * n + q]`; a table is emitted only if it is the lexicographically
//! least among all its relabelings by state and letter permutations. The
//! space is split into shards by the image of state 0 under the first
//! letter; finished shards are recorded in a checkpoint file.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::automaton::Dfa;
use crate::engine::{exact_reset_threshold, is_synchronizing};
use crate::error::{Error, Result};
use crate::harness::random::letter_names;
use crate::monoid;

/// Default cap on the number of tables visited.
pub const TABLE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationFilter {
    pub letters: usize,
    pub states: usize,
    #[serde(default)]
    pub eulerian: bool,
    #[serde(default)]
    pub strongly_connected: bool,
    #[serde(default)]
    pub synchronizing: bool,
    #[serde(default)]
    pub aperiodic: bool,
}

impl EnumerationFilter {
    pub fn new(letters: usize, states: usize) -> Self {
        EnumerationFilter {
            letters,
            states,
            ..Default::default()
        }
    }

    /// Applies a comma-separated list such as `eulerian,synchronizing`.
    pub fn with_flags(mut self, flags: &str) -> Result<Self> {
        for f in flags.split(',').map(str::trim).filter(|f| !f.is_empty() && *f != "none") {
            match f {
                "eulerian" => self.eulerian = true,
                "strongly_connected" | "strongly-connected" | "sc" => self.strongly_connected = true,
                "synchronizing" | "sync" => self.synchronizing = true,
                "aperiodic" => self.aperiodic = true,
                other => return Err(Error::input(format!("unknown filter {other:?}"))),
            }
        }
        Ok(self)
    }

    fn table_count(&self) -> u64 {
        (self.states as u64).saturating_pow((self.states * self.letters) as u32)
    }

    fn accepts(&self, d: &Dfa) -> bool {
        if self.eulerian && !d.underlying_graph().is_weakly_connected() {
            return false;
        }
        if self.strongly_connected && !d.is_strongly_connected() {
            return false;
        }
        if self.synchronizing && !is_synchronizing(d) {
            return false;
        }
        if self.aperiodic {
            match monoid::transition_monoid(d, 1_000_000) {
                Ok(m) => monoid::aperiodicity_violation(&m).is_none(),
                Err(_) => false,
            }
        } else {
            true
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    Count,
    MaxRt,
}

impl FromStr for ReportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(ReportKind::Count),
            "max-rt" | "max_rt" => Ok(ReportKind::MaxRt),
            _ => Err(Error::input(format!("unknown report {s:?}"))),
        }
    }
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportKind::Count => "count",
            ReportKind::MaxRt => "max-rt",
        })
    }
}

/// Per-shard (and merged) census result.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    /// Isomorphism classes passing the filter.
    pub count: u64,
    /// Tables visited, canonical or not.
    pub visited: u64,
    /// Reset threshold histogram over synchronizing classes (max-rt only).
    pub rt_histogram: BTreeMap<usize, u64>,
    /// Canonical tables attaining the largest reset threshold.
    pub attainers: Vec<Vec<usize>>,
}

impl Census {
    pub fn max_rt(&self) -> Option<usize> {
        self.rt_histogram.keys().next_back().copied()
    }

    fn record_rt(&mut self, rt: usize, table: &[usize]) {
        match self.max_rt() {
            Some(m) if rt < m => {}
            Some(m) if rt == m => self.attainers.push(table.to_vec()),
            _ => self.attainers = vec![table.to_vec()],
        }
        *self.rt_histogram.entry(rt).or_default() += 1;
    }

    fn merge(&mut self, other: &Census) {
        self.count += other.count;
        self.visited += other.visited;
        let before = self.max_rt();
        for (&rt, &c) in &other.rt_histogram {
            *self.rt_histogram.entry(rt).or_default() += c;
        }
        match (before, other.max_rt()) {
            (_, None) => {}
            (Some(a), Some(b)) if a > b => {}
            (Some(a), Some(b)) if a == b => self.attainers.extend(other.attainers.iter().cloned()),
            _ => self.attainers = other.attainers.clone(),
        }
        self.attainers.sort();
    }
}

/// Checkpoint file contents: finished shards by index.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Checkpoint {
    pub filter: EnumerationFilter,
    pub report: Option<ReportKind>,
    pub shards: BTreeMap<usize, Census>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(&mut p, n, &mut out);
    out.sort();
    out
}

fn heap(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(p, k - 1, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

/// Relabelings of an `n`-state, `k`-letter table.
pub struct Relabeler {
    n: usize,
    k: usize,
    // (state perm, its inverse)
    states: Vec<(Vec<usize>, Vec<usize>)>,
    // inverse letter perms
    letters: Vec<Vec<usize>>,
}

impl Relabeler {
    pub fn new(n: usize, k: usize) -> Self {
        let inv = |p: &Vec<usize>| {
            let mut q = vec![0; p.len()];
            for (i, &v) in p.iter().enumerate() {
                q[v] = i;
            }
            q
        };
        Relabeler {
            n,
            k,
            states: permutations(n).into_iter().map(|p| { let i = inv(&p); (p, i) }).collect(),
            letters: permutations(k).iter().map(inv).collect(),
        }
    }

    /// True if no relabeling of `t` is lexicographically smaller.
    pub fn is_canonical(&self, t: &[usize]) -> bool {
        let n = self.n;
        for (pi, pi_inv) in &self.states {
            for sigma_inv in &self.letters {
                // t'[b][p] = pi(t[sigma^-1(b)][pi^-1(p)])
                let mut smaller = false;
                'cmp: for b in 0..self.k {
                    let src = sigma_inv[b] * n;
                    for p in 0..n {
                        let v = pi[t[src + pi_inv[p]]];
                        let w = t[b * n + p];
                        if v != w {
                            smaller = v < w;
                            break 'cmp;
                        }
                    }
                }
                if smaller {
                    return false;
                }
            }
        }
        true
    }

    /// The lexicographically least relabeling.
    pub fn canonical_form(&self, t: &[usize]) -> Vec<usize> {
        let n = self.n;
        let mut best = t.to_vec();
        let mut cand = vec![0; t.len()];
        for (pi, pi_inv) in &self.states {
            for sigma_inv in &self.letters {
                for b in 0..self.k {
                    for p in 0..n {
                        cand[b * n + p] = pi[t[sigma_inv[b] * n + pi_inv[p]]];
                    }
                }
                if cand < best {
                    best.clone_from(&cand);
                }
            }
        }
        best
    }
}

pub fn table_to_dfa(n: usize, k: usize, t: &[usize]) -> Dfa {
    Dfa::new(n, letter_names(k), t.chunks(n).map(<[usize]>::to_vec).collect())
        .expect("table entries are states")
}

/// Enumerates shard `s` (tables with `t[0] = s`), calling `emit` on every
/// canonical table that passes the Eulerian in-degree pruning.
fn walk_shard(
    f: &EnumerationFilter,
    relabel: &Relabeler,
    shard: usize,
    visited: &mut u64,
    emit: &mut dyn FnMut(&[usize]),
) {
    let (n, k) = (f.states, f.letters);
    let len = n * k;
    let mut t = vec![0usize; len];
    let mut indeg = vec![0usize; n];
    t[0] = shard;
    indeg[shard] += 1;
    if f.eulerian && indeg[shard] > k {
        return;
    }
    fn rec(
        i: usize,
        t: &mut Vec<usize>,
        indeg: &mut Vec<usize>,
        f: &EnumerationFilter,
        relabel: &Relabeler,
        visited: &mut u64,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        let (n, k) = (f.states, f.letters);
        if i == t.len() {
            *visited += 1;
            if relabel.is_canonical(t) {
                emit(t);
            }
            return;
        }
        for v in 0..n {
            if f.eulerian && indeg[v] == k {
                continue;
            }
            t[i] = v;
            indeg[v] += 1;
            rec(i + 1, t, indeg, f, relabel, visited, emit);
            indeg[v] -= 1;
        }
    }
    if len == 1 {
        *visited += 1;
        if relabel.is_canonical(&t) {
            emit(&t);
        }
        return;
    }
    rec(1, &mut t, &mut indeg, f, relabel, visited, emit);
}

/// Every canonical table passing `filter`, in odometer order.
pub fn enumerate_automata(filter: &EnumerationFilter) -> Result<Vec<Dfa>> {
    check_budget(filter, TABLE_BUDGET)?;
    let relabel = Relabeler::new(filter.states, filter.letters);
    let mut out = Vec::new();
    let mut visited = 0;
    for s in 0..filter.states {
        walk_shard(filter, &relabel, s, &mut visited, &mut |t| {
            let d = table_to_dfa(filter.states, filter.letters, t);
            if filter.accepts(&d) {
                out.push(d);
            }
        });
    }
    Ok(out)
}

fn check_budget(f: &EnumerationFilter, budget: u64) -> Result<()> {
    if f.states == 0 || f.letters == 0 {
        return Err(Error::input("need at least one state and one letter"));
    }
    if f.states > 8 || f.letters > 3 {
        return Err(Error::CapExceeded {
            what: "enumeration size (states <= 8, letters <= 3)",
            cap: 8,
            got: f.states.max(f.letters),
        });
    }
    let tables = if f.eulerian {
        // multinomial (nk)! / (k!)^n
        let (n, k) = (f.states as u64, f.letters as u64);
        let fact = |m: u64| (1..=m).map(u128::from).product::<u128>();
        (fact(n * k) / fact(k).pow(n as u32)) as u64
    } else {
        f.table_count()
    };
    if tables > budget {
        return Err(Error::CapExceeded {
            what: "enumeration tables",
            cap: budget as usize,
            got: tables.min(usize::MAX as u64) as usize,
        });
    }
    Ok(())
}

fn run_shard(f: &EnumerationFilter, report: ReportKind, relabel: &Relabeler, shard: usize) -> Census {
    let mut c = Census::default();
    let mut visited = 0;
    walk_shard(f, relabel, shard, &mut visited, &mut |t| {
        let d = table_to_dfa(f.states, f.letters, t);
        if !f.accepts(&d) {
            return;
        }
        c.count += 1;
        if report == ReportKind::MaxRt && (f.synchronizing || is_synchronizing(&d)) {
            let rt = exact_reset_threshold(&d).expect("synchronizing, n <= 8").len();
            c.record_rt(rt, t);
        }
    });
    c.visited = visited;
    c
}

/// Full census. With a checkpoint path, finished shards are read from and
/// written to that file, so an interrupted run resumes where it stopped.
/// `stop_after` limits the number of new shards run in this call.
pub fn census(
    filter: &EnumerationFilter,
    report: ReportKind,
    checkpoint: Option<&Path>,
    stop_after: Option<usize>,
) -> Result<(Census, bool)> {
    check_budget(filter, TABLE_BUDGET)?;
    let mut cp = match checkpoint {
        Some(p) if p.exists() => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::parse(p.display().to_string(), e.to_string()))?;
            let cp: Checkpoint = serde_json::from_str(&text)
                .map_err(|e| Error::parse(p.display().to_string(), e.to_string()))?;
            if cp.filter != *filter || cp.report != Some(report) {
                return Err(Error::input("checkpoint belongs to a different enumeration"));
            }
            cp
        }
        _ => Checkpoint {
            filter: *filter,
            report: Some(report),
            shards: BTreeMap::new(),
        },
    };
    let relabel = Relabeler::new(filter.states, filter.letters);
    let pending: Vec<usize> = (0..filter.states)
        .filter(|s| !cp.shards.contains_key(s))
        .take(stop_after.unwrap_or(usize::MAX))
        .collect();
    let done: Vec<(usize, Census)> = pending
        .par_iter()
        .map(|&s| (s, run_shard(filter, report, &relabel, s)))
        .collect();
    cp.shards.extend(done);
    if let Some(p) = checkpoint {
        let text = serde_json::to_string_pretty(&cp).expect("checkpoint serializes");
        std::fs::write(p, text).map_err(|e| Error::input(format!("cannot write {}: {e}", p.display())))?;
    }
    let complete = cp.shards.len() == filter.states;
    let mut total = Census::default();
    for c in cp.shards.values() {
        total.merge(c);
    }
    Ok((total, complete))
}

pub fn census_json(filter: &EnumerationFilter, report: ReportKind, c: &Census, complete: bool) -> Value {
    let mut v = serde_json::json!({
        "filter": filter,
        "report": report.to_string(),
        "complete": complete,
        "count": c.count,
        "tables_visited": c.visited,
    });
    if report == ReportKind::MaxRt {
        v["max_rt"] = serde_json::json!(c.max_rt());
        v["attainers"] = c
            .attainers
            .iter()
            .map(|t| crate::automaton::to_json_value(&table_to_dfa(filter.states, filter.letters, t)))
            .collect();
        v["rt_histogram"] = serde_json::json!(c.rt_histogram);
    }
    v
}
