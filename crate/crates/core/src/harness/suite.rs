//! Verification campaigns: each case pairs an instance source with a claim
//! and records whether the claim holds exactly as stated.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num::integer::gcd;
use rayon::prelude::*;
use serde::Serialize;

use crate::automaton::{Dfa, StateSet};
use crate::classifier::{self, BoundParams, OrderClass};
use crate::engine::{self, frobenius_largest_gap};
use crate::error::{Error, Result};
use crate::families::{self, FamilyInstance};
use crate::harness::enumerate::{census, EnumerationFilter, ReportKind};
use crate::harness::random;
use crate::limits::Limits;
use crate::monoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Paper,
    Quick,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Suite::Paper),
            "quick" => Ok(Suite::Quick),
            _ => Err(Error::input(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
    /// A cap was hit; the claim was not decided.
    Skip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub source: String,
    pub claim: String,
    pub outcome: Outcome,
    pub detail: String,
    pub runtime_ms: u128,
}

type Check = Box<dyn Fn() -> Result<(bool, String)> + Send + Sync>;

pub struct VerificationCase {
    pub id: String,
    pub source: String,
    pub claim: String,
    check: Check,
}

impl VerificationCase {
    fn new(
        id: impl Into<String>,
        source: impl Into<String>,
        claim: impl Into<String>,
        check: impl Fn() -> Result<(bool, String)> + Send + Sync + 'static,
    ) -> Self {
        VerificationCase {
            id: id.into(),
            source: source.into(),
            claim: claim.into(),
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> CaseResult {
        let start = Instant::now();
        let (outcome, detail) = match (self.check)() {
            Ok((true, d)) => (Outcome::Pass, d),
            Ok((false, d)) => (Outcome::Fail, d),
            Err(e) if e.is_cap() => (Outcome::Skip, e.to_string()),
            Err(e) => (Outcome::Fail, format!("error: {e}")),
        };
        CaseResult {
            id: self.id.clone(),
            source: self.source.clone(),
            claim: self.claim.clone(),
            outcome,
            detail,
            runtime_ms: start.elapsed().as_millis(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| c.outcome == Outcome::Fail).count()
    }

    pub fn to_json_lines(&self) -> String {
        self.cases
            .iter()
            .map(|c| serde_json::to_string(c).expect("case serializes") + "\n")
            .collect()
    }

    pub fn table(&self) -> String {
        let w = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(4);
        let mut out = format!("{:<w$}  {:<7} {:>8}  DETAIL\n", "CASE", "OUTCOME", "MS");
        for c in &self.cases {
            out += &format!("{:<w$}  {:<7} {:>8}  {}\n", c.id, c.outcome.to_string(), c.runtime_ms, c.detail);
        }
        let pass = self.cases.iter().filter(|c| c.outcome == Outcome::Pass).count();
        let skip = self.cases.iter().filter(|c| c.outcome == Outcome::Skip).count();
        out += &format!("{pass} passed, {} failed, {skip} skipped\n", self.failures());
        out
    }
}

/// Worker count from `SYNCHRO_WORKERS`, else the rayon default.
pub fn workers_from_env() -> Option<usize> {
    std::env::var("SYNCHRO_WORKERS").ok()?.parse().ok().filter(|&w| w > 0)
}

pub fn run_suite(suite: Suite, max_n: usize, workers: Option<usize>) -> Result<SuiteReport> {
    let cases = build_cases(suite, max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.or_else(workers_from_env).unwrap_or(0))
        .build()
        .map_err(|e| Error::input(format!("cannot start workers: {e}")))?;
    let results = pool.install(|| cases.par_iter().map(VerificationCase::run).collect());
    Ok(SuiteReport {
        suite,
        max_n,
        cases: results,
    })
}

fn rt(d: &Dfa) -> Result<usize> {
    Ok(engine::exact_reset_threshold(d)?.len())
}

fn expected_rt_case(id: String, inst: impl Fn() -> Result<FamilyInstance> + Send + Sync + 'static) -> VerificationCase {
    VerificationCase::new(id, "family", "exact rt equals the closed form", move || {
        let inst = inst()?;
        let want = inst.expected_rt.expect("family has a closed form");
        let got = rt(&inst.dfa)?;
        let mut ok = got == want;
        let mut detail = format!("rt={got} expected={want}");
        if let Some(w) = &inst.witness {
            let resets = inst.dfa.is_reset_word(w);
            ok &= resets;
            detail += &format!(" witness_resets={resets}");
        }
        Ok((ok, detail))
    })
}

pub fn build_cases(suite: Suite, max_n: usize) -> Vec<VerificationCase> {
    let max_n = match suite {
        Suite::Paper => max_n,
        Suite::Quick => max_n.min(5),
    };
    let (randoms, sync_randoms, idem_randoms) = match suite {
        Suite::Paper => (100, 500, 200),
        Suite::Quick => (10, 20, 10),
    };
    let mut cases = Vec::new();
    let upto = |hi: usize| 2..=hi.min(max_n);

    for n in upto(10) {
        cases.push(expected_rt_case(format!("cerny-rt-{n}"), move || families::gen_cerny(n)));
    }
    for (n, k) in [(5, 3), (7, 4), (8, 5), (9, 5), (10, 7)] {
        if n <= max_n {
            cases.push(expected_rt_case(format!("dnk-rt-{n}-{k}"), move || families::gen_dnk(n, k)));
            cases.push(VerificationCase::new(
                format!("dnk-lower-{n}-{k}"),
                "family",
                "exact rt >= k(n-2)+2",
                move || {
                    let got = rt(&families::gen_dnk(n, k)?.dfa)?;
                    Ok((got >= k * (n - 2) + 2, format!("rt={got}")))
                },
            ));
        }
    }
    if max_n >= 3 {
        cases.push(VerificationCase::new("frobenius-scan", "numbers", "nk-n-k is the largest gap", move || {
            let mut checked = 0;
            for n in 3..=12.min(max_n.max(3)) {
                for k in 2..n {
                    if gcd(n, k) != 1 {
                        continue;
                    }
                    let got = frobenius_largest_gap(n as u64, k as u64)? as usize;
                    let scan = (0..n * k)
                        .filter(|&m| !(0..=m / n).any(|i| (m - i * n) % k == 0))
                        .max()
                        .unwrap_or(0);
                    if got != scan {
                        return Ok((false, format!("({n},{k}): {got} vs scan {scan}")));
                    }
                    checked += 1;
                }
            }
            Ok((true, format!("{checked} pairs")))
        }));
    }
    for n in 3..=7.min(max_n) {
        cases.push(expected_rt_case(format!("rystsov-rt-{n}"), move || families::gen_rystsov(n)));
        cases.push(expected_rt_case(format!("v-rt-{n}"), move || families::gen_v(n)));
    }
    for n in upto(10) {
        cases.push(expected_rt_case(format!("chain-rt-{n}"), move || families::gen_chain(n)));
        cases.push(expected_rt_case(format!("two-idempotent-rt-{n}"), move || families::gen_two_idempotent(n)));
        cases.push(expected_rt_case(format!("elevator-rt-{n}"), move || families::gen_elevator(n)));
    }
    if max_n >= 2 {
        let hi = max_n.min(8);
        cases.push(VerificationCase::new(
            "solver-bounds",
            format!("{sync_randoms} random synchronizing binary DFAs, n <= {hi}"),
            "greedy <= (n^3-n)/6; extension <= 1+alpha n(n-2); every word resets and is >= rt",
            move || solver_bounds(sync_randoms, hi),
        ));
        let hi = max_n.min(10);
        cases.push(VerificationCase::new(
            "a10-solver",
            format!("cerny n=3..{hi} and {idem_randoms} random binary simple-idempotent DFAs"),
            "word resets, length <= (n-1)^2",
            move || a10_cases(idem_randoms, hi),
        ));
        let hi = max_n.min(9);
        cases.push(VerificationCase::new(
            "c7-solver",
            format!("elevator n=2..{hi} and random simple-idempotent DFAs"),
            "length = n-1 = rt",
            move || c7_cases(randoms, hi),
        ));
    }
    if max_n >= 3 {
        let hi = max_n.min(8);
        cases.push(VerificationCase::new(
            "eppstein-solver",
            format!("cerny n=3..{hi}, identity order"),
            "length <= (n-1)^2 and >= rt",
            move || {
                for n in 3..=hi {
                    let d = families::gen_cerny(n)?.dfa;
                    let order: Vec<usize> = (0..n).collect();
                    let r = engine::eppstein_orientable_word(&d, &order)?;
                    let exact = rt(&d)?;
                    if r.len() > (n - 1) * (n - 1) || r.len() < exact {
                        return Ok((false, format!("n={n}: {} vs rt {exact}", r.len())));
                    }
                }
                Ok((true, String::new()))
            },
        ));
        let hi = max_n.min(10);
        cases.push(VerificationCase::new(
            "classifier-truths",
            format!("cerny, rystsov, chain n=3..{hi}"),
            "class ground truths",
            move || classifier_truths(hi),
        ));
        let hi = max_n.min(8);
        cases.push(VerificationCase::new(
            "extension-lengths",
            format!("random Eulerian, one-cluster and completely reachable DFAs, n <= {hi}"),
            "n-1, 2n and 2n-ceil(n/(n-|P|)) extension bounds",
            move || extension_lengths(randoms, hi),
        ));
        cases.push(VerificationCase::new(
            "bound-registry",
            format!("n=2..{}", max_n.min(10)),
            "registry values and dominance of (n-1)^2",
            move || bound_registry(max_n.min(10)),
        ));
    }
    if suite == Suite::Paper && max_n >= 5 {
        cases.push(VerificationCase::new(
            "eulerian-census-5",
            "all binary Eulerian synchronizing DFAs with 5 states, up to isomorphism",
            "max rt = 10 with one attaining class",
            || {
                let f = EnumerationFilter::new(2, 5).with_flags("eulerian,synchronizing")?;
                let (c, _) = census(&f, ReportKind::MaxRt, None, None)?;
                let max = c.max_rt();
                Ok((
                    max == Some(10) && c.attainers.len() == 1,
                    format!("classes={} max_rt={max:?} attainers={}", c.count, c.attainers.len()),
                ))
            },
        ));
    }
    cases
}

fn solver_bounds(count: usize, hi: usize) -> Result<(bool, String)> {
    for seed in 0..count as u64 {
        let n = 2 + (seed as usize % (hi - 1));
        let d = random::random_synchronizing(n, 2, seed)?;
        let exact = rt(&d)?;
        let g = engine::greedy_compression_word(&d)?;
        if g.len() > (n * n * n - n) / 6 || g.len() < exact {
            return Ok((false, format!("seed {seed}: greedy {} rt {exact}", g.len())));
        }
        match engine::extensibility_profile(&d) {
            Ok(p) => {
                let e = engine::reset_word_via_extension(&d)?;
                if n > 2 && e.len() > p.reset_bound() || e.len() < exact {
                    return Ok((false, format!("seed {seed}: extension {} bound {}", e.len(), p.reset_bound())));
                }
            }
            Err(Error::NotExtensible { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((true, format!("{count} instances")))
}

fn a10_cases(count: usize, hi: usize) -> Result<(bool, String)> {
    let mut instances: Vec<Dfa> = (3..=hi).map(|n| families::gen_cerny(n).map(|f| f.dfa)).collect::<Result<_>>()?;
    for seed in 0..count as u64 {
        instances.push(random::random_binary_simple_idempotent(2 + seed as usize % (hi - 1), seed)?);
    }
    for d in &instances {
        let n = d.n();
        let r = engine::a10_binary_idempotent_word(d)?;
        if !d.is_reset_word(&r.word) || r.len() > (n - 1) * (n - 1) {
            return Ok((false, format!("n={n}: length {}", r.len())));
        }
    }
    Ok((true, format!("{} instances", instances.len())))
}

fn c7_cases(count: usize, hi: usize) -> Result<(bool, String)> {
    let mut instances: Vec<Dfa> = (2..=hi).map(|n| families::gen_elevator(n).map(|f| f.dfa)).collect::<Result<_>>()?;
    for seed in 0..count as u64 {
        let n = 2 + seed as usize % (hi - 1);
        instances.push(random::random_simple_idempotents(n, n, seed)?);
    }
    for d in &instances {
        let n = d.n();
        let r = engine::c7_height_word(d)?;
        let exact = rt(d)?;
        if r.len() != n - 1 || exact != n - 1 {
            return Ok((false, format!("n={n}: c7 {} rt {exact}", r.len())));
        }
    }
    Ok((true, format!("{} instances", instances.len())))
}

fn classifier_truths(hi: usize) -> Result<(bool, String)> {
    let limits = Limits::default();
    for n in 3..=hi {
        let c = families::gen_cerny(n)?.dfa;
        let id: Vec<usize> = (0..n).collect();
        let ok = classifier::is_circular(&c) == Some(1)
            && classifier::one_cluster_letters(&c).contains(&(1, n))
            && classifier::two_junction_violation(&c).is_none()
            && classifier::d6_violation(&c).is_none()
            && classifier::completely_reachable_violation(&c)?.is_none()
            && classifier::restricted_rystsov_graph(&c)?.is_strongly_connected()
            && classifier::order_violation(&c, OrderClass::Orientable, &id)?.is_none();
        if !ok {
            return Ok((false, format!("C_{n}")));
        }
        if n <= 7 {
            let r = families::gen_rystsov(n)?.dfa;
            let m = monoid::transition_monoid(&r, limits.monoid_size)?;
            if classifier::has_zero(&r).is_none() || monoid::eds_violation(&m, limits.ds_size)?.is_some() {
                return Ok((false, format!("R_{n}")));
            }
        }
        let m = families::gen_chain(n)?.dfa;
        let mm = monoid::transition_monoid(&m, limits.monoid_size)?;
        if classifier::order_violation(&m, OrderClass::Monotonic, &id)?.is_some()
            || monoid::aperiodicity_violation(&mm).is_some()
            || monoid::ds_violation(&mm, limits.ds_size)?.is_some()
        {
            return Ok((false, format!("M_{n}")));
        }
    }
    let c4 = families::gen_cerny(4)?.dfa;
    let m = monoid::transition_monoid(&c4, limits.monoid_size)?;
    let ok = !classifier::is_eulerian(&c4)
        && monoid::aperiodicity_violation(&m).is_some()
        && monoid::involution_violation(&m).is_some()
        && classifier::pseudo_eulerian_weights(&c4)?.is_none();
    Ok((ok, if ok { String::new() } else { "C_4".into() }))
}

fn max_extension_by_p(d: &Dfa, bound: impl Fn(StateSet) -> usize) -> Result<Option<(StateSet, usize)>> {
    let p = engine::extensibility_profile(d)?;
    Ok(p.lengths().iter().find(|&&(s, l)| l > bound(s)).copied())
}

fn extension_lengths(count: usize, hi: usize) -> Result<(bool, String)> {
    let mut checked = 0;
    for seed in 0..count as u64 {
        let n = 3 + seed as usize % (hi - 2);
        let e = random::random_eulerian(n, 2, seed)?;
        if let Some((p, l)) = max_extension_by_p(&e, |_| n - 1)? {
            return Ok((false, format!("Eulerian seed {seed}: {p} needs {l}")));
        }
        let d = random::random_synchronizing(n, 2, seed)?;
        if matches!(engine::extensibility_profile(&d), Err(Error::NotExtensible { .. })) {
            continue;
        }
        if !classifier::one_cluster_letters(&d).is_empty() {
            if let Some((p, l)) = max_extension_by_p(&d, |_| 2 * n)? {
                return Ok((false, format!("one-cluster seed {seed}: {p} needs {l}")));
            }
        }
        if classifier::completely_reachable_violation(&d)?.is_none() {
            let bound = |p: StateSet| 2 * n - n.div_ceil(n - p.len());
            if let Some((p, l)) = max_extension_by_p(&d, bound)? {
                return Ok((false, format!("completely reachable seed {seed}: {p} needs {l}")));
            }
        }
        checked += 1;
    }
    Ok((true, format!("{checked} seeds")))
}

fn bound_registry(hi: usize) -> Result<(bool, String)> {
    use num::{BigInt, BigRational};
    let p = BoundParams { d: Some(0), k: Some(2) };
    let exact = |id: &str, n: usize| -> Result<BigRational> {
        match classifier::bound_for_class(id, n, &p)?.value {
            classifier::BoundValue::Exact(q) => Ok(q),
            classifier::BoundValue::Real(_) => Err(Error::domain("expected a rational bound")),
        }
    };
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut ok = exact("pin_frankl", 10)? == int(165) && exact("kari_eulerian", 5)? == int(13);
    let szykula = BigRational::new(BigInt::from(85059 * 1000 + 90024 * 100 + 196504 * 10 - 10648), BigInt::from(511104));
    ok &= exact("szykula", 10)? == szykula;
    let mut below = Vec::new();
    for &id in classifier::BOUND_IDS {
        for n in 2..=hi {
            let Ok(b) = classifier::bound_for_class(id, n, &p) else {
                continue;
            };
            if !b.value.at_least(&int(((n - 1) * (n - 1)) as i64)) {
                if !classifier::below_cerny(id) {
                    ok = false;
                }
                below.push(format!("{id}@{n}"));
            }
        }
    }
    below.dedup_by(|a, b| a.split('@').next() == b.split('@').next());
    Ok((ok, format!("below (n-1)^2: {}", below.join(" "))))
}
