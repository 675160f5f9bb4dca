//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every expected value that is not a literal from the claim itself is
//! recomputed here by a deliberately naive oracle (subset BFS on raw rows,
//! literal monoid closure, brute-force scans) that shares no code with the
//! library paths under test.
//!
//! Criterion 2 is a known failure: the closed form k(n-2)+2 for D_{n,k}
//! does not match the exact threshold outside k = n-1, and the stated
//! witness word does not reset. The line is printed as FAIL and the process
//! exits 0 unless some other criterion fails.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::integer::gcd;
use num::{BigInt, BigRational, One, Zero};

use synchro_core::classifier::{self, BoundParams, BoundValue, OrderClass};
use synchro_core::engine;
use synchro_core::families;
use synchro_core::harness::enumerate::{census, EnumerationFilter, ReportKind};
use synchro_core::harness::random;
use synchro_core::monoid;
use synchro_core::{Dfa, Limits};

const KNOWN_FAILURES: [u32; 1] = [2];

// ---------------------------------------------------------------- oracles

fn rows(d: &Dfa) -> Vec<Vec<usize>> {
    (0..d.k()).map(|a| d.row(a).collect()).collect()
}

fn image(rows: &[Vec<usize>], set: u64, a: usize) -> u64 {
    let mut out = 0;
    for (q, &t) in rows[a].iter().enumerate() {
        if set >> q & 1 == 1 {
            out |= 1 << t;
        }
    }
    out
}

fn preimage(rows: &[Vec<usize>], set: u64, a: usize) -> u64 {
    let mut out = 0;
    for (q, &t) in rows[a].iter().enumerate() {
        if set >> t & 1 == 1 {
            out |= 1 << q;
        }
    }
    out
}

/// Reset threshold by BFS over images of the full set.
fn oracle_rt(rows: &[Vec<usize>]) -> Option<usize> {
    let n = rows[0].len();
    let full = (1u64 << n) - 1;
    let mut dist = HashMap::from([(full, 0usize)]);
    let mut queue = VecDeque::from([full]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        if s.count_ones() == 1 {
            return Some(d);
        }
        for a in 0..rows.len() {
            let t = image(rows, s, a);
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(t) {
                e.insert(d + 1);
                queue.push_back(t);
            }
        }
    }
    None
}

fn resets(rows: &[Vec<usize>], w: &[usize]) -> bool {
    let n = rows[0].len();
    let ends: HashSet<usize> = (0..n).map(|q| w.iter().fold(q, |q, &a| rows[a][q])).collect();
    ends.len() == 1
}

/// Shortest `v` with `|P v^-1| > |P|`, by BFS over preimages.
fn oracle_extension(rows: &[Vec<usize>], p: u64) -> Option<usize> {
    let size = p.count_ones();
    let mut seen = HashSet::from([p]);
    let mut frontier = vec![p];
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for a in 0..rows.len() {
                let t = preimage(rows, s, a);
                if t.count_ones() > size {
                    return Some(len);
                }
                if seen.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    None
}

/// Every proper non-singleton subset with its shortest extension length.
fn oracle_profile(rows: &[Vec<usize>]) -> Option<Vec<(u64, usize)>> {
    let n = rows[0].len();
    let full = (1u64 << n) - 1;
    (1..full)
        .filter(|p: &u64| p.count_ones() >= 2)
        .map(|p| oracle_extension(rows, p).map(|l| (p, l)))
        .collect()
}

fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().map(|&q| y[q]).collect()
}

/// The transition monoid as a set of image vectors.
fn oracle_monoid(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rows[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for r in rows {
            let t = compose(&out[i], r);
            if seen.insert(t.clone()) {
                out.push(t);
            }
        }
        i += 1;
    }
    out
}

/// DS by the literal ideal implication over all triples.
fn oracle_ds(m: &[Vec<usize>]) -> bool {
    let index: HashMap<&Vec<usize>, usize> = m.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let ideal = |x: &Vec<usize>| -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for a in m {
            let ax = compose(a, x);
            for b in m {
                s.insert(index[&compose(&ax, b)]);
            }
        }
        s
    };
    let ideals: Vec<BTreeSet<usize>> = m.iter().map(ideal).collect();
    for (x, ix) in m.iter().zip(&ideals) {
        if ideals[index[&compose(x, x)]] != *ix {
            continue;
        }
        for (y, iy) in m.iter().zip(&ideals) {
            if iy != ix {
                continue;
            }
            for (z, iz) in m.iter().zip(&ideals) {
                if iz == ix && ideals[index[&compose(y, z)]] != *ix {
                    return false;
                }
            }
        }
    }
    true
}

fn oracle_aperiodic(m: &[Vec<usize>]) -> bool {
    m.iter().all(|t| {
        let mut p = t.clone();
        for _ in 0..m.len() {
            p = compose(&p, t);
        }
        compose(&p, t) == p
    })
}

fn oracle_involution_free(m: &[Vec<usize>]) -> bool {
    m.iter().all(|t| (0..t.len()).all(|q| t[t[q]] != q || t[q] == q))
}

/// Binary pseudo-Eulerian feasibility: `c_a w + c_b (1 - w) = 1` at every
/// state for some `0 < w < 1`.
fn oracle_pseudo_eulerian_binary(rows: &[Vec<usize>]) -> bool {
    let n = rows[0].len();
    let mut fixed: Option<BigRational> = None;
    let mut free = true;
    for q in 0..n {
        let ca = rows[0].iter().filter(|&&t| t == q).count() as i64;
        let cb = rows[1].iter().filter(|&&t| t == q).count() as i64;
        if ca == cb {
            if ca != 1 {
                return false;
            }
            continue;
        }
        let w = BigRational::new(BigInt::from(1 - cb), BigInt::from(ca - cb));
        if w <= BigRational::zero() || w >= BigRational::one() {
            return false;
        }
        if fixed.as_ref().is_some_and(|f| *f != w) {
            return false;
        }
        fixed = Some(w);
        free = false;
    }
    free || fixed.is_some()
}

fn in_degrees(rows: &[Vec<usize>]) -> Vec<usize> {
    let mut deg = vec![0; rows[0].len()];
    for r in rows {
        for &t in r {
            deg[t] += 1;
        }
    }
    deg
}

/// A cyclic arc of `0..n` in the natural order, or the full set.
fn is_arc(set: u64, n: usize) -> bool {
    let full = (1u64 << n) - 1;
    if set == 0 || set == full {
        return set == full;
    }
    let starts = (0..n).filter(|&q| set >> q & 1 == 1 && set >> ((q + n - 1) % n) & 1 == 0).count();
    starts == 1
}

fn one_cycle(r: &[usize]) -> bool {
    let n = r.len();
    let mut q = 0;
    for step in 1..=n {
        q = r[q];
        if q == 0 {
            return step == n;
        }
    }
    false
}

/// Lex-least table over state and letter relabelings.
fn oracle_canonical(rows: &[Vec<usize>]) -> Vec<usize> {
    let n = rows[0].len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    let letter_orders: Vec<Vec<usize>> = if rows.len() == 2 { vec![vec![0, 1], vec![1, 0]] } else { vec![(0..rows.len()).collect()] };
    loop {
        let mut inv = vec![0; n];
        for (q, &p) in perm.iter().enumerate() {
            inv[p] = q;
        }
        for order in &letter_orders {
            let mut t = Vec::with_capacity(n * rows.len());
            for &a in order {
                for q in 0..n {
                    t.push(perm[rows[a][inv[q]]]);
                }
            }
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap()
}

// ---------------------------------------------------------------- criteria

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);
type FamilyGen = fn(usize) -> synchro_core::Result<families::FamilyInstance>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn c1() -> Outcome {
    let start = Instant::now();
    for n in 2..=10 {
        let inst = families::gen_cerny(n).map_err(|e| e.to_string())?;
        let r = rows(&inst.dfa);
        let want = (n - 1) * (n - 1);
        let rt = engine::exact_reset_threshold(&inst.dfa).map_err(|e| e.to_string())?;
        ensure(rt.len() == want && oracle_rt(&r) == Some(want), || format!("n={n}: rt {}", rt.len()))?;
        ensure(resets(&r, &rt.word), || format!("n={n}: bfs word"))?;
        let w = inst.witness.as_ref().ok_or("no witness")?;
        ensure(w.len() == want, || format!("n={n}: witness length {}", w.len()))?;
        // (a b^{n-1})^{n-2} a
        let mut stated = Vec::new();
        for _ in 0..n - 2 {
            stated.push(0);
            stated.extend(std::iter::repeat_n(1, n - 1));
        }
        stated.push(0);
        ensure(stated.len() == want && resets(&r, &stated), || format!("n={n}: stated word"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok("n=2..10".into())
}

fn c2() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (n, k) in [(5, 3), (7, 4), (8, 5), (9, 5), (10, 7)] {
        let inst = families::gen_dnk(n, k).map_err(|e| e.to_string())?;
        let r = rows(&inst.dfa);
        let formula = k * (n - 2) + 2;
        let rt = engine::exact_reset_threshold(&inst.dfa).map_err(|e| e.to_string())?.len();
        ensure(oracle_rt(&r) == Some(rt), || format!("D{n},{k}: engine and oracle disagree"))?;
        // (a b^{k-1})^{n-2} b a
        let mut w = Vec::new();
        for _ in 0..n - 2 {
            w.push(0);
            w.extend(std::iter::repeat_n(1, k - 1));
        }
        w.extend([1, 0]);
        let ok = resets(&r, &w);
        if rt != formula || !ok {
            bad.push(format!("D{n},{k}: rt={rt} formula={formula} word_resets={ok}"));
        }
    }
    within(start, Duration::from_secs(30))?;
    if bad.is_empty() {
        Ok("all five".into())
    } else {
        Err(bad.join("; "))
    }
}

fn c3() -> Outcome {
    let mut pairs = 0;
    for n in 3..=12u64 {
        for k in 2..n {
            if gcd(n, k) != 1 {
                continue;
            }
            let representable = |m: u64| (0..=m / n).any(|i| (m - i * n).is_multiple_of(k));
            let scan = (0..n * k).rev().find(|&m| !representable(m)).unwrap();
            let got = engine::frobenius_largest_gap(n, k).map_err(|e| e.to_string())?;
            ensure(got == scan as i64, || format!("({n},{k}): {got} vs {scan}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} coprime pairs"))
}

fn c4() -> Outcome {
    let start = Instant::now();
    for n in 3..=7 {
        for (name, inst) in [("R", families::gen_rystsov(n)), ("V", families::gen_v(n))] {
            let d = inst.map_err(|e| e.to_string())?.dfa;
            let want = n * (n - 1) / 2;
            let rt = engine::exact_reset_threshold(&d).map_err(|e| e.to_string())?.len();
            ensure(rt == want && oracle_rt(&rows(&d)) == Some(want), || format!("{name}{n}: rt {rt}"))?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok("n=3..7".into())
}

fn c5() -> Outcome {
    for n in 2..=10 {
        for (name, inst) in [
            ("chain", families::gen_chain(n)),
            ("two_idempotent", families::gen_two_idempotent(n)),
            ("elevator", families::gen_elevator(n)),
        ] {
            let d = inst.map_err(|e| e.to_string())?.dfa;
            let rt = engine::exact_reset_threshold(&d).map_err(|e| e.to_string())?.len();
            ensure(rt == n - 1 && oracle_rt(&rows(&d)) == Some(n - 1), || format!("{name} n={n}: rt {rt}"))?;
        }
    }
    Ok("n=2..10".into())
}

fn c6() -> Outcome {
    let start = Instant::now();
    let mut profiled = 0;
    for seed in 0..500u64 {
        let n = 2 + (seed % 7) as usize;
        let d = random::random_synchronizing(n, 2, seed).map_err(|e| e.to_string())?;
        let r = rows(&d);
        let rt = oracle_rt(&r).ok_or("sampler returned a non-synchronizing automaton")?;
        let g = engine::greedy_compression_word(&d).map_err(|e| e.to_string())?;
        ensure(resets(&r, &g.word) && g.len() >= rt && g.len() <= (n * n * n - n) / 6, || {
            format!("seed {seed}: greedy {} rt {rt}", g.len())
        })?;
        let b = engine::exact_reset_threshold(&d).map_err(|e| e.to_string())?;
        ensure(b.len() == rt && resets(&r, &b.word), || format!("seed {seed}: bfs"))?;
        match (engine::extensibility_profile(&d), oracle_profile(&r)) {
            (Ok(p), Some(o)) => {
                let max = o.iter().map(|&(_, l)| l).max().unwrap_or(0);
                ensure(p.max_length() == max, || format!("seed {seed}: profile max {} vs {max}", p.max_length()))?;
                let e = engine::reset_word_via_extension(&d).map_err(|e| e.to_string())?;
                // alpha n = max, so 1 + alpha n (n-2) = 1 + max (n-2)
                let bound = 1 + max * n.saturating_sub(2);
                ensure(resets(&r, &e.word) && e.len() >= rt && (n <= 2 || e.len() <= bound), || {
                    format!("seed {seed}: extension {} bound {bound}", e.len())
                })?;
                profiled += 1;
            }
            (Err(_), None) => {}
            (p, o) => return Err(format!("seed {seed}: profile {:?} vs oracle {}", p.is_ok(), o.is_some())),
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("500 instances, {profiled} extensible"))
}

fn a10_check(d: &Dfa) -> Result<(), String> {
    let n = d.n();
    let res = catch_unwind(AssertUnwindSafe(|| engine::a10_binary_idempotent_word(d)))
        .map_err(|_| format!("n={n}: solver assertion fired"))?
        .map_err(|e| e.to_string())?;
    ensure(resets(&rows(d), &res.word) && res.len() <= (n - 1) * (n - 1), || {
        format!("n={n}: length {}", res.len())
    })
}

fn c7() -> Outcome {
    for n in 3..=10 {
        a10_check(&families::gen_cerny(n).map_err(|e| e.to_string())?.dfa)?;
    }
    for seed in 0..200u64 {
        let n = 2 + (seed % 9) as usize;
        let d = random::random_binary_simple_idempotent(n, seed).map_err(|e| e.to_string())?;
        ensure(oracle_rt(&rows(&d)).is_some(), || format!("seed {seed}: not synchronizing"))?;
        a10_check(&d)?;
    }
    Ok("cerny n=3..10 and 200 random".into())
}

fn c8() -> Outcome {
    let mut instances = Vec::new();
    for n in 2..=9 {
        instances.push(families::gen_elevator(n).map_err(|e| e.to_string())?.dfa);
    }
    for seed in 0..60u64 {
        let n = 2 + (seed % 8) as usize;
        let k = if seed % 2 == 0 { n } else { n - 1 };
        instances.push(random::random_simple_idempotents(n, k.max(1), seed).map_err(|e| e.to_string())?);
    }
    for d in &instances {
        let r = rows(d);
        let n = d.n();
        ensure(r.iter().all(|row| compose(row, row) == *row && row.iter().enumerate().filter(|&(q, &t)| q != t).count() == 1), || {
            "not all letters simple idempotents".into()
        })?;
        let w = engine::c7_height_word(d).map_err(|e| e.to_string())?;
        let rt = oracle_rt(&r);
        ensure(resets(&r, &w.word) && w.len() == n - 1 && rt == Some(n - 1), || {
            format!("n={n}: c7 {} rt {rt:?}", w.len())
        })?;
    }
    Ok(format!("{} instances", instances.len()))
}

fn c9() -> Outcome {
    for n in 3..=8 {
        let d = families::gen_cerny(n).map_err(|e| e.to_string())?.dfa;
        let r = rows(&d);
        let order: Vec<usize> = (0..n).collect();
        let w = engine::eppstein_orientable_word(&d, &order).map_err(|e| e.to_string())?;
        let rt = oracle_rt(&r).unwrap();
        ensure(resets(&r, &w.word) && w.len() <= (n - 1) * (n - 1) && w.len() >= rt, || {
            format!("n={n}: length {} rt {rt}", w.len())
        })?;
        // backward from the target: every suffix preimage is an oriented interval
        let mut set = 1u64 << w.target;
        for &a in w.word.iter().rev() {
            set = preimage(&r, set, a);
            ensure(is_arc(set, n), || format!("n={n}: preimage {set:#b} is not an interval"))?;
        }
        ensure(set == (1u64 << n) - 1, || format!("n={n}: did not reach Q"))?;
    }
    Ok("n=3..8".into())
}

fn c10() -> Outcome {
    let limits = Limits::default();
    for n in 3..=10 {
        let c = families::gen_cerny(n).map_err(|e| e.to_string())?.dfa;
        let r = rows(&c);
        ensure(one_cycle(&r[1]) && classifier::is_circular(&c) == Some(1), || format!("C{n} circular"))?;
        ensure(classifier::one_cluster_letters(&c).contains(&(1, n)), || format!("C{n} one-cluster"))?;
        ensure(classifier::two_junction_violation(&c).is_none(), || format!("C{n} 2-junction"))?;
        ensure(classifier::d6_violation(&c).is_none(), || format!("C{n} D6"))?;
        let cr = classifier::completely_reachable_violation(&c).map_err(|e| e.to_string())?;
        ensure(cr.is_none(), || format!("C{n} completely reachable"))?;
        if n <= 8 {
            // every non-empty subset is an image of Q
            let full = (1u64 << n) - 1;
            let mut seen = HashSet::from([full]);
            let mut stack = vec![full];
            while let Some(s) = stack.pop() {
                for a in 0..2 {
                    let t = image(&r, s, a);
                    if seen.insert(t) {
                        stack.push(t);
                    }
                }
            }
            ensure(seen.len() == full as usize, || format!("C{n}: {} reachable subsets", seen.len()))?;
        }
        let g = classifier::restricted_rystsov_graph(&c).map_err(|e| e.to_string())?;
        ensure(g.is_strongly_connected() && g.edges_rederive(&c), || format!("C{n} Rystsov graph"))?;
        let id: Vec<usize> = (0..n).collect();
        let o = classifier::order_violation(&c, OrderClass::Orientable, &id).map_err(|e| e.to_string())?;
        ensure(o.is_none(), || format!("C{n} orientable"))?;
        // preimages of arcs under either letter are arcs, empty or Q
        for a in 0..2 {
            for p in 0..n {
                for len in 1..n {
                    let arc = (0..len).fold(0u64, |s, i| s | 1 << ((p + i) % n));
                    let pre = preimage(&r, arc, a);
                    ensure(pre == 0 || is_arc(pre, n), || format!("C{n}: letter {a} breaks arc {arc:#b}"))?;
                }
            }
        }
    }
    for n in 3..=7 {
        let d = families::gen_rystsov(n).map_err(|e| e.to_string())?.dfa;
        let r = rows(&d);
        let zero = classifier::has_zero(&d).ok_or(format!("R{n} has no zero"))?;
        ensure(r.iter().all(|row| row[zero] == zero), || format!("R{n}: zero not fixed"))?;
        let m = monoid::transition_monoid(&d, limits.monoid_size).map_err(|e| e.to_string())?;
        ensure(monoid::eds_violation(&m, limits.ds_size).map_err(|e| e.to_string())?.is_none(), || format!("R{n} EDS"))?;
        if n <= 4 {
            let all = oracle_monoid(&r);
            let idem: Vec<Vec<usize>> = all.iter().filter(|t| compose(t, t) == **t && !t.iter().enumerate().all(|(q, &x)| q == x)).cloned().collect();
            let e = if idem.is_empty() { vec![(0..n).collect()] } else { oracle_monoid(&idem) };
            ensure(oracle_ds(&e), || format!("R{n}: oracle says not EDS"))?;
        }
    }
    for n in 3..=10 {
        let d = families::gen_chain(n).map_err(|e| e.to_string())?.dfa;
        let r = rows(&d);
        ensure(r.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1])), || format!("M{n}: rows not monotone"))?;
        let id: Vec<usize> = (0..n).collect();
        let o = classifier::order_violation(&d, OrderClass::Monotonic, &id).map_err(|e| e.to_string())?;
        ensure(o.is_none(), || format!("M{n} monotonic"))?;
        let m = monoid::transition_monoid(&d, limits.monoid_size).map_err(|e| e.to_string())?;
        ensure(monoid::aperiodicity_violation(&m).is_none(), || format!("M{n} aperiodic"))?;
        ensure(monoid::ds_violation(&m, limits.ds_size).map_err(|e| e.to_string())?.is_none(), || format!("M{n} DS"))?;
        if n <= 5 {
            let all = oracle_monoid(&r);
            ensure(all.len() == m.len() && oracle_aperiodic(&all) && oracle_ds(&all), || format!("M{n}: oracle"))?;
        }
    }
    let c4 = families::gen_cerny(4).map_err(|e| e.to_string())?.dfa;
    let r = rows(&c4);
    let all = oracle_monoid(&r);
    ensure(in_degrees(&r) != vec![2; 4] && !classifier::is_eulerian(&c4), || "C4 Eulerian".into())?;
    let m = monoid::transition_monoid(&c4, limits.monoid_size).map_err(|e| e.to_string())?;
    ensure(!oracle_aperiodic(&all) && monoid::aperiodicity_violation(&m).is_some(), || "C4 aperiodic".into())?;
    ensure(!oracle_involution_free(&all) && monoid::involution_violation(&m).is_some(), || "C4 involution-free".into())?;
    let w = classifier::pseudo_eulerian_weights(&c4).map_err(|e| e.to_string())?;
    ensure(!oracle_pseudo_eulerian_binary(&r) && w.is_none(), || "C4 pseudo-Eulerian".into())?;
    Ok("C_n, R_n, M_n, C_4".into())
}

fn c11() -> Outcome {
    let mut counts = [0usize; 3];
    let check = |d: &Dfa, bound: &dyn Fn(u64) -> usize, what: &str| -> Result<(), String> {
        let r = rows(d);
        let o = oracle_profile(&r).ok_or(format!("{what}: some subset does not extend"))?;
        let p = engine::extensibility_profile(d).map_err(|e| e.to_string())?;
        for (s, l) in o {
            ensure(l <= bound(s), || format!("{what} n={}: subset {s:#b} needs {l}", d.n()))?;
            let lib = p.lengths().iter().find(|(q, _)| q.iter().fold(0u64, |m, x| m | 1 << x) == s).map(|&(_, l)| l);
            ensure(lib == Some(l), || format!("{what}: profile disagrees on {s:#b}"))?;
        }
        Ok(())
    };
    for seed in 0..120u64 {
        let n = 3 + (seed % 6) as usize;
        let d = random::random_eulerian(n, 2, seed).map_err(|e| e.to_string())?;
        ensure(in_degrees(&rows(&d)) == vec![2; n], || "sampler not Eulerian".into())?;
        check(&d, &|_| n - 1, "Eulerian")?;
        counts[0] += 1;
    }
    let mut pool: Vec<Dfa> = (3..=8).map(|n| families::gen_cerny(n).unwrap().dfa).collect();
    for seed in 0..400u64 {
        let n = 3 + (seed % 6) as usize;
        pool.push(random::random_synchronizing(n, 2, seed).map_err(|e| e.to_string())?);
    }
    for d in &pool {
        let n = d.n();
        let r = rows(d);
        if oracle_profile(&r).is_none() {
            continue;
        }
        if r.iter().any(|row| {
            // iterating the letter sends every state into one cycle
            let mut p = row.clone();
            for _ in 0..n {
                p = compose(&p, row);
            }
            let cyc: HashSet<usize> = p.iter().copied().collect();
            let q0 = *cyc.iter().next().unwrap();
            let mut len = 1;
            let mut q = row[q0];
            while q != q0 {
                q = row[q];
                len += 1;
            }
            len == cyc.len()
        }) {
            check(d, &|_| 2 * n, "one-cluster")?;
            counts[1] += 1;
        }
        if classifier::completely_reachable_violation(d).map_err(|e| e.to_string())?.is_none() {
            let bound = |s: u64| 2 * n - n.div_ceil(n - s.count_ones() as usize);
            check(d, &bound, "completely reachable")?;
            counts[2] += 1;
        }
    }
    ensure(counts.iter().all(|&c| c > 0), || format!("empty sample {counts:?}"))?;
    Ok(format!("Eulerian {}, one-cluster {}, completely reachable {}", counts[0], counts[1], counts[2]))
}

fn c12() -> Outcome {
    let start = Instant::now();
    let f = EnumerationFilter::new(2, 5).with_flags("eulerian,synchronizing").map_err(|e| e.to_string())?;
    let (c, complete) = census(&f, ReportKind::MaxRt, None, None).map_err(|e| e.to_string())?;
    ensure(complete, || "census incomplete".into())?;

    // every table with in-degree 2 everywhere, over the multiset {0,0,1,1,..,4,4}
    let n = 5;
    let mut classes: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut t = vec![0usize; 2 * n];
    let mut left = vec![2usize; n];
    fn fill(i: usize, t: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut dyn FnMut(&[usize])) {
        if i == t.len() {
            out(t);
            return;
        }
        for q in 0..left.len() {
            if left[q] > 0 {
                left[q] -= 1;
                t[i] = q;
                fill(i + 1, t, left, out);
                left[q] += 1;
            }
        }
    }
    let mut tables = 0;
    fill(0, &mut t, &mut left, &mut |t| {
        tables += 1;
        let r = vec![t[..n].to_vec(), t[n..].to_vec()];
        if let Some(rt) = oracle_rt(&r) {
            classes.entry(oracle_canonical(&r)).or_insert(rt);
        }
    });
    let max = classes.values().copied().max();
    let attainers = classes.values().filter(|&&rt| Some(rt) == max).count();
    ensure(tables == 113_400, || format!("{tables} Eulerian tables"))?;
    ensure(c.count == classes.len() as u64, || format!("census {} classes, oracle {}", c.count, classes.len()))?;
    ensure(c.max_rt() == max && c.attainers.len() == attainers, || {
        format!("census max {:?}/{}, oracle {max:?}/{attainers}", c.max_rt(), c.attainers.len())
    })?;
    ensure(max == Some((n * n - 5) / 2) && attainers == 1, || format!("max {max:?}, {attainers} attainers"))?;
    within(start, Duration::from_secs(900))?;
    Ok(format!("{} classes, max rt 10, one attainer", classes.len()))
}

fn c13() -> Outcome {
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let p = BoundParams { d: Some(0), k: Some(2) };
    let exact = |id: &str, n: usize| -> Result<BigRational, String> {
        match classifier::bound_for_class(id, n, &p).map_err(|e| e.to_string())?.value {
            BoundValue::Exact(q) => Ok(q),
            BoundValue::Real(x) => Err(format!("{id}({n}) = {x} is not exact")),
        }
    };
    ensure(exact("pin_frankl", 10)? == int(165), || "pin_frankl(10)".into())?;
    ensure(exact("kari_eulerian", 5)? == int(13), || "kari_eulerian(5)".into())?;
    let n = BigInt::from(10);
    let sz = BigRational::new(
        BigInt::from(85059) * &n * &n * &n + BigInt::from(90024) * &n * &n + BigInt::from(196504) * &n - BigInt::from(10648),
        BigInt::from(511104),
    );
    ensure(exact("szykula", 10)? == sz, || "szykula(10)".into())?;

    let mut below = 0;
    for &id in classifier::BOUND_IDS {
        for n in 2..=10 {
            let Ok(b) = classifier::bound_for_class(id, n, &p) else {
                continue;
            };
            let cerny = int(((n - 1) * (n - 1)) as i64);
            if !b.value.at_least(&cerny) {
                ensure(classifier::below_cerny(id), || format!("{id}({n}) below (n-1)^2"))?;
                below += 1;
            }
        }
    }
    // below-quadratic bounds against their own families
    let fams: [(&str, FamilyGen, usize); 5] = [
        ("b1", families::gen_rystsov, 3),
        ("c1", families::gen_chain, 2),
        ("c3", families::gen_chain, 2),
        ("c4", families::gen_two_idempotent, 2),
        ("c7", families::gen_elevator, 2),
    ];
    for (id, gen, lo) in fams {
        for n in lo..=8 {
            let d = gen(n).map_err(|e| e.to_string())?.dfa;
            let rt = oracle_rt(&rows(&d)).unwrap();
            let b = classifier::bound_for_class(id, n, &p).map_err(|e| e.to_string())?;
            ensure(b.value.admits(rt), || format!("{id}({n}) = {} < rt {rt}", b.value))?;
        }
    }
    let kari = exact("kari_eulerian", 5)?;
    ensure(kari >= int(10) && exact("a6", 5)? >= int(10), || "Eulerian bound below the n=5 census".into())?;
    Ok(format!("{below} below-(n-1)^2 values, all in exempt classes"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "cerny thresholds", c1),
        (2, "D_{n,k} closed form", c2),
        (3, "Frobenius gap", c3),
        (4, "Rystsov and V_n thresholds", c4),
        (5, "linear families", c5),
        (6, "greedy and extension bounds", c6),
        (7, "A10 solver", c7),
        (8, "C7 solver", c8),
        (9, "Eppstein solver", c9),
        (10, "classifier ground truths", c10),
        (11, "extension lengths by class", c11),
        (12, "Eulerian census n=5", c12),
        (13, "bound registry", c13),
    ];
    let mut unexpected = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let res = catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        let known = KNOWN_FAILURES.contains(&id);
        match res {
            Ok(detail) => {
                println!("criterion {id:>2}: PASS  {name} ({detail}; {ms} ms)");
                if known {
                    println!("              note: listed as a known failure but passed");
                }
            }
            Err(detail) => {
                let tag = if known { " [known]" } else { "" };
                println!("criterion {id:>2}: FAIL{tag}  {name} ({detail}; {ms} ms)");
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
