//! Class-membership predicates and the bound registry.
//!
//! [`classify`] evaluates the checkable classes `a1`..`d6` and returns a
//! [`ClassReport`]. An `in` verdict for an existential class carries the
//! witness (letter, order, weights, graph edges); an `out` verdict carries a
//! counterexample. Hitting a cap gives `unknown`, never `out`.

mod basic;
mod bounds;
mod intervals;
mod order;
mod reach;
mod rystsov;
mod weights;

use std::collections::BTreeMap;

use num::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::automaton::{Dfa, Multigraph};
use crate::engine::{is_synchronizing, simple_idempotent};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monoid;

pub use basic::{
    d6_violation, eulerian_violation, has_zero, idempotent_letters, is_circular, is_eulerian,
    is_one_cluster_prime, junction_clause, min_quasi_one_cluster_degree, one_cluster_letters,
    quasi_one_cluster_degree, simple_idempotent_letters, small_rank_letter,
    two_junction_violation, D6Violation, JunctionClause,
};
pub use bounds::{below_cerny, bound_for_class, Bound, BoundParams, BoundValue, BOUND_IDS};
pub use intervals::{density_violation, respects_intervals, GraphJson, IntervalViolation, Intervals};
pub use order::{
    find_order, find_order_with, is_oriented_interval, is_properly_oriented, order_violation,
    OrderClass,
};
pub use reach::{completely_reachable_violation, completely_reachable_violation_with, reachable_images};
pub use rystsov::{excl_dupl, restricted_rystsov_graph, restricted_rystsov_graph_with, RystsovGraph};
pub use weights::{pseudo_eulerian_weights, pseudo_eulerian_weights_with};

/// Class ids with a short description.
pub const CLASSES: [(&str, &str); 30] = [
    ("a1", "circular"),
    ("a2", "one-cluster with a cycle of prime length"),
    ("a3", "orientable"),
    ("a4", "respects the intervals of a dense graph"),
    ("a5", "2-junction"),
    ("a6", "Eulerian"),
    ("a7", "letter of small rank"),
    ("a8", "no involutions"),
    ("a9", "strongly connected restricted Rystsov graph"),
    ("a10", "binary with a simple idempotent letter"),
    ("b1", "has a zero"),
    ("b2", "aperiodic"),
    ("b3", "transition monoid in EDS"),
    ("b4", "decoder of a finite maximal prefix code"),
    ("b5", "weakly monotonic"),
    ("b6", "0-monotonic"),
    ("b7", "finitely generated"),
    ("c1", "monotonic"),
    ("c2", "generalized monotonic"),
    ("c3", "transition monoid in DS"),
    ("c4", "binary with idempotent letters"),
    ("c5", "medium"),
    ("c6", "strongly semisimple"),
    ("c7", "simple idempotent letters"),
    ("d1", "one-cluster"),
    ("d2", "completely reachable"),
    ("d3", "quasi-Eulerian"),
    ("d4", "regular"),
    ("d5", "coinciding cycles"),
    ("d6", "transitive permutation letters"),
];

const NOT_CHECKED: [&str; 8] = ["b4", "b7", "c2", "c5", "c6", "d3", "d4", "d5"];

pub fn class_name(id: &str) -> Option<&'static str> {
    CLASSES.iter().find(|(c, _)| *c == id).map(|(_, name)| *name)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    In { witness: Value },
    Out { counterexample: Value },
    Unknown { reason: String },
    NotChecked { reason: String },
}

impl Verdict {
    pub fn is_in(&self) -> bool {
        matches!(self, Verdict::In { .. })
    }

    pub fn is_out(&self) -> bool {
        matches!(self, Verdict::Out { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::In { .. } => "in",
            Verdict::Out { .. } => "out",
            Verdict::Unknown { .. } => "unknown",
            Verdict::NotChecked { .. } => "not_checked",
        }
    }

    fn from_cap<T>(r: Result<T>, f: impl FnOnce(T) -> Verdict) -> Result<Verdict> {
        match r {
            Ok(v) => Ok(f(v)),
            Err(e) if e.is_cap() => Ok(Verdict::Unknown {
                reason: e.to_string(),
            }),
            Err(e) => Err(e),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub class: &'static str,
    pub name: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub k: usize,
    pub synchronizing: bool,
    pub classes: Vec<ClassEntry>,
    pub notes: Vec<String>,
    pub extras: BTreeMap<&'static str, Value>,
}

impl ClassReport {
    pub fn verdict(&self, id: &str) -> Option<&Verdict> {
        self.classes.iter().find(|e| e.class == id).map(|e| &e.verdict)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Parses a comma-separated class list. `None` or `"all"` selects every class.
pub fn parse_class_list(list: Option<&str>) -> Result<Vec<&'static str>> {
    let Some(list) = list.filter(|l| *l != "all") else {
        return Ok(CLASSES.iter().map(|(c, _)| *c).collect());
    };
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let lc = s.to_ascii_lowercase();
            CLASSES
                .iter()
                .find(|(c, _)| *c == lc)
                .map(|(c, _)| *c)
                .ok_or_else(|| Error::input(format!("unknown class id {s:?}")))
        })
        .collect()
}

fn rational_json(q: &BigRational) -> Value {
    json!(q.to_string())
}

fn letters_json(d: &Dfa, letters: &[usize]) -> Value {
    letters.iter().map(|&a| d.letter_name(a)).collect()
}

pub fn classify(
    d: &Dfa,
    classes: &[&'static str],
    delta_graph: Option<&Multigraph>,
    limits: &Limits,
) -> Result<ClassReport> {
    let mut ctx = Ctx {
        d,
        limits,
        delta_graph,
        notes: Vec::new(),
        monoid: None,
    };
    let mut entries = Vec::new();
    for &class in classes {
        let name = class_name(class).ok_or_else(|| Error::input(format!("unknown class id {class:?}")))?;
        let verdict = ctx.check(class)?;
        entries.push(ClassEntry { class, name, verdict });
    }
    let mut extras = BTreeMap::new();
    extras.insert("one_cluster_letters", json!(one_cluster_letters(d)
        .into_iter()
        .map(|(a, len)| json!({"letter": d.letter_name(a), "cycle_length": len}))
        .collect::<Vec<_>>()));
    extras.insert("simple_idempotent_letters", letters_json(d, &simple_idempotent_letters(d)));
    let (a, deg) = min_quasi_one_cluster_degree(d);
    extras.insert("quasi_one_cluster_degree", json!({"letter": d.letter_name(a), "degree": deg}));
    extras.insert(
        "pseudo_eulerian_weights",
        match pseudo_eulerian_weights_with(d, limits) {
            Ok(Some(w)) => w.iter().map(rational_json).collect(),
            Ok(None) => json!("infeasible"),
            Err(e) if e.is_cap() => json!({"unknown": e.to_string()}),
            Err(e) => return Err(e),
        },
    );
    Ok(ClassReport {
        n: d.n(),
        k: d.k(),
        synchronizing: is_synchronizing(d),
        classes: entries,
        notes: ctx.notes,
        extras,
    })
}

struct Ctx<'a> {
    d: &'a Dfa,
    limits: &'a Limits,
    delta_graph: Option<&'a Multigraph>,
    notes: Vec<String>,
    monoid: Option<std::result::Result<monoid::TransitionMonoid, Error>>,
}

impl Ctx<'_> {
    fn monoid(&mut self) -> Result<&monoid::TransitionMonoid> {
        let (d, cap) = (self.d, self.limits.monoid_size);
        self.monoid
            .get_or_insert_with(|| monoid::transition_monoid(d, cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn order(&self, class: OrderClass) -> Result<Verdict> {
        Verdict::from_cap(find_order_with(self.d, class, self.limits), |o| match o {
            Some(order) => {
                debug_assert_eq!(order_violation(self.d, class, &order).ok(), Some(None));
                Verdict::In {
                    witness: json!({ "order": order }),
                }
            }
            None => Verdict::Out {
                counterexample: json!({ "orders_searched": "all" }),
            },
        })
    }

    fn check(&mut self, class: &str) -> Result<Verdict> {
        let d = self.d;
        let limits = self.limits;
        if NOT_CHECKED.contains(&class) {
            return Ok(Verdict::NotChecked {
                reason: "membership test not implemented; only the bound formula is available".into(),
            });
        }
        Ok(match class {
            "a1" => match is_circular(d) {
                Some(a) => Verdict::In { witness: json!({ "letter": d.letter_name(a) }) },
                None => Verdict::Out { counterexample: json!({ "cyclic_letters": [] }) },
            },
            "a2" => match is_one_cluster_prime(d) {
                Some((a, len)) => Verdict::In {
                    witness: json!({ "letter": d.letter_name(a), "cycle_length": len }),
                },
                None => Verdict::Out {
                    counterexample: json!({ "one_cluster_letters": one_cluster_letters(d)
                        .into_iter()
                        .map(|(a, len)| json!([d.letter_name(a), len]))
                        .collect::<Vec<_>>() }),
                },
            },
            "a3" => self.order(OrderClass::Orientable)?,
            "a4" => self.check_a4()?,
            "a5" => match two_junction_violation(d) {
                None => Verdict::In {
                    witness: json!({ "clauses": (0..d.k())
                        .map(|a| {
                            let c = match junction_clause(d, a) {
                                Some(JunctionClause::AtMostTwoOnce) => "at_most_two_once",
                                _ => "one_twice",
                            };
                            (d.letter_name(a).to_string(), json!(c))
                        })
                        .collect::<serde_json::Map<_, _>>() }),
                },
                Some(a) => Verdict::Out { counterexample: json!({ "letter": d.letter_name(a) }) },
            },
            "a6" => match eulerian_violation(d) {
                None => Verdict::In { witness: json!({ "in_degree": d.k() }) },
                Some(Some(q)) => Verdict::Out {
                    counterexample: json!({ "state": q, "in_degree": d.underlying_graph().in_degree(q) }),
                },
                Some(None) => Verdict::Out { counterexample: json!({ "weakly_connected": false }) },
            },
            "a7" => match small_rank_letter(d) {
                Some(a) => Verdict::In {
                    witness: json!({ "letter": d.letter_name(a), "rank": d.letter_transformation(a).rank() }),
                },
                None => Verdict::Out {
                    counterexample: json!({ "min_rank": (0..d.k()).map(|a| d.letter_transformation(a).rank()).min() }),
                },
            },
            "a8" => match self.monoid() {
                Ok(m) => match monoid::involution_violation(m) {
                    None => Verdict::In { witness: json!({ "monoid_size": m.len() }) },
                    Some((t, q)) => Verdict::Out {
                        counterexample: json!({ "word": d.word_names(m.word(t)), "state": q }),
                    },
                },
                Err(e) if e.is_cap() => Verdict::Unknown { reason: e.to_string() },
                Err(e) => return Err(e),
            },
            "a9" => Verdict::from_cap(restricted_rystsov_graph_with(d, limits), |g| {
                debug_assert!(g.edges_rederive(d));
                if g.is_strongly_connected() {
                    Verdict::In { witness: json!({ "edges": g.to_json(d) }) }
                } else {
                    Verdict::Out { counterexample: json!({ "edges": g.to_json(d) }) }
                }
            })?,
            "a10" => {
                if d.k() != 2 {
                    Verdict::Out { counterexample: json!({ "letters": d.k() }) }
                } else {
                    match (0..2).find_map(|a| simple_idempotent(d, a).map(|e| (a, e))) {
                        Some((a, (e, ea))) => Verdict::In {
                            witness: json!({ "letter": d.letter_name(a), "missing_state": e, "merged_into": ea }),
                        },
                        None => Verdict::Out { counterexample: json!({ "simple_idempotent_letters": [] }) },
                    }
                }
            }
            "b1" => match has_zero(d) {
                Some(z) => Verdict::In { witness: json!({ "zero": z }) },
                None => Verdict::Out { counterexample: json!({ "zero": null }) },
            },
            "b2" => match self.monoid() {
                Ok(m) => match monoid::aperiodicity_violation(m) {
                    None => Verdict::In { witness: json!({ "monoid_size": m.len() }) },
                    Some(t) => Verdict::Out {
                        counterexample: json!({
                            "word": d.word_names(m.word(t)),
                            "cycle_lengths": m.elements()[t].cycle_lengths(),
                        }),
                    },
                },
                Err(e) if e.is_cap() => Verdict::Unknown { reason: e.to_string() },
                Err(e) => return Err(e),
            },
            "b3" | "c3" => {
                let ds_cap = limits.ds_size;
                match self.monoid() {
                    Ok(m) => {
                        let r = if class == "c3" {
                            monoid::ds_violation(m, ds_cap).map(|v| {
                                v.map(|(x, y, z)| {
                                    json!({
                                        "x": d.word_names(m.word(x)),
                                        "y": d.word_names(m.word(y)),
                                        "z": d.word_names(m.word(z)),
                                    })
                                })
                            })
                        } else {
                            monoid::eds_violation(m, ds_cap).map(|v| {
                                v.map(|[x, y, z]| {
                                    json!({
                                        "x": x.images().collect::<Vec<_>>(),
                                        "y": y.images().collect::<Vec<_>>(),
                                        "z": z.images().collect::<Vec<_>>(),
                                    })
                                })
                            })
                        };
                        let size = m.len();
                        Verdict::from_cap(r, |v| match v {
                            None => Verdict::In { witness: json!({ "monoid_size": size }) },
                            Some(c) => Verdict::Out { counterexample: c },
                        })?
                    }
                    Err(e) if e.is_cap() => Verdict::Unknown { reason: e.to_string() },
                    Err(e) => return Err(e),
                }
            }
            "b5" => self.order(OrderClass::WeaklyMonotonic)?,
            "b6" => {
                if has_zero(d).is_none() {
                    Verdict::Out { counterexample: json!({ "zero": null }) }
                } else {
                    self.order(OrderClass::ZeroMonotonic)?
                }
            }
            "c1" => self.order(OrderClass::Monotonic)?,
            "c4" => {
                let idem = idempotent_letters(d);
                if d.k() == 2 && idem.len() == 2 {
                    Verdict::In { witness: json!({ "idempotent_letters": letters_json(d, &idem) }) }
                } else {
                    Verdict::Out {
                        counterexample: json!({ "letters": d.k(), "idempotent_letters": letters_json(d, &idem) }),
                    }
                }
            }
            "c7" => {
                let simple = simple_idempotent_letters(d);
                match (0..d.k()).find(|a| !simple.contains(a)) {
                    None => Verdict::In { witness: json!({ "letters": letters_json(d, &simple) }) },
                    Some(a) => Verdict::Out { counterexample: json!({ "letter": d.letter_name(a) }) },
                }
            }
            "d1" => match one_cluster_letters(d).first() {
                Some(&(a, len)) => Verdict::In {
                    witness: json!({ "letter": d.letter_name(a), "cycle_length": len }),
                },
                None => {
                    let (a, deg) = min_quasi_one_cluster_degree(d);
                    Verdict::Out {
                        counterexample: json!({ "min_quasi_one_cluster_degree": deg, "letter": d.letter_name(a) }),
                    }
                }
            },
            "d2" => Verdict::from_cap(completely_reachable_violation_with(d, limits), |v| match v {
                None => Verdict::In { witness: json!({ "images": (1u64 << d.n()) - 1 }) },
                Some(p) => Verdict::Out { counterexample: json!({ "unreachable": p }) },
            })?,
            "d6" => match d6_violation(d) {
                None => {
                    let perms: Vec<usize> = (0..d.k())
                        .filter(|&a| d.letter_transformation(a).is_permutation())
                        .collect();
                    Verdict::In { witness: json!({ "permutation_letters": letters_json(d, &perms) }) }
                }
                Some(D6Violation::Deficiency { letter, deficiency }) => Verdict::Out {
                    counterexample: json!({ "letter": d.letter_name(letter), "deficiency": deficiency }),
                },
                Some(D6Violation::Intransitive { unreached }) => Verdict::Out {
                    counterexample: json!({ "unreached_from_0": unreached }),
                },
            },
            other => return Err(Error::input(format!("unknown class id {other:?}"))),
        })
    }

    fn check_a4(&mut self) -> Result<Verdict> {
        let d = self.d;
        let Some(g) = self.delta_graph else {
            return Ok(Verdict::NotChecked {
                reason: "needs a graph on the states (--delta-graph)".into(),
            });
        };
        self.notes.push(
            "a4: an empty interval is not a singleton in the third clause; a4 is decided relative to the supplied graph only"
                .into(),
        );
        if !d.is_strongly_connected() {
            return Ok(Verdict::Out {
                counterexample: json!({ "strongly_connected": false }),
            });
        }
        if !g.is_weakly_connected() {
            return Ok(Verdict::Unknown {
                reason: "the supplied graph is not weakly connected".into(),
            });
        }
        if let Some((p, q, r)) = density_violation(g)? {
            return Ok(Verdict::Unknown {
                reason: format!("the supplied graph is not dense: {q} is in neither [{p},{r}] nor [{r},{p}]"),
            });
        }
        Ok(match respects_intervals(d, g)? {
            None => Verdict::In {
                witness: json!({ "graph_edges": g.edges().map(|(u, v, _)| [u, v]).collect::<Vec<_>>() }),
            },
            Some(v) => Verdict::Unknown {
                reason: format!(
                    "intervals of the supplied graph not respected: clause {} fails for p={}, r={}, letter {}",
                    v.clause,
                    v.p,
                    v.r,
                    d.letter_name(v.letter)
                ),
            },
        })
    }
}
