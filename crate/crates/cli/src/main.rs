use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use synchro_core::automaton::{from_json_str, to_json_string};
use synchro_core::classifier::{self, BoundParams, GraphJson};
use synchro_core::harness::enumerate::{census, census_json, EnumerationFilter, ReportKind};
use synchro_core::harness::suite::{run_suite, Suite};
use synchro_core::{engine, families, monoid, Dfa, Error, Limits, Method};

#[derive(Parser)]
#[command(name = "synchro", version, about = "Synchronizing automata toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a member of an extremal family.
    Gen {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Write the automaton here and the metadata to `<stem>.meta.json`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print Graphviz instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Exact reset threshold and a shortest reset word.
    Rt { file: PathBuf },
    /// Run one reset-word solver.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "bfs")]
        method: Method,
    },
    /// Class-membership verdicts.
    Classify {
        file: PathBuf,
        /// Comma-separated class ids; all classes by default.
        #[arg(long)]
        classes: Option<String>,
        /// Graph for the interval class, as {"n": .., "edges": [[u, v], ..]}.
        #[arg(long)]
        delta_graph: Option<PathBuf>,
    },
    /// Transition monoid size and monoid-theoretic verdicts.
    Monoid {
        file: PathBuf,
        #[arg(long, default_value_t = Limits::default().monoid_size)]
        max_size: usize,
    },
    /// Value of a registered upper bound.
    Bound {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Compare the bound with the exact threshold of this automaton.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, env = "SYNCHRO_WORKERS")]
        workers: Option<usize>,
        /// Also write one JSON object per case to this file.
        #[arg(long)]
        jsonl: Option<PathBuf>,
        /// Print JSON lines instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive census up to isomorphism.
    Enum {
        #[arg(long)]
        letters: usize,
        #[arg(long)]
        states: usize,
        /// Comma-separated: eulerian, strongly_connected, synchronizing, aperiodic.
        #[arg(long, default_value = "none")]
        filter: String,
        #[arg(long, default_value = "count")]
        report: ReportKind,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Stop after this many shards; resume later from the checkpoint.
        #[arg(long, requires = "checkpoint")]
        stop_after: Option<usize>,
    },
}

enum Failure {
    Verification,
    Core(Error),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn load(path: &Path) -> Result<Dfa, Failure> {
    Ok(from_json_str(&read_text(path)?)?)
}

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    out(&(serde_json::to_string_pretty(v).expect("json") + "\n"));
}

fn run(cmd: Command) -> Result<(), Failure> {
    let limits = Limits::default();
    match cmd {
        Command::Gen {
            family,
            n,
            k,
            output,
            dot,
        } => {
            let inst = families::generate(&family, n, k)?;
            for w in &inst.warnings {
                eprintln!("warning: {w}");
            }
            let body = if dot { inst.dfa.to_dot() } else { to_json_string(&inst.dfa) + "\n" };
            let meta = serde_json::to_string_pretty(&inst.metadata()).expect("json") + "\n";
            match output {
                Some(p) => {
                    fs::write(&p, body).with_context(|| format!("cannot write {}", p.display()))?;
                    let side = p.with_extension("meta.json");
                    fs::write(&side, meta).with_context(|| format!("cannot write {}", side.display()))?;
                }
                None => {
                    out(&body);
                    eprint!("{meta}");
                }
            }
        }
        Command::Rt { file } => {
            let d = load(&file)?;
            let r = engine::exact_reset_threshold(&d)?;
            let mut v = r.to_json(&d);
            v["rt"] = json!(r.len());
            print(&v);
        }
        Command::Solve { file, method } => {
            let d = load(&file)?;
            print(&engine::solve(&d, method)?.to_json(&d));
        }
        Command::Classify {
            file,
            classes,
            delta_graph,
        } => {
            let d = load(&file)?;
            let ids = classifier::parse_class_list(classes.as_deref())?;
            let graph = match delta_graph {
                Some(p) => {
                    let g: GraphJson = serde_json::from_str(&read_text(&p)?)
                        .map_err(|e| Error::Parse { path: p.display().to_string(), reason: e.to_string() })?;
                    Some(g.into_graph()?)
                }
                None => None,
            };
            print(&classifier::classify(&d, &ids, graph.as_ref(), &limits)?.to_json());
        }
        Command::Monoid { file, max_size } => {
            let d = load(&file)?;
            let m = monoid::transition_monoid(&d, max_size)?;
            let names = |i: usize| d.format_word(m.word(i));
            let verdict = |r: Result<Option<Value>, Error>| match r {
                Ok(None) => json!({"verdict": "in"}),
                Ok(Some(c)) => json!({"verdict": "out", "counterexample": c}),
                Err(e) if e.is_cap() => json!({"verdict": "unknown", "reason": e.to_string()}),
                Err(e) => json!({"verdict": "error", "reason": e.to_string()}),
            };
            let images = |t: &synchro_core::Transformation| t.images().collect::<Vec<_>>();
            print(&json!({
                "size": m.len(),
                "idempotents": m.idempotents().len(),
                "commutative": m.is_commutative(),
                "aperiodic": verdict(Ok(monoid::aperiodicity_violation(&m).map(|i| json!({"element": names(i)})))),
                "involution_free": verdict(Ok(monoid::involution_violation(&m)
                    .map(|(e, f)| json!({"e": names(e), "f": names(f)})))),
                "ds": verdict(monoid::ds_violation(&m, limits.ds_size)
                    .map(|o| o.map(|(x, y, z)| json!([names(x), names(y), names(z)])))),
                "eds": verdict(monoid::eds_violation(&m, limits.ds_size)
                    .map(|o| o.map(|t| json!(t.iter().map(images).collect::<Vec<_>>())))),
            }));
        }
        Command::Bound { class, n, d, k, against } => {
            let b = classifier::bound_for_class(&class, n, &BoundParams { d, k })?;
            let mut v = b.to_json();
            if let Some(p) = against {
                let dfa = load(&p)?;
                let rt = engine::exact_reset_threshold(&dfa)?.len();
                v["rt"] = json!(rt);
                v["holds"] = json!(b.value.admits(rt));
                if dfa.n() != n {
                    eprintln!("warning: automaton has {} states, bound evaluated at n = {n}", dfa.n());
                }
            }
            print(&v);
        }
        Command::Verify {
            suite,
            max_n,
            workers,
            jsonl,
            json,
        } => {
            let report = run_suite(suite, max_n, workers)?;
            let lines = report.to_json_lines();
            if let Some(p) = jsonl {
                fs::write(&p, &lines).with_context(|| format!("cannot write {}", p.display()))?;
            }
            if json {
                out(&lines);
            } else {
                out(&report.table());
            }
            if report.failures() > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Enum {
            letters,
            states,
            filter,
            report,
            checkpoint,
            stop_after,
        } => {
            let f = EnumerationFilter::new(letters, states).with_flags(&filter)?;
            let (c, complete) = census(&f, report, checkpoint.as_deref(), stop_after)?;
            print(&census_json(&f, report, &c, complete));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                Error::Input(_) | Error::Parse { .. } => 2,
                _ => 1,
            })
        }
    }
}
