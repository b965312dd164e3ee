//! The `dicrit` command line. [`run`] takes the argument list and output
//! streams explicitly so tests can drive it in-process.
//!
//! Exit codes: 0 on success, 1 when the question asked has a negative
//! answer (not critical, nothing found within budget, certificate rejected),
//! 2 for usage errors, unreadable or malformed input and refused sizes.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use dicrit_core::coloring::dichromatic_number_with_witness;
use dicrit_core::constructions::{
    bidirected_complete, bidirected_cycle, dg_digraph, dirac_join, directed_cycle,
    extremal_digraph, hajos_join, DGParams,
};
use dicrit_core::criticality::check_neumann_lara;
use dicrit_core::decomposition::{check_factor_bounds, decompose, stehlik_check};
use dicrit_core::extremal::{
    bound_checks, compute_ext, enumerate_critical, ext_formula_digraph, ext_formula_graph,
    SearchOptions,
};
use dicrit_core::io::{parse_digraph, write_arclist};
use dicrit_core::{is_k_critical, Arc, CriticalityCertificate, Digraph, Error, SCHEMA};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "dicrit",
    version,
    about = "Dichromatic number and critical digraph toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the dichromatic number of a digraph.
    Dichromatic {
        file: PathBuf,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Decide whether a digraph is k-critical and certify the answer.
    Critical {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Build a digraph from one of the standard families and print it as an arclist.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Write the arclist here instead of standard output.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Split a digraph into complement components; with --k, also check the
    /// bounds that hold for k-critical digraphs.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Find the minimum arc count of a k-critical digraph on n vertices.
    Ext {
        k: usize,
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Highest arc count to try.
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        json: JsonOut,
    },
    /// List every k-critical digraph on n vertices up to isomorphism.
    Enumerate {
        k: usize,
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Evaluate the closed forms and lower bounds at (k, n).
    Formulas {
        k: u64,
        n: u64,
        /// Arc count to test against the bounds.
        #[arg(long)]
        m: Option<u64>,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Re-check a criticality certificate against a digraph without the solver.
    Verify { file: PathBuf, certificate: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Directed cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Biorientation of the n-cycle.
    Bicycle {
        #[arg(long)]
        n: usize,
    },
    /// Bidirected complete digraph on k vertices.
    Biclique {
        #[arg(long)]
        k: usize,
    },
    /// Dirac–Gallai digraph of level k.
    Dg {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        parts: DgParts,
    },
    /// Minimum k-critical digraph on k + p vertices.
    Extremal {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        parts: DgParts,
    },
    /// Dirac join of two digraphs read from files.
    DiracJoin { first: PathBuf, second: PathBuf },
    /// Hajós join along arc1 = u1v1 of the first and arc2 = v2u2 of the second.
    HajosJoin {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_parser = parse_arc)]
        arc1: Arc,
        #[arg(long, value_parser = parse_arc)]
        arc2: Arc,
    },
    /// Random digraph, each ordered pair an arc with the given probability.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct DgParts {
    #[arg(long, requires = "y2")]
    y1: Option<usize>,
    #[arg(long, requires = "y1")]
    y2: Option<usize>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Allow orders that take long to search.
    #[arg(long)]
    extended: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Debug)]
struct JsonOut {
    /// Also write a machine-readable document to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn parse_arc(s: &str) -> Result<Arc, String> {
    let (t, h) = s
        .split_once(',')
        .ok_or_else(|| format!("expected TAIL,HEAD, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok(Arc::new(num(t)?, num(h)?))
}

enum Failure {
    /// The answer is "no".
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Violation(_) | Error::BadCertificate(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_digraph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_json(json: &JsonOut, value: &Value) -> CmdResult {
    if let Some(path) = &json.json {
        let text = serde_json::to_string_pretty(value).expect("json values serialise");
        fs::write(path, text + "\n")
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("writing output: {e}")))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        emit($out, &format!("{}\n", format_args!($($arg)*)))
    };
}

fn dg_params(k: usize, parts: &DgParts) -> Result<Option<DGParams>, Failure> {
    match (parts.y1, parts.y2) {
        (Some(y1), Some(y2)) => Ok(Some(DGParams::new(k, y1, y2)?)),
        _ if k >= 3 => Ok(DGParams::all(k).into_iter().next()),
        _ => Ok(None),
    }
}

fn construct(family: &Family) -> Result<Digraph, Failure> {
    Ok(match family {
        Family::Cycle { n } => directed_cycle(*n)?,
        Family::Bicycle { n } => bidirected_cycle(*n)?,
        Family::Biclique { k } => bidirected_complete(*k)?,
        Family::Dg { k, parts } => dg_digraph(*k, dg_params(*k, parts)?)?,
        Family::Extremal { k, p, parts } => {
            let params = if *p >= 2 {
                dg_params(p + 1, parts)?
            } else {
                None
            };
            if *p == 1 && parts.y1.is_some() {
                return Err(Failure::Usage("p = 1 takes no --y1/--y2".into()));
            }
            extremal_digraph(*k, *p, params)?
        }
        Family::DiracJoin { first, second } => {
            dirac_join(&read_digraph(first)?, &read_digraph(second)?)?
        }
        Family::HajosJoin {
            first,
            second,
            arc1,
            arc2,
        } => hajos_join(&read_digraph(first)?, *arc1, &read_digraph(second)?, *arc2)?,
        Family::Random { n, density, seed } => {
            if !(0.0..=1.0).contains(density) {
                return Err(Failure::Usage(format!(
                    "density {density} is not in [0, 1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let arcs: Vec<(usize, usize)> = (0..*n)
                .flat_map(|u| (0..*n).filter(move |&v| v != u).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(*density))
                .collect();
            Digraph::from_arcs(*n, arcs)?
        }
    })
}

fn search_options(args: &SearchArgs, budget: Option<usize>) -> Result<SearchOptions, Failure> {
    if args.threads == 0 {
        return Err(Failure::Usage("--threads must be at least 1".into()));
    }
    Ok(SearchOptions {
        budget,
        extended: args.extended,
        threads: args.threads,
        ..SearchOptions::default()
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Dichromatic { file, json } => {
            let d = read_digraph(&file)?;
            let (chi, coloring) = dichromatic_number_with_witness(&d);
            say!(out, "{chi}")?;
            let classes: Vec<String> = coloring.colors().iter().map(|c| c.to_string()).collect();
            say!(out, "coloring: {}", classes.join(" "))?;
            write_json(
                &json,
                &json!({
                    "schema": SCHEMA,
                    "kind": "dichromatic",
                    "n": d.order(),
                    "arcs": d.arcs().collect::<Vec<_>>(),
                    "dichromatic_number": chi,
                    "coloring": coloring.colors(),
                }),
            )
        }
        Command::Critical { file, k, json } => {
            let d = read_digraph(&file)?;
            if k == 0 {
                return Err(Failure::Usage("--k must be at least 1".into()));
            }
            let Some(cert) = is_k_critical(&d, k) else {
                let chi = dichromatic_number_with_witness(&d).0;
                write_json(
                    &json,
                    &json!({
                        "schema": SCHEMA,
                        "kind": "not-critical",
                        "k": k,
                        "n": d.order(),
                        "dichromatic_number": chi,
                    }),
                )?;
                return Err(Failure::Domain(format!(
                    "not {k}-critical (dichromatic number {chi})"
                )));
            };
            say!(out, "{k}-critical: {} arcs certified", cert.arcs.len())?;
            let report = check_neumann_lara(&d, k, &cert)?;
            for c in &report.clauses {
                let mark = if c.passed { "ok" } else { "FAILED" };
                let sampled = if c.sampled { " (sampled)" } else { "" };
                say!(out, "  ({}) {mark}{sampled}: {}", c.clause, c.detail)?;
            }
            let mut doc = cert.to_json();
            doc["checks"] = serde_json::to_value(&report.clauses).expect("serialisable");
            write_json(&json, &doc)?;
            match report.violation() {
                Some(e) => Err(e.into()),
                None => Ok(()),
            }
        }
        Command::Construct { family, out: path } => {
            let d = construct(&family)?;
            let text = write_arclist(&d);
            match path {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
                None => emit(out, &text),
            }
        }
        Command::Decompose { file, k, json } => {
            let d = read_digraph(&file)?;
            let report = decompose(&d, k.unwrap_or(0)).with_dichromatic();
            say!(
                out,
                "{} factors, p = {}, q = {}",
                report.factors.len(),
                report.p,
                report.q
            )?;
            for f in &report.factors {
                let vs: Vec<String> = f.vertices.iter().map(|v| v.to_string()).collect();
                say!(
                    out,
                    "  {:?} [{}] arcs {} dichromatic {}",
                    f.class,
                    vs.join(" "),
                    f.digraph.arc_count(),
                    f.dichromatic.unwrap_or(0)
                )?;
            }
            let mut doc = report.to_json();
            let result = match k {
                None => Ok(()),
                Some(k) => {
                    if is_k_critical(&d, k).is_none() {
                        write_json(&json, &doc)?;
                        return Err(Failure::Domain(format!(
                            "not {k}-critical; bounds not applicable"
                        )));
                    }
                    let stehlik = stehlik_check(&d, k);
                    say!(
                        out,
                        "order bound for indecomposable digraphs: {}",
                        if stehlik { "ok" } else { "VIOLATED" }
                    )?;
                    doc["stehlik"] = stehlik.into();
                    match check_factor_bounds(&d, k, &report) {
                        Ok(t) => {
                            for b in [&t.dominating_bound, &t.cycle_bound] {
                                say!(
                                    out,
                                    "{}: {} >= {} (slack {}){}",
                                    b.name,
                                    b.lhs,
                                    b.rhs,
                                    b.slack,
                                    if b.equality { ", tight" } else { "" }
                                )?;
                            }
                            doc["bounds"] = t.to_json();
                            if stehlik {
                                Ok(())
                            } else {
                                Err(Failure::Domain(
                                    "indecomposable critical digraph below order 2k - 1".into(),
                                ))
                            }
                        }
                        Err(e) => Err(e.into()),
                    }
                }
            };
            write_json(&json, &doc)?;
            result
        }
        Command::Ext {
            k,
            n,
            search,
            budget,
            json,
        } => {
            let r = compute_ext(k, n, &search_options(&search, budget)?)?;
            write_json(&json, &r.to_json())?;
            match r.ext_value {
                Some(m) => {
                    let s = if r.minimizers.len() == 1 { "" } else { "es" };
                    say!(out, "ext={m}, {} class{s}", r.minimizers.len())?;
                    for f in &r.minimizers {
                        say!(out, "  {f}")?;
                    }
                    say!(out, "examined {} digraphs in {} ms", r.digraphs_examined, r.wall_time_ms)?;
                    Ok(())
                }
                None if r.exhaustive => Err(Failure::Domain(format!(
                    "no {k}-critical digraph on {n} vertices"
                ))),
                None => Err(Failure::Domain(format!(
                    "not found below budget: no {k}-critical digraph on {n} vertices with at most {} arcs",
                    budget.unwrap_or(0)
                ))),
            }
        }
        Command::Enumerate { k, n, search, json } => {
            let e = enumerate_critical(k, n, &search_options(&search, None)?)?;
            say!(out, "{} classes", e.classes.len())?;
            for f in &e.classes {
                say!(out, "  {f} ({} arcs)", f.to_digraph().arc_count())?;
            }
            write_json(&json, &e.to_json())
        }
        Command::Formulas { k, n, m, json } => {
            let digraph = ext_formula_digraph(k, n).ok();
            let graph = ext_formula_graph(k, n).ok();
            match digraph {
                Some(v) => say!(out, "digraph closed form: {v}")?,
                None => say!(out, "digraph closed form: not applicable")?,
            }
            if let Some(v) = graph {
                say!(out, "graph closed form: {v}")?;
            }
            let report = bound_checks(k, n, m);
            for e in report.entries.iter().filter(|e| e.applicable) {
                let verdict = match e.satisfied {
                    Some(true) if e.tight == Some(true) => " met with equality",
                    Some(true) => " met",
                    Some(false) => " VIOLATED",
                    None => "",
                };
                say!(out, "{}: {}{verdict}", e.name, e.value)?;
            }
            let mut doc = serde_json::to_value(&report).expect("serialisable");
            doc["schema"] = SCHEMA.into();
            doc["kind"] = "formulas".into();
            doc["ext_digraph"] = json!(digraph);
            doc["ext_graph"] = json!(graph);
            write_json(&json, &doc)?;
            if report.all_satisfied() {
                Ok(())
            } else {
                Err(Failure::Domain(format!(
                    "{} arcs violates a lower bound",
                    m.unwrap_or(0)
                )))
            }
        }
        Command::Verify { file, certificate } => {
            let d = read_digraph(&file)?;
            let text = fs::read_to_string(&certificate)
                .map_err(|e| Failure::Usage(format!("{}: {e}", certificate.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", certificate.display())))?;
            let cert = CriticalityCertificate::from_json(&value)?;
            cert.verify(&d)?;
            say!(
                out,
                "certificate accepted: {}-critical, {} witnesses",
                cert.k,
                cert.witnesses.len()
            )
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
