//! `arrowhead`: JSON front end for the arrowhead library.
//!
//! Every command prints one envelope `{"command", "inputs", "result",
//! "elapsed_ms"}` on stdout. Exit codes: 0 positive result, 10 negative result
//! with a certificate (or an exhausted search), 11 violated witness, 1 input or
//! contract error.

mod graph_arg;

use anyhow::{bail, Context, Result};
use arrowhead::constructions::{
    alpha_two_coloring, bound_report, chvatal_harary_coloring, connected_coloring, isolatefree_coloring, Construction,
    ConstructionError,
};
use arrowhead::search::{IrOutcome, IrSearch, DEFAULT_N_MAX};
use arrowhead::{
    ramsey_number_exact_with, strongly_arrows_with, verify_witness, Catalog, ColoringFile, EdgeColoring, Graph,
    RamseyOutcome, ResultCache, SearchOptions, WitnessCheck,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_arg::parse_graph_arg;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_ERROR: u8 = 1;
const EXIT_NEGATIVE: u8 = 10;
const EXIT_VIOLATION: u8 = 11;

/// Environment variable overriding the result cache location.
const CACHE_ENV: &str = "ARROWHEAD_CACHE";
const DEFAULT_CACHE: &str = "ir-cache.json";

#[derive(Parser)]
#[command(name = "arrowhead", version, about = "Strong arrowing, witness colorings and induced Ramsey numbers")]
struct Cli {
    /// Run searches on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

/// Graphs are given as names (K5, K_5, P4, C5, S3, 2K2, E4, Petersen), graph6
/// lines, or paths to files whose first line is graph6.
#[derive(Subcommand)]
enum Command {
    /// Decide whether F strongly arrows (G, H).
    Arrows {
        #[arg(long)]
        f: String,
        #[command(flatten)]
        pair: Pair,
        /// Write the witness coloring here instead of embedding it in the result.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include search statistics (these vary between parallel runs).
        #[arg(long)]
        stats: bool,
    },
    /// Report every known lower bound on IR(G, H).
    Bounds {
        #[command(flatten)]
        pair: Pair,
    },
    /// Build a lower-bound coloring and certify it.
    Construct {
        /// Host graph (not used by `ch`, which builds its own complete host).
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value_t = 2)]
        alpha: usize,
        #[arg(long, default_value_t = 3)]
        omega: usize,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Red pattern, for `ch`.
        #[arg(long)]
        g: Option<String>,
        /// Blue pattern, for `ch`.
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        out_coloring: Option<PathBuf>,
        #[arg(long)]
        out_trace: Option<PathBuf>,
    },
    /// Check a coloring file against (G, H).
    Verify {
        #[arg(long)]
        f: String,
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        pair: Pair,
    },
    /// Compute IR(G, H) by sweeping a graph6 catalog.
    Ir {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value = "catalogs")]
        catalog: PathBuf,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
        /// Permit orders above the default limit.
        #[arg(long)]
        allow_large: bool,
        /// Neither read nor write the result cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Compute the classical Ramsey number R(G, H).
    Ramsey {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
    },
}

#[derive(Args)]
struct Pair {
    /// Red pattern.
    #[arg(long)]
    g: String,
    /// Blue pattern.
    #[arg(long)]
    h: String,
}

impl Pair {
    fn graphs(&self) -> Result<(Graph, Graph)> {
        Ok((parse_graph_arg(&self.g)?, parse_graph_arg(&self.h)?))
    }

    fn echo(&self) -> Value {
        json!({"g": self.g, "h": self.h})
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Ch,
    T1,
    L2,
    T3,
}

struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    code: u8,
}

fn write_json(path: &PathBuf, value: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn options(cli_sequential: bool) -> SearchOptions {
    SearchOptions { parallel: !cli_sequential }
}

fn run(cli: Cli) -> Result<Outcome> {
    let search = options(cli.sequential);
    Ok(match cli.command {
        Command::Arrows { f, pair, out, stats } => {
            let host = parse_graph_arg(&f)?;
            let (g, h) = pair.graphs()?;
            let r = strongly_arrows_with(&host, &g, &h, search)?;
            let mut result = json!({"verdict": r.verdict});
            if let Some(w) = &r.witness {
                match &out {
                    Some(path) => {
                        write_json(path, &w.to_file())?;
                        result["witness_file"] = json!(path);
                    }
                    None => result["witness"] = json!(w.to_file()),
                }
            }
            if stats {
                result["stats"] = json!(r.stats);
            }
            let mut inputs = pair.echo();
            inputs["f"] = json!(f);
            Outcome { command: "arrows", inputs, result, code: if r.arrows() { 0 } else { EXIT_NEGATIVE } }
        }
        Command::Bounds { pair } => {
            let (g, h) = pair.graphs()?;
            if g.size() == 0 || h.size() == 0 {
                bail!("both patterns need at least one edge");
            }
            Outcome { command: "bounds", inputs: pair.echo(), result: json!(bound_report(&g, &h)), code: 0 }
        }
        Command::Construct { f, alpha, omega, method, g, h, out_coloring, out_trace } => {
            let inputs = json!({"f": f, "alpha": alpha, "omega": omega, "method": method_name(method), "g": g, "h": h});
            let (host, built) = construct(f.as_deref(), alpha, omega, method, g.as_deref(), h.as_deref())?;
            if let Some(path) = &out_coloring {
                write_json(path, &built.coloring.to_file())?;
            }
            if let Some(path) = &out_trace {
                write_json(path, &built.trace)?;
            }
            let certified = built.certificate.certified();
            if !certified {
                log::warn!("the {} coloring failed certification", built.trace.method_code());
            }
            let result = json!({
                "host": host.to_graph6(),
                "method": built.trace.method,
                "certified": certified,
                "certificate": built.certificate,
                "coloring": built.coloring.to_file(),
                "trace": built.trace,
            });
            Outcome { command: "construct", inputs, result, code: if certified { 0 } else { EXIT_ERROR } }
        }
        Command::Verify { f, coloring, pair } => {
            let host = parse_graph_arg(&f)?;
            let (g, h) = pair.graphs()?;
            let text = std::fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let file: ColoringFile = serde_json::from_str(&text).context("coloring file does not match the schema")?;
            let c = EdgeColoring::try_from(file).context("coloring file does not match the schema")?;
            let check = verify_witness(&host, &c, &g, &h).context("coloring does not fit the host")?;
            let mut inputs = pair.echo();
            inputs["f"] = json!(f);
            inputs["coloring"] = json!(coloring);
            match check {
                WitnessCheck::Valid => Outcome { command: "verify", inputs, result: json!({"valid": true}), code: 0 },
                WitnessCheck::Violated(v) => Outcome {
                    command: "verify",
                    inputs,
                    result: json!({"valid": false, "violation": v}),
                    code: EXIT_VIOLATION,
                },
            }
        }
        Command::Ir { pair, catalog, n_max, allow_large, no_cache } => {
            let (g, h) = pair.graphs()?;
            let catalog = Catalog::new(catalog);
            let cache_path = std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| DEFAULT_CACHE.into());
            let cache = (!no_cache).then(|| ResultCache::open(&cache_path));
            let mut sweep = IrSearch { search, allow_large, ..IrSearch::new(&catalog) };
            if let Some(cache) = &cache {
                sweep = sweep.with_cache(cache);
            }
            let mut inputs = pair.echo();
            inputs["catalog"] = json!(catalog.dir());
            inputs["n_max"] = json!(n_max);
            match sweep.ir_exact(&g, &h, n_max)? {
                IrOutcome::Found(r) => {
                    let mut result = json!(r.export());
                    result["nonarrow_witnesses_verified"] = json!(r.nonarrow_witnesses_verified);
                    Outcome { command: "ir", inputs, result, code: 0 }
                }
                IrOutcome::NotFoundBelow { n_max } => Outcome {
                    command: "ir",
                    inputs,
                    result: json!({"g": g.to_graph6(), "h": h.to_graph6(), "ir": null, "not_found_below": n_max,
                                   "checked_orders": (1..=n_max).collect::<Vec<_>>()}),
                    code: EXIT_NEGATIVE,
                },
            }
        }
        Command::Ramsey { pair, n_max } => {
            let (g, h) = pair.graphs()?;
            let outcome = ramsey_number_exact_with(&g, &h, n_max, search)?;
            let mut inputs = pair.echo();
            inputs["n_max"] = json!(n_max);
            let code = if matches!(outcome, RamseyOutcome::Exact(_)) { 0 } else { EXIT_NEGATIVE };
            Outcome { command: "ramsey", inputs, result: json!({"outcome": outcome}), code }
        }
    })
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Ch => "ch",
        MethodArg::T1 => "t1",
        MethodArg::L2 => "l2",
        MethodArg::T3 => "t3",
    }
}

/// Runs a construction. An uncertified coloring is returned, not an error, so
/// it can still be printed.
fn construct(
    f: Option<&str>,
    alpha: usize,
    omega: usize,
    method: MethodArg,
    g: Option<&str>,
    h: Option<&str>,
) -> Result<(Graph, Construction)> {
    let recover = |r: Result<Construction, ConstructionError>| match r {
        Ok(c) => Ok(c),
        Err(ConstructionError::NotCertified(c)) => Ok(*c),
        Err(e) => Err(e),
    };
    if let MethodArg::Ch = method {
        let (Some(g), Some(h)) = (g, h) else { bail!("--method ch needs --g and --h") };
        let (g, h) = (parse_graph_arg(g)?, parse_graph_arg(h)?);
        return match chvatal_harary_coloring(&g, &h) {
            Ok(pair) => Ok(pair),
            Err(ConstructionError::NotCertified(c)) => Ok((arrowhead::complete(c.coloring.order()), *c)),
            Err(e) => Err(e.into()),
        };
    }
    let Some(f) = f else { bail!("--f is required for this method") };
    let host = parse_graph_arg(f)?;
    let built = match method {
        MethodArg::T1 => recover(connected_coloring(&host, alpha, omega)),
        MethodArg::L2 => recover(alpha_two_coloring(&host, omega)),
        MethodArg::T3 => recover(isolatefree_coloring(&host, alpha, omega)),
        MethodArg::Ch => unreachable!("handled above"),
    }?;
    Ok((host, built))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    let start = Instant::now();
    match run(cli) {
        Ok(out) => {
            let envelope = json!({
                "command": out.command,
                "inputs": out.inputs,
                "result": out.result,
                "elapsed_ms": start.elapsed().as_millis() as u64,
            });
            println!("{envelope}");
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
