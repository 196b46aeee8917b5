//! `booktri`: books-versus-triangles statistics, constructions and searches.
//!
//! Exit codes: 0 success, 1 usage or parameter error, 2 parse error,
//! 3 hypothesis violation, 4 resource guard.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use booktri::analytics::analyze;
use booktri::constructions::{
    edwards_generalized, rademacher_extremal, theorem1_sharp, Alpha, ConstructionParams, Rounding,
};
use booktri::par::Exec;
use booktri::partition::{bipartize_rewire, stability_partition};
use booktri::search::{
    alpha_sweep, anneal_min_triangles, extremal_scan_with, sweep_csv, AnnealParams, ScanOptions,
    SweepConfig,
};
use booktri::to_graph6;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::io::{read_graph, write_output, CliError};

#[derive(Parser, Debug)]
#[command(
    name = "booktri",
    version,
    about = "Books and triangles in graphs past the Turán threshold"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output encoding of the result record.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Result file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for exhaustive scans.
    #[arg(long, global = true, env = "BOOKTRI_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// PRNG seed; required by every randomized command.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triangle count, maximum book and book-size histogram of a graph file (.g6 or .el).
    Analyze { input: PathBuf },
    /// Build an extremal construction and check its predicted statistics.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Book-cap ratio as a fraction p/q.
        #[arg(long)]
        alpha: Option<Alpha>,
        #[arg(long, value_enum, default_value_t = RoundingArg::Floor)]
        rounding: RoundingArg,
        /// Also write the graph6 line to this file.
        #[arg(long)]
        graph6: Option<PathBuf>,
    },
    /// Pareto frontier of (max book, triangles) over graphs with n vertices and e edges.
    Frontier {
        #[arg(long)]
        n: usize,
        /// Edge count; defaults to ⌊n²/4⌋ + 1.
        #[arg(long)]
        e: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Anneal: strict upper bound on the book size; defaults to n (no constraint).
        #[arg(long)]
        book_cap: Option<u32>,
        /// Anneal: number of proposed moves.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Anneal: starting graph file.
        #[arg(long)]
        init: Option<PathBuf>,
        /// Exhaustive: lift the n <= 8 guard (unsafe, up to n = 16).
        #[arg(long)]
        allow_large: bool,
        /// Exhaustive: report the running count of scanned graphs on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Best known triangle count for each book-cap ratio.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Comma-separated fractions in (1/3, 1).
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<Alpha>,
        /// Annealing proposals per ratio; 0 reports constructions only.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Max-degree stability partition of a triangle-free graph.
    Stability {
        input: PathBuf,
        /// Write the bipartized graph as graph6 to this file.
        #[arg(long)]
        rewire: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Rademacher,
    Theorem1,
    Edwards,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RoundingArg {
    Floor,
    BelowCap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Anneal,
}

fn require_seed(global: &Global, what: &str) -> Result<u64, CliError> {
    global
        .seed
        .ok_or_else(|| CliError::Usage(format!("{what} is randomized and requires --seed")))
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool.
#[cfg(feature = "parallel")]
fn in_pool<R: Send>(threads: Option<u32>, f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|err| CliError::Usage(err.to_string())),
        None => Ok(f()),
    }
}

#[cfg(not(feature = "parallel"))]
fn in_pool<R>(_threads: Option<u32>, f: impl FnOnce() -> R) -> Result<R, CliError> {
    Ok(f())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let (body, summary) = match cli.command {
        Command::Analyze { input } => {
            let graph = read_graph(&input)?;
            let r = analyze(&graph);
            let b = r.b.map_or("none".to_string(), |b| b.to_string());
            let body = match g.format {
                Format::Json => json(&r),
                Format::Csv => {
                    let mut s = String::from("book_size,edges\n");
                    for (k, c) in &r.histogram {
                        s.push_str(&format!("{k},{c}\n"));
                    }
                    s
                }
            };
            (body, format!("n={} m={} t={} b={b}", r.n, r.m, r.t))
        }
        Command::Construct {
            kind,
            n,
            alpha,
            rounding,
            graph6,
        } => {
            let need_alpha = || {
                alpha
                    .ok_or_else(|| CliError::Usage("this construction requires --alpha p/q".into()))
            };
            let rounding = match rounding {
                RoundingArg::Floor => Rounding::Floor,
                RoundingArg::BelowCap => Rounding::BelowCap,
            };
            let report = match kind {
                Kind::Rademacher => rademacher_extremal(n)?,
                Kind::Theorem1 => theorem1_sharp(&ConstructionParams {
                    n,
                    alpha: need_alpha()?,
                    rounding,
                })?,
                Kind::Edwards => edwards_generalized(&ConstructionParams {
                    n,
                    alpha: need_alpha()?,
                    rounding,
                })?,
            };
            let rec = report.record();
            if let Some(path) = graph6 {
                io::write_file(&path, &format!("{}\n", rec.graph6))?;
            }
            let body = match g.format {
                Format::Json => json(&rec),
                Format::Csv => format!(
                    "kind,n,m,alpha,t,b,book_below_cap,matches,graph6\n{},{},{},{},{},{},{},{},{}\n",
                    rec.kind,
                    rec.n,
                    rec.m,
                    rec.alpha.map(|a| a.to_string()).unwrap_or_default(),
                    rec.measured_t,
                    rec.measured_b,
                    rec.book_below_cap.map(|b| b.to_string()).unwrap_or_default(),
                    rec.matches,
                    rec.graph6
                ),
            };
            write_output(g.out.as_deref(), &body)?;
            eprintln!(
                "{} n={} m={} t={} b={}",
                rec.kind, rec.n, rec.m, rec.measured_t, rec.measured_b
            );
            if !rec.matches {
                return Err(CliError::Hypothesis(format!(
                    "self-check failed: predicted t={} b={}, measured t={} b={}",
                    rec.predicted_t, rec.predicted_b, rec.measured_t, rec.measured_b
                )));
            }
            return Ok(());
        }
        Command::Frontier {
            n,
            e,
            mode,
            book_cap,
            budget,
            init,
            allow_large,
            progress,
        } => {
            let e = e.unwrap_or(n * n / 4 + 1);
            let rec = match mode {
                Mode::Exhaustive => {
                    let report = |c: u64| eprintln!("scanned {c}");
                    let opts = ScanOptions {
                        exec: Exec::Parallel,
                        allow_large,
                        progress: progress.then_some(&report as &(dyn Fn(u64) + Sync)),
                    };
                    in_pool(g.threads, || extremal_scan_with(n, e, &opts))??
                }
                Mode::Anneal => {
                    let seed = require_seed(g, "anneal mode")?;
                    let mut params = AnnealParams::new(book_cap.unwrap_or(n as u32), budget, seed);
                    if let Some(path) = init {
                        params = params.with_init(read_graph(&path)?);
                    }
                    anneal_min_triangles(n, e, &params)?
                }
            };
            let body = match g.format {
                Format::Json => json(&rec),
                Format::Csv => rec.to_csv(),
            };
            (body, rec.summary())
        }
        Command::Sweep { n, alphas, budget } => {
            let seed = require_seed(g, "sweep")?;
            let rows = alpha_sweep(
                n,
                &alphas,
                &SweepConfig::new(seed, budget),
                Exec::Sequential,
            )?;
            let body = match g.format {
                Format::Json => json(&rows),
                Format::Csv => sweep_csv(&rows),
            };
            let feasible = rows.iter().filter(|r| r.feasible).count();
            (
                body,
                format!(
                    "n={n} alphas={} feasible={feasible} (empirical upper bounds)",
                    rows.len()
                ),
            )
        }
        Command::Stability { input, rewire } => {
            let graph = read_graph(&input)?;
            let report = stability_partition(&graph)?;
            let rec = report.record(&graph);
            if let Some(path) = rewire {
                let h = bipartize_rewire(&graph)?;
                io::write_file(&path, &format!("{}\n", to_graph6(&h)))?;
            }
            let body = match g.format {
                Format::Json => json(&rec),
                Format::Csv => format!(
                    "n,m,k,internal_x,internal_y\n{},{},{},{},{}\n",
                    rec.n, rec.m, rec.k, rec.internal_x, rec.internal_y
                ),
            };
            (
                body,
                format!(
                    "n={} m={} k={} internal_x={} internal_y={}",
                    rec.n, rec.m, rec.k, rec.internal_x, rec.internal_y
                ),
            )
        }
    };
    write_output(g.out.as_deref(), &body)?;
    eprintln!("{summary}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if let CliError::Core(booktri::Error::Parameter(_)) | CliError::Usage(_) = err {
                eprintln!("run `booktri help` for usage");
            }
            ExitCode::from(err.exit_code())
        }
    }
}
