//! Command-line front end: solve, verify and report on convergence logs.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arw::{Budget, UNLIMITED_PAIRS};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{read_edge_list_file, read_metis_file, read_solution_file, write_solution};
use crate::metrics::{max_speedup, quality_target, time_to_size, ConvergenceLog};
use crate::pipelines::{run, Algorithm, RunConfig, DEFAULT_CUT_FRACTION};
use crate::reduce::{Kernelizer, RuleSet};
use crate::verify::verify;

#[derive(Debug, Parser)]
#[command(name = "fastmis", version, about = "Large independent sets in sparse graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an independent set.
    Solve(SolveArgs),
    /// Check a solution file against a graph.
    Verify(VerifyArgs),
    /// Maximum speedup of a base log over another log.
    Speedup {
        base: PathBuf,
        other: PathBuf,
    },
    /// Time each log needs to reach a fraction of the best size.
    QualityTime {
        #[arg(required = true)]
        logs: Vec<PathBuf>,
        #[arg(long, default_value_t = 0.995)]
        quality: f64,
        /// Reference size; defaults to the best size over all logs.
        #[arg(long)]
        reference: Option<usize>,
    },
    /// Apply reduction rules and report what they did.
    KernelStats {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, value_enum, default_value_t = Rules::All)]
        rules: Rules,
        /// Skip the strongly connected component pass of the LP rule.
        #[arg(long)]
        no_lp_refinement: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Metis,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rules {
    All,
    Kermis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClockArg {
    /// Iterations when an iteration budget is given, seconds otherwise.
    Auto,
    Seconds,
    Iterations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Onlinemis,
    Kermis,
    Arw,
    Kernel,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Onlinemis => Algorithm::OnlineMis,
            AlgoArg::Kermis => Algorithm::KerMis,
            AlgoArg::Arw => Algorithm::Arw,
            AlgoArg::Kernel => Algorithm::Kernel,
        }
    }
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Metis)]
    pub format: Format,
    /// Vertex count for edge lists; inferred from the largest id otherwise.
    #[arg(long)]
    pub n: Option<usize>,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        match self.format {
            Format::Metis => {
                if self.n.is_some() {
                    return Err(Error::Usage("--n only applies to edge lists".into()));
                }
                read_metis_file(&self.graph)
            }
            Format::Edges => read_edge_list_file(&self.graph, self.n),
        }
        .map_err(|e| with_path(&self.graph, e))
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("budget").required(true).args(["time_limit", "iterations"])))]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Seconds, counted from before preprocessing.
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long)]
    pub iterations: Option<u64>,
    /// Stop once a solution of this size is found.
    #[arg(long)]
    pub target_size: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CUT_FRACTION)]
    pub cut_fraction: f64,
    /// Valid swap pairs examined per vertex; 0 for no limit.
    #[arg(long, default_value_t = 100)]
    pub pair_cap: usize,
    #[arg(long, value_enum, default_value_t = ClockArg::Auto)]
    pub clock: ClockArg,
    #[arg(long)]
    pub log: Option<PathBuf>,
    #[arg(long)]
    pub solution: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long)]
    pub solution: PathBuf,
}

/// Parses `args` (program name first), runs the command and maps errors
/// to a diagnostic on stderr.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = std::io::stdout();
    match execute(&cli.command, &mut stdout.lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("fastmis: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command. `Ok(false)` means the command ran but the check it
/// performs failed.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Solve(args) => solve(args, out),
        Command::Verify(args) => {
            let g = args.input.load()?;
            let solution =
                read_solution_file(&args.solution).map_err(|e| with_path(&args.solution, e))?;
            let report = verify(&g, &solution)?;
            writeln!(out, "{report}")?;
            Ok(report.is_independent())
        }
        Command::Speedup { base, other } => {
            let base = read_log(base)?;
            let other = read_log(other)?;
            let s = max_speedup(&base, &other)
                .ok_or(Error::Empty("base log has no points"))?;
            if s.is_infinite() {
                writeln!(out, "inf")?;
            } else {
                writeln!(out, "{s:.2}")?;
            }
            Ok(true)
        }
        Command::QualityTime {
            logs,
            quality,
            reference,
        } => quality_time(logs, *quality, *reference, out),
        Command::KernelStats {
            input,
            rules,
            no_lp_refinement,
        } => {
            let g = input.load()?;
            let rules = match rules {
                Rules::All => RuleSet::ALL,
                Rules::Kermis => RuleSet::KERMIS,
            };
            let mut k = Kernelizer::new(g.clone()).with_lp_refinement(!no_lp_refinement);
            k.run(rules);
            let result = k.finish();
            writeln!(out, "input n={} m={}", g.alive_count(), g.live_edge_count())?;
            for (rule, count) in result.counts.iter() {
                writeln!(out, "{:<12} {count}", rule.name())?;
            }
            writeln!(out, "kernel n={} m={}", result.reduced_n, result.reduced_m)?;
            writeln!(out, "fixed {}", result.stack.offset())?;
            Ok(true)
        }
    }
}

fn solve(args: &SolveArgs, out: &mut dyn Write) -> Result<bool> {
    if !(0.0..=1.0).contains(&args.cut_fraction) {
        return Err(Error::Usage("--cut-fraction must lie in [0, 1]".into()));
    }
    let mut budget = match (args.time_limit, args.iterations) {
        (Some(t), None) => {
            let limit = Duration::try_from_secs_f64(t)
                .map_err(|_| Error::Usage("--time-limit must be a non-negative number".into()))?;
            Budget::time(limit)
        }
        (None, Some(i)) => Budget::iterations(i),
        _ => return Err(Error::Usage("give exactly one of --time-limit and --iterations".into())),
    };
    budget.target_size = args.target_size;
    let g = args.input.load()?;
    let mut config = RunConfig::new(args.algo.into(), args.seed, budget);
    config.cut_fraction = args.cut_fraction;
    config.search.pair_cap = if args.pair_cap == 0 {
        UNLIMITED_PAIRS
    } else {
        args.pair_cap
    };
    config.iteration_clock = match args.clock {
        ClockArg::Auto => args.iterations.is_some(),
        ClockArg::Seconds => false,
        ClockArg::Iterations => true,
    };
    config.instance = args
        .input
        .graph
        .file_stem()
        .map(|s| s.to_string_lossy().replace(char::is_whitespace, "_"))
        .unwrap_or_default();
    let outcome = run(&g, &config);
    // Never hand out an answer that fails the independent check.
    let report = verify(&g, &outcome.solution)?;
    if let Some((u, v)) = report.conflict {
        return Err(Error::NotIndependent(u, v));
    }
    if let Some(path) = &args.solution {
        write_solution(&outcome.solution, create(path)?)?;
    }
    if let Some(path) = &args.log {
        outcome.log.write_csv(create(path)?)?;
    }
    let s = &outcome.stats;
    writeln!(out, "algorithm {}", config.algorithm)?;
    writeln!(out, "size {}", outcome.solution.len())?;
    writeln!(out, "iterations {}", s.iterations)?;
    writeln!(out, "fixed {}", s.fixed)?;
    writeln!(out, "cut {}", s.cut)?;
    writeln!(out, "online commits {}", s.commits)?;
    writeln!(out, "search graph n={} m={}", s.search_n, s.search_m)?;
    Ok(true)
}

fn quality_time(
    paths: &[PathBuf],
    quality: f64,
    reference: Option<usize>,
    out: &mut dyn Write,
) -> Result<bool> {
    if !(quality > 0.0 && quality <= 1.0) {
        return Err(Error::Usage("--quality must lie in (0, 1]".into()));
    }
    let logs: Vec<ConvergenceLog> = paths.iter().map(|p| read_log(p)).collect::<Result<_>>()?;
    let reference = match reference {
        Some(r) => r,
        None => logs
            .iter()
            .filter_map(ConvergenceLog::best_size)
            .max()
            .ok_or(Error::Empty("logs have no points"))?,
    };
    let target = quality_target(reference, quality);
    writeln!(out, "reference {reference} target {target}")?;
    let mut per_algorithm: BTreeMap<&str, (f64, usize, usize)> = BTreeMap::new();
    for (path, log) in paths.iter().zip(&logs) {
        let t = time_to_size(log, target);
        let entry = per_algorithm.entry(log.algorithm.as_str()).or_default();
        entry.2 += 1;
        match t {
            Some(t) => {
                entry.0 += t;
                entry.1 += 1;
                writeln!(out, "{} {t}", path.display())?;
            }
            None => writeln!(out, "{} -", path.display())?,
        }
    }
    for (algorithm, (total, reached, runs)) in per_algorithm {
        let name = if algorithm.is_empty() { "?" } else { algorithm };
        if reached == 0 {
            writeln!(out, "average {name} - (0/{runs} reached)")?;
        } else {
            let mean = total / reached as f64;
            writeln!(out, "average {name} {mean} ({reached}/{runs} reached)")?;
        }
    }
    Ok(true)
}

fn read_log(path: &Path) -> Result<ConvergenceLog> {
    File::open(path)
        .map_err(Error::from)
        .and_then(ConvergenceLog::read_csv)
        .map_err(|e| with_path(path, e))
}

fn create(path: &Path) -> Result<File> {
    File::create(path).map_err(|e| with_path(path, e.into()))
}

/// Prefixes I/O and parse errors with the file they came from.
fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Io(io) => Error::Io(std::io::Error::new(
            io.kind(),
            format!("{}: {io}", path.display()),
        )),
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{message} (in {})", path.display()),
        },
        other => other,
    }
}
