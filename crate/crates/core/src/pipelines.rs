//! Composite solvers built from kernelization, cutting and local search.
//!
//! Every entry point returns an independent set of the input graph as
//! sorted input-graph ids. Sizes are logged in input-graph terms, so a log
//! point is always the size of a solution the caller could reconstruct.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arw::{greedy_initial, run_iterated, Budget, RunClock, SearchConfig};
use crate::cut::{cut_relative, top_degree_snapshot};
use crate::graph::{Graph, Vertex};
use crate::metrics::ConvergenceLog;
use crate::reduce::{kernelize, RuleSet};

/// Fraction of highest-degree vertices cut by default.
pub const DEFAULT_CUT_FRACTION: f64 = 0.01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    OnlineMis,
    KerMis,
    Arw,
    /// Full kernelization, isolated vertices included, then local search on
    /// the uncut kernel.
    Kernel,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::OnlineMis,
        Algorithm::KerMis,
        Algorithm::Arw,
        Algorithm::Kernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::OnlineMis => "onlinemis",
            Algorithm::KerMis => "kermis",
            Algorithm::Arw => "arw",
            Algorithm::Kernel => "kernel",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// Shared inputs of the pipeline functions.
#[derive(Clone, Copy, Debug)]
pub struct Context<'a> {
    pub search: &'a SearchConfig,
    pub budget: &'a Budget,
    pub clock: &'a RunClock,
}

/// What a pipeline did besides producing its answer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PipelineStats {
    pub iterations: u64,
    /// Vertices fixed before search: the single pass of OnlineMIS or the
    /// reduction offset of the kernel-based pipelines.
    pub fixed: usize,
    /// Vertices committed by the online isolated check during search.
    pub commits: usize,
    pub cut: usize,
    /// Residual graph handed to local search.
    pub search_n: usize,
    pub search_m: usize,
}

/// Cuts the top `cut_fraction` of vertices by snapshot degree, forces
/// low-degree isolated vertices in with one pass in id order, then runs
/// local search with the isolated check on every insertion.
pub fn online_mis<R: Rng + ?Sized>(
    g: &Graph,
    cut_fraction: f64,
    ctx: Context<'_>,
    log: &mut ConvergenceLog,
    rng: &mut R,
) -> (Vec<Vertex>, PipelineStats) {
    let mut residual = g.clone();
    let cut = top_degree_snapshot(g, cut_fraction, rng);
    for &v in &cut {
        residual.remove_vertex(v).expect("snapshot vertices are alive");
    }
    let mut forced = Vec::new();
    for v in 0..residual.id_bound() {
        if residual.is_alive(v) && is_low_degree_isolated(&residual, v) {
            let nb: Vec<Vertex> = residual.live_neighbors(v).collect();
            residual.remove_vertex(v).expect("alive");
            for u in nb {
                residual.remove_vertex(u).expect("alive");
            }
            forced.push(v);
        }
    }
    let search = SearchConfig {
        online: true,
        ..*ctx.search
    };
    let mut stats = PipelineStats {
        fixed: forced.len(),
        cut: cut.len(),
        ..PipelineStats::default()
    };
    let found = search_residual(&residual, forced.len(), &search, ctx, log, rng, &mut stats);
    forced.extend(found);
    forced.sort_unstable();
    (forced, stats)
}

/// Degree at most two and a clique closed neighbourhood.
fn is_low_degree_isolated(g: &Graph, v: Vertex) -> bool {
    let mut nb = g.live_neighbors(v);
    match (nb.next(), nb.next(), nb.next()) {
        (None, _, _) | (Some(_), None, _) => true,
        (Some(a), Some(b), None) => g.has_edge(a, b),
        _ => false,
    }
}

/// Kernelizes without the isolated rule, cuts the kernel relatively, runs
/// local search on what remains and lifts the result.
pub fn ker_mis<R: Rng + ?Sized>(
    g: &Graph,
    cut_fraction: f64,
    ctx: Context<'_>,
    log: &mut ConvergenceLog,
    rng: &mut R,
) -> (Vec<Vertex>, PipelineStats) {
    kernel_then_search(g, RuleSet::KERMIS, cut_fraction, ctx, log, rng)
}

/// Greedy start plus iterated local search on the whole graph.
pub fn plain_arw<R: Rng + ?Sized>(
    g: &Graph,
    ctx: Context<'_>,
    log: &mut ConvergenceLog,
    rng: &mut R,
) -> (Vec<Vertex>, PipelineStats) {
    let mut stats = PipelineStats::default();
    let best = search_residual(g, 0, ctx.search, ctx, log, rng, &mut stats);
    (best, stats)
}

/// Every reduction rule, no cutting, then local search on the kernel.
pub fn kernel_mis<R: Rng + ?Sized>(
    g: &Graph,
    ctx: Context<'_>,
    log: &mut ConvergenceLog,
    rng: &mut R,
) -> (Vec<Vertex>, PipelineStats) {
    kernel_then_search(g, RuleSet::ALL, 0.0, ctx, log, rng)
}

fn kernel_then_search<R: Rng + ?Sized>(
    g: &Graph,
    rules: RuleSet,
    cut_fraction: f64,
    ctx: Context<'_>,
    log: &mut ConvergenceLog,
    rng: &mut R,
) -> (Vec<Vertex>, PipelineStats) {
    let result = kernelize(g, rules);
    let offset = result.stack.offset();
    let mut stats = PipelineStats {
        fixed: offset,
        ..PipelineStats::default()
    };
    if result.reduced_n == 0 {
        log.record(ctx.clock.stamp(0), offset);
        let lifted = result.lift(&[]).expect("empty set is independent");
        return (lifted, stats);
    }
    let mut residual = result.kernel.clone();
    stats.cut = cut_relative(&mut residual, cut_fraction, rng).len();
    let found = search_residual(&residual, offset, ctx.search, ctx, log, rng, &mut stats);
    let lifted = result
        .lift(&found)
        .expect("search returns an independent set of the kernel");
    (lifted, stats)
}

/// Runs greedy plus iterated local search on the alive part of `g` and
/// returns the best set in `g`'s ids.
fn search_residual<R: Rng + ?Sized>(
    g: &Graph,
    offset: usize,
    search: &SearchConfig,
    ctx: Context<'_>,
    log: &mut ConvergenceLog,
    rng: &mut R,
    stats: &mut PipelineStats,
) -> Vec<Vertex> {
    let (h, old_ids) = g.compact();
    stats.search_n = h.alive_count();
    stats.search_m = h.live_edge_count();
    if h.alive_count() == 0 {
        log.record(ctx.clock.stamp(0), offset);
        return Vec::new();
    }
    let start = greedy_initial(&h, rng);
    let outcome = run_iterated(&h, start, search, ctx.budget, ctx.clock, log, offset, rng);
    stats.iterations = outcome.iterations;
    stats.commits = outcome.commits;
    outcome.best.into_iter().map(|v| old_ids[v]).collect()
}

/// One solver invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub budget: Budget,
    pub search: SearchConfig,
    pub cut_fraction: f64,
    /// Log iteration numbers instead of seconds.
    pub iteration_clock: bool,
    pub instance: String,
}

impl RunConfig {
    pub fn new(algorithm: Algorithm, seed: u64, budget: Budget) -> Self {
        RunConfig {
            algorithm,
            seed,
            budget,
            search: SearchConfig::default(),
            cut_fraction: DEFAULT_CUT_FRACTION,
            iteration_clock: false,
            instance: String::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    /// Sorted input-graph ids.
    pub solution: Vec<Vertex>,
    pub log: ConvergenceLog,
    pub stats: PipelineStats,
}

/// Seeds the generator, starts the clock before any preprocessing and
/// dispatches to the chosen pipeline.
pub fn run(g: &Graph, config: &RunConfig) -> RunOutcome {
    let clock = if config.iteration_clock {
        RunClock::iterations()
    } else {
        RunClock::wall()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut log = ConvergenceLog::new(&config.instance, config.algorithm.name(), config.seed);
    log.clock = clock.name().to_string();
    let ctx = Context {
        search: &config.search,
        budget: &config.budget,
        clock: &clock,
    };
    let (solution, stats) = match config.algorithm {
        Algorithm::OnlineMis => online_mis(g, config.cut_fraction, ctx, &mut log, &mut rng),
        Algorithm::KerMis => ker_mis(g, config.cut_fraction, ctx, &mut log, &mut rng),
        Algorithm::Arw => plain_arw(g, ctx, &mut log, &mut rng),
        Algorithm::Kernel => kernel_mis(g, ctx, &mut log, &mut rng),
    };
    RunOutcome {
        solution,
        log,
        stats,
    }
}
