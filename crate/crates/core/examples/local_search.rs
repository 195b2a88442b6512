//! The local-search building blocks used directly: greedy start, (1,2)-swaps
//! to a local optimum, then iterated search with perturbation.
//!
//! cargo run --example local_search

use fastmis::arw::{greedy_initial, run_iterated, Budget, RunClock, SearchConfig};
use fastmis::generators::gnp;
use fastmis::metrics::ConvergenceLog;
use fastmis::oracle::enumerate_swaps;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = gnp(2_000, 0.003, &mut rng);

    let mut sol = greedy_initial(&g, &mut rng);
    println!("greedy: {}", sol.size());
    sol.queue_all_candidates();
    let swaps = sol.local_search(&g, fastmis::arw::UNLIMITED_PAIRS, &mut rng);
    println!("after {swaps} swaps: {} (swaps left: {})", sol.size(), enumerate_swaps(&g, &sol.membership()).len());

    let mut log = ConvergenceLog::new("gnp", "arw", 11);
    let clock = RunClock::iterations();
    let out = run_iterated(&g, sol, &SearchConfig::default(), &Budget::iterations(20_000), &clock, &mut log, 0, &mut rng);
    println!("iterated search: {} after {} iterations", out.best.len(), out.iterations);
    for p in log.points() {
        println!("  iteration {:>6}  size {}", p.elapsed, p.size);
    }
}
