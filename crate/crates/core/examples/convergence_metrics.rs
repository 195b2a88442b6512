//! Convergence logs from two solvers, compared by maximum speedup and by
//! time to 99.5% of the best size.
//!
//! cargo run --release --example convergence_metrics

use std::time::Duration;

use fastmis::arw::Budget;
use fastmis::generators::preferential_attachment;
use fastmis::metrics::{average_logs, max_speedup, quality_target, time_to_size};
use fastmis::pipelines::{run, Algorithm, RunConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fastmis::Result<()> {
    let g = preferential_attachment(30_000, 4, &mut ChaCha8Rng::seed_from_u64(4));
    let mut logs = Vec::new();
    for algorithm in [Algorithm::OnlineMis, Algorithm::Arw] {
        let config = RunConfig::new(algorithm, 1, Budget::time(Duration::from_secs(3)));
        logs.push(run(&g, &config).log);
    }
    let (online, arw) = (&logs[0], &logs[1]);

    let best = logs.iter().filter_map(|l| l.best_size()).max().unwrap_or(0);
    let target = quality_target(best, 0.995);
    println!("best {best}, 99.5% target {target}");
    for log in &logs {
        match time_to_size(log, target) {
            Some(t) => println!("  {:<10} reaches it at {t:.3}s", log.algorithm),
            None => println!("  {:<10} never reaches it", log.algorithm),
        }
    }
    if let Some(s) = max_speedup(online, arw) {
        println!("maximum speedup of onlinemis over arw: {s:.2}");
    }
    let mean = average_logs(&logs)?;
    println!("averaged curve has {} points, last {:?}", mean.len(), mean.last());

    let mut csv = Vec::new();
    online.write_csv(&mut csv)?;
    let text = String::from_utf8_lossy(&csv);
    println!("\nfirst lines of the onlinemis log:");
    for line in text.lines().take(4) {
        println!("  {line}");
    }
    Ok(())
}
