//! OnlineMIS on a scale-free graph: snapshot cut, one pass of forced
//! low-degree vertices, then local search that keeps committing isolated
//! vertices as they appear.
//!
//! cargo run --release --example online_mis

use std::time::Duration;

use fastmis::arw::Budget;
use fastmis::generators::preferential_attachment;
use fastmis::pipelines::{run, Algorithm, RunConfig};
use fastmis::verify::verify;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fastmis::Result<()> {
    let g = preferential_attachment(20_000, 4, &mut ChaCha8Rng::seed_from_u64(1));
    let config = RunConfig::new(Algorithm::OnlineMis, 7, Budget::time(Duration::from_secs(2)));
    let out = run(&g, &config);

    let s = &out.stats;
    println!("cut {} hubs, forced {} vertices in the single pass", s.cut, s.fixed);
    println!("search graph n={} m={}", s.search_n, s.search_m);
    println!("{} iterations, {} online commits", s.iterations, s.commits);
    for p in out.log.points().iter().rev().take(5).rev() {
        println!("  {:>8.3}s  {}", p.elapsed, p.size);
    }
    let report = verify(&g, &out.solution)?;
    println!("{report}");
    Ok(())
}
