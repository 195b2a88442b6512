//! KerMIS: kernelize, cut the kernel's hubs, search, lift back.
//!
//! cargo run --release --example ker_mis

use std::time::Duration;

use fastmis::arw::Budget;
use fastmis::generators::preferential_attachment;
use fastmis::pipelines::{run, Algorithm, RunConfig};
use fastmis::verify::verify;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fastmis::Result<()> {
    let g = preferential_attachment(20_000, 4, &mut ChaCha8Rng::seed_from_u64(1));
    for algorithm in [Algorithm::KerMis, Algorithm::Kernel] {
        let config = RunConfig::new(algorithm, 7, Budget::time(Duration::from_secs(2)));
        let out = run(&g, &config);
        let s = &out.stats;
        println!("{algorithm}:");
        println!("  reductions fixed {} vertices", s.fixed);
        println!("  kernel after cutting {}: n={} m={}", s.cut, s.search_n, s.search_m);
        println!("  {} iterations, final size {}", s.iterations, out.solution.len());
        let report = verify(&g, &out.solution)?;
        println!("  independent: {}, insertable: {}", report.is_independent(), report.insertable);
    }
    Ok(())
}
