//! Reads a METIS file (or a built-in sample), solves it and writes the
//! solution in the one-id-per-line format.
//!
//! cargo run --example read_metis -- path/to/graph.metis

use fastmis::arw::Budget;
use fastmis::io::{read_metis, read_metis_file, write_solution};
use fastmis::pipelines::{run, Algorithm, RunConfig};

const SAMPLE: &str = "% a 6-cycle with one chord
6 7
2 6
1 3
2 4 6
3 5
4 6
1 5 3
";

fn main() -> fastmis::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => read_metis_file(path)?,
        None => read_metis(SAMPLE.as_bytes())?,
    };
    println!("n={} m={}", g.alive_count(), g.live_edge_count());
    let mut config = RunConfig::new(Algorithm::KerMis, 0, Budget::iterations(1_000));
    config.iteration_clock = true;
    let out = run(&g, &config);
    println!("independent set of size {}:", out.solution.len());
    write_solution(&out.solution, std::io::stdout())?;
    Ok(())
}
