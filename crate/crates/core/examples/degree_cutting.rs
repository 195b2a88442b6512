//! Absolute, relative and snapshot cutting of high-degree vertices.
//!
//! cargo run --example degree_cutting

use fastmis::cut::{cut_absolute, cut_relative, top_degree_snapshot};
use fastmis::generators::preferential_attachment;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = preferential_attachment(5_000, 3, &mut rng);
    println!("input: n={} m={}", g.alive_count(), g.live_edge_count());

    let mut a = g.clone();
    let removed = cut_absolute(&mut a, 50);
    println!("absolute (degree > 50): removed {}, m now {}", removed.len(), a.live_edge_count());

    let mut r = g.clone();
    let steps = cut_relative(&mut r, 0.01, &mut rng);
    println!("relative 1%: removed {}, m now {}", steps.len(), r.live_edge_count());
    for s in steps.iter().take(5) {
        println!("  vertex {:>5} had degree {}", s.vertex, s.degree);
    }

    let snap = top_degree_snapshot(&g, 0.01, &mut rng);
    let overlap = snap.iter().filter(|v| steps.iter().any(|s| s.vertex == **v)).count();
    println!("snapshot 1%: {} vertices, {overlap} shared with the relative cut", snap.len());
}
