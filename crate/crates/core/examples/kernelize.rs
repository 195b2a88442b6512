//! Exact reductions on a random sparse graph, with the optimum checked
//! through the undo stack.
//!
//! cargo run --example kernelize

use fastmis::generators::gnp;
use fastmis::oracle::{exact_mis, DEFAULT_NODE_LIMIT};
use fastmis::reduce::{kernelize, RuleSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fastmis::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = gnp(36, 0.13, &mut rng);
    println!("input: n={} m={}", g.alive_count(), g.live_edge_count());

    for (name, rules) in [("kermis", RuleSet::KERMIS), ("all", RuleSet::ALL)] {
        let result = kernelize(&g, rules);
        println!("\nrule set {name}: kernel n={} m={}", result.reduced_n, result.reduced_m);
        for (rule, count) in result.counts.iter().filter(|&(_, c)| c > 0) {
            println!("  {rule:<12} {count}");
        }
        // Any independent set of the kernel lifts; an optimal one lifts to
        // an optimal one.
        let kernel_opt = exact_mis(&result.kernel, DEFAULT_NODE_LIMIT)?;
        let lifted = result.lift(&kernel_opt.witness)?;
        println!(
            "  kernel optimum {} + offset {} = {}",
            kernel_opt.size,
            result.stack.offset(),
            lifted.len()
        );
    }
    println!("\ninput optimum {}", exact_mis(&g, DEFAULT_NODE_LIMIT)?.size);
    Ok(())
}
