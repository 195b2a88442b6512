//! The exact solver and swap enumeration used as test oracles.
//!
//! cargo run --example exact_oracle

use fastmis::oracle::{enumerate_swaps, exact_mis, exact_mis_bruteforce, DEFAULT_NODE_LIMIT};
use fastmis::Graph;

fn main() -> fastmis::Result<()> {
    let petersen = {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner))?
    };
    let bb = exact_mis(&petersen, DEFAULT_NODE_LIMIT)?;
    let brute = exact_mis_bruteforce(&petersen)?;
    println!("petersen: branch and bound {} {:?}, brute force {}", bb.size, bb.witness, brute.size);

    let p5 = Graph::from_edges(5, (1..5).map(|i| (i - 1, i)))?;
    let mut member = vec![false; 5];
    member[0] = true;
    member[3] = true;
    println!("P5 from {{0, 3}}: swaps {:?}", enumerate_swaps(&p5, &member));

    let too_big = Graph::new(DEFAULT_NODE_LIMIT + 1);
    if let Err(e) = exact_mis(&too_big, DEFAULT_NODE_LIMIT) {
        println!("refused: {e}");
    }
    Ok(())
}
