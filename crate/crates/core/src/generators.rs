//! Seeded synthetic graph families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

/// Uniform random recursive tree: vertex `i` attaches to a random earlier
/// vertex.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

/// `rows × cols` grid mesh.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("endpoints are in range")
}

/// Preferential attachment. Each new vertex links to between 1 and
/// `max_links` distinct earlier vertices chosen proportionally to degree,
/// which yields a heavy-tailed degree distribution with many low-degree
/// vertices.
pub fn preferential_attachment<R: Rng + ?Sized>(n: usize, max_links: usize, rng: &mut R) -> Graph {
    let max_links = max_links.max(1);
    let mut endpoints: Vec<Vertex> = Vec::new();
    let mut edges = Vec::new();
    let mut picked = Vec::with_capacity(max_links);
    for v in 1..n {
        let links = rng.gen_range(1..=max_links).min(v);
        picked.clear();
        while picked.len() < links {
            let u = if endpoints.is_empty() || rng.gen_bool(0.1) {
                rng.gen_range(0..v)
            } else {
                *endpoints.choose(rng).expect("non-empty")
            };
            if !picked.contains(&u) {
                picked.push(u);
            }
        }
        for &u in &picked {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = random_tree(20, &mut rng);
        assert_eq!(t.live_edge_count(), 19);
        let g = grid(10, 20);
        assert_eq!(g.alive_count(), 200);
        assert_eq!(g.live_edge_count(), 10 * 19 + 9 * 20);
        assert_eq!(gnp(6, 1.0, &mut rng).live_edge_count(), 15);
        assert_eq!(gnp(6, 0.0, &mut rng).live_edge_count(), 0);
    }

    #[test]
    fn attachment_is_heavy_tailed() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = preferential_attachment(5000, 4, &mut rng);
        let max = g.alive_vertices().map(|v| g.live_degree(v)).max().unwrap();
        let low = g.alive_vertices().filter(|&v| g.live_degree(v) <= 2).count();
        assert!(max > 100, "max degree {max}");
        assert!(low > 1000, "low-degree count {low}");
        g.validate().unwrap();
    }
}
