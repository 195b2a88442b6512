//! Inexact removal of high-degree vertices.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::buckets::DegreeBuckets;
use crate::graph::{Graph, Vertex};

/// Number of vertices a fraction selects out of `alive`, rounded up.
/// Products within floating-point noise of an integer are not bumped up.
pub fn cut_count(fraction: f64, alive: usize) -> usize {
    let exact = fraction.clamp(0.0, 1.0) * alive as f64;
    let nearest = exact.round();
    let count = if (exact - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest
    } else {
        exact.ceil()
    };
    (count as usize).min(alive)
}

/// Removes every alive vertex whose live degree exceeds `threshold`,
/// judged on the degrees before any removal. Returns the removed ids in
/// increasing order.
pub fn cut_absolute(g: &mut Graph, threshold: usize) -> Vec<Vertex> {
    let removed: Vec<Vertex> = g
        .alive_vertices()
        .filter(|&v| g.live_degree(v) > threshold)
        .collect();
    for &v in &removed {
        g.remove_vertex(v).expect("selected vertex is alive");
    }
    removed
}

/// One step of relative cutting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutStep {
    pub vertex: Vertex,
    /// Live degree of `vertex` when it was removed.
    pub degree: usize,
}

/// Repeatedly removes a vertex of maximum current live degree, ties broken
/// uniformly at random, until `⌈fraction · alive⌉` vertices are gone.
/// Returns the removals in order.
pub fn cut_relative<R: Rng + ?Sized>(g: &mut Graph, fraction: f64, rng: &mut R) -> Vec<CutStep> {
    let count = cut_count(fraction, g.alive_count());
    if count == 0 {
        return Vec::new();
    }
    let max_degree = g.alive_vertices().map(|v| g.live_degree(v)).max().unwrap_or(0);
    let mut queue = DegreeBuckets::new(g.id_bound(), max_degree);
    for v in g.alive_vertices() {
        queue.insert(v, g.live_degree(v));
    }
    let mut steps = Vec::with_capacity(count);
    while steps.len() < count {
        let v = queue.pop_max_random(rng).expect("enough vertices remain");
        steps.push(CutStep {
            vertex: v,
            degree: g.live_degree(v),
        });
        g.remove_vertex(v).expect("queued vertex is alive");
        for &u in g.adjacency(v) {
            if g.is_alive(u) {
                queue.decrement(u);
            }
        }
    }
    steps
}

/// Picks the `⌈fraction · alive⌉` vertices of highest live degree in one
/// snapshot, ties broken at random. The graph is not modified.
pub fn top_degree_snapshot<R: Rng + ?Sized>(g: &Graph, fraction: f64, rng: &mut R) -> Vec<Vertex> {
    let count = cut_count(fraction, g.alive_count());
    if count == 0 {
        return Vec::new();
    }
    let mut order: Vec<Vertex> = g.alive_vertices().collect();
    order.shuffle(rng);
    // Stable sort keeps the shuffled order inside each degree class.
    order.sort_by_key(|&v| std::cmp::Reverse(g.live_degree(v)));
    order.truncate(count);
    order.sort_unstable();
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn star(leaves: usize, offset: usize, edges: &mut Vec<(Vertex, Vertex)>) {
        for i in 1..=leaves {
            edges.push((offset, offset + i));
        }
    }

    #[test]
    fn absolute_examples() {
        let mut e = Vec::new();
        star(9, 0, &mut e);
        let mut g = Graph::from_edges(10, e).unwrap();
        assert_eq!(cut_absolute(&mut g, 5), vec![0]);
        assert_eq!(g.alive_count(), 9);
        assert_eq!(g.live_edge_count(), 0);

        let mut cube = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        assert!(cut_absolute(&mut cube, 3).is_empty());

        let mut p = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(cut_absolute(&mut p, 0), vec![0, 1, 2]);
    }

    #[test]
    fn relative_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut mesh = grid(10, 20);
        assert_eq!(cut_relative(&mut mesh, 0.01, &mut rng).len(), 2);

        let mut e = Vec::new();
        star(5, 0, &mut e);
        star(5, 6, &mut e);
        let mut g = Graph::from_edges(12, e).unwrap();
        let steps = cut_relative(&mut g, 2.0 / 12.0, &mut rng);
        let mut removed: Vec<Vertex> = steps.iter().map(|s| s.vertex).collect();
        removed.sort_unstable();
        assert_eq!(removed, vec![0, 6]);

        assert!(cut_relative(&mut grid(3, 3), 0.0, &mut rng).is_empty());
    }

    #[test]
    fn snapshot_picks_the_hub() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut e = Vec::new();
        star(99, 0, &mut e);
        let g = Graph::from_edges(100, e).unwrap();
        assert_eq!(top_degree_snapshot(&g, 0.01, &mut rng), vec![0]);
        assert_eq!(cut_count(0.01, 100), 1);
        assert_eq!(cut_count(0.011, 100), 2);
        assert_eq!(cut_count(0.07, 100), 7);
    }
}
