use fastmis::cut::{cut_relative, top_degree_snapshot};
use fastmis::generators::gnp;
use fastmis::io::{read_edge_list, read_metis, write_edge_list, write_metis};
use fastmis::{Graph, Vertex};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn edges_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..30).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..80)))
}

proptest! {
    #[test]
    fn loading_dedupes_and_drops_self_loops((n, edges) in edges_strategy()) {
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        g.validate().map_err(TestCaseError::fail)?;
        let mut want: Vec<(usize, usize)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        want.sort_unstable();
        want.dedup();
        prop_assert_eq!(g.live_edges(), want);
    }

    #[test]
    fn random_mutations_keep_the_graph_consistent((n, edges) in edges_strategy(), seed in any::<u64>()) {
        let mut g = Graph::from_edges(n, edges).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..40 {
            let alive: Vec<Vertex> = g.alive_vertices().collect();
            if alive.is_empty() {
                break;
            }
            let v = alive[rng.gen_range(0..alive.len())];
            match rng.gen_range(0..4) {
                0 => g.remove_vertex(v).unwrap(),
                1 => {
                    let u = alive[rng.gen_range(0..alive.len())];
                    g.add_edge(u, v).unwrap();
                }
                2 => {
                    let nb: Vec<Vertex> = g.live_neighbors(v).take(3).collect();
                    g.add_gadget(&nb).unwrap();
                }
                _ => {
                    let nb: Vec<Vertex> = g.live_neighbors(v).collect();
                    if nb.len() == 2 && !g.has_edge(nb[0], nb[1]) {
                        g.contract_fold(v, nb[0], nb[1]).unwrap();
                    } else {
                        prop_assert!(nb.len() != 2 || g.contract_fold(v, nb[0], nb[1]).is_err());
                    }
                }
            }
            g.validate().map_err(TestCaseError::fail)?;
            let m: usize = g.alive_vertices().map(|v| g.live_degree(v)).sum();
            prop_assert_eq!(m, 2 * g.live_edge_count());
        }
        let (h, old) = g.compact();
        prop_assert_eq!(h.alive_count(), g.alive_count());
        prop_assert_eq!(h.live_edge_count(), g.live_edge_count());
        for (a, b) in h.live_edges() {
            prop_assert!(g.has_edge(old[a], old[b]));
        }
    }

    #[test]
    fn metis_and_edge_list_round_trip((n, edges) in edges_strategy()) {
        let g = Graph::from_edges(n, edges).unwrap();
        let mut buf = Vec::new();
        write_metis(&g, &mut buf).unwrap();
        let back = read_metis(buf.as_slice()).unwrap();
        prop_assert_eq!(back.alive_count(), n);
        prop_assert_eq!(back.live_edges(), g.live_edges());
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = read_edge_list(buf.as_slice(), Some(n)).unwrap();
        prop_assert_eq!(back.live_edges(), g.live_edges());
    }

    #[test]
    fn relative_cutting_always_takes_a_maximum_degree_vertex(
        seed in any::<u64>(),
        n in 1usize..60,
        density in 0.0f64..0.4,
        fraction in 0.0f64..=1.0,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gnp(n, density, &mut rng);
        let mut cut = g.clone();
        let steps = cut_relative(&mut cut, fraction, &mut rng);
        // Smallest count reaching fraction · n.
        let exact = fraction * n as f64;
        prop_assert!(steps.len() as f64 >= exact - 1e-9);
        prop_assert!(steps.is_empty() || ((steps.len() - 1) as f64) < exact - 1e-9);
        let mut replay = g.clone();
        for s in steps {
            let max = replay.alive_vertices().map(|v| replay.live_degree(v)).max().unwrap();
            prop_assert_eq!(replay.live_degree(s.vertex), max);
            prop_assert_eq!(s.degree, max);
            replay.remove_vertex(s.vertex).unwrap();
        }
        let snap = top_degree_snapshot(&g, fraction, &mut rng);
        let floor = snap.iter().map(|&v| g.live_degree(v)).min();
        if let Some(floor) = floor {
            let above = g.alive_vertices().filter(|&v| g.live_degree(v) > floor).count();
            prop_assert!(above <= snap.len());
        }
    }
}
