use fastmis::arw::Budget;
use fastmis::cut::top_degree_snapshot;
use fastmis::generators::{gnp, preferential_attachment, random_tree};
use fastmis::oracle::{exact_mis, is_independent, DEFAULT_NODE_LIMIT};
use fastmis::pipelines::{run, Algorithm, RunConfig};
use fastmis::verify::verify;
use fastmis::Graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(algorithm: Algorithm, seed: u64, iterations: u64, fraction: f64) -> RunConfig {
    let mut c = RunConfig::new(algorithm, seed, Budget::iterations(iterations));
    c.cut_fraction = fraction;
    c.iteration_clock = true;
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_pipeline_returns_an_independent_set_of_the_input(
        seed in any::<u64>(),
        n in 1usize..80,
        density in 0.01f64..0.3,
        fraction in 0.0f64..0.2,
    ) {
        let g = gnp(n, density, &mut ChaCha8Rng::seed_from_u64(seed));
        for algorithm in Algorithm::ALL {
            let out = run(&g, &config(algorithm, seed, 50, fraction));
            let report = verify(&g, &out.solution).unwrap();
            prop_assert!(report.is_independent(), "{} {:?}", algorithm, report.conflict);
            prop_assert_eq!(out.log.best_size(), Some(out.solution.len()));
        }
    }

    #[test]
    fn online_mis_never_keeps_a_cut_vertex(seed in any::<u64>(), n in 2usize..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = preferential_attachment(n, 3, &mut rng);
        let c = config(Algorithm::OnlineMis, seed, 30, 0.05);
        // Replays the generator stream the pipeline draws its snapshot from.
        let cut = top_degree_snapshot(&g, 0.05, &mut ChaCha8Rng::seed_from_u64(seed));
        let out = run(&g, &c);
        prop_assert_eq!(out.stats.cut, cut.len());
        for v in cut {
            prop_assert!(!out.solution.contains(&v));
        }
    }
}

#[test]
fn exact_pipelines_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut misses = [0usize; 3];
    let trials = 300;
    for i in 0..trials {
        let n = 4 + i % 13;
        let g = gnp(n, 0.15 + 0.5 * (i % 7) as f64 / 7.0, &mut rng);
        let opt = exact_mis(&g, DEFAULT_NODE_LIMIT).unwrap().size;
        for (slot, algorithm) in [Algorithm::KerMis, Algorithm::Arw, Algorithm::OnlineMis]
            .into_iter()
            .enumerate()
        {
            let out = run(&g, &config(algorithm, i as u64, 10_000, 0.0));
            assert!(is_independent(&g, &out.solution));
            assert!(out.solution.len() <= opt);
            if out.solution.len() < opt {
                misses[slot] += 1;
            }
        }
    }
    for m in misses {
        assert!(m * 20 <= trials, "misses {misses:?}");
    }
}

#[test]
fn kernel_empty_inputs_do_not_depend_on_the_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [1, 5, 30, 200] {
        let t = random_tree(n, &mut rng);
        let a = run(&t, &config(Algorithm::KerMis, 1, 100, 0.01));
        let b = run(&t, &config(Algorithm::KerMis, 2, 100, 0.01));
        assert_eq!(a.solution, b.solution);
        assert_eq!(a.stats.iterations, 0);
        if n <= 30 {
            assert_eq!(a.solution.len(), exact_mis(&t, DEFAULT_NODE_LIMIT).unwrap().size);
        }
    }
}

#[test]
fn online_commits_stay_in_the_answer() {
    // Triangles hanging off a cycle: every triangle tip is isolated once
    // the cycle vertex next to it is in the solution.
    let mut edges = Vec::new();
    let k = 12;
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        let (a, b) = (k + 2 * i, k + 2 * i + 1);
        edges.extend([(i, a), (i, b), (a, b)]);
    }
    let g = Graph::from_edges(3 * k, edges).unwrap();
    let out = run(&g, &config(Algorithm::OnlineMis, 3, 500, 0.0));
    assert_eq!(out.solution.len(), exact_mis(&g, DEFAULT_NODE_LIMIT).unwrap().size);
}
