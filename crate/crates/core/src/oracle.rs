//! Exact maximum independent sets for small graphs.
//!
//! This is the ground truth the rest of the crate is tested against, so it
//! shares no code with the reductions or the local search: the alive part of
//! the graph is copied into 128-bit adjacency masks and solved by a small
//! branch and bound. A plain subset enumeration is kept alongside it to check
//! the branch and bound itself.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_NODE_LIMIT: usize = 40;
const MASK_BITS: usize = 128;
const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSolution {
    pub size: usize,
    /// Sorted ids of one maximum independent set.
    pub witness: Vec<Vertex>,
}

struct BitGraph {
    ids: Vec<Vertex>,
    adj: Vec<u128>,
}

impl BitGraph {
    fn new(g: &Graph, limit: usize) -> Result<Self> {
        let ids: Vec<Vertex> = g.alive_vertices().collect();
        if ids.len() > limit.min(MASK_BITS) {
            return Err(Error::TooLarge {
                alive: ids.len(),
                limit: limit.min(MASK_BITS),
            });
        }
        let mut local = vec![usize::MAX; g.id_bound()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| {
                g.live_neighbors(v)
                    .fold(0u128, |mask, u| mask | (1u128 << local[u]))
            })
            .collect();
        Ok(BitGraph { ids, adj })
    }

    fn full(&self) -> u128 {
        if self.ids.len() == MASK_BITS {
            u128::MAX
        } else {
            (1u128 << self.ids.len()) - 1
        }
    }

    fn witness(&self, mask: u128) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = bits(mask).map(|i| self.ids[i]).collect();
        out.sort_unstable();
        out
    }
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

struct BranchAndBound<'a> {
    g: &'a BitGraph,
    best: u32,
    best_set: u128,
}

impl BranchAndBound<'_> {
    fn degree(&self, v: usize, cand: u128) -> u32 {
        (self.g.adj[v] & cand).count_ones()
    }

    /// Greedy clique cover of `cand`; its size bounds the independence number.
    fn clique_cover(&self, mut rest: u128) -> u32 {
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !(1u128 << v);
            let mut grow = rest & self.g.adj[v];
            while grow != 0 {
                let u = grow.trailing_zeros() as usize;
                rest &= !(1u128 << u);
                grow &= self.g.adj[u];
            }
            cliques += 1;
        }
        cliques
    }

    fn search(&mut self, mut cand: u128, mut chosen: u128) {
        // Vertices of degree at most one are always safe to take.
        'simplify: loop {
            for v in bits(cand) {
                if self.degree(v, cand) <= 1 {
                    chosen |= 1u128 << v;
                    cand &= !(self.g.adj[v] | (1u128 << v));
                    continue 'simplify;
                }
            }
            break;
        }
        let count = chosen.count_ones();
        if cand == 0 {
            if count > self.best {
                self.best = count;
                self.best_set = chosen;
            }
            return;
        }
        if count + self.clique_cover(cand) <= self.best {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| (self.degree(v, cand), std::cmp::Reverse(v)))
            .expect("candidate set is not empty");
        let bit = 1u128 << v;
        self.search(cand & !(self.g.adj[v] | bit), chosen | bit);
        self.search(cand & !bit, chosen);
    }
}

fn greedy_lower_bound(g: &BitGraph) -> u128 {
    let mut cand = g.full();
    let mut chosen = 0u128;
    while cand != 0 {
        let v = bits(cand)
            .min_by_key(|&v| (g.adj[v] & cand).count_ones())
            .expect("candidate set is not empty");
        chosen |= 1u128 << v;
        cand &= !(g.adj[v] | (1u128 << v));
    }
    chosen
}

/// Maximum independent set of the alive part of `g` by branch and bound.
/// Refuses graphs with more than `node_limit` alive vertices (and never more
/// than 128).
pub fn exact_mis(g: &Graph, node_limit: usize) -> Result<ExactSolution> {
    let bg = BitGraph::new(g, node_limit)?;
    let start = greedy_lower_bound(&bg);
    let mut bnb = BranchAndBound {
        g: &bg,
        best: start.count_ones(),
        best_set: start,
    };
    bnb.search(bg.full(), 0);
    Ok(ExactSolution {
        size: bnb.best as usize,
        witness: bg.witness(bnb.best_set),
    })
}

/// Enumerates every vertex subset. Only for graphs with at most 20 alive
/// vertices; used to validate [`exact_mis`].
pub fn exact_mis_bruteforce(g: &Graph) -> Result<ExactSolution> {
    let bg = BitGraph::new(g, BRUTE_FORCE_LIMIT)?;
    let n = bg.ids.len();
    let mut best = 0u128;
    for mask in 0u128..(1u128 << n) {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        if bits(mask).all(|v| bg.adj[v] & mask == 0) {
            best = mask;
        }
    }
    Ok(ExactSolution {
        size: best.count_ones() as usize,
        witness: bg.witness(best),
    })
}

/// All (1,2)-swaps `(v, u, w)` available for the independent set given by
/// `in_solution`: `v` is in the set, `u < w` are non-adjacent alive
/// neighbours of `v` whose only neighbour in the set is `v`.
pub fn enumerate_swaps(g: &Graph, in_solution: &[bool]) -> Vec<(Vertex, Vertex, Vertex)> {
    let solution_neighbors =
        |x: Vertex| g.live_neighbors(x).filter(|&y| in_solution[y]).count();
    let mut swaps = Vec::new();
    for v in g.alive_vertices().filter(|&v| in_solution[v]) {
        let one_tight: Vec<Vertex> = g
            .live_neighbors(v)
            .filter(|&u| !in_solution[u] && solution_neighbors(u) == 1)
            .collect();
        for (i, &u) in one_tight.iter().enumerate() {
            for &w in &one_tight[i + 1..] {
                if !g.has_edge(u, w) {
                    swaps.push((v, u.min(w), u.max(w)));
                }
            }
        }
    }
    swaps.sort_unstable();
    swaps
}

/// True when no two members of `set` are adjacent in `g`.
pub fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
    let mut member = vec![false; g.id_bound()];
    for &v in set {
        member[v] = true;
    }
    set.iter()
        .all(|&v| g.adjacency(v).iter().all(|&u| !member[u] || !g.is_alive(u)))
}
