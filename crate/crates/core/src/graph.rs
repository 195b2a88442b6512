//! Mutable undirected graph used by every stage of the solver.
//!
//! Vertices are never physically deleted. Removing a vertex clears its
//! `alive` flag and decrements the live degree of its alive neighbours, so
//! adjacency lists may still mention dead vertices. Reductions that need to
//! create vertices (vertex folding, twin gadgets) append fresh ids after the
//! current range, which keeps the ids of the input graph stable and keeps
//! every adjacency list sorted without re-sorting.

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, Default)]
pub struct Graph {
    original_n: usize,
    adjacency: Vec<Vec<Vertex>>,
    alive: Vec<bool>,
    live_degree: Vec<usize>,
    alive_count: usize,
    live_edges: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            original_n: n,
            adjacency: vec![Vec::new(); n],
            alive: vec![true; n],
            live_degree: vec![0; n],
            alive_count: n,
            live_edges: 0,
        }
    }

    /// Builds a graph from an arbitrary edge list. Self-loops are dropped and
    /// parallel or reversed duplicates collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut live_edges = 0;
        let mut live_degree = Vec::with_capacity(n);
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            live_edges += list.len();
            live_degree.push(list.len());
        }
        Ok(Graph {
            original_n: n,
            adjacency,
            alive: vec![true; n],
            live_degree,
            alive_count: n,
            live_edges: live_edges / 2,
        })
    }

    /// Number of vertices the graph was created with. Ids at or above this
    /// bound belong to gadget vertices added by reductions.
    pub fn original_n(&self) -> usize {
        self.original_n
    }

    /// One past the largest id ever handed out.
    pub fn id_bound(&self) -> usize {
        self.adjacency.len()
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn live_edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn is_alive(&self, v: Vertex) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    /// Number of alive neighbours. Meaningless for dead vertices.
    pub fn live_degree(&self, v: Vertex) -> usize {
        self.live_degree[v]
    }

    /// Raw sorted adjacency list, dead neighbours included.
    pub fn adjacency(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v]
            .iter()
            .copied()
            .filter(move |&u| self.alive[u])
    }

    /// Sorted alive members of N(v).
    pub fn neighbors_live(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_alive(v)?;
        Ok(self.live_neighbors(v).collect())
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adjacency.len()).filter(move |&v| self.alive[v])
    }

    /// Edge test on the raw lists; callers decide whether dead endpoints matter.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adjacency[u].len() <= self.adjacency[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Every alive edge once, as `(u, v)` with `u < v`.
    pub fn live_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges = Vec::with_capacity(self.live_edges);
        for u in self.alive_vertices() {
            for v in self.live_neighbors(u) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    fn check_alive(&self, v: Vertex) -> Result<()> {
        if v >= self.adjacency.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.adjacency.len(),
            });
        }
        if !self.alive[v] {
            return Err(Error::DeadVertex(v));
        }
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        self.check_alive(v)?;
        self.alive[v] = false;
        self.alive_count -= 1;
        self.live_edges -= self.live_degree[v];
        for i in 0..self.adjacency[v].len() {
            let u = self.adjacency[v][i];
            if self.alive[u] {
                self.live_degree[u] -= 1;
            }
        }
        Ok(())
    }

    /// Adds a fresh vertex adjacent to exactly `neighbors` and returns its id.
    pub fn add_gadget(&mut self, neighbors: &[Vertex]) -> Result<Vertex> {
        for &u in neighbors {
            self.check_alive(u)?;
        }
        let mut list = neighbors.to_vec();
        list.sort_unstable();
        list.dedup();
        let id = self.adjacency.len();
        for &u in &list {
            // `id` exceeds every existing id, so pushing keeps the list sorted.
            self.adjacency[u].push(id);
            self.live_degree[u] += 1;
        }
        self.live_edges += list.len();
        self.live_degree.push(list.len());
        self.adjacency.push(list);
        self.alive.push(true);
        self.alive_count += 1;
        Ok(id)
    }

    /// Inserts the edge `{u, v}` between two alive vertices. Returns `false`
    /// when the edge already existed.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_alive(u)?;
        self.check_alive(v)?;
        if u == v {
            return Ok(false);
        }
        let Err(at) = self.adjacency[u].binary_search(&v) else {
            return Ok(false);
        };
        self.adjacency[u].insert(at, v);
        let at = self.adjacency[v]
            .binary_search(&u)
            .expect_err("adjacency lists are symmetric");
        self.adjacency[v].insert(at, u);
        self.live_degree[u] += 1;
        self.live_degree[v] += 1;
        self.live_edges += 1;
        Ok(true)
    }

    /// Vertex folding: contracts `u`, `v` and `w` into one fresh vertex whose
    /// neighbourhood is `(N(u) ∪ N(w)) \ {u, v, w}`.
    pub fn contract_fold(&mut self, v: Vertex, u: Vertex, w: Vertex) -> Result<Vertex> {
        for x in [v, u, w] {
            self.check_alive(x)?;
        }
        if u == w {
            return Err(Error::FoldPrecondition {
                vertex: v,
                reason: "the two neighbours must differ",
            });
        }
        if self.live_degree[v] != 2 || !self.has_edge(v, u) || !self.has_edge(v, w) {
            return Err(Error::FoldPrecondition {
                vertex: v,
                reason: "vertex must have exactly the two given live neighbours",
            });
        }
        if self.has_edge(u, w) {
            return Err(Error::FoldPrecondition {
                vertex: v,
                reason: "neighbours are adjacent",
            });
        }
        let mut merged: Vec<Vertex> = self
            .live_neighbors(u)
            .chain(self.live_neighbors(w))
            .filter(|&x| x != v && x != u && x != w)
            .collect();
        merged.sort_unstable();
        merged.dedup();
        for x in [u, v, w] {
            self.remove_vertex(x)?;
        }
        self.add_gadget(&merged)
    }

    /// Copy of the alive part with dense ids. Returns the new graph and the
    /// map from new ids to ids of `self`.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.adjacency.len()];
        let mut old_id = Vec::with_capacity(self.alive_count);
        for v in self.alive_vertices() {
            new_id[v] = old_id.len();
            old_id.push(v);
        }
        let mut adjacency = Vec::with_capacity(old_id.len());
        let mut live_degree = Vec::with_capacity(old_id.len());
        for &v in &old_id {
            // Old ids are increasing, so the mapped list stays sorted.
            let list: Vec<Vertex> = self.live_neighbors(v).map(|u| new_id[u]).collect();
            live_degree.push(list.len());
            adjacency.push(list);
        }
        let n = old_id.len();
        let graph = Graph {
            original_n: n,
            adjacency,
            alive: vec![true; n],
            live_degree,
            alive_count: n,
            live_edges: self.live_edges,
        };
        (graph, old_id)
    }

    /// Full rescan of the structural invariants. Intended for tests and
    /// debugging; it costs O(n + m log m).
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut alive_count = 0;
        let mut live_edge_ends = 0;
        for v in 0..self.adjacency.len() {
            let list = &self.adjacency[v];
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} is not strictly sorted"));
            }
            if list.contains(&v) {
                return Err(format!("self-loop at {v}"));
            }
            for &u in list {
                if self.adjacency[u].binary_search(&v).is_err() {
                    return Err(format!("edge {v}->{u} has no reverse"));
                }
            }
            if self.alive[v] {
                alive_count += 1;
                let live = list.iter().filter(|&&u| self.alive[u]).count();
                if live != self.live_degree[v] {
                    return Err(format!(
                        "live degree of {v} is {} but it has {live} alive neighbours",
                        self.live_degree[v]
                    ));
                }
                live_edge_ends += live;
            }
        }
        if alive_count != self.alive_count {
            return Err(format!(
                "alive count {} but {alive_count} alive flags",
                self.alive_count
            ));
        }
        if live_edge_ends % 2 != 0 || live_edge_ends / 2 != self.live_edges {
            return Err(format!(
                "live edge count {} but degrees sum to {live_edge_ends}",
                self.live_edges
            ));
        }
        Ok(())
    }
}
