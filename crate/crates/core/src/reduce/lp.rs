//! Half-integral LP relaxation via bipartite matching.
//!
//! Every vertex `v` is split into `v_L` and `v_R`, and every edge `{u, v}`
//! becomes `u_L v_R` and `v_L u_R`. A maximum matching of this double cover
//! gives a minimum vertex cover through König's theorem, and the cover gives
//! an optimal half-integral LP solution: `x_v = 1` exactly when neither copy
//! of `v` is covered.
//!
//! When that solution is all one half (a perfect matching), the refinement
//! looks for another optimum that fixes some vertex. Such optima correspond
//! to sets `S` closed under `p -> mate_R(q)` for `q ∈ N(p)`; `x_w = 1` for
//! `w ∈ S` with `mate_R(w) ∉ S`. A set works exactly when the closure of one
//! of its vertices works, so closures of strongly connected components are
//! tried sinks first under a work budget.

use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;
const INF: u32 = u32::MAX;

#[derive(Clone, Debug, Default)]
pub(crate) struct LpState {
    mate_l: Vec<Vertex>,
    mate_r: Vec<Vertex>,
}

impl LpState {
    /// Vertices with value 1 in the computed optimum, sorted. Their
    /// neighbours are exactly the vertices with value 0.
    pub(crate) fn solve(&mut self, g: &Graph, refine: bool) -> Vec<Vertex> {
        self.warm_start(g);
        self.maximum_matching(g);
        let fixed = self.fixed_by_cover(g);
        if !fixed.is_empty() || !refine {
            return fixed;
        }
        if g.alive_vertices().any(|v| self.mate_l[v] == NONE) {
            return fixed;
        }
        self.refine(g).unwrap_or_default()
    }

    /// Keeps the previous matching minus pairs with a dead endpoint.
    fn warm_start(&mut self, g: &Graph) {
        let bound = g.id_bound();
        self.mate_l.resize(bound, NONE);
        self.mate_r.resize(bound, NONE);
        for p in 0..bound {
            let q = self.mate_l[p];
            if q != NONE && !(g.is_alive(p) && g.is_alive(q)) {
                self.mate_l[p] = NONE;
                self.mate_r[q] = NONE;
            }
        }
        for q in 0..bound {
            let p = self.mate_r[q];
            if p != NONE && self.mate_l[p] != q {
                self.mate_r[q] = NONE;
            }
        }
    }

    /// Hopcroft-Karp with an explicit DFS stack.
    fn maximum_matching(&mut self, g: &Graph) {
        let bound = g.id_bound();
        let mut dist = vec![INF; bound];
        let mut cursor = vec![0usize; bound];
        let mut chosen = vec![NONE; bound];
        let mut queue = Vec::with_capacity(bound);
        loop {
            queue.clear();
            for p in g.alive_vertices() {
                if self.mate_l[p] == NONE {
                    dist[p] = 0;
                    queue.push(p);
                } else {
                    dist[p] = INF;
                }
            }
            let mut found = false;
            let mut head = 0;
            while head < queue.len() {
                let p = queue[head];
                head += 1;
                for q in g.live_neighbors(p) {
                    let r = self.mate_r[q];
                    if r == NONE {
                        found = true;
                    } else if dist[r] == INF {
                        dist[r] = dist[p] + 1;
                        queue.push(r);
                    }
                }
            }
            if !found {
                return;
            }
            for p in g.alive_vertices() {
                cursor[p] = 0;
            }
            let roots: Vec<Vertex> = g
                .alive_vertices()
                .filter(|&p| self.mate_l[p] == NONE)
                .collect();
            for root in roots {
                self.augment_from(g, root, &mut dist, &mut cursor, &mut chosen);
            }
        }
    }

    fn augment_from(
        &mut self,
        g: &Graph,
        root: Vertex,
        dist: &mut [u32],
        cursor: &mut [usize],
        chosen: &mut [Vertex],
    ) -> bool {
        let mut stack = vec![root];
        while let Some(&p) = stack.last() {
            let adj = g.adjacency(p);
            let mut pushed = false;
            while cursor[p] < adj.len() {
                let q = adj[cursor[p]];
                cursor[p] += 1;
                if !g.is_alive(q) {
                    continue;
                }
                let r = self.mate_r[q];
                if r == NONE {
                    chosen[p] = q;
                    for &x in &stack {
                        let y = chosen[x];
                        self.mate_l[x] = y;
                        self.mate_r[y] = x;
                    }
                    return true;
                }
                if dist[r] != INF && dist[r] == dist[p] + 1 {
                    chosen[p] = q;
                    stack.push(r);
                    pushed = true;
                    break;
                }
            }
            if !pushed {
                dist[p] = INF;
                stack.pop();
            }
        }
        false
    }

    /// `x_v = 1` iff `v_L` is reachable from a free left vertex by an
    /// alternating path and `v_R` is not.
    fn fixed_by_cover(&self, g: &Graph) -> Vec<Vertex> {
        let bound = g.id_bound();
        let mut left = vec![false; bound];
        let mut right = vec![false; bound];
        let mut queue: Vec<Vertex> = g
            .alive_vertices()
            .filter(|&p| self.mate_l[p] == NONE)
            .collect();
        for &p in &queue {
            left[p] = true;
        }
        while let Some(p) = queue.pop() {
            for q in g.live_neighbors(p) {
                right[q] = true;
                let r = self.mate_r[q];
                debug_assert!(r != NONE, "matching is maximum");
                if r != NONE && !left[r] {
                    left[r] = true;
                    queue.push(r);
                }
            }
        }
        g.alive_vertices()
            .filter(|&v| left[v] && !right[v])
            .collect()
    }

    fn successors<'a>(&'a self, g: &'a Graph, p: Vertex) -> impl Iterator<Item = Vertex> + 'a {
        g.live_neighbors(p).map(move |q| self.mate_r[q])
    }

    /// Sinks-first search for a closed set that fixes a vertex. Requires a
    /// perfect matching.
    fn refine(&self, g: &Graph) -> Option<Vec<Vertex>> {
        let components = self.components(g);
        let bound = g.id_bound();
        let mut budget = 8 * (g.alive_count() + g.live_edge_count()) + 1024;
        let mut stamp = vec![0u32; bound];
        for (round, component) in components.iter().enumerate() {
            let tag = round as u32 + 1;
            let mut closure = Vec::new();
            let mut stack = component.clone();
            for &p in &stack {
                stamp[p] = tag;
            }
            while let Some(p) = stack.pop() {
                closure.push(p);
                for s in self.successors(g, p) {
                    if budget == 0 {
                        return None;
                    }
                    budget -= 1;
                    if stamp[s] != tag {
                        stamp[s] = tag;
                        stack.push(s);
                    }
                }
            }
            let mut fixed: Vec<Vertex> = closure
                .into_iter()
                .filter(|&w| stamp[self.mate_r[w]] != tag)
                .collect();
            if !fixed.is_empty() {
                fixed.sort_unstable();
                return Some(fixed);
            }
        }
        None
    }

    /// Strongly connected components of the orientation, sinks first
    /// (iterative Tarjan).
    fn components(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        let bound = g.id_bound();
        let mut index = vec![NONE; bound];
        let mut low = vec![0usize; bound];
        let mut on_stack = vec![false; bound];
        let mut tarjan_stack = Vec::new();
        let mut out = Vec::new();
        let mut next = 0;
        for root in g.alive_vertices() {
            if index[root] != NONE {
                continue;
            }
            let mut call: Vec<(Vertex, Vec<Vertex>, usize)> = Vec::new();
            index[root] = next;
            low[root] = next;
            next += 1;
            tarjan_stack.push(root);
            on_stack[root] = true;
            call.push((root, self.successors(g, root).collect(), 0));
            while let Some(frame) = call.last_mut() {
                let p = frame.0;
                if frame.2 < frame.1.len() {
                    let s = frame.1[frame.2];
                    frame.2 += 1;
                    if index[s] == NONE {
                        index[s] = next;
                        low[s] = next;
                        next += 1;
                        tarjan_stack.push(s);
                        on_stack[s] = true;
                        let succ = self.successors(g, s).collect();
                        call.push((s, succ, 0));
                    } else if on_stack[s] {
                        low[p] = low[p].min(index[s]);
                    }
                    continue;
                }
                call.pop();
                if let Some(parent) = call.last() {
                    low[parent.0] = low[parent.0].min(low[p]);
                }
                if low[p] == index[p] {
                    let mut component = Vec::new();
                    loop {
                        let x = tarjan_stack.pop().expect("component root is on the stack");
                        on_stack[x] = false;
                        component.push(x);
                        if x == p {
                            break;
                        }
                    }
                    out.push(component);
                }
            }
        }
        out
    }
}
