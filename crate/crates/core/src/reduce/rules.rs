use std::collections::HashMap;

use crate::graph::Vertex;

use super::{Kernelizer, Reduction};

impl Kernelizer {
    fn live(&self, v: Vertex) -> Vec<Vertex> {
        self.graph.live_neighbors(v).collect()
    }

    /// Queues every alive vertex within distance two of `removed` whose live
    /// degree is at most `bound`.
    fn requeue_low_degree(&self, removed: &[Vertex], bound: usize, queue: &mut Vec<Vertex>) {
        for &r in removed {
            for &x in self.graph.adjacency(r) {
                if self.graph.is_alive(x) && self.graph.live_degree(x) <= bound {
                    queue.push(x);
                }
            }
        }
    }

    pub(super) fn pendant_pass(&mut self) -> usize {
        let mut queue: Vec<Vertex> = self
            .graph
            .alive_vertices()
            .filter(|&v| self.graph.live_degree(v) <= 1)
            .collect();
        queue.reverse();
        let mut applied = 0;
        while let Some(v) = queue.pop() {
            if !self.graph.is_alive(v) || self.graph.live_degree(v) > 1 {
                continue;
            }
            let removed = self.live(v);
            self.include(v);
            applied += 1;
            self.requeue_low_degree(&removed, 1, &mut queue);
        }
        applied
    }

    /// True when the closed live neighbourhood of `v` is a clique.
    fn is_simplicial(&mut self, v: Vertex) -> bool {
        let d = self.graph.live_degree(v);
        if d <= 1 {
            return true;
        }
        self.marks.clear();
        for u in self.graph.live_neighbors(v) {
            self.marks.mark(u);
        }
        for u in self.graph.live_neighbors(v) {
            if self.graph.live_degree(u) < d {
                return false;
            }
            let inside = self
                .graph
                .live_neighbors(u)
                .filter(|&x| self.marks.is_marked(x))
                .count();
            if inside != d - 1 {
                return false;
            }
        }
        true
    }

    pub(super) fn isolated_pass(&mut self, max_degree: Option<usize>) -> usize {
        self.sync_marks();
        let bound = max_degree.unwrap_or(usize::MAX);
        let mut queue: Vec<Vertex> = self
            .graph
            .alive_vertices()
            .filter(|&v| self.graph.live_degree(v) <= bound)
            .collect();
        queue.reverse();
        let mut applied = 0;
        while let Some(v) = queue.pop() {
            if !self.graph.is_alive(v) || self.graph.live_degree(v) > bound {
                continue;
            }
            if !self.is_simplicial(v) {
                continue;
            }
            let removed = self.live(v);
            self.include(v);
            applied += 1;
            self.requeue_low_degree(&removed, bound, &mut queue);
        }
        applied
    }

    pub(super) fn fold_pass(&mut self) -> usize {
        let candidates: Vec<Vertex> = self
            .graph
            .alive_vertices()
            .filter(|&v| self.graph.live_degree(v) == 2)
            .collect();
        let mut applied = 0;
        for v in candidates {
            if !self.graph.is_alive(v) || self.graph.live_degree(v) != 2 {
                continue;
            }
            let nb = self.live(v);
            let (u, w) = (nb[0], nb[1]);
            if self.graph.has_edge(u, w) {
                continue;
            }
            let merged = self
                .graph
                .contract_fold(v, u, w)
                .expect("fold preconditions were checked");
            for x in [u, v, w] {
                self.packing.on_absorb(x);
            }
            self.stack.push(Reduction::Fold {
                merged,
                center: v,
                left: u,
                right: w,
            });
            applied += 1;
        }
        self.sync_marks();
        applied
    }

    pub(super) fn lp_pass(&mut self) -> usize {
        let fixed = self.lp.solve(&self.graph, self.lp_refinement);
        let mut applied = 0;
        for v in fixed {
            if self.graph.is_alive(v) {
                self.include(v);
                applied += 1;
            }
        }
        applied
    }

    /// Runs the confinement procedure from `v`. Returns true when `v` is
    /// unconfined. Ties between candidates go to the lowest id.
    fn is_unconfined(&mut self, v: Vertex) -> bool {
        // `marks` holds N[S]; `hits[u]` is |N(u) ∩ S| for u in N(S).
        self.marks.clear();
        let mut hits: HashMap<Vertex, u32> = HashMap::new();
        let mut boundary: Vec<Vertex> = Vec::new();
        self.marks.mark(v);
        for u in self.graph.live_neighbors(v) {
            self.marks.mark(u);
            hits.insert(u, 1);
            boundary.push(u);
        }
        loop {
            let mut best: Option<(usize, Vertex, Option<Vertex>)> = None;
            for &u in &boundary {
                if hits[&u] != 1 {
                    continue;
                }
                let mut outside = 0;
                let mut first = None;
                for x in self.graph.live_neighbors(u) {
                    if !self.marks.is_marked(x) {
                        outside += 1;
                        first.get_or_insert(x);
                        if outside >= 2 {
                            break;
                        }
                    }
                }
                if outside >= 2 {
                    continue;
                }
                if outside == 0 {
                    return true;
                }
                if best.is_none_or(|(o, b, _)| (outside, u) < (o, b)) {
                    best = Some((outside, u, first));
                }
            }
            let Some((_, _, Some(w))) = best else {
                return false;
            };
            // w joins S: it is outside N[S], so S stays independent.
            self.marks.mark(w);
            for x in self.graph.live_neighbors(w) {
                let entry = hits.entry(x).or_insert(0);
                if *entry == 0 {
                    boundary.push(x);
                }
                *entry += 1;
                self.marks.mark(x);
            }
        }
    }

    pub(super) fn unconfined_pass(&mut self) -> usize {
        self.sync_marks();
        let vertices: Vec<Vertex> = self.graph.alive_vertices().collect();
        let mut applied = 0;
        for v in vertices {
            if !self.graph.is_alive(v) || !self.is_unconfined(v) {
                continue;
            }
            let nb = self.live(v);
            self.exclude(v);
            if self.track_packing {
                let bound = nb.len() as isize - 1;
                self.packing.add(nb, bound);
            }
            applied += 1;
        }
        applied
    }

    pub(super) fn twin_pass(&mut self) -> usize {
        let mut groups: HashMap<[Vertex; 3], Vec<Vertex>> = HashMap::new();
        for v in self.graph.alive_vertices() {
            if self.graph.live_degree(v) == 3 {
                let nb = self.live(v);
                groups.entry([nb[0], nb[1], nb[2]]).or_default().push(v);
            }
        }
        let mut keys: Vec<[Vertex; 3]> = groups
            .iter()
            .filter(|(_, g)| g.len() >= 2)
            .map(|(k, _)| *k)
            .collect();
        keys.sort_unstable();
        let mut applied = 0;
        for key in keys {
            let members = &groups[&key];
            let still_twin = |k: &Kernelizer, x: Vertex| {
                k.graph.is_alive(x) && k.graph.live_degree(x) == 3 && k.live(x) == key
            };
            let live_twins: Vec<Vertex> = members
                .iter()
                .copied()
                .filter(|&x| still_twin(self, x))
                .take(2)
                .collect();
            if live_twins.len() < 2 {
                continue;
            }
            let (u, v) = (live_twins[0], live_twins[1]);
            let [a, b, c] = key;
            if self.graph.has_edge(a, b) || self.graph.has_edge(a, c) || self.graph.has_edge(b, c)
            {
                self.include(u);
                self.include(v);
            } else {
                let mut two_hop: Vec<Vertex> = key
                    .iter()
                    .flat_map(|&x| self.graph.live_neighbors(x))
                    .filter(|&x| x != u && x != v)
                    .collect();
                two_hop.sort_unstable();
                two_hop.dedup();
                for x in [u, v, a, b, c] {
                    self.absorb(x);
                }
                let gadget = self
                    .graph
                    .add_gadget(&two_hop)
                    .expect("two-hop neighbours are alive");
                self.stack.push(Reduction::TwinGadget {
                    gadget,
                    twins: [u, v],
                    neighbors: key,
                });
                self.sync_marks();
            }
            applied += 1;
        }
        applied
    }

    /// Finds `u` such that `N(v) \ {u}` is a clique.
    fn funnel_partner(&mut self, v: Vertex) -> Option<Vertex> {
        let d = self.graph.live_degree(v);
        if d == 0 {
            return None;
        }
        let nb = self.live(v);
        let short = nb
            .iter()
            .filter(|&&x| self.graph.live_degree(x) + 1 < d)
            .count();
        if short > 1 {
            return None;
        }
        self.marks.clear();
        nb.iter().for_each(|&x| self.marks.mark(x));
        let mut missing = Vec::with_capacity(d);
        let mut total = 0;
        for &x in &nb {
            let inside = self
                .graph
                .live_neighbors(x)
                .filter(|&y| self.marks.is_marked(y))
                .count();
            missing.push(d - 1 - inside);
            total += d - 1 - inside;
        }
        let total = total / 2;
        if total == 0 {
            return Some(nb[0]);
        }
        nb.iter()
            .zip(&missing)
            .find(|&(_, &m)| m == total)
            .map(|(&x, _)| x)
    }

    /// Removes `A ∪ B ∪ C` with `C = N(A) ∩ N(B)`, joins `N(A) \ C` to
    /// `N(B) \ C` and records the choice between `A` and `B`.
    pub(super) fn apply_alternative(&mut self, a: Vec<Vertex>, b: Vec<Vertex>) {
        self.marks.clear();
        a.iter().chain(&b).for_each(|&x| self.marks.mark(x));
        let gather = |k: &Kernelizer, side: &[Vertex]| {
            let mut out: Vec<Vertex> = side
                .iter()
                .flat_map(|&x| k.graph.live_neighbors(x))
                .filter(|&y| !k.marks.is_marked(y))
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let na = gather(self, &a);
        let nb = gather(self, &b);
        let common: Vec<Vertex> = na
            .iter()
            .copied()
            .filter(|x| nb.binary_search(x).is_ok())
            .collect();
        let x_side: Vec<Vertex> = na
            .iter()
            .copied()
            .filter(|x| common.binary_search(x).is_err())
            .collect();
        let y_side: Vec<Vertex> = nb
            .iter()
            .copied()
            .filter(|x| common.binary_search(x).is_err())
            .collect();
        for &x in a.iter().chain(&b) {
            self.absorb(x);
        }
        for &c in &common {
            self.drop_excluded(c);
        }
        for &x in &x_side {
            for &y in &y_side {
                self.graph
                    .add_edge(x, y)
                    .expect("alternative neighbourhoods are alive");
            }
        }
        self.stack.push(Reduction::Alternative {
            a,
            b,
            a_neighbors: x_side,
        });
    }

    /// Chordless 4-cycle `a1 b1 a2 b2` through `a1` satisfying the
    /// alternative conditions.
    pub(super) fn four_cycle_at(&mut self, a1: Vertex) -> Option<([Vertex; 2], [Vertex; 2])> {
        let ok_degree = |k: &Kernelizer, x: Vertex| (3..=4).contains(&k.graph.live_degree(x));
        if !ok_degree(self, a1) {
            return None;
        }
        let na1 = self.live(a1);
        for (i, &b1) in na1.iter().enumerate() {
            if !ok_degree(self, b1) {
                continue;
            }
            for &b2 in &na1[i + 1..] {
                if !ok_degree(self, b2) || self.graph.has_edge(b1, b2) {
                    continue;
                }
                let nb2 = self.live(b2);
                for a2 in self.live(b1) {
                    if a2 == a1
                        || nb2.binary_search(&a2).is_err()
                        || !ok_degree(self, a2)
                        || self.graph.has_edge(a1, a2)
                    {
                        continue;
                    }
                    if self.four_cycle_fits([a1, a2], [b1, b2]) {
                        return Some(([a1, a2], [b1, b2]));
                    }
                }
            }
        }
        None
    }

    fn four_cycle_fits(&self, a: [Vertex; 2], b: [Vertex; 2]) -> bool {
        let outside = |side: [Vertex; 2], other: [Vertex; 2]| {
            let mut out: Vec<Vertex> = side
                .iter()
                .flat_map(|&x| self.graph.live_neighbors(x))
                .filter(|y| !other.contains(y) && !side.contains(y))
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let x = outside(a, b);
        let y = outside(b, a);
        x.len() <= 2 && y.len() <= 2 && x.iter().all(|v| !y.contains(v))
    }

    pub(super) fn alternative_pass(&mut self) -> usize {
        self.sync_marks();
        let vertices: Vec<Vertex> = self.graph.alive_vertices().collect();
        let mut applied = 0;
        for v in vertices {
            if !self.graph.is_alive(v) {
                continue;
            }
            if let Some(u) = self.funnel_partner(v) {
                self.apply_alternative(vec![u], vec![v]);
                applied += 1;
                continue;
            }
            if let Some((a, b)) = self.four_cycle_at(v) {
                self.apply_alternative(a.to_vec(), b.to_vec());
                applied += 1;
            }
        }
        applied
    }

    pub(super) fn packing_pass(&mut self) -> usize {
        self.sync_marks();
        let mut applied = 0;
        for id in self.packing.tight() {
            let Some(members) = self.packing.tight_members(id) else {
                continue;
            };
            self.packing.retire(id);
            if members.iter().any(|&v| !self.graph.is_alive(v)) {
                continue;
            }
            self.marks.clear();
            members.iter().for_each(|&v| self.marks.mark(v));
            let edgeless = members.iter().all(|&v| {
                self.graph
                    .live_neighbors(v)
                    .all(|u| !self.marks.is_marked(u))
            });
            if !edgeless {
                continue;
            }
            for v in members {
                self.include(v);
            }
            applied += 1;
        }
        applied
    }
}
