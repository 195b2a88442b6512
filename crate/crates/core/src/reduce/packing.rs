//! Packing constraints `Σ_{v∈S} x_v ≤ k`, where `x_v = 1` means `v` is left
//! out of the independent set.
//!
//! A constraint is created when the unconfined rule excludes `v`: every
//! maximum independent set of the remaining graph must then contain a
//! neighbour of `v`, so `S = N(v)` and `k = |S| - 1`. Later decisions keep the
//! constraint current: an included member leaves `S`, an excluded member
//! leaves `S` and lowers `k`, and a member swallowed by a contraction gadget
//! retires the constraint since its value is no longer a single vertex.

use crate::graph::Vertex;

#[derive(Clone, Debug)]
struct Constraint {
    members: Vec<Vertex>,
    bound: isize,
    active: bool,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct PackingStore {
    constraints: Vec<Constraint>,
    by_vertex: Vec<Vec<usize>>,
}

impl PackingStore {
    fn touch(&mut self, v: Vertex) {
        if self.by_vertex.len() <= v {
            self.by_vertex.resize(v + 1, Vec::new());
        }
    }

    pub(crate) fn add(&mut self, members: Vec<Vertex>, bound: isize) {
        if members.is_empty() {
            return;
        }
        let id = self.constraints.len();
        for &v in &members {
            self.touch(v);
            self.by_vertex[v].push(id);
        }
        self.constraints.push(Constraint {
            members,
            bound,
            active: true,
        });
    }

    fn detach(&mut self, v: Vertex) -> Vec<usize> {
        match self.by_vertex.get_mut(v) {
            Some(list) => std::mem::take(list),
            None => Vec::new(),
        }
    }

    fn drop_member(c: &mut Constraint, v: Vertex) {
        if let Some(at) = c.members.iter().position(|&x| x == v) {
            c.members.swap_remove(at);
        }
        if c.members.is_empty() {
            c.active = false;
        }
    }

    pub(crate) fn on_include(&mut self, v: Vertex) {
        for id in self.detach(v) {
            let c = &mut self.constraints[id];
            if c.active {
                Self::drop_member(c, v);
            }
        }
    }

    pub(crate) fn on_exclude(&mut self, v: Vertex) {
        for id in self.detach(v) {
            let c = &mut self.constraints[id];
            if c.active {
                c.bound -= 1;
                debug_assert!(c.bound >= 0, "packing constraint became infeasible");
                if c.bound < 0 {
                    c.active = false;
                    continue;
                }
                Self::drop_member(c, v);
            }
        }
    }

    pub(crate) fn on_absorb(&mut self, v: Vertex) {
        for id in self.detach(v) {
            self.constraints[id].active = false;
        }
    }

    /// Ids of active constraints whose bound has reached zero.
    pub(crate) fn tight(&self) -> Vec<usize> {
        (0..self.constraints.len())
            .filter(|&id| self.tight_members(id).is_some())
            .collect()
    }

    pub(crate) fn tight_members(&self, id: usize) -> Option<Vec<Vertex>> {
        let c = &self.constraints[id];
        (c.active && c.bound == 0).then(|| c.members.clone())
    }

    pub(crate) fn retire(&mut self, id: usize) {
        self.constraints[id].active = false;
    }

    pub(crate) fn active_count(&self) -> usize {
        self.constraints.iter().filter(|c| c.active).count()
    }
}
