use crate::graph::Vertex;

/// Generation-stamped vertex marks: clearing is O(1).
#[derive(Clone, Debug, Default)]
pub(crate) struct Marks {
    stamp: Vec<u32>,
    current: u32,
}

impl Marks {
    pub(crate) fn new(id_bound: usize) -> Self {
        Marks {
            stamp: vec![0; id_bound],
            current: 1,
        }
    }

    /// Starts a new generation, unmarking everything.
    pub(crate) fn clear(&mut self) {
        self.current = self.current.wrapping_add(1);
        if self.current == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.current = 1;
        }
    }

    pub(crate) fn ensure(&mut self, id_bound: usize) {
        if self.stamp.len() < id_bound {
            self.stamp.resize(id_bound, 0);
        }
    }

    pub(crate) fn mark(&mut self, v: Vertex) {
        self.stamp[v] = self.current;
    }

    pub(crate) fn is_marked(&self, v: Vertex) -> bool {
        self.stamp[v] == self.current
    }
}
