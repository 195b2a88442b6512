//! Bucket priority queue keyed by degree.
//!
//! Keys only ever decrease while vertices are queued, which is exactly the
//! situation in min-degree greedy and in iterative max-degree cutting: both
//! remove vertices and decrement the degrees of their neighbours. Ties are
//! broken uniformly at random among the vertices in the extreme bucket.

use rand::Rng;

use crate::graph::Vertex;

const ABSENT: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct DegreeBuckets {
    buckets: Vec<Vec<Vertex>>,
    key: Vec<usize>,
    slot: Vec<usize>,
    len: usize,
    min_hint: usize,
    max_hint: usize,
}

impl DegreeBuckets {
    pub fn new(id_bound: usize, max_key: usize) -> Self {
        DegreeBuckets {
            buckets: vec![Vec::new(); max_key + 1],
            key: vec![0; id_bound],
            slot: vec![ABSENT; id_bound],
            len: 0,
            min_hint: max_key + 1,
            max_hint: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.slot[v] != ABSENT
    }

    pub fn key(&self, v: Vertex) -> usize {
        self.key[v]
    }

    pub fn insert(&mut self, v: Vertex, key: usize) {
        debug_assert!(!self.contains(v));
        if key >= self.buckets.len() {
            self.buckets.resize(key + 1, Vec::new());
        }
        self.key[v] = key;
        self.slot[v] = self.buckets[key].len();
        self.buckets[key].push(v);
        self.len += 1;
        self.min_hint = self.min_hint.min(key);
        self.max_hint = self.max_hint.max(key);
    }

    pub fn remove(&mut self, v: Vertex) {
        let at = self.slot[v];
        debug_assert!(at != ABSENT);
        let bucket = &mut self.buckets[self.key[v]];
        bucket.swap_remove(at);
        if let Some(&moved) = bucket.get(at) {
            self.slot[moved] = at;
        }
        self.slot[v] = ABSENT;
        self.len -= 1;
    }

    pub fn decrement(&mut self, v: Vertex) {
        let key = self.key[v];
        debug_assert!(key > 0);
        self.remove(v);
        self.insert(v, key - 1);
    }

    /// Largest key present, if any.
    pub fn max_key(&mut self) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        while self.buckets[self.max_hint].is_empty() {
            self.max_hint -= 1;
        }
        Some(self.max_hint)
    }

    pub fn min_key(&mut self) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        while self.buckets[self.min_hint].is_empty() {
            self.min_hint += 1;
        }
        Some(self.min_hint)
    }

    pub fn pop_max_random<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Option<Vertex> {
        let key = self.max_key()?;
        Some(self.pop_random_from(key, rng))
    }

    pub fn pop_min_random<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Option<Vertex> {
        let key = self.min_key()?;
        Some(self.pop_random_from(key, rng))
    }

    fn pop_random_from<R: Rng + ?Sized>(&mut self, key: usize, rng: &mut R) -> Vertex {
        let bucket = &self.buckets[key];
        let v = bucket[rng.gen_range(0..bucket.len())];
        self.remove(v);
        v
    }
}
