//! Iterated local search with (1,2)-swaps.
//!
//! [`Solution`] keeps every vertex in one of four contiguous zones of a
//! permutation: in the solution, free (tightness 0, insertable), non-free
//! (at least one solution neighbour) and removed. Moving a vertex between
//! zones is a constant number of swaps, so insertion and removal cost time
//! proportional to the degree of the vertex.
//!
//! Removed vertices are ignored by every query. They come from the online
//! isolated-vertex check: a committed vertex is locked into the solution and
//! its neighbours are removed for the rest of the run.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::buckets::DegreeBuckets;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::marks::Marks;
use crate::metrics::ConvergenceLog;

const IN: usize = 0;
const FREE: usize = 1;
const NONFREE: usize = 2;
const REMOVED: usize = 3;

/// Pair cap that disables the limit.
pub const UNLIMITED_PAIRS: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    Inserted(Vertex),
    Removed(Vertex),
}

#[derive(Clone, Debug)]
pub struct Solution {
    perm: Vec<Vertex>,
    pos: Vec<usize>,
    /// Zone `z` occupies `perm[bounds[z - 1]..bounds[z]]`, zone 3 runs to
    /// the end.
    bounds: [usize; 3],
    tightness: Vec<u32>,
    locked: Vec<bool>,
    last_out: Vec<u64>,
    clock: u64,
    queue: VecDeque<Vertex>,
    queued: Vec<bool>,
    journal: Option<Vec<Move>>,
    commits: Vec<Vertex>,
    marks: Marks,
}

impl Solution {
    /// Empty solution: every alive vertex is free, dead ones are removed.
    pub fn new(g: &Graph) -> Self {
        let n = g.id_bound();
        let mut perm: Vec<Vertex> = g.alive_vertices().collect();
        let alive = perm.len();
        perm.extend((0..n).filter(|&v| !g.is_alive(v)));
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        Solution {
            perm,
            pos,
            bounds: [0, alive, alive],
            tightness: vec![0; n],
            locked: vec![false; n],
            last_out: vec![0; n],
            clock: 0,
            queue: VecDeque::new(),
            queued: vec![false; n],
            journal: None,
            commits: Vec::new(),
            marks: Marks::new(n),
        }
    }

    /// Solution holding exactly `vertices`, which must be independent.
    pub fn from_vertices(g: &Graph, vertices: &[Vertex]) -> Result<Self> {
        let mut sol = Solution::new(g);
        for &v in vertices {
            if v >= g.id_bound() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.id_bound(),
                });
            }
            sol.insert(g, v)?;
        }
        Ok(sol)
    }

    fn zone(&self, v: Vertex) -> usize {
        let p = self.pos[v];
        self.bounds.iter().filter(|&&b| b <= p).count()
    }

    fn swap_slots(&mut self, a: usize, b: usize) {
        self.perm.swap(a, b);
        self.pos[self.perm[a]] = a;
        self.pos[self.perm[b]] = b;
    }

    fn move_to(&mut self, v: Vertex, target: usize) {
        let mut z = self.zone(v);
        while z < target {
            let last = self.bounds[z] - 1;
            self.swap_slots(self.pos[v], last);
            self.bounds[z] -= 1;
            z += 1;
        }
        while z > target {
            let first = self.bounds[z - 1];
            self.swap_slots(self.pos[v], first);
            self.bounds[z - 1] += 1;
            z -= 1;
        }
    }

    pub fn size(&self) -> usize {
        self.bounds[0]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.zone(v) == IN
    }

    pub fn is_free(&self, v: Vertex) -> bool {
        self.zone(v) == FREE
    }

    pub fn is_removed(&self, v: Vertex) -> bool {
        self.zone(v) == REMOVED
    }

    pub fn is_committed(&self, v: Vertex) -> bool {
        self.locked[v]
    }

    /// Number of solution neighbours of `v`.
    pub fn tightness(&self, v: Vertex) -> usize {
        self.tightness[v] as usize
    }

    /// True when no vertex can be inserted.
    pub fn is_maximal(&self) -> bool {
        self.bounds[1] == self.bounds[0]
    }

    pub fn free_count(&self) -> usize {
        self.bounds[1] - self.bounds[0]
    }

    /// Time at which `v` last left the solution (0 if never).
    pub fn last_out(&self, v: Vertex) -> u64 {
        self.last_out[v]
    }

    /// Sorted solution vertices.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = self.perm[..self.bounds[0]].to_vec();
        out.sort_unstable();
        out
    }

    /// Membership flags indexed by vertex id.
    pub fn membership(&self) -> Vec<bool> {
        let mut flags = vec![false; self.pos.len()];
        for &v in &self.perm[..self.bounds[0]] {
            flags[v] = true;
        }
        flags
    }

    fn push_candidate(&mut self, v: Vertex) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push_back(v);
        }
    }

    pub fn candidate_count(&self) -> usize {
        self.queue.len()
    }

    fn log_move(&mut self, m: Move) {
        if let Some(j) = self.journal.as_mut() {
            j.push(m);
        }
    }

    /// Inserts a free vertex.
    pub fn insert(&mut self, g: &Graph, v: Vertex) -> Result<()> {
        match self.zone(v) {
            FREE => {}
            IN => {
                return Err(Error::SolutionContract {
                    vertex: v,
                    reason: "already in the solution",
                })
            }
            REMOVED => return Err(Error::DeadVertex(v)),
            _ => {
                return Err(Error::SolutionContract {
                    vertex: v,
                    reason: "has a neighbour in the solution",
                })
            }
        }
        self.move_to(v, IN);
        let mut tightened = false;
        for u in g.live_neighbors(v) {
            self.tightness[u] += 1;
            if self.tightness[u] == 1 && self.zone(u) == FREE {
                self.move_to(u, NONFREE);
                tightened = true;
            }
        }
        if tightened {
            self.push_candidate(v);
        }
        self.log_move(Move::Inserted(v));
        Ok(())
    }

    /// Removes a solution vertex that is not committed.
    pub fn remove(&mut self, g: &Graph, v: Vertex) -> Result<()> {
        if self.zone(v) != IN {
            return Err(Error::SolutionContract {
                vertex: v,
                reason: "not in the solution",
            });
        }
        if self.locked[v] {
            return Err(Error::SolutionContract {
                vertex: v,
                reason: "committed vertices cannot leave the solution",
            });
        }
        self.move_to(v, FREE);
        self.clock += 1;
        self.last_out[v] = self.clock;
        for u in g.live_neighbors(v) {
            self.tightness[u] -= 1;
            match (self.tightness[u], self.zone(u)) {
                (0, NONFREE) => self.move_to(u, FREE),
                (1, NONFREE) => {
                    // The single remaining solution neighbour may now swap.
                    if let Some(s) = g.live_neighbors(u).find(|&s| self.zone(s) == IN) {
                        self.push_candidate(s);
                    }
                }
                _ => {}
            }
        }
        self.log_move(Move::Removed(v));
        Ok(())
    }

    /// Looks for non-adjacent `u, w ∈ N(v)` whose only solution neighbour
    /// is `v`. Up to `pair_cap` valid pairs are collected and one of them is
    /// returned uniformly at random.
    pub fn find_one_two_swap<R: Rng + ?Sized>(
        &mut self,
        g: &Graph,
        v: Vertex,
        pair_cap: usize,
        rng: &mut R,
    ) -> Option<(Vertex, Vertex)> {
        if self.zone(v) != IN || pair_cap == 0 {
            return None;
        }
        let one_tight: Vec<Vertex> = g
            .live_neighbors(v)
            .filter(|&u| self.tightness[u] == 1 && self.zone(u) == NONFREE)
            .collect();
        if one_tight.len() < 2 {
            return None;
        }
        let mut pairs = Vec::new();
        'outer: for (i, &u) in one_tight.iter().enumerate() {
            self.marks.clear();
            for x in g.live_neighbors(u) {
                self.marks.mark(x);
            }
            for &w in &one_tight[i + 1..] {
                if !self.marks.is_marked(w) {
                    pairs.push((u, w));
                    if pairs.len() >= pair_cap {
                        break 'outer;
                    }
                }
            }
        }
        match pairs.len() {
            0 => None,
            1 => Some(pairs[0]),
            n => Some(pairs[rng.gen_range(0..n)]),
        }
    }

    /// True when the non-removed neighbourhood of `v` has at most two
    /// vertices and `N[v]` is a clique.
    pub fn is_low_degree_isolated(&self, g: &Graph, v: Vertex) -> bool {
        let mut nb = [0; 2];
        let mut d = 0;
        for u in g.live_neighbors(v) {
            if self.zone(u) == REMOVED {
                continue;
            }
            if d == 2 {
                return false;
            }
            nb[d] = u;
            d += 1;
        }
        d < 2 || g.has_edge(nb[0], nb[1])
    }

    /// Locks a free vertex into the solution and removes its neighbours.
    pub fn commit(&mut self, g: &Graph, v: Vertex) -> Result<()> {
        self.insert(g, v)?;
        self.locked[v] = true;
        let nb: Vec<Vertex> = g
            .live_neighbors(v)
            .filter(|&u| self.zone(u) != REMOVED)
            .collect();
        for u in nb {
            self.move_to(u, REMOVED);
        }
        self.commits.push(v);
        Ok(())
    }

    /// Vertices committed since the last call.
    pub fn take_commits(&mut self) -> Vec<Vertex> {
        std::mem::take(&mut self.commits)
    }

    /// Inserts free vertices until the solution is maximal. With `online`,
    /// each vertex is first tested by [`Solution::is_low_degree_isolated`]
    /// and committed when it passes.
    pub fn maximalize(&mut self, g: &Graph, online: bool) -> usize {
        let mut added = 0;
        while self.bounds[1] > self.bounds[0] {
            let v = self.perm[self.bounds[1] - 1];
            if online && self.is_low_degree_isolated(g, v) {
                self.commit(g, v).expect("free vertex can be committed");
            } else {
                self.insert(g, v).expect("free vertex can be inserted");
            }
            added += 1;
        }
        added
    }

    /// Queues every uncommitted solution vertex for swap examination.
    pub fn queue_all_candidates(&mut self) {
        for i in 0..self.bounds[0] {
            let v = self.perm[i];
            if !self.locked[v] {
                self.push_candidate(v);
            }
        }
    }

    /// Applies (1,2)-swaps until no queued candidate admits one. The result
    /// is maximal. Returns the number of swaps.
    pub fn local_search<R: Rng + ?Sized>(&mut self, g: &Graph, pair_cap: usize, rng: &mut R) -> usize {
        self.local_search_with(g, pair_cap, false, rng)
    }

    pub fn local_search_with<R: Rng + ?Sized>(
        &mut self,
        g: &Graph,
        pair_cap: usize,
        online: bool,
        rng: &mut R,
    ) -> usize {
        self.maximalize(g, online);
        let mut swaps = 0;
        while let Some(v) = self.queue.pop_front() {
            self.queued[v] = false;
            if self.zone(v) != IN || self.locked[v] {
                continue;
            }
            let Some((u, w)) = self.find_one_two_swap(g, v, pair_cap, rng) else {
                continue;
            };
            self.remove(g, v).expect("candidate is in the solution");
            self.insert(g, u).expect("swap vertex is free");
            self.insert(g, w).expect("swap vertex is free");
            self.maximalize(g, online);
            swaps += 1;
        }
        swaps
    }

    /// Forces `v` into the solution, evicting its solution neighbours.
    pub fn force(&mut self, g: &Graph, v: Vertex) -> Result<()> {
        match self.zone(v) {
            IN => return Ok(()),
            REMOVED => return Err(Error::DeadVertex(v)),
            _ => {}
        }
        let evict: Vec<Vertex> = g
            .live_neighbors(v)
            .filter(|&u| self.zone(u) == IN)
            .collect();
        for u in evict {
            self.remove(g, u)?;
        }
        self.insert(g, v)
    }

    /// Forces `f` vertices chosen by [`PerturbationParams`]. Each comes from
    /// a pool of random outside vertices, preferring the one that has been
    /// out the longest. Does not re-maximalize.
    pub fn perturb<R: Rng + ?Sized>(&mut self, g: &Graph, params: &PerturbationParams, rng: &mut R) -> usize {
        let f = sample_force_count_with(rng, params.escalate_probability);
        let mut forced = 0;
        for _ in 0..f {
            let lo = self.bounds[0];
            let hi = self.bounds[2];
            if lo >= hi {
                break;
            }
            let mut pick = self.perm[rng.gen_range(lo..hi)];
            for _ in 1..params.candidate_pool.max(1) {
                let other = self.perm[rng.gen_range(lo..hi)];
                if self.last_out[other] < self.last_out[pick] {
                    pick = other;
                }
            }
            self.force(g, pick).expect("picked vertex is outside the solution");
            forced += 1;
        }
        forced
    }

    fn begin_journal(&mut self) {
        self.journal = Some(Vec::new());
    }

    fn end_journal(&mut self) -> Vec<Move> {
        self.journal.take().unwrap_or_default()
    }

    /// Undoes journaled moves in reverse order.
    fn revert(&mut self, g: &Graph, moves: Vec<Move>) {
        for m in moves.into_iter().rev() {
            match m {
                Move::Inserted(v) => self.remove(g, v).expect("journaled insert can be undone"),
                Move::Removed(v) => self.insert(g, v).expect("journaled removal can be undone"),
            }
        }
        for v in self.queue.drain(..) {
            self.queued[v] = false;
        }
    }

    /// Full rescan of every invariant.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.bounds[0] > self.bounds[1] || self.bounds[1] > self.bounds[2] {
            return Err("zone bounds out of order".into());
        }
        for (i, &v) in self.perm.iter().enumerate() {
            if self.pos[v] != i {
                return Err(format!("position of {v} is stale"));
            }
        }
        for v in 0..self.pos.len() {
            let zone = self.zone(v);
            if !g.is_alive(v) && zone != REMOVED {
                return Err(format!("dead vertex {v} is not removed"));
            }
            if zone == REMOVED {
                continue;
            }
            let tight = g.live_neighbors(v).filter(|&u| self.zone(u) == IN).count();
            if tight != self.tightness[v] as usize {
                return Err(format!(
                    "tightness of {v} is {} but it has {tight} solution neighbours",
                    self.tightness[v]
                ));
            }
            match zone {
                IN if tight > 0 => return Err(format!("{v} is in the solution next to another")),
                FREE if tight > 0 => return Err(format!("free vertex {v} has tightness {tight}")),
                NONFREE if tight == 0 => return Err(format!("vertex {v} should be free")),
                _ => {}
            }
            if self.locked[v] && zone != IN {
                return Err(format!("committed vertex {v} left the solution"));
            }
        }
        Ok(())
    }
}

/// Min-degree greedy: repeatedly inserts a vertex of minimum residual
/// degree (ties at random) and discards its neighbours.
pub fn greedy_initial<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Solution {
    let mut sol = Solution::new(g);
    let max_degree = g.alive_vertices().map(|v| g.live_degree(v)).max().unwrap_or(0);
    let mut queue = DegreeBuckets::new(g.id_bound(), max_degree);
    for v in g.alive_vertices() {
        queue.insert(v, g.live_degree(v));
    }
    while let Some(v) = queue.pop_min_random(rng) {
        sol.insert(g, v).expect("greedy picks free vertices");
        for u in g.live_neighbors(v) {
            if !queue.contains(u) {
                continue;
            }
            queue.remove(u);
            for w in g.live_neighbors(u) {
                if queue.contains(w) {
                    queue.decrement(w);
                }
            }
        }
    }
    sol
}

/// Perturbation strength: `f = 1` with probability `1 - p`; otherwise
/// `f = i + 1` where `i ≥ 1` has probability `2^-i`.
pub fn sample_force_count_with<R: Rng + ?Sized>(rng: &mut R, escalate_probability: f64) -> usize {
    if rng.gen_bool(escalate_probability.clamp(0.0, 1.0)) {
        sample_escalated_force_count(rng)
    } else {
        1
    }
}

/// `f = i + 1` with probability `2^-i` for `i ≥ 1`.
pub fn sample_escalated_force_count<R: Rng + ?Sized>(rng: &mut R) -> usize {
    let mut i = 1;
    while rng.gen_bool(0.5) {
        i += 1;
    }
    i + 1
}

/// Default schedule: `P(f = 1) = 1/2` and `P(f = i + 1) = 2^-(i+1)`.
pub fn sample_force_count<R: Rng + ?Sized>(rng: &mut R) -> usize {
    sample_force_count_with(rng, DEFAULT_ESCALATE_PROBABILITY)
}

pub const DEFAULT_ESCALATE_PROBABILITY: f64 = 0.5;
pub const DEFAULT_PAIR_CAP: usize = 100;
pub const DEFAULT_CANDIDATE_POOL: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerturbationParams {
    pub candidate_pool: usize,
    pub escalate_probability: f64,
}

impl Default for PerturbationParams {
    fn default() -> Self {
        PerturbationParams {
            candidate_pool: DEFAULT_CANDIDATE_POOL,
            escalate_probability: DEFAULT_ESCALATE_PROBABILITY,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    /// Valid pairs collected per swap target; [`UNLIMITED_PAIRS`] for all.
    pub pair_cap: usize,
    pub perturbation: PerturbationParams,
    /// Keep a worse solution with probability `1 / (1 + δ·δ*)` instead of
    /// always reverting it.
    pub accept_worse: bool,
    /// Run the isolated-vertex check on every insertion.
    pub online: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            pair_cap: DEFAULT_PAIR_CAP,
            perturbation: PerturbationParams::default(),
            accept_worse: true,
            online: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
    pub max_iterations: Option<u64>,
    /// Stop as soon as the reported size reaches this value.
    pub target_size: Option<usize>,
}

impl Budget {
    pub fn iterations(n: u64) -> Self {
        Budget {
            max_iterations: Some(n),
            ..Budget::default()
        }
    }

    pub fn time(limit: Duration) -> Self {
        Budget {
            time_limit: Some(limit),
            ..Budget::default()
        }
    }

    pub fn with_target(mut self, size: usize) -> Self {
        self.target_size = Some(size);
        self
    }
}

/// Time base for convergence logs. `Iterations` reports the iteration
/// count instead of seconds, which makes logs reproducible.
#[derive(Clone, Copy, Debug)]
pub enum RunClock {
    Wall(Instant),
    Iterations(Instant),
}

impl RunClock {
    pub fn wall() -> Self {
        RunClock::Wall(Instant::now())
    }

    pub fn iterations() -> Self {
        RunClock::Iterations(Instant::now())
    }

    pub fn started(&self) -> Instant {
        match *self {
            RunClock::Wall(t) | RunClock::Iterations(t) => t,
        }
    }

    pub fn stamp(&self, iteration: u64) -> f64 {
        match self {
            RunClock::Wall(t) => t.elapsed().as_secs_f64(),
            RunClock::Iterations(_) => iteration as f64,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RunClock::Wall(_) => "seconds",
            RunClock::Iterations(_) => "iterations",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Best solution found, sorted.
    pub best: Vec<Vertex>,
    pub iterations: u64,
    pub commits: usize,
}

/// Perturbation plus local search, repeated until the budget runs out.
/// The first iteration only runs local search on the given solution. Sizes
/// are logged as `offset + |best|` whenever the best solution grows.
#[allow(clippy::too_many_arguments)]
pub fn run_iterated<R: Rng + ?Sized>(
    g: &Graph,
    mut sol: Solution,
    config: &SearchConfig,
    budget: &Budget,
    clock: &RunClock,
    log: &mut ConvergenceLog,
    offset: usize,
    rng: &mut R,
) -> SearchOutcome {
    let mut best = sol.membership();
    let mut best_size = sol.size();
    let mut commits = sol.take_commits().len();
    log.record(clock.stamp(0), offset + best_size);
    let mut iteration = 0u64;
    loop {
        if budget.max_iterations.is_some_and(|m| iteration >= m)
            || budget
                .time_limit
                .is_some_and(|t| clock.started().elapsed() >= t)
            || budget.target_size.is_some_and(|t| offset + best_size >= t)
        {
            break;
        }
        iteration += 1;
        let start_size = sol.size();
        sol.begin_journal();
        if iteration == 1 {
            sol.queue_all_candidates();
        } else {
            sol.perturb(g, &config.perturbation, rng);
        }
        sol.local_search_with(g, config.pair_cap, config.online, rng);
        let moves = sol.end_journal();
        let committed = sol.take_commits();
        commits += committed.len();
        for &v in &committed {
            // Committed vertices are in every later answer; at most one
            // neighbour of a low-degree isolated vertex can be in `best`.
            for u in g.live_neighbors(v) {
                if best[u] {
                    best[u] = false;
                    best_size -= 1;
                }
            }
            if !best[v] {
                best[v] = true;
                best_size += 1;
            }
        }
        let size = sol.size();
        if size > best_size {
            best = sol.membership();
            best_size = size;
        }
        log.record(clock.stamp(iteration), offset + best_size);
        if size < start_size && committed.is_empty() {
            let delta = (start_size - size) as f64;
            let delta_best = (best_size - size) as f64;
            let keep = config.accept_worse && rng.gen_bool(1.0 / (1.0 + delta * delta_best));
            if !keep {
                sol.revert(g, moves);
            }
        }
    }
    SearchOutcome {
        best: (0..best.len()).filter(|&v| best[v]).collect(),
        iterations: iteration,
        commits,
    }
}
