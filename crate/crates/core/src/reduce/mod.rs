//! Exact kernelization.
//!
//! A [`Kernelizer`] owns a working copy of the graph, applies reduction
//! rules to it and records every decision on a [`ReductionStack`]. Any
//! independent set of the resulting kernel can be lifted back through the
//! stack to an independent set of the input graph; the lifted set is larger
//! by exactly [`ReductionStack::offset`], so optimal kernel solutions lift to
//! optimal input solutions.
//!
//! [`kernelize`] applies the enabled rules in the fixed order of
//! [`Rule::ALL`] (cheap rules first) and restarts from the first rule after
//! every successful pass, until no rule applies.

mod lp;
mod packing;
mod rules;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::marks::Marks;

use lp::LpState;
use packing::PackingStore;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Pendant,
    Isolated,
    Fold,
    Lp,
    Unconfined,
    Twin,
    Alternative,
    Packing,
}

impl Rule {
    /// All rules, in application priority order.
    pub const ALL: [Rule; 8] = [
        Rule::Pendant,
        Rule::Isolated,
        Rule::Fold,
        Rule::Lp,
        Rule::Unconfined,
        Rule::Twin,
        Rule::Alternative,
        Rule::Packing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Pendant => "pendant",
            Rule::Isolated => "isolated",
            Rule::Fold => "fold",
            Rule::Lp => "lp",
            Rule::Unconfined => "unconfined",
            Rule::Twin => "twin",
            Rule::Alternative => "alternative",
            Rule::Packing => "packing",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set of enabled rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RuleSet(u8);

impl RuleSet {
    pub const EMPTY: RuleSet = RuleSet(0);
    pub const ALL: RuleSet = RuleSet(0xff);
    /// Every rule except isolated vertex removal, as used by KerMIS.
    pub const KERMIS: RuleSet = RuleSet(!(1 << Rule::Isolated as u8));

    /// Bit `i` enables `Rule::ALL[i]`.
    pub fn from_bits(bits: u8) -> Self {
        RuleSet(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn only(rule: Rule) -> Self {
        RuleSet::EMPTY.with(rule)
    }

    pub fn with(self, rule: Rule) -> Self {
        RuleSet(self.0 | (1 << rule.index()))
    }

    pub fn without(self, rule: Rule) -> Self {
        RuleSet(self.0 & !(1 << rule.index()))
    }

    pub fn contains(self, rule: Rule) -> bool {
        self.0 & (1 << rule.index()) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = Rule> {
        Rule::ALL.into_iter().filter(move |&r| self.contains(r))
    }
}

/// Application counts per rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RuleCounts([usize; 8]);

impl RuleCounts {
    pub fn get(&self, rule: Rule) -> usize {
        self.0[rule.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rule, usize)> + '_ {
        Rule::ALL.into_iter().map(move |r| (r, self.get(r)))
    }

    fn add(&mut self, rule: Rule, n: usize) {
        self.0[rule.index()] += n;
    }
}

/// One undo record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// The vertex is in the solution.
    Include(Vertex),
    /// The vertex was dropped and stays out of the solution.
    Exclude(Vertex),
    /// `left`, `center`, `right` were contracted into `merged`. If `merged`
    /// ends up in the solution it is replaced by `left` and `right`,
    /// otherwise `center` joins the solution.
    Fold {
        merged: Vertex,
        center: Vertex,
        left: Vertex,
        right: Vertex,
    },
    /// Two degree-3 twins with an independent common neighbourhood were
    /// replaced by `gadget`, adjacent to their distance-2 vertices.
    TwinGadget {
        gadget: Vertex,
        twins: [Vertex; 2],
        neighbors: [Vertex; 3],
    },
    /// `a` and `b` were alternatives. `a_neighbors` is `N(A)` without `B` and
    /// without the common neighbourhood; if any of them is in the solution
    /// `b` joins it, otherwise `a` does.
    Alternative {
        a: Vec<Vertex>,
        b: Vec<Vertex>,
        a_neighbors: Vec<Vertex>,
    },
}

impl Reduction {
    /// Vertices this record adds to any lifted solution.
    fn gain(&self) -> usize {
        match self {
            Reduction::Include(_) => 1,
            Reduction::Exclude(_) => 0,
            Reduction::Fold { .. } => 1,
            Reduction::TwinGadget { .. } => 2,
            Reduction::Alternative { a, .. } => a.len(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReductionStack {
    entries: Vec<Reduction>,
    offset: usize,
    original_n: usize,
    id_bound: usize,
}

impl ReductionStack {
    pub fn new(original_n: usize) -> Self {
        ReductionStack {
            entries: Vec::new(),
            offset: 0,
            original_n,
            id_bound: original_n,
        }
    }

    pub fn entries(&self) -> &[Reduction] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|lift(S)| - |S|` for every kernel independent set `S`.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn push(&mut self, entry: Reduction) {
        match &entry {
            Reduction::Fold { merged: g, .. } | Reduction::TwinGadget { gadget: g, .. } => {
                self.id_bound = self.id_bound.max(g + 1);
            }
            _ => {}
        }
        self.offset += entry.gain();
        self.entries.push(entry);
    }

    /// Replays the records in reverse over `kernel_solution`. The result is
    /// sorted, uses only ids below the original vertex count, and is
    /// independent in the input graph whenever `kernel_solution` is
    /// independent in the kernel.
    pub fn lift(&self, kernel_solution: &[Vertex]) -> Vec<Vertex> {
        let bound = kernel_solution
            .iter()
            .map(|&v| v + 1)
            .max()
            .unwrap_or(0)
            .max(self.id_bound);
        let mut member = vec![false; bound];
        for &v in kernel_solution {
            member[v] = true;
        }
        for entry in self.entries.iter().rev() {
            match entry {
                Reduction::Include(v) => member[*v] = true,
                Reduction::Exclude(_) => {}
                Reduction::Fold {
                    merged,
                    center,
                    left,
                    right,
                } => {
                    if member[*merged] {
                        member[*merged] = false;
                        member[*left] = true;
                        member[*right] = true;
                    } else {
                        member[*center] = true;
                    }
                }
                Reduction::TwinGadget {
                    gadget,
                    twins,
                    neighbors,
                } => {
                    if member[*gadget] {
                        member[*gadget] = false;
                        neighbors.iter().for_each(|&x| member[x] = true);
                    } else {
                        twins.iter().for_each(|&x| member[x] = true);
                    }
                }
                Reduction::Alternative { a, b, a_neighbors } => {
                    let side = if a_neighbors.iter().any(|&x| member[x]) {
                        b
                    } else {
                        a
                    };
                    side.iter().for_each(|&x| member[x] = true);
                }
            }
        }
        (0..self.original_n.min(bound))
            .filter(|&v| member[v])
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct KernelResult {
    pub kernel: Graph,
    pub stack: ReductionStack,
    pub counts: RuleCounts,
    pub reduced_n: usize,
    pub reduced_m: usize,
}

impl KernelResult {
    /// Checked version of [`ReductionStack::lift`].
    pub fn lift(&self, kernel_solution: &[Vertex]) -> Result<Vec<Vertex>> {
        let mut member = vec![false; self.kernel.id_bound()];
        for &v in kernel_solution {
            if !self.kernel.is_alive(v) {
                return Err(Error::DeadVertex(v));
            }
            member[v] = true;
        }
        for &v in kernel_solution {
            if let Some(u) = self.kernel.live_neighbors(v).find(|&u| member[u]) {
                return Err(Error::NotIndependent(v, u));
            }
        }
        Ok(self.stack.lift(kernel_solution))
    }
}

/// Working state for kernelization.
#[derive(Clone, Debug)]
pub struct Kernelizer {
    graph: Graph,
    stack: ReductionStack,
    counts: RuleCounts,
    packing: PackingStore,
    track_packing: bool,
    lp: LpState,
    lp_refinement: bool,
    marks: Marks,
    marks2: Marks,
}

impl Kernelizer {
    pub fn new(graph: Graph) -> Self {
        let bound = graph.id_bound();
        Kernelizer {
            stack: ReductionStack::new(graph.original_n()),
            graph,
            counts: RuleCounts::default(),
            packing: PackingStore::default(),
            track_packing: false,
            lp: LpState::default(),
            lp_refinement: true,
            marks: Marks::new(bound),
            marks2: Marks::new(bound),
        }
    }

    /// Whether the LP rule also searches for an optimum with a smaller
    /// half-integral part once the plain half-integral optimum fixes nothing.
    /// On by default.
    pub fn with_lp_refinement(mut self, on: bool) -> Self {
        self.lp_refinement = on;
        self
    }

    /// Record packing constraints when the unconfined rule excludes a vertex.
    /// [`Kernelizer::run`] sets this from its rule set.
    pub fn with_packing_constraints(mut self, on: bool) -> Self {
        self.track_packing = on;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn stack(&self) -> &ReductionStack {
        &self.stack
    }

    pub fn counts(&self) -> RuleCounts {
        self.counts
    }

    pub fn active_packing_constraints(&self) -> usize {
        self.packing.active_count()
    }

    /// Adds the constraint "at most `bound` members of `members` are left out
    /// of the solution". Every member must be alive.
    pub fn add_packing_constraint(&mut self, members: Vec<Vertex>, bound: usize) -> Result<()> {
        for &v in &members {
            if !self.graph.is_alive(v) {
                return Err(Error::DeadVertex(v));
            }
        }
        self.packing.add(members, bound as isize);
        Ok(())
    }

    /// Applies one rule (one pass, or to its own fixpoint for the linear
    /// rules) and returns the number of applications.
    pub fn apply(&mut self, rule: Rule) -> usize {
        let n = match rule {
            Rule::Pendant => self.pendant_pass(),
            Rule::Isolated => self.isolated_pass(None),
            Rule::Fold => self.fold_pass(),
            Rule::Lp => self.lp_pass(),
            Rule::Unconfined => self.unconfined_pass(),
            Rule::Twin => self.twin_pass(),
            Rule::Alternative => self.alternative_pass(),
            Rule::Packing => self.packing_pass(),
        };
        self.counts.add(rule, n);
        n
    }

    pub fn reduce_pendant(&mut self) -> usize {
        self.apply(Rule::Pendant)
    }

    /// Isolated (simplicial) vertex removal restricted to live degree at most
    /// `max_degree`; `None` means no bound.
    pub fn reduce_isolated(&mut self, max_degree: Option<usize>) -> usize {
        let n = self.isolated_pass(max_degree);
        self.counts.add(Rule::Isolated, n);
        n
    }

    pub fn reduce_fold(&mut self) -> usize {
        self.apply(Rule::Fold)
    }

    pub fn reduce_lp(&mut self) -> usize {
        self.apply(Rule::Lp)
    }

    pub fn reduce_unconfined(&mut self) -> usize {
        self.apply(Rule::Unconfined)
    }

    pub fn reduce_twin(&mut self) -> usize {
        self.apply(Rule::Twin)
    }

    pub fn reduce_alternative(&mut self) -> usize {
        self.apply(Rule::Alternative)
    }

    pub fn reduce_packing(&mut self) -> usize {
        self.apply(Rule::Packing)
    }

    /// Applies the enabled rules until none of them applies. Returns the
    /// total number of applications.
    pub fn run(&mut self, rules: RuleSet) -> usize {
        self.track_packing = rules.contains(Rule::Packing);
        let mut total = 0;
        'restart: loop {
            for rule in rules.iter() {
                let n = self.apply(rule);
                if n > 0 {
                    total += n;
                    continue 'restart;
                }
            }
            return total;
        }
    }

    pub fn finish(self) -> KernelResult {
        KernelResult {
            reduced_n: self.graph.alive_count(),
            reduced_m: self.graph.live_edge_count(),
            kernel: self.graph,
            stack: self.stack,
            counts: self.counts,
        }
    }

    // Decision helpers. Every vertex removal goes through one of these so
    // the packing constraints stay in sync with the graph.

    fn sync_marks(&mut self) {
        let bound = self.graph.id_bound();
        self.marks.ensure(bound);
        self.marks2.ensure(bound);
    }

    fn include(&mut self, v: Vertex) {
        let neighbors: Vec<Vertex> = self.graph.live_neighbors(v).collect();
        self.stack.push(Reduction::Include(v));
        self.graph.remove_vertex(v).expect("included vertex is alive");
        self.packing.on_include(v);
        for u in neighbors {
            self.drop_excluded(u);
        }
    }

    /// Removes `v` as a vertex known to be outside the solution, without an
    /// undo record (neighbours of included vertices).
    fn drop_excluded(&mut self, v: Vertex) {
        self.graph.remove_vertex(v).expect("excluded vertex is alive");
        self.packing.on_exclude(v);
    }

    fn exclude(&mut self, v: Vertex) {
        self.stack.push(Reduction::Exclude(v));
        self.drop_excluded(v);
    }

    fn absorb(&mut self, v: Vertex) {
        if self.graph.is_alive(v) {
            self.graph.remove_vertex(v).expect("absorbed vertex is alive");
        }
        self.packing.on_absorb(v);
    }
}

/// Runs [`Kernelizer::run`] on a copy of `g`.
pub fn kernelize(g: &Graph, rules: RuleSet) -> KernelResult {
    let mut k = Kernelizer::new(g.clone());
    k.run(rules);
    k.finish()
}
