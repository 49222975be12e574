//! Exact double domination number for desk-scale graphs.
//!
//! [`exact_gamma_x2`] is a branch-and-bound over include/exclude decisions
//! in ascending vertex order. [`brute_force_gamma_x2`] enumerates subsets
//! by increasing size and serves as an independent cross-check.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rainbow::dispatch_bound;
use crate::recognition::recognize_mop;

pub const DEFAULT_BUDGET: u64 = 50_000_000;
pub const BRUTE_FORCE_MAX_N: usize = 22;

#[derive(Debug, Clone)]
pub struct SolverReport {
    pub optimum: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

fn check_no_isolated(g: &Graph) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

struct Search<'g> {
    g: &'g Graph,
    decision: Vec<Decision>,
    /// `|N[v] ∩ In|`
    hits: Vec<usize>,
    /// `|N[v] ∩ Open|`
    open: Vec<usize>,
    /// `Σ max(0, 2 - hits[v])`
    deficit: usize,
    chosen: usize,
    best: VertexSet,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, initial: VertexSet, budget: u64) -> Self {
        let n = g.n();
        Search {
            g,
            decision: vec![Decision::Open; n],
            hits: vec![0; n],
            open: (0..n).map(|v| g.degree(v) + 1).collect(),
            deficit: 2 * n,
            chosen: 0,
            best: initial,
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + 'g {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied())
    }

    fn include(&mut self, v: usize) {
        self.decision[v] = Decision::In;
        self.chosen += 1;
        for u in self.closed(v) {
            if self.hits[u] < 2 {
                self.deficit -= 1;
            }
            self.hits[u] += 1;
            self.open[u] -= 1;
        }
    }

    fn undo_include(&mut self, v: usize) {
        for u in self.closed(v) {
            self.open[u] += 1;
            self.hits[u] -= 1;
            if self.hits[u] < 2 {
                self.deficit += 1;
            }
        }
        self.chosen -= 1;
        self.decision[v] = Decision::Open;
    }

    /// Returns false if some vertex can no longer reach two hits.
    fn exclude(&mut self, v: usize) -> bool {
        self.decision[v] = Decision::Out;
        let mut feasible = true;
        for u in self.closed(v) {
            self.open[u] -= 1;
            feasible &= self.hits[u] + self.open[u] >= 2;
        }
        feasible
    }

    fn undo_exclude(&mut self, v: usize) {
        for u in self.closed(v) {
            self.open[u] += 1;
        }
        self.decision[v] = Decision::Open;
    }

    fn lower_bound(&self, from: usize) -> usize {
        if self.deficit == 0 {
            return 0;
        }
        let reach = (from..self.g.n()).map(|w| self.g.degree(w) + 1).max().unwrap_or(0);
        if reach == 0 {
            usize::MAX
        } else {
            self.deficit.div_ceil(reach)
        }
    }

    fn run(&mut self, next: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if self.deficit == 0 {
            if self.chosen < self.best.len() {
                self.best = VertexSet::from_vertices(
                    self.g.n(),
                    (0..self.g.n()).filter(|&v| self.decision[v] == Decision::In),
                );
            }
            return;
        }
        if next == self.g.n() {
            return;
        }
        let lb = self.lower_bound(next);
        if lb == usize::MAX || self.chosen + lb >= self.best.len() {
            return;
        }

        self.include(next);
        self.run(next + 1);
        self.undo_include(next);

        if self.exclude(next) {
            self.run(next + 1);
        }
        self.undo_exclude(next);
    }
}

/// Minimum double dominating set by branch-and-bound.
///
/// `budget` caps the number of search nodes (default
/// [`DEFAULT_BUDGET`]); when it runs out the best set found so far is
/// returned inside [`Error::BudgetExceeded`].
pub fn exact_gamma_x2(g: &Graph, budget: Option<u64>) -> Result<SolverReport> {
    check_no_isolated(g)?;
    let start = Instant::now();
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let initial = match recognize_mop(g) {
        Ok(_) if g.n() >= 4 => dispatch_bound(g)?.set,
        _ => VertexSet::full(g.n()),
    };
    let mut search = Search::new(g, initial, budget);
    search.run(0);
    if search.aborted {
        return Err(Error::BudgetExceeded { budget, best: search.best, nodes: search.nodes });
    }
    Ok(SolverReport {
        optimum: search.best.len(),
        witness: search.best,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

/// Minimum double dominating set by enumerating subsets in increasing
/// size, for `n ≤ BRUTE_FORCE_MAX_N`.
pub fn brute_force_gamma_x2(g: &Graph) -> Result<SolverReport> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge { n, max: BRUTE_FORCE_MAX_N });
    }
    check_no_isolated(g)?;
    let start = Instant::now();
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | (1 << u)))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    let mut tested = 0u64;
    for k in 1..=n {
        // Gosper's hack over all k-subsets of 0..n
        let mut s: u32 = (1u32 << k) - 1;
        while s <= full {
            tested += 1;
            if closed.iter().all(|&m| (m & s).count_ones() >= 2) {
                return Ok(SolverReport {
                    optimum: k,
                    witness: VertexSet::from_vertices(n, (0..n).filter(|&v| s >> v & 1 == 1)),
                    nodes_explored: tested,
                    elapsed: start.elapsed(),
                });
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            if r > full || r == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set double dominates a graph without isolated vertices")
}
