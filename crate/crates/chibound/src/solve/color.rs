//! Exact chromatic number via iterative deepening over a k-colorability
//! backtracker.
//!
//! The backtracker orders vertices dynamically by saturation degree (ties:
//! higher degree, then lower index) and breaks color symmetry by allowing at
//! most one brand-new color at each branch point. The clique numbers of the
//! graphs this crate targets are tiny relative to their chromatic numbers,
//! so the deepening start bound comes from a greedy clique and the ordering
//! does the heavy lifting.

use std::time::Instant;

use crate::graph::{CliqueCert, Coloring, Graph, VertexSet};
use crate::solve::{greedy_clique, greedy_coloring, Deadline, SolveOptions, SolveStats};

/// Widest color palette the search engine supports; beyond this the solver
/// falls back to heuristic answers flagged as inconclusive.
const MAX_SEARCH_COLORS: usize = 128;

/// Outcome of a bounded k-colorability search.
#[derive(Clone, Debug)]
pub enum KColorOutcome {
    /// A proper coloring with at most k colors.
    Colorable(Coloring),
    /// The search space was exhausted: no k-coloring exists.
    Uncolorable,
    /// Budget ran out before the search finished.
    Inconclusive,
}

/// Why the reported chromatic value cannot be beaten from below.
#[derive(Clone, Debug)]
pub enum ChiLowerBound {
    /// Order-0 graph; the value 0 needs no witness.
    Empty,
    /// A clique of the reported size.
    Clique(CliqueCert),
    /// A failed exhaustive search with this many colors.
    ExhaustedSearch { colors: usize },
}

/// Exact (or budget-degraded) chromatic number with certificate.
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    /// chi(G) when exact; otherwise the best proven upper bound.
    pub value: usize,
    /// Proper coloring attaining `value`.
    pub coloring: Coloring,
    /// Largest k proven to be a lower bound on chi(G).
    pub lower_bound: usize,
    pub lower_bound_evidence: ChiLowerBound,
    pub stats: SolveStats,
}

impl ChromaticResult {
    /// Value is proven optimal (lower and upper bounds met).
    pub fn is_exact(&self) -> bool {
        !self.stats.timed_out
    }
}

struct Searcher<'g> {
    g: &'g Graph,
    k: usize,
    color: Vec<usize>,
    sat_mask: Vec<u128>,
    sat_count: Vec<usize>,
    uncolored: usize,
    /// colors allowed per branch are 1..=max_used+1 when symmetry breaking
    symmetry: bool,
    max_used: usize,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
}

enum Search {
    Found,
    Exhausted,
    TimedOut,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph, k: usize, deadline: Deadline) -> Self {
        Searcher {
            g,
            k,
            color: vec![0; g.order()],
            sat_mask: vec![0; g.order()],
            sat_count: vec![0; g.order()],
            uncolored: g.order(),
            symmetry: true,
            max_used: 0,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    /// Seed a partial assignment (0 = free). Disables symmetry breaking,
    /// which is only sound from an empty assignment.
    fn with_fixed(g: &'g Graph, k: usize, fixed: &[usize], deadline: Deadline) -> Self {
        let mut s = Searcher::new(g, k, deadline);
        s.symmetry = false;
        for (v, &c) in fixed.iter().enumerate() {
            if c != 0 {
                s.color[v] = c;
                s.uncolored -= 1;
                s.max_used = s.max_used.max(c);
            }
        }
        for v in 0..g.order() {
            if s.color[v] == 0 {
                for u in g.neighbors(v) {
                    let c = s.color[u];
                    if c != 0 && s.sat_mask[v] >> (c - 1) & 1 == 0 {
                        s.sat_mask[v] |= 1 << (c - 1);
                        s.sat_count[v] += 1;
                    }
                }
            }
        }
        s
    }

    fn run(&mut self) -> Search {
        if self.deadline.expired() {
            self.timed_out = true;
            return Search::TimedOut;
        }
        // a fixed partial assignment may already be improper
        for v in 0..self.g.order() {
            let c = self.color[v];
            if c != 0 && self.g.neighbors(v).any(|u| self.color[u] == c) {
                return Search::Exhausted;
            }
        }
        self.dfs()
    }

    fn dfs(&mut self) -> Search {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.expired() {
            self.timed_out = true;
            return Search::TimedOut;
        }
        if self.uncolored == 0 {
            return Search::Found;
        }
        let v = self.pick_vertex();
        let limit = if self.symmetry {
            self.k.min(self.max_used + 1)
        } else {
            self.k
        };
        for c in 1..=limit {
            if self.sat_mask[v] >> (c - 1) & 1 == 1 {
                continue;
            }
            let trail = self.assign(v, c);
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c);
            match self.dfs() {
                Search::Found => return Search::Found,
                Search::TimedOut => return Search::TimedOut,
                Search::Exhausted => {}
            }
            self.max_used = prev_max;
            self.unassign(v, c, trail);
        }
        Search::Exhausted
    }

    /// Max saturation count, then max degree, then min index.
    fn pick_vertex(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..self.g.order() {
            if self.color[v] != 0 {
                continue;
            }
            let cand = (self.sat_count[v], self.g.degree(v));
            if best == usize::MAX || cand > key {
                best = v;
                key = cand;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) -> Vec<usize> {
        self.color[v] = c;
        self.uncolored -= 1;
        let bit = 1u128 << (c - 1);
        let mut touched = Vec::new();
        for u in self.g.neighbors(v) {
            if self.color[u] == 0 && self.sat_mask[u] & bit == 0 {
                self.sat_mask[u] |= bit;
                self.sat_count[u] += 1;
                touched.push(u);
            }
        }
        touched
    }

    fn unassign(&mut self, v: usize, c: usize, touched: Vec<usize>) {
        let bit = 1u128 << (c - 1);
        for u in touched {
            self.sat_mask[u] &= !bit;
            self.sat_count[u] -= 1;
        }
        self.color[v] = 0;
        self.uncolored += 1;
    }

    fn take_coloring(&self) -> Coloring {
        Coloring::new(self.color.clone()).expect("search colorings are total and gapless")
    }
}

/// Search for a proper coloring with at most `k` colors.
pub fn k_colorable(g: &Graph, k: usize, opts: &SolveOptions) -> (KColorOutcome, SolveStats) {
    let start = Instant::now();
    let deadline = Deadline::from_options(opts);
    let (outcome, nodes) = k_colorable_inner(g, k, deadline);
    let timed_out = matches!(outcome, KColorOutcome::Inconclusive);
    (
        outcome,
        SolveStats {
            nodes,
            elapsed: start.elapsed(),
            timed_out,
        },
    )
}

fn k_colorable_inner(g: &Graph, k: usize, deadline: Deadline) -> (KColorOutcome, u64) {
    let n = g.order();
    if n == 0 {
        let empty = Coloring::new(vec![]).expect("empty coloring");
        return (KColorOutcome::Colorable(empty), 0);
    }
    if k == 0 {
        return (KColorOutcome::Uncolorable, 0);
    }
    if k >= n || k > MAX_SEARCH_COLORS {
        // cheap feasibility check before (or instead of) searching
        let greedy = greedy_coloring(g);
        if greedy.colors_used() <= k {
            return (KColorOutcome::Colorable(greedy), 0);
        }
        if k > MAX_SEARCH_COLORS {
            return (KColorOutcome::Inconclusive, 0);
        }
    }
    let mut s = Searcher::new(g, k, deadline);
    match s.run() {
        Search::Found => (KColorOutcome::Colorable(s.take_coloring()), s.nodes),
        Search::Exhausted => (KColorOutcome::Uncolorable, s.nodes),
        Search::TimedOut => (KColorOutcome::Inconclusive, s.nodes),
    }
}

/// Exact chromatic number. Optimality is certified from above by the
/// returned coloring and from below by either a clique of the same size or
/// a failed exhaustive search with one fewer color. On timeout the value
/// degrades to the best proven upper bound and `stats.timed_out` is set.
pub fn chromatic_number(g: &Graph, opts: &SolveOptions) -> ChromaticResult {
    chromatic_with_deadline(g, Deadline::from_options(opts), opts.deterministic)
}

/// Deadline-sharing form of [`chromatic_number`], for callers that run many
/// solves under one budget.
pub(crate) fn chromatic_with_deadline(
    g: &Graph,
    deadline: Deadline,
    deterministic: bool,
) -> ChromaticResult {
    let start = Instant::now();
    let n = g.order();
    if n == 0 {
        return ChromaticResult {
            value: 0,
            coloring: Coloring::new(vec![]).expect("empty coloring"),
            lower_bound: 0,
            lower_bound_evidence: ChiLowerBound::Empty,
            stats: SolveStats {
                nodes: 0,
                elapsed: start.elapsed(),
                timed_out: false,
            },
        };
    }

    let clique = greedy_clique(g);
    let clique_cert = CliqueCert::new(VertexSet::new(clique.clone()));
    let start_lb = clique.len().max(1);
    let mut best_coloring = greedy_coloring(g);
    let mut nodes = 0u64;
    let mut proven_lb = start_lb;
    let mut evidence = ChiLowerBound::Clique(clique_cert.clone());
    let mut exact = false;
    let mut value = best_coloring.colors_used();

    let mut k = start_lb;
    while k < best_coloring.colors_used() {
        let (outcome, n_nodes) = k_colorable_inner(g, k, deadline);
        nodes += n_nodes;
        match outcome {
            KColorOutcome::Colorable(c) => {
                debug_assert_eq!(c.colors_used(), k);
                best_coloring = c;
                value = k;
                exact = true;
                break;
            }
            KColorOutcome::Uncolorable => {
                proven_lb = k + 1;
                evidence = ChiLowerBound::ExhaustedSearch { colors: k };
                k += 1;
            }
            KColorOutcome::Inconclusive => {
                // chi > k - 1 is proven; the greedy coloring stays the value
                return ChromaticResult {
                    value,
                    coloring: best_coloring,
                    lower_bound: proven_lb,
                    lower_bound_evidence: evidence,
                    stats: SolveStats {
                        nodes,
                        elapsed: start.elapsed(),
                        timed_out: true,
                    },
                };
            }
        }
    }
    if !exact {
        // the deepening loop ran out of room: greedy bound is optimal
        value = best_coloring.colors_used();
        if value > start_lb {
            debug_assert!(matches!(
                evidence,
                ChiLowerBound::ExhaustedSearch { colors } if colors + 1 == value
            ));
        }
        proven_lb = value;
    } else {
        proven_lb = value;
    }

    if deterministic {
        if let Some(c) = lex_min_coloring(g, value, deadline, &mut nodes) {
            best_coloring = c;
        }
    }

    ChromaticResult {
        value,
        coloring: best_coloring,
        lower_bound: proven_lb,
        lower_bound_evidence: evidence,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
            timed_out: false,
        },
    }
}

/// Lexicographically least proper k-coloring (by vertex index, then color):
/// fix each vertex in turn to the smallest color whose partial assignment
/// still extends to a full k-coloring.
fn lex_min_coloring(
    g: &Graph,
    k: usize,
    deadline: Deadline,
    nodes: &mut u64,
) -> Option<Coloring> {
    if k > MAX_SEARCH_COLORS {
        return None;
    }
    let n = g.order();
    let mut fixed = vec![0usize; n];
    for v in 0..n {
        let mut chosen = false;
        for c in 1..=k {
            if g.neighbors(v).any(|u| fixed[u] == c) {
                continue;
            }
            fixed[v] = c;
            let mut s = Searcher::with_fixed(g, k, &fixed, deadline);
            let result = s.run();
            *nodes += s.nodes;
            match result {
                Search::Found => {
                    chosen = true;
                    break;
                }
                Search::Exhausted => fixed[v] = 0,
                Search::TimedOut => return None,
            }
        }
        if !chosen {
            return None; // k below chi; caller never does this
        }
    }
    Some(Coloring::new(fixed).expect("lex-min coloring is total and gapless"))
}
