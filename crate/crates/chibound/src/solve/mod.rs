//! Exact solvers for the clique number, the chromatic number,
//! k-colorability and the restricted invariant `chi^(n)`.
//!
//! Every solver is sequential and deterministic, takes a time budget, and
//! degrades to a labeled bound instead of a wrong value when the budget is
//! exceeded. Certificates never rely on solver internals: use
//! [`verify_coloring`] / [`verify_clique`] to check them independently.

mod brute;
mod clique;
mod color;
mod restricted;

pub use brute::{brute_force_chi, brute_force_omega, naive_chi_restricted, BRUTE_CAP};
pub use clique::{clique_number, CliqueResult};
pub use color::{chromatic_number, k_colorable, ChiLowerBound, ChromaticResult, KColorOutcome};
pub use restricted::{chi_restricted, RestrictedChiResult};

use std::time::{Duration, Instant};

use crate::graph::{CliqueCert, Coloring, Graph, VertexSet};

/// Default per-solve time budget.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(120);

/// Knobs shared by all exact solvers.
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Wall-clock budget; `None` means unbounded.
    pub budget: Option<Duration>,
    /// When set, optimal certificates are canonicalized to the
    /// lexicographically least one (by vertex index, then color index).
    pub deterministic: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Some(DEFAULT_BUDGET),
            deterministic: false,
        }
    }
}

impl SolveOptions {
    pub fn unbounded() -> Self {
        SolveOptions {
            budget: None,
            deterministic: false,
        }
    }

    pub fn with_budget_secs(secs: f64) -> Self {
        SolveOptions {
            budget: Some(Duration::from_secs_f64(secs)),
            deterministic: false,
        }
    }

    pub fn deterministic(mut self) -> Self {
        self.deterministic = true;
        self
    }
}

/// A solve's wall-clock deadline, polled inside search loops.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Deadline(Option<Instant>);

impl Deadline {
    pub fn from_options(opts: &SolveOptions) -> Self {
        Deadline(opts.budget.map(|b| Instant::now() + b))
    }

    pub fn expired(&self) -> bool {
        match self.0 {
            Some(t) => Instant::now() >= t,
            None => false,
        }
    }
}

/// Search effort and outcome flags for a solve.
#[derive(Clone, Copy, Debug, Default, serde::Serialize)]
pub struct SolveStats {
    /// Nodes explored across all search phases.
    pub nodes: u64,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
    /// Set when the budget ran out; the reported value is then a bound,
    /// never a wrong number.
    pub timed_out: bool,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Independent check that `c` is a proper coloring of `g`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    c.is_proper_for(g)
}

/// Independent check that `s` is a clique of `g`.
pub fn verify_clique(g: &Graph, s: &VertexSet) -> bool {
    CliqueCert::new(s.clone()).is_valid_for(g)
}

/// Maximal clique found by the max-degree greedy heuristic; the cheap lower
/// bound the exact solvers start from.
pub(crate) fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut candidates: Vec<usize> = (0..n).collect();
    let mut clique = Vec::new();
    while !candidates.is_empty() {
        // highest degree, lowest index on ties
        let &v = candidates
            .iter()
            .max_by(|&&a, &&b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))
            .expect("candidates nonempty");
        clique.push(v);
        candidates.retain(|&u| g.has_edge(u, v));
    }
    clique.sort_unstable();
    clique
}

/// Greedy coloring with dynamic saturation-degree ordering; the upper bound
/// the exact chromatic solver starts from. Colors come out gapless.
pub(crate) fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut color = vec![0usize; n];
    // distinct neighbor colors per vertex; the mask tracks only the first
    // 128 colors, beyond that the count goes slightly stale (it only
    // steers the ordering, the assigned color is always computed exactly)
    let mut sat_mask: Vec<u128> = vec![0; n];
    let mut sat_count = vec![0usize; n];
    let mut used = Vec::new();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == 0)
            .max_by(|&a, &b| {
                sat_count[a]
                    .cmp(&sat_count[b])
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        // smallest color not used by a neighbor; at most deg(v) are blocked
        used.clear();
        used.resize(g.degree(v) + 2, false);
        for u in g.neighbors(v) {
            let cu = color[u];
            if cu != 0 && cu < used.len() {
                used[cu] = true;
            }
        }
        let c = (1..used.len()).find(|&c| !used[c]).expect("a color is free");
        color[v] = c;
        if c <= 128 {
            let bit = 1u128 << (c - 1);
            for u in g.neighbors(v) {
                if color[u] == 0 && sat_mask[u] & bit == 0 {
                    sat_mask[u] |= bit;
                    sat_count[u] += 1;
                }
            }
        }
    }
    Coloring::new(color).expect("greedy coloring is total and gapless")
}
