//! The restricted invariant `chi^(n)`: the largest chromatic number over
//! induced subgraphs whose clique number is at most `n`.
//!
//! An induced subgraph has clique number <= n exactly when its complement
//! (within the vertex set) hits every (n+1)-clique, so the search runs over
//! minimal transversals of the (n+1)-cliques instead of all 2^|V| subsets.
//! Deleting more vertices can only lower the chromatic number, which is why
//! minimal transversals suffice and why a greedy upper bound on the
//! remainder prunes the branch-and-bound.

use std::time::Instant;

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexSet};
use crate::solve::color::chromatic_with_deadline;
use crate::solve::{Deadline, SolveOptions, SolveStats};
use crate::Result;

/// Exact (or budget-degraded) `chi^(n)` with a witness subgraph.
#[derive(Clone, Debug)]
pub struct RestrictedChiResult {
    pub n: usize,
    /// chi^(n)(G) when exact; a lower bound when timed out.
    pub value: usize,
    /// Vertex set S with omega(G[S]) <= n attaining `value`.
    pub witness: VertexSet,
    pub stats: SolveStats,
}

impl RestrictedChiResult {
    pub fn is_exact(&self) -> bool {
        !self.stats.timed_out
    }
}

/// All cliques of exactly `size` vertices, each sorted, in lexicographic
/// order.
pub fn enumerate_cliques(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut current = Vec::with_capacity(size);
    let all: Vec<usize> = (0..g.order()).collect();
    extend_cliques(g, &mut current, &all, size, &mut out);
    out
}

fn extend_cliques(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: &[usize],
    size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        if current.len() + 1 + next.len() < size {
            continue;
        }
        current.push(v);
        extend_cliques(g, current, &next, size, out);
        current.pop();
    }
}

struct TransversalSearch<'g> {
    g: &'g Graph,
    cliques: Vec<Vec<usize>>,
    removed: FixedBitSet,
    banned: FixedBitSet,
    best_value: usize,
    best_witness: Option<VertexSet>,
    deadline: Deadline,
    nodes: u64,
    inner_nodes: u64,
    timed_out: bool,
}

impl<'g> TransversalSearch<'g> {
    fn run(&mut self) {
        if self.deadline.expired() {
            self.timed_out = true;
            return;
        }
        self.dfs();
    }

    fn dfs(&mut self) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(64) && self.deadline.expired() {
            self.timed_out = true;
            return;
        }
        // no improvement possible below a greedy bound on the remainder
        if greedy_bound(self.g, &self.removed) <= self.best_value {
            return;
        }
        match self.first_unhit() {
            None => self.evaluate_leaf(),
            Some(ci) => {
                let members = self.cliques[ci].clone();
                let mut newly_banned = Vec::new();
                for &v in &members {
                    if self.banned.contains(v) {
                        continue;
                    }
                    self.removed.insert(v);
                    self.dfs();
                    self.removed.set(v, false);
                    if self.timed_out {
                        break;
                    }
                    self.banned.insert(v);
                    newly_banned.push(v);
                }
                for v in newly_banned {
                    self.banned.set(v, false);
                }
            }
        }
    }

    fn first_unhit(&self) -> Option<usize> {
        self.cliques
            .iter()
            .position(|c| c.iter().all(|&v| !self.removed.contains(v)))
    }

    fn evaluate_leaf(&mut self) {
        let witness: VertexSet = (0..self.g.order())
            .filter(|&v| !self.removed.contains(v))
            .collect();
        let (h, _) = self
            .g
            .induced_subgraph(&witness)
            .expect("witness is within range");
        let sub = chromatic_with_deadline(&h, self.deadline, false);
        self.inner_nodes += sub.stats.nodes;
        if sub.stats.timed_out {
            self.timed_out = true;
        }
        // on timeout sub.lower_bound is still a proven chi lower bound
        let attained = if sub.stats.timed_out {
            sub.lower_bound
        } else {
            sub.value
        };
        let better = attained > self.best_value
            || (attained == self.best_value
                && attained > 0
                && self
                    .best_witness
                    .as_ref()
                    .is_none_or(|w| witness < *w));
        if better {
            self.best_value = attained;
            self.best_witness = Some(witness);
        }
    }
}

/// Sequential greedy coloring of the graph minus `removed`; an upper bound
/// on the chromatic number of anything obtainable by removing more.
fn greedy_bound(g: &Graph, removed: &FixedBitSet) -> usize {
    let n = g.order();
    let mut color = vec![0usize; n];
    let mut max = 0;
    let mut used = Vec::new();
    for v in 0..n {
        if removed.contains(v) {
            continue;
        }
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
        max = max.max(c);
    }
    max
}

/// Exact `chi^(n)` by the clique-transversal search. `chi^(0)` is 0; when
/// `omega(G) <= n` the answer is `chi(G)` with the whole vertex set as
/// witness.
pub fn chi_restricted(g: &Graph, n: usize, opts: &SolveOptions) -> Result<RestrictedChiResult> {
    let start = Instant::now();
    if n == 0 {
        return Ok(RestrictedChiResult {
            n,
            value: 0,
            witness: VertexSet::empty(),
            stats: SolveStats {
                nodes: 0,
                elapsed: start.elapsed(),
                timed_out: false,
            },
        });
    }
    let deadline = Deadline::from_options(opts);
    let cliques = enumerate_cliques(g, n + 1);
    if cliques.is_empty() {
        // omega(G) <= n: the whole graph is the richest candidate
        let chi = chromatic_with_deadline(g, deadline, opts.deterministic);
        return Ok(RestrictedChiResult {
            n,
            value: if chi.stats.timed_out {
                chi.lower_bound
            } else {
                chi.value
            },
            witness: VertexSet::full(g.order()),
            stats: SolveStats {
                nodes: chi.stats.nodes,
                elapsed: start.elapsed(),
                timed_out: chi.stats.timed_out,
            },
        });
    }

    let mut search = TransversalSearch {
        g,
        cliques,
        removed: FixedBitSet::with_capacity(g.order()),
        banned: FixedBitSet::with_capacity(g.order()),
        best_value: 0,
        best_witness: None,
        deadline,
        nodes: 0,
        inner_nodes: 0,
        timed_out: false,
    };
    search.run();

    Ok(RestrictedChiResult {
        n,
        value: search.best_value,
        witness: search.best_witness.unwrap_or_else(VertexSet::empty),
        stats: SolveStats {
            nodes: search.nodes + search.inner_nodes,
            elapsed: start.elapsed(),
            timed_out: search.timed_out,
        },
    })
}
