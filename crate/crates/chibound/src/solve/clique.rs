//! Exact maximum clique: branch and bound with a greedy-coloring upper
//! bound on each candidate set and degree-driven ordering.

use std::time::Instant;

use crate::graph::{CliqueCert, Graph, VertexSet};
use crate::solve::{greedy_clique, Deadline, SolveOptions, SolveStats};

/// Exact (or budget-degraded) clique number with certificate.
#[derive(Clone, Debug)]
pub struct CliqueResult {
    /// omega(G) when exact; otherwise the best lower bound found.
    pub value: usize,
    /// Clique attaining `value`.
    pub clique: CliqueCert,
    pub stats: SolveStats,
}

impl CliqueResult {
    pub fn is_exact(&self) -> bool {
        !self.stats.timed_out
    }
}

struct CliqueSearch<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
}

impl<'g> CliqueSearch<'g> {
    fn expand(&mut self, candidates: &[usize]) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) && self.deadline.expired() {
            self.timed_out = true;
            return;
        }
        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        // color classes bound how large a clique the candidates can add
        let ordered = color_order(self.g, candidates);
        for i in (0..ordered.len()).rev() {
            let (v, bound) = ordered[i];
            if self.current.len() + bound <= self.best.len() {
                return; // every remaining candidate has an equal or smaller bound
            }
            let next: Vec<usize> = ordered[..i]
                .iter()
                .map(|&(u, _)| u)
                .filter(|&u| self.g.has_edge(u, v))
                .collect();
            self.current.push(v);
            self.expand(&next);
            self.current.pop();
            if self.timed_out {
                return;
            }
        }
    }
}

/// Greedy-color `candidates` (highest degree first) and return them sorted
/// by ascending color class; the class number of a vertex bounds the size
/// of any clique inside the candidates up to and including it.
fn color_order(g: &Graph, candidates: &[usize]) -> Vec<(usize, usize)> {
    let mut sorted = candidates.to_vec();
    sorted.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in sorted {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut out = Vec::with_capacity(candidates.len());
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            out.push((v, ci + 1));
        }
    }
    out
}

/// Exact clique number. On timeout the reported value is the size of the
/// best clique found, a certified lower bound.
pub fn clique_number(g: &Graph, opts: &SolveOptions) -> CliqueResult {
    clique_with_deadline(g, Deadline::from_options(opts), opts.deterministic)
}

/// Deadline-sharing form of [`clique_number`].
pub(crate) fn clique_with_deadline(
    g: &Graph,
    deadline: Deadline,
    deterministic: bool,
) -> CliqueResult {
    let start = Instant::now();
    if g.order() == 0 {
        return CliqueResult {
            value: 0,
            clique: CliqueCert::new(VertexSet::empty()),
            stats: SolveStats {
                nodes: 0,
                elapsed: start.elapsed(),
                timed_out: false,
            },
        };
    }
    let mut search = CliqueSearch {
        g,
        best: greedy_clique(g),
        current: Vec::new(),
        nodes: 0,
        deadline,
        timed_out: deadline.expired(),
    };
    if !search.timed_out {
        let all: Vec<usize> = (0..g.order()).collect();
        search.expand(&all);
    }

    let mut best = search.best;
    if deterministic && !search.timed_out {
        if let Some(lex) = lex_min_clique(g, best.len(), deadline) {
            best = lex;
        }
    }
    let cert = CliqueCert::new(VertexSet::new(best));
    CliqueResult {
        value: cert.len(),
        clique: cert,
        stats: SolveStats {
            nodes: search.nodes,
            elapsed: start.elapsed(),
            timed_out: search.timed_out,
        },
    }
}

/// True when some clique of size `want` lies inside `allowed`.
fn exists_clique(g: &Graph, allowed: &[usize], want: usize, deadline: Deadline) -> Option<bool> {
    if want == 0 {
        return Some(true);
    }
    if allowed.len() < want {
        return Some(false);
    }
    let mut search = CliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        deadline,
        timed_out: false,
    };
    found_of_size(&mut search, allowed, want)
}

// Early-exit variant: stop as soon as a clique of size `want` appears.
fn found_of_size(search: &mut CliqueSearch<'_>, candidates: &[usize], want: usize) -> Option<bool> {
    search.nodes += 1;
    if search.nodes.is_multiple_of(256) && search.deadline.expired() {
        return None;
    }
    if search.current.len() == want {
        return Some(true);
    }
    let need = want - search.current.len();
    let ordered = color_order(search.g, candidates);
    for i in (0..ordered.len()).rev() {
        let (v, bound) = ordered[i];
        if bound < need {
            return Some(false);
        }
        let next: Vec<usize> = ordered[..i]
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| search.g.has_edge(u, v))
            .collect();
        search.current.push(v);
        let hit = found_of_size(search, &next, want)?;
        search.current.pop();
        if hit {
            return Some(true);
        }
    }
    Some(false)
}

/// Lexicographically least clique of the given size, built front to back:
/// each position takes the smallest vertex that still extends to a full
/// clique among larger vertices.
fn lex_min_clique(g: &Graph, size: usize, deadline: Deadline) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    let mut candidates: Vec<usize> = (0..g.order()).collect();
    while chosen.len() < size {
        let need = size - chosen.len();
        let mut picked = None;
        for (idx, &v) in candidates.iter().enumerate() {
            let rest: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&u| g.has_edge(u, v))
                .collect();
            match exists_clique(g, &rest, need - 1, deadline) {
                Some(true) => {
                    picked = Some((idx, v));
                    break;
                }
                Some(false) => {}
                None => return None,
            }
        }
        let (idx, v) = picked?;
        chosen.push(v);
        candidates = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
    }
    Some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{brute_force_omega, verify_clique};

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn omega_of_empty_graph() {
        let r = clique_number(&Graph::empty(0), &opts());
        assert_eq!(r.value, 0);
        assert!(r.clique.is_empty());
        assert!(r.is_exact());
    }

    #[test]
    fn omega_of_small_graphs() {
        for (g, expect) in [
            (Graph::cycle(5).unwrap(), 2),
            (Graph::complete(4), 4),
            (Graph::path(4), 2),
            (Graph::empty(3), 1),
        ] {
            let r = clique_number(&g, &opts());
            assert_eq!(r.value, expect);
            assert_eq!(r.value, brute_force_omega(&g).unwrap());
            assert!(verify_clique(&g, &r.clique.vertices));
            assert_eq!(r.clique.len(), r.value);
        }
    }

    #[test]
    fn omega_of_disjoint_union_is_max_of_parts() {
        let g = Graph::cycle(5).unwrap().disjoint_union(&Graph::from_edges(2, &[(0, 1)]).unwrap());
        let r = clique_number(&g, &opts());
        assert_eq!(r.value, 2);
        assert_eq!(r.value, brute_force_omega(&g).unwrap());
    }

    #[test]
    fn deterministic_mode_gives_lex_min_clique() {
        // triangle on {2,3,4} plus edge (0,1): max cliques are {2,3,4}
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = clique_number(&g, &opts().deterministic());
        assert_eq!(r.value, 3);
        assert_eq!(r.clique.vertices.as_slice(), &[2, 3, 4]);

        // two triangles: {0,2,4} and {1,3,5} -- lex-min is {0,2,4}
        let g = Graph::from_edges(6, &[(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5)]).unwrap();
        let r = clique_number(&g, &opts().deterministic());
        assert_eq!(r.clique.vertices.as_slice(), &[0, 2, 4]);
    }

    #[test]
    fn timeout_reports_lower_bound() {
        let g = Graph::complete(6);
        let r = clique_number(&g, &SolveOptions::with_budget_secs(0.0));
        assert!(r.stats.timed_out);
        assert!(r.value <= 6);
        assert!(verify_clique(&g, &r.clique.vertices));
    }
}
