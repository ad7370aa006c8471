//! Immutable finite simple undirected graphs over dense vertex indices,
//! plus the certificate types (colorings and cliques) that the solvers emit.
//!
//! Conventions: vertices are `0..order`, order 0 is the empty graph, and
//! both the chromatic and clique number of the empty graph are 0.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite simple undirected graph. Adjacency is stored as one bitset per
/// vertex; the structure is immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// Graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(order); order],
        }
    }

    /// Build a graph from an explicit edge list. Edges are symmetrized and
    /// deduplicated; endpoints must be `< order` and distinct.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::IndexOutOfRange { index: u, order });
            }
            if v >= order {
                return Err(Error::IndexOutOfRange { index: v, order });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Cycle C_n (requires n >= 3; n = 0 gives the empty graph).
    pub fn cycle(n: usize) -> Result<Self> {
        if n > 0 && n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path P_n on n vertices (n - 1 edges).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are always valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Adjacency row of `v` as a bitset.
    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `s`. Vertices are re-indexed in ascending order of
    /// their original index; the returned map sends new index -> old index.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        s.validate(self.order())?;
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok((g, map))
    }

    /// Disjoint union: `self` keeps indices `0..n`, `other` is shifted to
    /// `n..n+m`, and no edges cross the two parts.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let total = n + other.order();
        let mut g = Graph::empty(total);
        for u in 0..n {
            for v in self.adj[u].ones() {
                g.adj[u].insert(v);
            }
        }
        for u in 0..other.order() {
            for v in other.adj[u].ones() {
                g.adj[n + u].insert(n + v);
            }
        }
        g
    }

    /// Connected components as sorted vertex sets, ordered by minimum element.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.adj[v].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// True when the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff no three vertices are pairwise adjacent.
    pub fn is_triangle_free(&self) -> bool {
        let mut common = FixedBitSet::with_capacity(self.order());
        for u in 0..self.order() {
            for v in self.adj[u].ones() {
                if v <= u {
                    continue;
                }
                common.clone_from(&self.adj[u]);
                common.intersect_with(&self.adj[v]);
                if common.count_ones(..) > 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// A subset of the vertices of some graph, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// The full vertex set {0, .., order-1}.
    pub fn full(order: usize) -> Self {
        VertexSet((0..order).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Error unless every element is `< order`.
    pub fn validate(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&max) if max >= order => Err(Error::IndexOutOfRange { index: max, order }),
            _ => Ok(()),
        }
    }

    /// Complement within {0, .., order-1}.
    pub fn complement(&self, order: usize) -> VertexSet {
        VertexSet((0..order).filter(|v| !self.contains(*v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// A proper vertex coloring: colors are 1-based and every color in
/// `1..=colors_used` is used by at least one vertex. The empty graph's
/// coloring uses 0 colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors_used: usize,
    assignment: Vec<usize>,
}

impl Coloring {
    /// Validate and wrap an assignment (vertex index -> color in 1..=k).
    /// Rejects color 0 and gaps in the set of used colors.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k];
        for (v, &c) in assignment.iter().enumerate() {
            if c == 0 {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} has color 0; colors are 1-based"
                )));
            }
            used[c - 1] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidParameter(format!(
                "color {} is never used",
                missing + 1
            )));
        }
        Ok(Coloring {
            colors_used: k,
            assignment,
        })
    }

    pub fn colors_used(&self) -> usize {
        self.colors_used
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Proper for `g`: covers every vertex and no edge is monochromatic.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        if self.assignment.len() != g.order() {
            return false;
        }
        for (u, v) in g.edges() {
            if self.assignment[u] == self.assignment[v] {
                return false;
            }
        }
        true
    }
}

/// A clique certificate: a set of pairwise adjacent vertices witnessing a
/// lower bound on the clique number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCert {
    pub vertices: VertexSet,
}

impl CliqueCert {
    pub fn new(vertices: VertexSet) -> Self {
        CliqueCert { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// All members in range and pairwise adjacent.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.vertices.validate(g.order()).is_err() {
            return false;
        }
        let vs = self.vertices.as_slice();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_k2() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
    }

    #[test]
    fn make_graph_empty() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.edge_count(), 0);
        assert!(g.components().is_empty());
    }

    #[test]
    fn make_graph_c5() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(g.degree(v), 2);
        }
        assert_eq!(g, Graph::cycle(5).unwrap());
    }

    #[test]
    fn make_graph_dedups_and_symmetrizes() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, order: 2 })
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
    }

    #[test]
    fn induced_subgraph_identity() {
        let g = Graph::cycle(5).unwrap();
        let (h, map) = g.induced_subgraph(&VertexSet::full(5)).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_subgraph_empty() {
        let g = Graph::cycle(5).unwrap();
        let (h, map) = g.induced_subgraph(&VertexSet::empty()).unwrap();
        assert_eq!(h.order(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn induced_subgraph_path() {
        // {0,1,2} of C_5 induces a path on 3 vertices with 2 edges
        let g = Graph::cycle(5).unwrap();
        let (h, map) = g.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h, Graph::path(3));
    }

    #[test]
    fn induced_subgraph_out_of_range() {
        let g = Graph::cycle(5).unwrap();
        assert!(g.induced_subgraph(&VertexSet::new(vec![5])).is_err());
    }

    #[test]
    fn disjoint_union_two_k2() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = k2.disjoint_union(&k2);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.components().len(), 2);
        assert!(!g.has_edge(0, 2) && !g.has_edge(1, 3));
    }

    #[test]
    fn disjoint_union_with_empty_is_identity() {
        let g = Graph::cycle(5).unwrap();
        let u = g.disjoint_union(&Graph::empty(0));
        assert_eq!(u, g);
    }

    #[test]
    fn disjoint_union_c5_k2() {
        let g = Graph::cycle(5)
            .unwrap()
            .disjoint_union(&Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!(g.order(), 7);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn components_layout() {
        let g = Graph::cycle(5).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![VertexSet::full(5)]);

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let comps = k2.disjoint_union(&k2).components();
        assert_eq!(
            comps,
            vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![2, 3])]
        );
    }

    #[test]
    fn triangle_free_basics() {
        assert!(Graph::cycle(5).unwrap().is_triangle_free());
        assert!(!Graph::complete(3).is_triangle_free());
        assert!(Graph::empty(4).is_triangle_free());
    }

    #[test]
    fn coloring_validation() {
        let c = Coloring::new(vec![1, 2, 1]).unwrap();
        assert_eq!(c.colors_used(), 2);
        assert!(Coloring::new(vec![1, 3]).is_err()); // gap: color 2 unused
        assert!(Coloring::new(vec![0]).is_err()); // colors are 1-based
        let empty = Coloring::new(vec![]).unwrap();
        assert_eq!(empty.colors_used(), 0);
    }

    #[test]
    fn coloring_proper_check() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(Coloring::new(vec![1, 2]).unwrap().is_proper_for(&k2));
        assert!(!Coloring::new(vec![1, 1]).unwrap().is_proper_for(&k2));
    }

    #[test]
    fn clique_cert_check() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(CliqueCert::new(VertexSet::new(vec![0, 1])).is_valid_for(&c5));
        assert!(!CliqueCert::new(VertexSet::new(vec![0, 2])).is_valid_for(&c5));
        assert!(CliqueCert::new(VertexSet::empty()).is_valid_for(&c5));
    }
}
