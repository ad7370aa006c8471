//! Brute-force oracles for cross-validating the exact solvers.
//!
//! These deliberately share no machinery with the branch-and-bound engines:
//! the chromatic oracle backtracks over color assignments in static vertex
//! order with no ordering heuristics and no symmetry breaking, and the
//! clique oracle scans every vertex subset. Both are capped at
//! [`BRUTE_CAP`] vertices.

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Hard cap on the order of graphs the oracles accept.
pub const BRUTE_CAP: usize = 12;

fn check_cap(g: &Graph) -> Result<()> {
    if g.order() > BRUTE_CAP {
        return Err(Error::TooLarge {
            order: g.order(),
            cap: BRUTE_CAP,
        });
    }
    Ok(())
}

/// Chromatic number by exhaustive assignment enumeration.
pub fn brute_force_chi(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if assign(g, &mut colors, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("every graph on n vertices is n-colorable");
}

// Try every color 1..=k at vertex v, recursing in index order. Conflict
// pruning against already-colored neighbors keeps this exhaustive.
fn assign(g: &Graph, colors: &mut [usize], v: usize, k: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    'colors: for c in 1..=k {
        for u in g.neighbors(v) {
            if u < v && colors[u] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        if assign(g, colors, v + 1, k) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// Clique number by scanning all 2^n vertex subsets.
pub fn brute_force_omega(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    let n = g.order();
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > best && mask_is_clique(g, mask) {
            best = size;
        }
    }
    Ok(best)
}

fn mask_is_clique(g: &Graph, mask: u32) -> bool {
    let members: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// `chi^(n)` by enumerating every vertex subset: the maximum brute-force
/// chromatic number over induced subgraphs with clique number at most `n`.
/// Returns the value and the first witness in subset-mask order.
pub fn naive_chi_restricted(g: &Graph, n: usize) -> Result<(usize, VertexSet)> {
    check_cap(g)?;
    let order = g.order();
    let mut best = 0usize;
    let mut witness = VertexSet::empty();
    for mask in 0u32..(1 << order) {
        let subset = VertexSet::new((0..order).filter(|&v| mask >> v & 1 == 1).collect());
        let (h, _) = g.induced_subgraph(&subset)?;
        if brute_force_omega(&h)? > n {
            continue;
        }
        let chi = brute_force_chi(&h)?;
        if chi > best {
            best = chi;
            witness = subset;
        }
    }
    Ok((best, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_values() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(brute_force_chi(&c5).unwrap(), 3);
        assert_eq!(brute_force_omega(&c5).unwrap(), 2);
    }

    #[test]
    fn k4_values() {
        let k4 = Graph::complete(4);
        assert_eq!(brute_force_chi(&k4).unwrap(), 4);
        assert_eq!(brute_force_omega(&k4).unwrap(), 4);
    }

    #[test]
    fn p4_values() {
        let p4 = Graph::path(4);
        assert_eq!(brute_force_chi(&p4).unwrap(), 2);
        assert_eq!(brute_force_omega(&p4).unwrap(), 2);
    }

    #[test]
    fn empty_graph_values() {
        let g = Graph::empty(0);
        assert_eq!(brute_force_chi(&g).unwrap(), 0);
        assert_eq!(brute_force_omega(&g).unwrap(), 0);
    }

    #[test]
    fn rejects_oversized_input() {
        let g = Graph::empty(13);
        assert!(matches!(
            brute_force_chi(&g),
            Err(Error::TooLarge { order: 13, cap: 12 })
        ));
        assert!(brute_force_omega(&g).is_err());
    }

    #[test]
    fn restricted_values_on_c5() {
        let c5 = Graph::cycle(5).unwrap();
        // omega(C_5) = 2 <= 2, so chi^(2) = chi = 3
        assert_eq!(naive_chi_restricted(&c5, 2).unwrap().0, 3);
        // edgeless induced subgraphs only
        assert_eq!(naive_chi_restricted(&c5, 1).unwrap().0, 1);
        assert_eq!(naive_chi_restricted(&c5, 0).unwrap().0, 0);
    }
}
