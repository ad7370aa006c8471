//! The restricted invariant chi^(n): the largest chromatic number among
//! induced subgraphs with clique number at most n, computed over minimal
//! transversals of the (n+1)-cliques and cross-checked against plain
//! subset enumeration.
//!
//! Run with: cargo run --example restricted_chi

use chibound::construct::{build_block, mycielski_tower, ProviderConfig};
use chibound::graph::Graph;
use chibound::solve::{chi_restricted, naive_chi_restricted, SolveOptions};

fn main() {
    let opts = SolveOptions::default();

    // a graph with a real gap between chi^(n) levels: K_4 next to a 5-cycle
    let g = Graph::complete(4).disjoint_union(&Graph::cycle(5).unwrap());
    println!("K_4 + C_5 ({} vertices):", g.order());
    for n in 0..=4 {
        let res = chi_restricted(&g, n, &opts).unwrap();
        let (naive, _) = naive_chi_restricted(&g, n).unwrap();
        assert_eq!(res.value, naive);
        println!(
            "  chi^({n}) = {} (witness {:?}, naive enumeration agrees)",
            res.value,
            res.witness.as_slice()
        );
    }

    // on a triangle-free graph, n = 2 already frees the whole graph
    let t4 = mycielski_tower(4).unwrap().graph;
    let res = chi_restricted(&t4, 2, &opts).unwrap();
    println!(
        "\ntower level 4: chi^(2) = {} with witness of {} vertices (all of them)",
        res.value,
        res.witness.len()
    );

    // on a block, chi^(1) collapses to 1: removing a vertex of every edge
    // leaves an edgeless graph
    let x = build_block(2, 4, &ProviderConfig::Tower, &opts).unwrap();
    let res = chi_restricted(&x.graph, 1, &opts).unwrap();
    println!(
        "block at (r, m) = (2, 4): chi^(1) = {} <= W_2 = {}",
        res.value, x.spec.w_r
    );
}
