//! Exact chromatic and clique numbers with verifiable certificates, plus
//! the brute-force oracles used to cross-check them on small graphs.
//!
//! Run with: cargo run --example exact_solvers

use chibound::construct::mycielski_tower;
use chibound::graph::Graph;
use chibound::solve::{
    brute_force_chi, brute_force_omega, chromatic_number, clique_number, k_colorable,
    verify_clique, verify_coloring, KColorOutcome, SolveOptions,
};

fn main() {
    let opts = SolveOptions::default().deterministic();

    let samples: Vec<(&str, Graph)> = vec![
        ("K_2", Graph::complete(2)),
        ("C_5", Graph::cycle(5).unwrap()),
        ("K_4", Graph::complete(4)),
        ("P_4", Graph::path(4)),
        ("C_5 + K_2", Graph::cycle(5).unwrap().disjoint_union(&Graph::complete(2))),
        ("T_4", mycielski_tower(4).unwrap().graph),
    ];

    println!("{:>10} {:>6} {:>6} {:>8}", "graph", "chi", "omega", "nodes");
    for (name, g) in &samples {
        let chi = chromatic_number(g, &opts);
        let omega = clique_number(g, &opts);
        assert!(chi.is_exact() && omega.is_exact());
        assert!(verify_coloring(g, &chi.coloring));
        assert!(verify_clique(g, &omega.clique.vertices));

        // brute-force oracles agree wherever they apply
        if g.order() <= 12 {
            assert_eq!(chi.value, brute_force_chi(g).unwrap());
            assert_eq!(omega.value, brute_force_omega(g).unwrap());
        }
        println!(
            "{:>10} {:>6} {:>6} {:>8}",
            name,
            chi.value,
            omega.value,
            chi.stats.nodes + omega.stats.nodes
        );
    }

    // k-colorability answers are definitive below chi and constructive at it
    let c5 = Graph::cycle(5).unwrap();
    let (two, _) = k_colorable(&c5, 2, &opts);
    let (three, _) = k_colorable(&c5, 3, &opts);
    println!(
        "\nC_5 with 2 colors: {}",
        matches!(two, KColorOutcome::Uncolorable)
            .then_some("uncolorable")
            .unwrap()
    );
    if let KColorOutcome::Colorable(c) = three {
        println!("C_5 with 3 colors: {:?}", c.assignment());
    }
}
