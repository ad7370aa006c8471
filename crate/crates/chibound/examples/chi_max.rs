//! chi_max over a finite collection: the largest exact chromatic number
//! among members whose clique number is exactly n. Towers at clique
//! number 2 show the value growing without bound as levels are added.
//!
//! Run with: cargo run --example chi_max

use chibound::construct::mycielski_tower;
use chibound::graph::Graph;
use chibound::verify::{chi_max_of_class, CheckOptions};

fn main() {
    let opts = CheckOptions::default();

    let graphs = vec![
        Graph::complete(2),
        Graph::cycle(5).unwrap(),
        Graph::complete(3),
    ];
    let out = chi_max_of_class(&graphs, 2, &opts);
    println!(
        "[K_2, C_5, K_3] at n = 2: chi_max = {:?} (per-member (omega, chi): {:?})",
        out.max_chi, out.entries
    );

    let only_k3 = vec![Graph::complete(3)];
    let out = chi_max_of_class(&only_k3, 2, &opts);
    println!("[K_3] at n = 2: chi_max = {:?} (no member attains omega = 2)", out.max_chi);

    // the tower slice: fixed clique number 2, chromatic number unbounded
    for top in 3..=5 {
        let towers: Vec<Graph> = (2..=top)
            .map(|r| mycielski_tower(r).unwrap().graph)
            .collect();
        let out = chi_max_of_class(&towers, 2, &opts);
        println!("towers up to level {top}: chi_max = {:?}", out.max_chi);
    }
}
