//! Build tagged blocks X_{r,m} (core with clique number r, disjoint tower
//! tag) and run the structural check on each: clique number exactly r,
//! chromatic number at least m, tag triangle-free and connected, whole
//! graph disconnected.
//!
//! Run with: cargo run --example blocks

use chibound::construct::{build_block, ProviderConfig};
use chibound::verify::{check_block_observation, CheckOptions};

fn main() {
    let opts = CheckOptions::default();
    println!(
        "{:>3} {:>3} {:>7} {:>7} {:>6} {:>6} {:>6}",
        "r", "m", "order", "core", "tag", "omega", "chi"
    );
    for m in 1..=4 {
        let x = build_block(2, m, &ProviderConfig::Tower, &opts.solve).unwrap();
        let report = check_block_observation(&x, &opts);
        assert!(report.pass, "block m = {m} failed: {:?}", report.notes);
        println!(
            "{:>3} {:>3} {:>7} {:>7} {:>6} {:>6} {:>6}",
            x.spec.r,
            x.spec.m,
            x.graph.order(),
            x.core.len(),
            x.tag.len(),
            report.value("omega").unwrap().value,
            report.value("chi").unwrap().value,
        );
    }

    let x = build_block(2, 3, &ProviderConfig::Tower, &opts.solve).unwrap();
    println!("\nlayout of the (2, 3) block:");
    println!("  core vertices: {:?}", x.core.as_slice());
    println!("  tag vertices:  {:?}", x.tag.as_slice());
    println!("  components:    {}", x.graph.components().len());
    println!("  derived constants: B = {}, W = {}", x.spec.b_r, x.spec.w_r);
}
