//! Constants derived from a finite chi-bounding table phi: the pivot
//! R = max(2, phi(2)) and the cap M = max{phi(s) : s <= R}. The companion
//! check then asserts, on concrete blocks compatible with the table, that
//! the chromatic number stays at or below M.
//!
//! Run with: cargo run --example pollyanna_constants

use chibound::construct::{build_block, ProviderConfig};
use chibound::verify::{
    check_pollyanna, pollyanna_bound, BoundingTable, CheckOptions, SampleStrategy,
};

fn main() {
    for text in ["1,3,7,9", "1,2", "2,4,4,4,10"] {
        let table = BoundingTable::parse(text).unwrap();
        let c = pollyanna_bound(&table).unwrap();
        println!("phi = ({text}): R = {}, M = {}", c.r_f, c.m_f);
    }

    // a too-short table: phi(2) = 5 demands entries up to index 5
    let short = BoundingTable::parse("1,5,2").unwrap();
    println!("phi = (1,5,2): {}", pollyanna_bound(&short).unwrap_err());

    // companion check on the small level-2 blocks
    let opts = CheckOptions::default();
    let blocks: Vec<_> = (1..=3)
        .map(|m| build_block(2, m, &ProviderConfig::Tower, &opts.solve).unwrap())
        .collect();
    let table = BoundingTable::parse("1,3,7").unwrap();
    let report = check_pollyanna(
        &table,
        &blocks,
        SampleStrategy::Exhaustive,
        0,
        1,
        &opts,
    )
    .unwrap();
    println!(
        "\ncompanion check on blocks m = 1..3 with phi = (1,3,7): pass = {}",
        report.pass
    );
    for entry in &report.blocks {
        println!(
            "  (r, m) = ({}, {}): chi = {} [{}], compatible over {} samples, cap holds: {:?}",
            entry.r,
            entry.m,
            entry.chi.value,
            entry.chi.provenance,
            entry.samples_checked,
            entry.cap_holds
        );
    }
}
