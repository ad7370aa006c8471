//! The whole battery on a finite slice of the block class: structural
//! checks per block, a goodness audit, the non-hereditary check, and a
//! non-polynomial witness, assembled into one machine-readable summary.
//!
//! Run with: cargo run --example class_audit

use chibound::construct::{ClassSlice, ClassSpec, ProviderConfig};
use chibound::verify::{render_table, verify_all, CheckOptions, Polynomial, SampleStrategy};

fn main() {
    let slice = ClassSpec {
        slices: vec![ClassSlice {
            r: 2,
            ms: vec![1, 2, 3, 4],
            provider: ProviderConfig::Tower,
        }],
    };
    let p = Polynomial::parse("0,1").unwrap();
    let summary = verify_all(
        &slice,
        Some(&p),
        SampleStrategy::Exhaustive,
        0,
        1,
        &CheckOptions::default(),
    );

    print!("{}", render_table(&summary));
    println!("\nexit code convention: {}", summary.exit_code());

    // the same summary serializes to stable JSON for downstream tooling
    let json = serde_json::to_string_pretty(&summary).unwrap();
    println!(
        "JSON summary: {} checks, {} bytes",
        summary.checks.len(),
        json.len()
    );
}
