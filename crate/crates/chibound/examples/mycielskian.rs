//! Apply the Mycielskian to the 5-cycle and inspect the result: the layout
//! (base vertices, shadow twins, apex), triangle-freeness, and the
//! one-step chromatic increment.
//!
//! Run with: cargo run --example mycielskian

use chibound::construct::mycielskian;
use chibound::graph::Graph;
use chibound::solve::{chromatic_number, verify_coloring, SolveOptions};
use chibound::verify::{check_mycielski_lemma, CheckOptions};

fn main() {
    let opts = SolveOptions::default();
    let c5 = Graph::cycle(5).unwrap();
    let (lifted, layout) = mycielskian(&c5);

    println!("base: 5-cycle, chi = {}", chromatic_number(&c5, &opts).value);
    println!(
        "lifted: {} vertices ({} base + {} shadows + apex {})",
        lifted.order(),
        layout.base_order,
        layout.base_order,
        layout.apex()
    );
    println!("triangle-free: {}", lifted.is_triangle_free());

    let res = chromatic_number(&lifted, &opts);
    println!("chi of the lift: {} (exact: {})", res.value, res.is_exact());
    assert!(verify_coloring(&lifted, &res.coloring));

    // shadow vertices form an independent set; the apex sees only shadows
    for i in 0..layout.base_order {
        for j in (i + 1)..layout.base_order {
            assert!(!lifted.has_edge(layout.shadow(i), layout.shadow(j)));
        }
        assert!(lifted.has_edge(layout.apex(), layout.shadow(i)));
        assert!(!lifted.has_edge(layout.apex(), layout.base(i)));
    }
    println!("shadow set independent, apex adjacent to shadows only: ok");

    // the packaged check runs both halves (triangle-freeness + increment)
    let report = check_mycielski_lemma(&c5, &CheckOptions::default()).unwrap();
    println!(
        "packaged check: pass = {}, chi {} -> {}",
        report.pass,
        report.value("chi_base").unwrap().value,
        report.value("chi_mycielskian").unwrap().value
    );
}
