//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`). Time
//! limits are asserted with wall-clock measurements.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chibound::construct::{
    build_block, compute_b, compute_w, mycielski_tower, tower_order, ClassSlice, ClassSpec,
    ProviderConfig,
};
use chibound::graph::Graph;
use chibound::solve::{
    brute_force_chi, brute_force_omega, chi_restricted, chromatic_number, clique_number,
    naive_chi_restricted, verify_clique, verify_coloring, SolveOptions,
};
use chibound::verify::{
    check_goodness, find_nonpoly_witness, pollyanna_bound, verify_all, BoundingTable,
    CheckOptions, Polynomial, PollyannaConstants, Provenance, SampleStrategy,
};
use chibound::Error;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn check_opts() -> CheckOptions {
    CheckOptions::default()
}

fn random_graph(rng: &mut ChaCha8Rng, order: usize, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in (u + 1)..order {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, &edges).expect("generated edges are valid")
}

#[test]
fn acceptance_01_tower_structure() {
    let start = Instant::now();
    let expected_orders = [(2usize, 2usize), (3, 5), (4, 11), (5, 23), (6, 47)];
    for (r, order) in expected_orders {
        let t = mycielski_tower(r).expect("towers up to level 6 build");
        assert_eq!(t.graph.order(), order, "order of the level-{r} tower");
        assert_eq!(tower_order(r), order);
        assert!(t.graph.is_triangle_free(), "level {r} not triangle-free");
        assert!(t.graph.is_connected(), "level {r} not connected");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "tower construction took {elapsed:?}, budget is 1 s"
    );
    println!("acceptance 01 tower structure (orders 2,5,11,23,47; triangle-free; connected): PASS");
}

#[test]
fn acceptance_02_exact_chromatic_of_towers() {
    for r in 2..=5 {
        let t = mycielski_tower(r).unwrap();
        let start = Instant::now();
        let res = chromatic_number(&t.graph, &opts());
        let elapsed = start.elapsed();
        assert!(res.is_exact(), "chi of level {r} not solved exactly");
        assert_eq!(res.value, r, "chi of the level-{r} tower");
        assert!(
            verify_coloring(&t.graph, &res.coloring),
            "certificate fails verification at level {r}"
        );
        assert!(
            elapsed < Duration::from_secs(120),
            "level {r} took {elapsed:?}, budget is 120 s"
        );
    }
    println!("acceptance 02 exact chromatic number of towers (chi(T_r) = r, r = 2..5): PASS");
}

#[test]
fn acceptance_03_clique_number_of_towers() {
    for r in 2..=6 {
        let t = mycielski_tower(r).unwrap();
        let start = Instant::now();
        let res = clique_number(&t.graph, &opts());
        let elapsed = start.elapsed();
        assert!(res.is_exact());
        assert_eq!(res.value, 2, "omega of the level-{r} tower");
        assert!(verify_clique(&t.graph, &res.clique.vertices));
        assert!(
            elapsed < Duration::from_secs(5),
            "level {r} took {elapsed:?}, budget is 5 s"
        );
    }
    println!("acceptance 03 clique number of towers (omega(T_r) = 2, r = 2..6): PASS");
}

#[test]
fn acceptance_04_block_observation_slice() {
    for m in 1..=4 {
        let x = build_block(2, m, &ProviderConfig::Tower, &opts()).unwrap();
        let start = Instant::now();
        let omega = clique_number(&x.graph, &opts());
        let chi = chromatic_number(&x.graph, &opts());
        let elapsed = start.elapsed();
        assert!(omega.is_exact() && chi.is_exact());
        assert_eq!(omega.value, 2, "omega of the block at m = {m}");
        assert_eq!(chi.value, m.max(2), "chi of the block at m = {m}");
        assert!(
            elapsed < Duration::from_secs(120),
            "block m = {m} took {elapsed:?}, budget is 120 s"
        );
    }
    println!(
        "acceptance 04 block slice r = 2, m = 1..4 (omega = 2, chi = max(m, 2), exact): PASS"
    );
}

#[test]
fn acceptance_05_constants() {
    assert_eq!(compute_b(2).unwrap(), 1);
    assert_eq!(compute_b(3).unwrap(), 35);
    assert_eq!(compute_b(4).unwrap(), 120);
    assert_eq!(compute_w(2).unwrap(), 2);
    assert_eq!(compute_w(3).unwrap(), 35);
    assert_eq!(compute_w(4).unwrap(), 120);
    println!("acceptance 05 constants (B: 1, 35, 120; W: 2, 35, 120): PASS");
}

#[test]
fn acceptance_06_goodness_slice() {
    let start = Instant::now();
    let report = check_goodness(
        2,
        &[1, 2, 3],
        &ProviderConfig::Tower,
        SampleStrategy::Exhaustive,
        0,
        1,
        &check_opts(),
    )
    .unwrap();
    let elapsed = start.elapsed();
    assert!(report.pass, "goodness audit failed: {:?}", report.malformed);
    assert_eq!(report.w_r, 2);
    assert_eq!(report.max_observed, 1);
    assert!(report.max_observed as u64 <= report.w_r);
    assert!(
        elapsed < Duration::from_secs(60),
        "goodness audit took {elapsed:?}, budget is 60 s"
    );
    println!("acceptance 06 goodness slice (exhaustive, max chi^(1) = 1 <= W_2 = 2): PASS");
}

#[test]
fn acceptance_07_restricted_chi_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mismatches = 0;
    for i in 0..100 {
        let order = rng.gen_range(1..=10);
        let edge_prob = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, order, edge_prob);
        for n in 0..=3 {
            let fast = chi_restricted(&g, n, &opts()).unwrap();
            assert!(fast.is_exact());
            let (naive, _) = naive_chi_restricted(&g, n).unwrap();
            if fast.value != naive {
                eprintln!(
                    "mismatch on graph {i} (order {order}) at n = {n}: {} vs {naive}",
                    fast.value
                );
                mismatches += 1;
            }
        }
    }
    assert_eq!(mismatches, 0);
    println!(
        "acceptance 07 chi^(n) oracle equivalence (100 graphs, n = 0..3, 0 mismatches): PASS"
    );
}

#[test]
fn acceptance_08_nonpoly_witnesses() {
    let tower = ProviderConfig::Tower;

    let p = Polynomial::parse("0,1").unwrap(); // p(x) = x
    let (m, report) = find_nonpoly_witness(2, &p, &tower, &check_opts()).unwrap();
    assert_eq!(m, 3);
    assert!(report.pass);
    assert_eq!(report.chi.provenance, Provenance::Exact);
    assert_eq!(report.chi.value, 3);
    assert!(report.separation, "chi = 3 must exceed p(2) = 2");

    let p = Polynomial::parse("0,0,1").unwrap(); // p(x) = x^2
    let start = Instant::now();
    let (m, report) = find_nonpoly_witness(2, &p, &tower, &check_opts()).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(m, 5);
    assert!(report.pass);
    assert_eq!(report.chi.provenance, Provenance::Exact);
    assert_eq!(report.chi.value, 5);
    assert!(report.separation, "chi = 5 must exceed p(2) = 4");
    assert!(
        elapsed < Duration::from_secs(300),
        "quadratic witness took {elapsed:?}, budget is 300 s"
    );

    let p = Polynomial::parse("0,0,0,1").unwrap(); // p(x) = x^3
    let (m, report) = find_nonpoly_witness(2, &p, &tower, &check_opts()).unwrap();
    assert_eq!(m, 9);
    assert!(report.pass);
    assert_eq!(report.chi.provenance, Provenance::Claim);
    assert_eq!(report.chi.value, 9);

    println!("acceptance 08 non-polynomial witnesses (m = 3 exact, 5 exact, 9 claim): PASS");
}

#[test]
fn acceptance_09_pollyanna_arithmetic() {
    let t = BoundingTable::new(vec![1, 3, 7, 9]).unwrap();
    assert_eq!(
        pollyanna_bound(&t).unwrap(),
        PollyannaConstants { r_f: 3, m_f: 7 }
    );

    let t = BoundingTable::new(vec![1, 2]).unwrap();
    assert_eq!(
        pollyanna_bound(&t).unwrap(),
        PollyannaConstants { r_f: 2, m_f: 2 }
    );

    let t = BoundingTable::new(vec![1, 5, 2]).unwrap();
    assert!(matches!(
        pollyanna_bound(&t),
        Err(Error::TableTooShort { needed: 5, have: 3 })
    ));
    println!("acceptance 09 bounding-table constants ((3,7), (2,2), and too-short error): PASS");
}

#[test]
fn acceptance_10_solver_oracle_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97ed);
    let mut count = 0;
    for _ in 0..200 {
        let order = rng.gen_range(0..=7);
        let edge_prob = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, order, edge_prob);

        let chi = chromatic_number(&g, &opts());
        assert!(chi.is_exact());
        assert_eq!(chi.value, brute_force_chi(&g).unwrap(), "chi mismatch");
        assert!(verify_coloring(&g, &chi.coloring), "coloring must verify");

        let omega = clique_number(&g, &opts());
        assert!(omega.is_exact());
        assert_eq!(omega.value, brute_force_omega(&g).unwrap(), "omega mismatch");
        assert!(verify_clique(&g, &omega.clique.vertices), "clique must verify");
        count += 1;
    }
    let elapsed = start.elapsed();
    assert_eq!(count, 200);
    assert!(
        elapsed < Duration::from_secs(120),
        "oracle suite took {elapsed:?}, budget is 120 s"
    );
    println!(
        "acceptance 10 solver oracle suite (200 graphs, chi and omega match, certificates verify): PASS"
    );
}

#[test]
fn acceptance_11_non_hereditary_slice() {
    let slice = ClassSpec {
        slices: vec![ClassSlice {
            r: 2,
            ms: vec![1, 2, 3, 4],
            provider: ProviderConfig::Tower,
        }],
    };
    let summary = verify_all(
        &slice,
        None,
        SampleStrategy::Exhaustive,
        0,
        1,
        &check_opts(),
    );
    assert!(summary.pass, "verify_all failed on the r = 2 slice");
    assert_eq!(summary.exit_code(), 0);
    let non_hereditary = summary
        .checks
        .iter()
        .find(|c| c.check == "non-hereditary")
        .expect("the non-hereditary check must run");
    assert!(non_hereditary.pass);

    for m in 1..=4 {
        let x = build_block(2, m, &ProviderConfig::Tower, &opts()).unwrap();
        assert!(x.graph.components().len() >= 2, "block m = {m} connected");
        assert!(x.tag_graph().is_connected(), "tag of m = {m} disconnected");
    }
    println!(
        "acceptance 11 non-hereditary slice (blocks disconnected, tags connected, exit 0): PASS"
    );
}
