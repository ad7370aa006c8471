//! Property-based invariants: solver laws, construction laws, and format
//! round trips on small random graphs, cross-checked against the
//! brute-force oracles wherever values are involved.

use proptest::prelude::*;

use chibound::construct::{build_block, mycielskian, ProviderConfig};
use chibound::dimacs;
use chibound::graph::{Graph, VertexSet};
use chibound::solve::{
    brute_force_chi, brute_force_omega, chi_restricted, chromatic_number, clique_number,
    naive_chi_restricted, verify_clique, verify_coloring, SolveOptions,
};

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn graph_from_bits(order: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..order {
        for v in (u + 1)..order {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(order, &edges).expect("bit graphs are valid")
}

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.4), pairs)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Drop every edge that would close a triangle, scanning in edge order.
fn strip_triangles(g: &Graph) -> Graph {
    let n = g.order();
    let mut kept: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let closes = kept[u].iter().any(|w| kept[v].contains(w));
        if !closes {
            kept[u].push(v);
            kept[v].push(u);
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("subset of valid edges")
}

fn arb_subset(order: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(proptest::bool::ANY, order)
        .prop_map(move |bits| (0..order).filter(|&v| bits[v]).collect())
}

proptest! {
    #[test]
    fn induced_on_full_vertex_set_is_identity(g in arb_graph(9)) {
        let (h, map) = g.induced_subgraph(&VertexSet::full(g.order())).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (0..g.order()).collect::<Vec<_>>());
    }

    #[test]
    fn chi_and_omega_are_monotone_under_induced_subgraphs(
        (g, s) in arb_graph(8).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), arb_subset(n))
        })
    ) {
        let (h, _) = g.induced_subgraph(&s).unwrap();
        prop_assert!(brute_force_chi(&h).unwrap() <= brute_force_chi(&g).unwrap());
        prop_assert!(brute_force_omega(&h).unwrap() <= brute_force_omega(&g).unwrap());
    }

    #[test]
    fn component_counts_add_under_disjoint_union(g in arb_graph(7), h in arb_graph(7)) {
        let u = g.disjoint_union(&h);
        prop_assert_eq!(
            u.components().len(),
            g.components().len() + h.components().len()
        );
    }

    #[test]
    fn triangle_freeness_agrees_with_small_clique_number(g in arb_graph(9)) {
        prop_assert_eq!(g.is_triangle_free(), brute_force_omega(&g).unwrap() <= 2);
    }

    #[test]
    fn solved_values_match_the_oracles(g in arb_graph(7)) {
        let chi = chromatic_number(&g, &opts());
        prop_assert!(chi.is_exact());
        prop_assert_eq!(chi.value, brute_force_chi(&g).unwrap());
        prop_assert!(verify_coloring(&g, &chi.coloring));

        let omega = clique_number(&g, &opts());
        prop_assert!(omega.is_exact());
        prop_assert_eq!(omega.value, brute_force_omega(&g).unwrap());
        prop_assert!(verify_clique(&g, &omega.clique.vertices));

        // omega <= chi on every solved graph
        prop_assert!(omega.value <= chi.value);
    }

    #[test]
    fn disjoint_union_takes_maxima(g in arb_graph(6), h in arb_graph(6)) {
        let u = g.disjoint_union(&h);
        let chi = chromatic_number(&u, &opts()).value;
        let omega = clique_number(&u, &opts()).value;
        prop_assert_eq!(
            chi,
            chromatic_number(&g, &opts()).value.max(chromatic_number(&h, &opts()).value)
        );
        prop_assert_eq!(
            omega,
            clique_number(&g, &opts()).value.max(clique_number(&h, &opts()).value)
        );
    }

    #[test]
    fn mycielskian_order_and_triangle_freeness(g in arb_graph(8)) {
        let (m, _) = mycielskian(&g);
        prop_assert_eq!(m.order(), 2 * g.order() + 1);

        let tf = strip_triangles(&g);
        let (mtf, _) = mycielskian(&tf);
        prop_assert!(mtf.is_triangle_free());
    }

    #[test]
    fn mycielskian_increments_chi_of_triangle_free_graphs(g in arb_graph(7)) {
        let tf = strip_triangles(&g);
        let chi = brute_force_chi(&tf).unwrap();
        prop_assume!((2..=4).contains(&chi));
        let (m, _) = mycielskian(&tf);
        let lifted = chromatic_number(&m, &opts());
        prop_assert!(lifted.is_exact());
        prop_assert_eq!(lifted.value, chi + 1);
    }

    #[test]
    fn mycielskian_preserves_connectedness(g in arb_graph(8)) {
        prop_assume!(g.is_connected() && g.edge_count() >= 1);
        let (m, _) = mycielskian(&g);
        prop_assert!(m.is_connected());
    }

    #[test]
    fn dimacs_round_trip_is_identity(g in arb_graph(12)) {
        let text = dimacs::to_col_string(&g);
        let back = dimacs::read_col(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(dimacs::to_col_string(&back), text);
    }

    #[test]
    fn restricted_chi_laws(g in arb_graph(7)) {
        let chi = brute_force_chi(&g).unwrap();
        let omega = brute_force_omega(&g).unwrap();
        let mut prev = 0;
        for n in 0..=4usize {
            let r = chi_restricted(&g, n, &opts()).unwrap();
            prop_assert!(r.is_exact());
            // bounded by chi and nondecreasing in n
            prop_assert!(r.value <= chi);
            prop_assert!(r.value >= prev);
            prev = r.value;
            // the witness really has small clique number and the claimed chi
            let (h, _) = g.induced_subgraph(&r.witness).unwrap();
            prop_assert!(brute_force_omega(&h).unwrap() <= n);
            prop_assert_eq!(brute_force_chi(&h).unwrap(), r.value);
            // agreement with the all-subsets oracle
            prop_assert_eq!(r.value, naive_chi_restricted(&g, n).unwrap().0);
        }
        // at n = omega the whole graph qualifies
        let full = chi_restricted(&g, omega.max(1), &opts()).unwrap();
        prop_assert_eq!(full.value, chi);
    }
}

/// The transversal method and the all-subsets oracle must agree right up
/// to the oracle's 12-vertex cap.
#[test]
fn transversal_matches_naive_at_the_oracle_cap() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
    for order in [11usize, 12] {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in (u + 1)..order {
                if rand::Rng::gen_bool(&mut rng, 0.35) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(order, &edges).unwrap();
        for n in 1..=2 {
            let fast = chi_restricted(&g, n, &opts()).unwrap();
            assert!(fast.is_exact());
            let (naive, _) = naive_chi_restricted(&g, n).unwrap();
            assert_eq!(fast.value, naive, "order {order}, n = {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn blocks_split_into_core_and_tag(m in 1usize..=4) {
        let x = build_block(2, m, &ProviderConfig::Tower, &opts()).unwrap();
        prop_assert!(x.partition_violations().is_empty());

        let core = x.core_graph();
        let tag = x.tag_graph();
        let chi = chromatic_number(&x.graph, &opts()).value;
        let omega = clique_number(&x.graph, &opts()).value;
        prop_assert_eq!(
            chi,
            chromatic_number(&core, &opts()).value.max(chromatic_number(&tag, &opts()).value)
        );
        prop_assert_eq!(
            omega,
            clique_number(&core, &opts()).value.max(clique_number(&tag, &opts()).value)
        );
    }

    #[test]
    fn mycielski_checker_passes_on_random_triangle_free_graphs(g in arb_graph(7)) {
        use chibound::verify::{check_mycielski_lemma, CheckOptions};
        let tf = strip_triangles(&g);
        let chi = brute_force_chi(&tf).unwrap();
        prop_assume!((2..=4).contains(&chi));
        let report = check_mycielski_lemma(&tf, &CheckOptions::default()).unwrap();
        prop_assert!(report.pass, "notes: {:?}", report.notes);
    }

    #[test]
    fn deterministic_solves_are_reproducible(g in arb_graph(7)) {
        let det = opts().deterministic();
        let a = chromatic_number(&g, &det);
        let b = chromatic_number(&g, &det);
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.coloring, b.coloring);

        let ca = clique_number(&g, &det);
        let cb = clique_number(&g, &det);
        prop_assert_eq!(ca.value, cb.value);
        prop_assert_eq!(ca.clique, cb.clique);
    }
}
