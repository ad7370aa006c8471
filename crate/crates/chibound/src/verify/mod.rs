//! Machine checks for the structural claims the constructions make, on
//! explicitly finite slices. Every chromatic value in a report carries a
//! provenance mark: EXACT (solver-proved), BOUND (budget-limited solve,
//! one-sided), or CLAIM (by-construction, not solver-verified).

mod goodness;
mod nonpoly;
mod pollyanna;
mod report;
mod sample;

pub use goodness::{check_goodness, check_goodness_blocks, GoodnessReport, GoodnessSample};
pub use nonpoly::{find_nonpoly_witness, NonpolyReport, Polynomial};
pub use pollyanna::{
    check_pollyanna, pollyanna_bound, BoundingTable, PollyannaBlockEntry, PollyannaConstants,
    PollyannaReport,
};
pub use report::{render_table, CheckReport, Provenance, Summary, ValueRecord};
pub use sample::{
    hereditary_closure_sample, SampleStrategy, SubsetSamples, EXHAUSTIVE_ORDER_CAP,
};

use rayon::prelude::*;
use serde_json::json;

use crate::construct::{build_block, mycielskian, ClassSpec, TaggedGraph};
use crate::graph::Graph;
use crate::solve::{chromatic_number, clique_number, SolveOptions};
use crate::{Error, Result};

/// Knobs shared by the checkers.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub solve: SolveOptions,
    /// Exact chromatic solves are attempted only on graphs up to this
    /// order; larger ones keep their by-construction claims, labeled CLAIM.
    pub exact_order_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            solve: SolveOptions::default(),
            exact_order_cap: 30,
        }
    }
}

impl CheckOptions {
    pub fn with_solve(solve: SolveOptions) -> Self {
        CheckOptions {
            solve,
            ..CheckOptions::default()
        }
    }
}

/// A chromatic value with its provenance. For BOUND the value is the
/// certified lower bound from the partial solve.
pub(crate) struct GatedChi {
    pub value: usize,
    pub provenance: Provenance,
}

/// Solve chi exactly when the graph is small enough, otherwise fall back
/// to the by-construction claim (or to a partial solve when there is none).
pub(crate) fn gated_chi(g: &Graph, claimed: Option<usize>, opts: &CheckOptions) -> GatedChi {
    if g.order() > opts.exact_order_cap {
        if let Some(c) = claimed {
            return GatedChi {
                value: c,
                provenance: Provenance::Claim,
            };
        }
    }
    let res = chromatic_number(g, &opts.solve);
    if res.is_exact() {
        GatedChi {
            value: res.value,
            provenance: Provenance::Exact,
        }
    } else {
        GatedChi {
            value: res.lower_bound,
            provenance: Provenance::Bound,
        }
    }
}

/// Check that the Mycielskian of a triangle-free graph stays triangle-free
/// and has chromatic number exactly one higher.
pub fn check_mycielski_lemma(g: &Graph, opts: &CheckOptions) -> Result<CheckReport> {
    if !g.is_triangle_free() {
        return Err(Error::PreconditionFailed(
            "the base graph contains a triangle".into(),
        ));
    }
    let base = chromatic_number(g, &opts.solve);
    if base.is_exact() && base.value < 2 {
        return Err(Error::PreconditionFailed(format!(
            "the base graph has chi = {} < 2",
            base.value
        )));
    }

    let (m, _) = mycielskian(g);
    let mut report = CheckReport::new(
        "mycielski-lemma",
        "M(G) of a triangle-free G with chi >= 2 is triangle-free with chi(M(G)) = chi(G) + 1",
        json!({ "order": g.order(), "edges": g.edge_count() }),
    );

    // no solver involved in this half, so it survives any timeout
    let tri_free = m.is_triangle_free();
    report.values.push(ValueRecord::exact(
        "mycielskian_triangle_free",
        tri_free as u64,
    ));
    if !tri_free {
        report.fail("the Mycielskian contains a triangle".into());
    }

    if !base.is_exact() {
        report.undecided("chi(G) solve timed out".into());
        return Ok(report);
    }
    report.values.push(ValueRecord::exact("chi_base", base.value as u64));

    let lifted = chromatic_number(&m, &opts.solve);
    if !lifted.is_exact() {
        report.undecided(format!(
            "chi(M(G)) solve timed out; proven bounds are {} <= chi <= {}",
            lifted.lower_bound, lifted.value
        ));
        return Ok(report);
    }
    report
        .values
        .push(ValueRecord::exact("chi_mycielskian", lifted.value as u64));
    if lifted.value != base.value + 1 {
        report.fail(format!(
            "chi went from {} to {} instead of incrementing",
            base.value, lifted.value
        ));
    }
    Ok(report)
}

/// Check the by-construction facts of one block: clique number exactly r,
/// chromatic number at least m, the tag an induced triangle-free part with
/// clique number 2 and chromatic number r, the whole graph disconnected
/// while the tag is connected, and no edge crossing the partition.
pub fn check_block_observation(x: &TaggedGraph, opts: &CheckOptions) -> CheckReport {
    let spec = &x.spec;
    let mut report = CheckReport::new(
        "block-observation",
        "omega(X) = r; chi(X) >= m; the tag is induced with omega 2 and chi r; X is disconnected, its tag connected",
        json!({
            "r": spec.r,
            "m": spec.m,
            "provider": spec.provider,
            "order": x.graph.order(),
        }),
    );

    for problem in x.partition_violations() {
        report.fail(problem);
    }

    let omega = clique_number(&x.graph, &opts.solve);
    if omega.is_exact() {
        report
            .values
            .push(ValueRecord::exact("omega", omega.value as u64));
        if omega.value != spec.r {
            report.fail(format!(
                "omega(X) = {} but the block claims {}",
                omega.value, spec.r
            ));
        }
    } else {
        report.values.push(ValueRecord::new(
            "omega",
            omega.value as u64,
            Provenance::Bound,
        ));
        report.undecided("clique solve timed out".into());
    }

    let chi = gated_chi(&x.graph, Some(spec.claimed_chi_lb.max(spec.r)), opts);
    report
        .values
        .push(ValueRecord::new("chi", chi.value as u64, chi.provenance));
    if chi.value < spec.m {
        match chi.provenance {
            Provenance::Exact => report.fail(format!(
                "chi(X) = {} is below the required m = {}",
                chi.value, spec.m
            )),
            _ => report.undecided(format!(
                "chi(X) is only known as {} {}, below the required m = {}",
                chi.provenance, chi.value, spec.m
            )),
        }
    }

    let tag = x.tag_graph();
    let tag_omega = clique_number(&tag, &opts.solve);
    if tag_omega.is_exact() {
        report
            .values
            .push(ValueRecord::exact("tag_omega", tag_omega.value as u64));
        if tag_omega.value != 2 {
            report.fail(format!("the tag has omega = {}, not 2", tag_omega.value));
        }
    } else {
        report.undecided("tag clique solve timed out".into());
    }

    let tag_chi = gated_chi(&tag, Some(spec.r), opts);
    report.values.push(ValueRecord::new(
        "tag_chi",
        tag_chi.value as u64,
        tag_chi.provenance,
    ));
    match tag_chi.provenance {
        Provenance::Exact => {
            if tag_chi.value != spec.r {
                report.fail(format!(
                    "the tag has chi = {}, expected {}",
                    tag_chi.value, spec.r
                ));
            }
        }
        Provenance::Bound => {
            report.undecided(format!(
                "tag chi only bounded from below by {}",
                tag_chi.value
            ));
        }
        Provenance::Claim => {}
    }

    let components = x.graph.components().len();
    report
        .values
        .push(ValueRecord::exact("components", components as u64));
    if components < 2 {
        report.fail("the block is connected; core ∪ tag must be disconnected".into());
    }
    let tag_connected = tag.is_connected();
    report
        .values
        .push(ValueRecord::exact("tag_connected", tag_connected as u64));
    if !tag_connected {
        report.fail("the tag part is not connected".into());
    }

    report
}

/// Largest exact chromatic number among members with clique number exactly
/// `n`, or `None` when no member attains it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ChiMaxOutcome {
    pub n: usize,
    pub max_chi: Option<usize>,
    /// (omega, chi) per member, in input order.
    pub entries: Vec<(usize, usize)>,
    pub inconclusive: bool,
}

pub fn chi_max_of_class(graphs: &[Graph], n: usize, opts: &CheckOptions) -> ChiMaxOutcome {
    let mut entries = Vec::with_capacity(graphs.len());
    let mut max_chi: Option<usize> = None;
    let mut inconclusive = false;
    for g in graphs {
        let omega = clique_number(g, &opts.solve);
        let chi = chromatic_number(g, &opts.solve);
        if !omega.is_exact() || !chi.is_exact() {
            inconclusive = true;
        }
        entries.push((omega.value, chi.value));
        if omega.is_exact() && omega.value == n && chi.is_exact() {
            max_chi = Some(max_chi.map_or(chi.value, |m| m.max(chi.value)));
        }
    }
    ChiMaxOutcome {
        n,
        max_chi,
        entries,
        inconclusive,
    }
}

/// Run the whole battery on a finite slice: per-block structural checks, a
/// goodness audit per level, a non-polynomial witness per level when a
/// polynomial is supplied, and the non-hereditary check (every block
/// disconnected, every tag connected). Provider failures are reported and
/// isolated; the remaining checks still run.
pub fn verify_all(
    slice: &ClassSpec,
    poly: Option<&Polynomial>,
    strategy: SampleStrategy,
    limit: usize,
    seed: u64,
    opts: &CheckOptions,
) -> Summary {
    let mut checks = Vec::new();

    for part in &slice.slices {
        let mut blocks = Vec::new();
        for &m in &part.ms {
            match build_block(part.r, m, &part.provider, &opts.solve) {
                Ok(b) => blocks.push(b),
                Err(e) => {
                    let mut rep = CheckReport::new(
                        "block-observation",
                        "the block can be built from its provider",
                        json!({ "r": part.r, "m": m }),
                    );
                    rep.fail(format!("provider failed: {e}"));
                    checks.push(rep);
                }
            }
        }

        let mut observation: Vec<CheckReport> = blocks
            .par_iter()
            .map(|b| check_block_observation(b, opts))
            .collect();
        checks.append(&mut observation);

        if !blocks.is_empty() {
            match check_goodness_blocks(&blocks, strategy, limit, seed, opts) {
                Ok(g) => checks.push(g.to_check_report()),
                Err(e) => {
                    let mut rep = CheckReport::new(
                        "goodness",
                        "sampled members of Ind(C_r) keep chi^(r-1) at or below W_r",
                        json!({ "r": part.r }),
                    );
                    rep.fail(format!("audit failed to run: {e}"));
                    checks.push(rep);
                }
            }

            checks.push(non_hereditary_check(&blocks));
        }

        if let Some(p) = poly {
            match find_nonpoly_witness(part.r, p, &part.provider, opts) {
                Ok((_, rep)) => checks.push(rep.to_check_report()),
                Err(e) => {
                    let mut rep = CheckReport::new(
                        "nonpoly-witness",
                        "some block beats the polynomial bound at its own clique number",
                        json!({ "r": part.r, "poly": p.to_string() }),
                    );
                    rep.fail(format!("witness construction failed: {e}"));
                    checks.push(rep);
                }
            }
        }
    }

    Summary::from_checks(checks, seed)
}

/// Every block disconnected while every tag is connected: the tags are
/// induced subgraphs of blocks yet can never be blocks themselves.
fn non_hereditary_check(blocks: &[TaggedGraph]) -> CheckReport {
    let mut report = CheckReport::new(
        "non-hereditary",
        "every block is disconnected while its tag is connected, so tags are induced subgraphs but never members",
        json!({
            "r": blocks.first().map(|b| b.spec.r),
            "blocks": blocks.len(),
        }),
    );
    for b in blocks {
        let comps = b.graph.components().len();
        if comps < 2 {
            report.fail(format!("block m = {} is connected", b.spec.m));
        }
        if !b.tag_graph().is_connected() {
            report.fail(format!("tag of block m = {} is disconnected", b.spec.m));
        }
    }
    report
        .values
        .push(ValueRecord::exact("blocks_checked", blocks.len() as u64));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{ClassSlice, ProviderConfig};

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn mycielski_lemma_on_k2_and_c5() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let rep = check_mycielski_lemma(&k2, &opts()).unwrap();
        assert!(rep.pass, "notes: {:?}", rep.notes);
        assert_eq!(rep.value("chi_base").unwrap().value, 2);
        assert_eq!(rep.value("chi_mycielskian").unwrap().value, 3);

        let c5 = Graph::cycle(5).unwrap();
        let rep = check_mycielski_lemma(&c5, &opts()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.value("chi_mycielskian").unwrap().value, 4);
    }

    #[test]
    fn mycielski_lemma_rejects_triangles() {
        let k3 = Graph::complete(3);
        assert!(matches!(
            check_mycielski_lemma(&k3, &opts()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn mycielski_lemma_rejects_low_chi() {
        let edgeless = Graph::empty(3);
        assert!(matches!(
            check_mycielski_lemma(&edgeless, &opts()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn mycielski_lemma_timeout_gives_a_partial_report() {
        let c5 = Graph::cycle(5).unwrap();
        let starved = CheckOptions::with_solve(crate::solve::SolveOptions::with_budget_secs(0.0));
        let rep = check_mycielski_lemma(&c5, &starved).unwrap();
        assert!(!rep.pass);
        assert!(rep.inconclusive);
        // the solver-free half still reports
        assert_eq!(rep.value("mycielskian_triangle_free").unwrap().value, 1);
        assert!(rep.value("chi_base").is_none());
    }

    #[test]
    fn block_observation_passes_on_tower_blocks() {
        for m in [1, 4] {
            let x = build_block(2, m, &ProviderConfig::Tower, &opts().solve).unwrap();
            let rep = check_block_observation(&x, &opts());
            assert!(rep.pass, "m = {m}, notes: {:?}", rep.notes);
            assert_eq!(rep.value("omega").unwrap().value, 2);
            assert_eq!(rep.value("chi").unwrap().value, m.max(2) as u64);
            assert_eq!(rep.value("tag_omega").unwrap().value, 2);
            assert_eq!(rep.value("tag_chi").unwrap().value, 2);
            assert!(rep.value("components").unwrap().value >= 2);
            assert_eq!(rep.value("tag_connected").unwrap().value, 1);
        }
    }

    #[test]
    fn block_observation_fails_on_cross_edge() {
        let x = build_block(2, 1, &ProviderConfig::Tower, &opts().solve).unwrap();
        let mut bad = x.clone();
        bad.graph = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let rep = check_block_observation(&bad, &opts());
        assert!(!rep.pass);
        assert!(!rep.inconclusive);
        assert!(rep.notes.iter().any(|n| n.contains("crosses")));
    }

    #[test]
    fn chi_max_over_small_class() {
        let graphs = vec![
            Graph::from_edges(2, &[(0, 1)]).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(3),
        ];
        let out = chi_max_of_class(&graphs, 2, &opts());
        assert_eq!(out.max_chi, Some(3));
        assert!(!out.inconclusive);

        let only_k3 = vec![Graph::complete(3)];
        let out = chi_max_of_class(&only_k3, 2, &opts());
        assert_eq!(out.max_chi, None);
    }

    #[test]
    fn verify_all_on_the_r2_slice() {
        let slice = ClassSpec {
            slices: vec![ClassSlice {
                r: 2,
                ms: vec![1, 2, 3],
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
            &opts(),
        );
        assert!(summary.pass, "failing checks: {:#?}", summary
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| (&c.check, &c.notes))
            .collect::<Vec<_>>());
        assert_eq!(summary.exit_code(), 0);
        // three observations + goodness + non-hereditary + nonpoly
        assert_eq!(summary.checks.len(), 6);
    }

    #[test]
    fn verify_all_on_empty_slice_is_a_pass() {
        let summary = verify_all(
            &ClassSpec::default(),
            None,
            SampleStrategy::Exhaustive,
            0,
            1,
            &opts(),
        );
        assert!(summary.pass);
        assert!(summary.checks.is_empty());
        assert_eq!(summary.exit_code(), 0);
    }
}
