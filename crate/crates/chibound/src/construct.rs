//! The concrete objects under study: Mycielskians, the tower family `T_r`,
//! core providers for the `G_{r,m}` families, tagged blocks
//! `X_{r,m} = G_{r,m} ∪ T_r`, and the constants `B_r` and `W_r`.
//!
//! Only `r = 2` has a self-contained core provider (the towers themselves
//! qualify). For `r >= 3` no explicit construction is known here, so cores
//! are loaded from user-supplied DIMACS files with a JSON sidecar of
//! claims; the loader verifies the clique number exactly and treats the
//! chromatic lower bound as a claim unless a solve confirms it in budget.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dimacs;
use crate::graph::{Graph, VertexSet};
use crate::solve::{chromatic_number, clique_number, SolveOptions};
use crate::{Error, Result};

/// Largest tower level this crate will materialize (T_14 has 12287
/// vertices; adjacency storage grows quadratically beyond that).
pub const MAX_TOWER_LEVEL: usize = 14;

/// Index layout of a Mycielskian over a base of order n: base vertex i
/// keeps index i, its shadow twin is n + i, and the apex is 2n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MycielskiLayout {
    pub base_order: usize,
}

impl MycielskiLayout {
    pub fn base(&self, i: usize) -> usize {
        i
    }

    pub fn shadow(&self, i: usize) -> usize {
        self.base_order + i
    }

    pub fn apex(&self) -> usize {
        2 * self.base_order
    }

    pub fn order(&self) -> usize {
        2 * self.base_order + 1
    }
}

/// The Mycielskian M(G): for every base edge uv, the shadow of u joins v
/// and the shadow of v joins u; the apex joins every shadow; nothing else.
/// Shadows are pairwise non-adjacent. Order 0 is allowed and yields the
/// single apex vertex.
pub fn mycielskian(g: &Graph) -> (Graph, MycielskiLayout) {
    let n = g.order();
    let layout = MycielskiLayout { base_order: n };
    let mut edges = Vec::with_capacity(3 * g.edge_count() + n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((layout.shadow(u), v));
        edges.push((layout.shadow(v), u));
    }
    for i in 0..n {
        edges.push((layout.apex(), layout.shadow(i)));
    }
    let graph = Graph::from_edges(layout.order(), &edges).expect("layout indices are in range");
    (graph, layout)
}

/// A tower graph T_r: T_2 = K_2 and T_{r+1} = M(T_r). By construction it is
/// triangle-free and connected with chromatic number r and clique number 2.
#[derive(Clone, Debug)]
pub struct Tower {
    pub graph: Graph,
    pub level: usize,
}

impl Tower {
    pub fn claimed_chi(&self) -> usize {
        self.level
    }

    pub fn claimed_omega(&self) -> usize {
        2
    }
}

/// Order of T_r: 3 * 2^(r-2) - 1.
pub fn tower_order(r: usize) -> usize {
    3 * (1usize << (r - 2)) - 1
}

pub fn mycielski_tower(r: usize) -> Result<Tower> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "tower level must be at least 2, got {r}"
        )));
    }
    if r > MAX_TOWER_LEVEL {
        return Err(Error::InvalidParameter(format!(
            "tower level {r} exceeds the materialization cap {MAX_TOWER_LEVEL}"
        )));
    }
    let mut graph = Graph::from_edges(2, &[(0, 1)]).expect("K_2 is valid");
    for _ in 2..r {
        graph = mycielskian(&graph).0;
    }
    Ok(Tower { graph, level: r })
}

/// Built-in core provider for r = 2: the towers already have clique number
/// 2, unbounded chromatic number across m, and edgeless subgraphs once a
/// vertex is removed from every edge, so G_{2,m} = T_{max(m,2)}.
pub fn provider_r2(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "block index m must be at least 1, got {m}"
        )));
    }
    Ok(mycielski_tower(m.max(2))?.graph)
}

fn binomial3(a: u64) -> Result<u64> {
    let prod = a as u128 * a.saturating_sub(1) as u128 * a.saturating_sub(2) as u128 / 6;
    u64::try_from(prod).map_err(|_| Error::Overflow(format!("C({a}, 3) exceeds u64")))
}

/// The constant B_r: 1 at r = 2, and C(3(r-1)+1, 3) for r >= 3 (the largest
/// of the per-level chromatic caps below r, attained at level r - 1).
pub fn compute_b(r: usize) -> Result<u64> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "B_r is defined for r >= 2, got {r}"
        )));
    }
    if r == 2 {
        return Ok(1);
    }
    binomial3(3 * (r as u64 - 1) + 1)
}

/// The constant W_r = max(B_r, r), the goodness bound for level r.
pub fn compute_w(r: usize) -> Result<u64> {
    Ok(compute_b(r)?.max(r as u64))
}

/// Sidecar claims accompanying a user-supplied core graph file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProviderClaims {
    pub r: usize,
    pub m: usize,
    pub claimed_omega: usize,
    pub claimed_chi_lb: usize,
    #[serde(default)]
    pub source: String,
}

/// A loaded core graph together with how far its claims were verified.
#[derive(Clone, Debug)]
pub struct ProvidedCore {
    pub graph: Graph,
    pub claims: ProviderClaims,
    /// Exact solve confirmed omega = r.
    pub omega_verified: bool,
    /// Solver proved chi >= m (exactly or via a certified lower bound).
    pub chi_lb_verified: bool,
}

/// Sidecar path convention: `foo.col` -> `foo.claims`.
pub fn sidecar_path(col_path: &Path) -> PathBuf {
    col_path.with_extension("claims")
}

/// Load a core graph for r >= 3 from a DIMACS file plus optional sidecar.
/// The clique number is solved exactly and must equal r (and the sidecar's
/// claim, when present); a proven chromatic value below m is rejected too.
pub fn load_provider_graph(
    r: usize,
    m: usize,
    col_path: &Path,
    opts: &SolveOptions,
) -> Result<ProvidedCore> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "file providers are for r >= 3 (r = 2 has the built-in tower provider), got {r}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "block index m must be at least 1, got {m}"
        )));
    }
    let graph = dimacs::read_col_path(col_path)?;
    let sidecar = sidecar_path(col_path);
    let claims = if sidecar.exists() {
        let text = std::fs::read_to_string(&sidecar)?;
        let claims: ProviderClaims = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", sidecar.display())))?;
        if claims.r != r || claims.m != m {
            return Err(Error::ClaimMismatch(format!(
                "sidecar {} is for (r, m) = ({}, {}), expected ({r}, {m})",
                sidecar.display(),
                claims.r,
                claims.m
            )));
        }
        if claims.claimed_omega != r {
            return Err(Error::ClaimMismatch(format!(
                "sidecar claims omega = {}, but a level-{r} core must have omega = {r}",
                claims.claimed_omega
            )));
        }
        if claims.claimed_chi_lb < m {
            return Err(Error::ClaimMismatch(format!(
                "sidecar claims chi >= {}, below the required chi >= {m}",
                claims.claimed_chi_lb
            )));
        }
        claims
    } else {
        ProviderClaims {
            r,
            m,
            claimed_omega: r,
            claimed_chi_lb: m,
            source: col_path.display().to_string(),
        }
    };

    let omega = clique_number(&graph, opts);
    if omega.is_exact() && omega.value != r {
        return Err(Error::ClaimMismatch(format!(
            "core {} has omega = {} (exact), expected {r}",
            col_path.display(),
            omega.value
        )));
    }
    if !omega.is_exact() && omega.value > r {
        return Err(Error::ClaimMismatch(format!(
            "core {} contains a clique of size {}, already above {r}",
            col_path.display(),
            omega.value
        )));
    }

    let chi = chromatic_number(&graph, opts);
    if chi.is_exact() && chi.value < m {
        return Err(Error::ClaimMismatch(format!(
            "core {} has chi = {} (exact), below the claimed chi >= {m}",
            col_path.display(),
            chi.value
        )));
    }

    Ok(ProvidedCore {
        graph,
        claims,
        omega_verified: omega.is_exact(),
        chi_lb_verified: chi.lower_bound >= m,
    })
}

/// How cores are obtained for a given r.
#[derive(Clone, Debug)]
pub enum ProviderConfig {
    /// The built-in tower provider; valid only at r = 2.
    Tower,
    /// DIMACS files per block index m, for r >= 3.
    Files(BTreeMap<usize, PathBuf>),
}

impl ProviderConfig {
    pub fn id(&self, m: usize) -> String {
        match self {
            ProviderConfig::Tower => "tower".to_string(),
            ProviderConfig::Files(map) => map
                .get(&m)
                .map(|p| p.display().to_string())
                .unwrap_or_else(|| format!("<missing core for m = {m}>")),
        }
    }
}

/// Identity and by-construction claims of a block X_{r,m}.
#[derive(Clone, Debug, Serialize)]
pub struct BlockSpec {
    pub r: usize,
    pub m: usize,
    pub provider: String,
    pub b_r: u64,
    pub w_r: u64,
    /// Always r: the core contributes r, the tag only 2.
    pub claimed_omega: usize,
    /// At least m; the tower provider claims exactly max(m, 2).
    pub claimed_chi_lb: usize,
}

/// A block X_{r,m}: a core with clique number r and large chromatic number,
/// plus a disjoint tower tag T_r. Core vertices come first, the tag is the
/// trailing `tower_order(r)` indices.
#[derive(Clone, Debug)]
pub struct TaggedGraph {
    pub graph: Graph,
    pub core: VertexSet,
    pub tag: VertexSet,
    pub spec: BlockSpec,
}

impl TaggedGraph {
    pub fn core_graph(&self) -> Graph {
        self.graph
            .induced_subgraph(&self.core)
            .expect("core set is in range")
            .0
    }

    pub fn tag_graph(&self) -> Graph {
        self.graph
            .induced_subgraph(&self.tag)
            .expect("tag set is in range")
            .0
    }

    /// Structural problems with the (core, tag) partition, empty when sound.
    pub fn partition_violations(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let n = self.graph.order();
        if self.core.len() + self.tag.len() != n
            || self.core.iter().any(|v| self.tag.contains(v))
        {
            problems.push(format!(
                "core ({}) and tag ({}) do not partition the {} vertices",
                self.core.len(),
                self.tag.len(),
                n
            ));
        }
        for u in self.core.iter() {
            for v in self.graph.neighbors(u) {
                if self.tag.contains(v) {
                    problems.push(format!("edge ({u}, {v}) crosses from core to tag"));
                }
            }
        }
        problems
    }
}

/// Assemble X_{r,m} = core ∪ T_r from the provider for r.
pub fn build_block(
    r: usize,
    m: usize,
    provider: &ProviderConfig,
    opts: &SolveOptions,
) -> Result<TaggedGraph> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "block level r must be at least 2, got {r}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "block index m must be at least 1, got {m}"
        )));
    }
    let (core_graph, claimed_chi_lb) = match provider {
        ProviderConfig::Tower => {
            if r != 2 {
                return Err(Error::InvalidParameter(format!(
                    "the built-in tower provider only realizes r = 2, got r = {r}"
                )));
            }
            (provider_r2(m)?, m.max(2))
        }
        ProviderConfig::Files(map) => {
            let path = map.get(&m).ok_or_else(|| {
                Error::InvalidParameter(format!("no core file configured for m = {m}"))
            })?;
            let core = load_provider_graph(r, m, path, opts)?;
            let lb = core.claims.claimed_chi_lb;
            (core.graph, lb)
        }
    };
    let tower = mycielski_tower(r)?;
    let graph = core_graph.disjoint_union(&tower.graph);
    let core: VertexSet = (0..core_graph.order()).collect();
    let tag: VertexSet = (core_graph.order()..graph.order()).collect();
    Ok(TaggedGraph {
        graph,
        core,
        tag,
        spec: BlockSpec {
            r,
            m,
            provider: provider.id(m),
            b_r: compute_b(r)?,
            w_r: compute_w(r)?,
            claimed_omega: r,
            claimed_chi_lb,
        },
    })
}

/// A finite slice of the class: for each listed r, the block indices m to
/// build and the provider to build them from.
#[derive(Clone, Debug)]
pub struct ClassSlice {
    pub r: usize,
    pub ms: Vec<usize>,
    pub provider: ProviderConfig,
}

#[derive(Clone, Debug, Default)]
pub struct ClassSpec {
    pub slices: Vec<ClassSlice>,
}
