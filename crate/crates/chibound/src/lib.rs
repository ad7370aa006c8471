//! Constructions and exact solvers for experiments with chi-bounded graph
//! classes.
//!
//! The crate has four layers:
//!
//! * [`graph`]: immutable simple undirected graphs over dense vertex
//!   indices, with induced subgraphs, disjoint unions, components and
//!   DIMACS `.col` I/O ([`dimacs`]).
//! * [`construct`]: Mycielskians, the tower family `T_r`, tagged blocks
//!   `X_{r,m}` and the derived constants `B_r`, `W_r`.
//! * [`solve`]: exact chromatic number, maximum clique, k-colorability
//!   and the restricted invariant `chi^(n)`, all with verifiable
//!   certificates and brute-force oracles for cross-checking.
//! * [`verify`]: machine checks for the structural claims the
//!   constructions make (triangle-freeness and chromatic increments of
//!   Mycielskians, block clique/chromatic values, goodness audits,
//!   non-polynomial witnesses, bounding-table constants).
//!
//! Every capability has a runnable example under `examples/`; the `chibound`
//! binary exposes the same operations as `gen`/`solve`/`verify`/`oracle`
//! subcommands.
//!
//! ```
//! use chibound::construct::mycielski_tower;
//! use chibound::solve::{chromatic_number, verify_coloring, SolveOptions};
//!
//! // the level-4 tower: 11 vertices, triangle-free, chromatic number 4
//! let tower = mycielski_tower(4).unwrap();
//! assert!(tower.graph.is_triangle_free());
//!
//! let result = chromatic_number(&tower.graph, &SolveOptions::default());
//! assert_eq!(result.value, 4);
//! assert!(result.is_exact());
//! assert!(verify_coloring(&tower.graph, &result.coloring));
//! ```

pub mod cert;
pub mod cli;
pub mod construct;
pub mod dimacs;
pub mod graph;
pub mod solve;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for graph of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("claim mismatch: {0}")]
    ClaimMismatch(String),
    #[error("graph too large for brute force: order {order} exceeds cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("bounding table too short: need entries up to index {needed}, have {have}")]
    TableTooShort { needed: u64, have: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
