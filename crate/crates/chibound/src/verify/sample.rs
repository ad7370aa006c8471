//! Sampling from the hereditary closure of a block: every vertex subset of
//! X denotes an induced subgraph and hence a member of Ind(C_r).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::TaggedGraph;
use crate::graph::VertexSet;
use crate::{Error, Result};

/// Orders up to this enumerate exhaustively; larger ones fall back to
/// random sampling plus all single-vertex deletions.
pub const EXHAUSTIVE_ORDER_CAP: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleStrategy {
    Exhaustive,
    Random,
}

impl std::fmt::Display for SampleStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SampleStrategy::Exhaustive => write!(f, "exhaustive"),
            SampleStrategy::Random => write!(f, "random"),
        }
    }
}

/// Streamed subset sample. Exhaustive mode walks all 2^n subsets in mask
/// order; random mode yields `limit` seeded uniform subsets followed by the
/// n single-vertex-deleted subsets.
pub struct SubsetSamples {
    order: usize,
    inner: Inner,
}

#[allow(clippy::large_enum_variant)]
enum Inner {
    Exhaustive { next: u64, total: u64 },
    Random { rng: ChaCha8Rng, random_left: usize, deletion: usize },
}

impl SubsetSamples {
    /// Total number of subsets this iterator will yield.
    pub fn expected_count(&self) -> u64 {
        match &self.inner {
            Inner::Exhaustive { total, .. } => *total,
            Inner::Random { random_left, deletion, .. } => {
                *random_left as u64 + (self.order - deletion) as u64
            }
        }
    }

    /// Which strategy actually applies (exhaustive may downgrade).
    pub fn effective_strategy(&self) -> SampleStrategy {
        match self.inner {
            Inner::Exhaustive { .. } => SampleStrategy::Exhaustive,
            Inner::Random { .. } => SampleStrategy::Random,
        }
    }
}

impl Iterator for SubsetSamples {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match &mut self.inner {
            Inner::Exhaustive { next, total } => {
                if next == total {
                    return None;
                }
                let mask = *next;
                *next += 1;
                Some((0..self.order).filter(|&v| mask >> v & 1 == 1).collect())
            }
            Inner::Random { rng, random_left, deletion } => {
                if *random_left > 0 {
                    *random_left -= 1;
                    let set: VertexSet =
                        (0..self.order).filter(|_| rng.gen::<bool>()).collect();
                    Some(set)
                } else if *deletion < self.order {
                    let drop = *deletion;
                    *deletion += 1;
                    Some((0..self.order).filter(|&v| v != drop).collect())
                } else {
                    None
                }
            }
        }
    }
}

/// Sample vertex subsets of the block `x`. Exhaustive strategy applies only
/// up to [`EXHAUSTIVE_ORDER_CAP`] vertices; beyond that (or when requested)
/// the random strategy draws `limit` subsets plus all one-vertex deletions.
pub fn hereditary_closure_sample(
    x: &TaggedGraph,
    strategy: SampleStrategy,
    limit: usize,
    seed: u64,
) -> Result<SubsetSamples> {
    let order = x.graph.order();
    if strategy == SampleStrategy::Exhaustive && order <= EXHAUSTIVE_ORDER_CAP {
        return Ok(SubsetSamples {
            order,
            inner: Inner::Exhaustive {
                next: 0,
                total: 1u64 << order,
            },
        });
    }
    if limit == 0 {
        return Err(Error::InvalidParameter(
            "random subset sampling needs a positive limit".into(),
        ));
    }
    Ok(SubsetSamples {
        order,
        inner: Inner::Random {
            rng: ChaCha8Rng::seed_from_u64(seed),
            random_left: limit,
            deletion: 0,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_block, ProviderConfig};
    use crate::solve::SolveOptions;

    fn block(m: usize) -> TaggedGraph {
        build_block(2, m, &ProviderConfig::Tower, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn exhaustive_on_four_vertices_yields_all_sixteen() {
        let x = block(1); // K_2 ∪ K_2, 4 vertices
        let samples: Vec<VertexSet> =
            hereditary_closure_sample(&x, SampleStrategy::Exhaustive, 0, 1)
                .unwrap()
                .collect();
        assert_eq!(samples.len(), 16);
        assert!(samples.contains(&VertexSet::empty()));
        assert!(samples.contains(&VertexSet::full(4)));
    }

    #[test]
    fn random_yields_limit_plus_deletions() {
        let x = block(5); // 25 vertices, above the exhaustive cap
        let sampler =
            hereditary_closure_sample(&x, SampleStrategy::Random, 500, 42).unwrap();
        assert_eq!(sampler.expected_count(), 525);
        let samples: Vec<VertexSet> = sampler.collect();
        assert_eq!(samples.len(), 525);
        for s in &samples {
            assert!(s.validate(25).is_ok());
        }
        // the trailing 25 are the single-vertex deletions
        for (i, s) in samples[500..].iter().enumerate() {
            assert_eq!(s.len(), 24);
            assert!(!s.contains(i));
        }
    }

    #[test]
    fn exhaustive_downgrades_to_random_above_cap() {
        let x = block(5);
        let sampler =
            hereditary_closure_sample(&x, SampleStrategy::Exhaustive, 100, 7).unwrap();
        assert_eq!(sampler.effective_strategy(), SampleStrategy::Random);
        assert_eq!(sampler.expected_count(), 125);
    }

    #[test]
    fn zero_limit_with_random_strategy_is_rejected() {
        let x = block(1);
        assert!(matches!(
            hereditary_closure_sample(&x, SampleStrategy::Random, 0, 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn same_seed_reproduces_samples() {
        let x = block(4);
        let a: Vec<VertexSet> =
            hereditary_closure_sample(&x, SampleStrategy::Random, 50, 9)
                .unwrap()
                .collect();
        let b: Vec<VertexSet> =
            hereditary_closure_sample(&x, SampleStrategy::Random, 50, 9)
                .unwrap()
                .collect();
        assert_eq!(a, b);
    }
}
