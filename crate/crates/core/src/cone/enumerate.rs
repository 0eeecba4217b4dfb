//! Exhaustive lower bounds: the rank of all Betti diagrams of graphs on
//! `n` labelled vertices, optionally restricted to a height.

use alloc::collections::BTreeSet;
use core::ops::Range;

use num_bigint::BigInt;

use super::{upper_bound, ConeReport, EnumerationStats, IndexPair, Method};
use crate::betti::{check_support_cn, check_support_cnh, hk_vector, BettiDiagram, SubgraphHomologyTable};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};
use crate::homology::FieldSpec;
use crate::linalg::SparseBasis;

/// Largest `n` enumerated without `early_stop` (`2^21` graphs).
pub const MAX_EXHAUSTIVE_N: usize = 7;

/// Largest `n` enumerated at all; edge masks are limited to 55 bits.
const MAX_ENUMERATION_N: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub n: usize,
    pub h: Option<usize>,
    /// Skip rank reduction for diagrams already seen.
    pub dedupe: bool,
    /// Stop as soon as the rank reaches the upper bound.
    pub early_stop: bool,
    pub field: FieldSpec,
}

impl EnumerationOptions {
    pub fn new(n: usize, h: Option<usize>) -> Self {
        EnumerationOptions {
            n,
            h,
            dedupe: false,
            early_stop: false,
            field: FieldSpec::Rationals,
        }
    }

    /// Validates the options and returns the number of edge masks.
    pub fn graph_count(&self) -> Result<u64> {
        if self.n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if let Some(h) = self.h {
            super::check_height(self.n, h)?;
        }
        let limit = if self.early_stop { MAX_ENUMERATION_N } else { MAX_EXHAUSTIVE_N };
        if self.n > limit {
            return Err(Error::Capacity {
                what: "vertex count for enumeration",
                got: self.n,
                limit,
            });
        }
        Ok(1u64 << pair_count(self.n))
    }

    /// The subgraph table size worth building for this `n`.
    pub fn table_size(&self) -> usize {
        self.n.saturating_sub(1).min(6)
    }
}

/// Partial result over a range of edge masks. Shards merge in any order.
#[derive(Debug, Clone, Default)]
pub struct EnumerationShard {
    pub basis: SparseBasis<IndexPair>,
    pub distinct: BTreeSet<BettiDiagram>,
    pub visited: u64,
    pub matched: u64,
    pub sandwich_violations: u64,
    pub stopped_early: bool,
}

impl EnumerationShard {
    pub fn merge(&mut self, other: EnumerationShard) {
        self.basis.merge(other.basis);
        self.distinct.extend(other.distinct);
        self.visited += other.visited;
        self.matched += other.matched;
        self.sandwich_violations += other.sandwich_violations;
        self.stopped_early |= other.stopped_early;
    }
}

fn in_sandwich(b: &BettiDiagram, n: usize, h: Option<usize>) -> Result<bool> {
    match h {
        None => Ok(check_support_cn(b, n)),
        Some(h) => Ok(check_support_cnh(b, n, h) && hk_vector(b, h.saturating_sub(1) as u32)?.vanishes_below(h)),
    }
}

/// Visits the graphs whose edge masks lie in `masks`.
///
/// `stop` is polled between graphs; it lets a parallel driver cut every
/// shard short once one of them has reached the target.
pub fn enumerate_shard(
    opts: &EnumerationOptions,
    masks: Range<u64>,
    table: &SubgraphHomologyTable,
    stop: &dyn Fn(&EnumerationShard) -> bool,
) -> Result<EnumerationShard> {
    let total = opts.graph_count()?;
    let mut shard = EnumerationShard::default();
    for mask in masks.start..masks.end.min(total) {
        if opts.early_stop && stop(&shard) {
            shard.stopped_early = true;
            break;
        }
        shard.visited += 1;
        let g = Graph::from_edge_mask(opts.n, mask)?;
        if let Some(h) = opts.h {
            if g.height() != h {
                continue;
            }
        }
        shard.matched += 1;
        let b = table.diagram(&g)?;
        if !in_sandwich(&b, opts.n, opts.h)? {
            shard.sandwich_violations += 1;
        }
        let fresh = !shard.distinct.contains(&b);
        if fresh || !opts.dedupe {
            shard.basis.insert(b.iter().map(|(p, v)| (p, BigInt::from(v))));
        }
        if fresh {
            shard.distinct.insert(b);
        }
    }
    Ok(shard)
}

/// Turns merged shards into a report.
pub fn finish_enumeration(opts: &EnumerationOptions, shard: EnumerationShard) -> Result<ConeReport> {
    let bound = upper_bound(opts.n, opts.h)?;
    let dimension = shard.basis.rank();
    let mut report = ConeReport::bare(opts.n, opts.h, Method::Enumeration, dimension);
    report.field = opts.field;
    report.upper_bound = Some(bound);
    report.certified = dimension == bound && shard.sandwich_violations == 0;
    report.stats = Some(EnumerationStats {
        graphs_visited: shard.visited,
        graphs_matched: shard.matched,
        distinct_diagrams: shard.distinct.len() as u64,
        sandwich_violations: shard.sandwich_violations,
        stopped_early: shard.stopped_early,
        elapsed: None,
    });
    Ok(report)
}

/// Sequential enumeration over every graph on `n` vertices.
pub fn enumerate_cone_dim(opts: &EnumerationOptions) -> Result<ConeReport> {
    let total = opts.graph_count()?;
    let target = upper_bound(opts.n, opts.h)?;
    let table = SubgraphHomologyTable::new(opts.table_size(), opts.field)?;
    let shard = enumerate_shard(opts, 0..total, &table, &|s| s.basis.rank() >= target)?;
    finish_enumeration(opts, shard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::formula_dim;

    #[test]
    fn small_n_reach_the_formula() {
        for n in 1..=5 {
            let r = enumerate_cone_dim(&EnumerationOptions::new(n, None)).unwrap();
            assert_eq!(r.dimension, formula_dim(n, None).unwrap(), "n = {n}");
            assert!(r.certified);
            for h in 1..n {
                let r = enumerate_cone_dim(&EnumerationOptions::new(n, Some(h))).unwrap();
                assert_eq!(r.dimension, formula_dim(n, Some(h)).unwrap(), "n = {n}, h = {h}");
                assert_eq!(r.stats.as_ref().unwrap().sandwich_violations, 0);
            }
        }
    }

    #[test]
    fn dedupe_and_sharding_do_not_change_the_answer() {
        let base = EnumerationOptions::new(5, Some(2));
        let plain = enumerate_cone_dim(&base).unwrap();
        let deduped = enumerate_cone_dim(&EnumerationOptions { dedupe: true, ..base }).unwrap();
        assert_eq!(plain, deduped);

        let table = SubgraphHomologyTable::new(base.table_size(), base.field).unwrap();
        let never = |_: &EnumerationShard| false;
        let mut merged = enumerate_shard(&base, 600..1024, &table, &never).unwrap();
        merged.merge(enumerate_shard(&base, 0..600, &table, &never).unwrap());
        assert_eq!(finish_enumeration(&base, merged).unwrap(), plain);
    }

    #[test]
    fn early_stop_keeps_the_bound() {
        let opts = EnumerationOptions {
            early_stop: true,
            ..EnumerationOptions::new(6, None)
        };
        let r = enumerate_cone_dim(&opts).unwrap();
        assert_eq!(r.dimension, 9);
        assert!(r.stats.unwrap().graphs_visited <= 1 << 15);
    }

    #[test]
    fn capacity_and_argument_errors() {
        assert!(matches!(
            enumerate_cone_dim(&EnumerationOptions::new(8, None)),
            Err(Error::Capacity { .. })
        ));
        assert!(enumerate_cone_dim(&EnumerationOptions::new(4, Some(4))).is_err());
        assert!(enumerate_cone_dim(&EnumerationOptions::new(0, None)).is_err());
    }
}
