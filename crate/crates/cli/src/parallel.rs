//! Rayon drivers for Hochster sweeps and cone enumeration.
//!
//! Work is cut into fixed-size chunks that do not depend on the worker
//! count, and partial results are merged in chunk order, so output is the
//! same for any number of workers.

use std::time::Instant;

use rayon::prelude::*;

use betti_cone_core::betti::{hochster_partial, DenseBetti, SubgraphHomologyTable};
use betti_cone_core::cone::{enumerate_shard, finish_enumeration, upper_bound, EnumerationOptions, EnumerationShard};
use betti_cone_core::{BettiDiagram, ConeReport, FieldSpec, Graph};

use crate::error::AppError;

/// Chunks evaluated between early-stop checks.
const WAVE: usize = 16;

/// A dedicated thread pool.
pub struct Workers {
    pool: rayon::ThreadPool,
}

impl Workers {
    pub fn new(count: usize) -> Result<Self, AppError> {
        if count == 0 {
            return Err(AppError::InvalidArgument("worker count must be at least 1".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build()
            .map_err(|e| AppError::InvalidArgument(e.to_string()))?;
        Ok(Workers { pool })
    }

    /// One worker per available CPU.
    pub fn available() -> Result<Self, AppError> {
        Self::new(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }

    pub fn count(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }
}

fn chunks(total: u64, min_chunk: u64, target_chunks: u64) -> Vec<std::ops::Range<u64>> {
    let size = (total / target_chunks).max(min_chunk).max(1);
    (0..total.div_ceil(size)).map(|k| k * size..((k + 1) * size).min(total)).collect()
}

/// [`betti_cone_core::betti::hochster_diagram`] with the subset sweep split
/// across the pool.
pub fn hochster_parallel(g: &Graph, field: FieldSpec, workers: &Workers) -> betti_cone_core::Result<BettiDiagram> {
    if g.n() > betti_cone_core::betti::MAX_HOCHSTER_VERTICES {
        return betti_cone_core::betti::hochster_diagram(g, field);
    }
    let parts = chunks(1 << g.n(), 256, 64);
    let partials: Vec<DenseBetti> = workers.install(|| {
        parts
            .par_iter()
            .map(|r| hochster_partial(g, field, r.start as u32..r.end as u32))
            .collect::<Result<_, _>>()
    })?;
    let mut acc = DenseBetti::new(g.n());
    for p in &partials {
        acc.merge(p);
    }
    Ok(acc.into_diagram())
}

/// Parallel [`betti_cone_core::cone::enumerate_cone_dim`].
pub fn enumerate_parallel(opts: &EnumerationOptions, workers: &Workers) -> Result<ConeReport, AppError> {
    let start = Instant::now();
    let total = opts.graph_count()?;
    let target = upper_bound(opts.n, opts.h)?;
    let table = SubgraphHomologyTable::new(opts.table_size(), opts.field)?;
    let parts = chunks(total, 64, 256);
    let stop = |s: &EnumerationShard| s.basis.rank() >= target;
    let mut merged = EnumerationShard::default();
    for wave in parts.chunks(WAVE) {
        let shards: Vec<EnumerationShard> = workers.install(|| {
            wave.par_iter()
                .map(|r| enumerate_shard(opts, r.clone(), &table, &stop))
                .collect::<Result<_, _>>()
        })?;
        for s in shards {
            merged.merge(s);
        }
        if opts.early_stop && merged.basis.rank() >= target {
            merged.stopped_early |= merged.visited < total;
            break;
        }
    }
    let mut report = finish_enumeration(opts, merged)?;
    if let Some(stats) = report.stats.as_mut() {
        stats.elapsed = Some(start.elapsed());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use betti_cone_core::betti::hochster_diagram;
    use betti_cone_core::cone::enumerate_cone_dim;

    #[test]
    fn chunking_covers_the_range() {
        for total in [1u64, 7, 64, 1000, 1 << 15] {
            let parts = chunks(total, 64, 256);
            assert_eq!(parts.first().unwrap().start, 0);
            assert_eq!(parts.last().unwrap().end, total);
            assert!(parts.windows(2).all(|w| w[0].end == w[1].start));
        }
    }

    #[test]
    fn parallel_hochster_matches_sequential() {
        let workers = Workers::new(3).unwrap();
        let g = Graph::from_edges(10, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 7), (8, 9), (9, 10), (1, 8)]).unwrap();
        let q = FieldSpec::Rationals;
        assert_eq!(hochster_parallel(&g, q, &workers).unwrap(), hochster_diagram(&g, q).unwrap());
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let opts = EnumerationOptions::new(5, Some(2));
        let strip = |mut r: ConeReport| {
            r.stats.as_mut().unwrap().elapsed = None;
            r
        };
        let one = strip(enumerate_parallel(&opts, &Workers::new(1).unwrap()).unwrap());
        let four = strip(enumerate_parallel(&opts, &Workers::new(4).unwrap()).unwrap());
        assert_eq!(one, four);
        assert_eq!(one, enumerate_cone_dim(&opts).unwrap());
        let early = EnumerationOptions { early_stop: true, ..EnumerationOptions::new(6, None) };
        let a = strip(enumerate_parallel(&early, &Workers::new(1).unwrap()).unwrap());
        let b = strip(enumerate_parallel(&early, &Workers::new(3).unwrap()).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.dimension, 9);
        assert!(a.stats.unwrap().stopped_early);
    }
}
