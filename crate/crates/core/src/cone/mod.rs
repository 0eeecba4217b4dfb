//! Index sets, orders, initiality, witness families and cone dimensions.

mod enumerate;
mod index;
mod witness;

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_bigint::BigInt;

use crate::betti::{hochster_diagram, BettiDiagram};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::FieldSpec;
use crate::linalg::{rank_bigint, SparseBasis};

pub use enumerate::{enumerate_cone_dim, enumerate_shard, finish_enumeration, EnumerationOptions, EnumerationShard, MAX_EXHAUSTIVE_N};
pub use index::{cmp_h, cmp_plain, index_set, precedes_h, IndexPair, IndexSet, Order};
pub use witness::{cn_recipe, cnh_recipe, witnesses_cn, witnesses_cnh, Recipe, Witness};

/// Supplies Betti diagrams for graphs; lets callers swap in caching or
/// parallel evaluation of Hochster's formula.
pub trait DiagramOracle {
    fn diagram(&mut self, g: &Graph) -> Result<BettiDiagram>;
}

/// Plain sequential [`hochster_diagram`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Hochster(pub FieldSpec);

impl DiagramOracle for Hochster {
    fn diagram(&mut self, g: &Graph) -> Result<BettiDiagram> {
        hochster_diagram(g, self.0)
    }
}

impl<F: FnMut(&Graph) -> Result<BettiDiagram>> DiagramOracle for F {
    fn diagram(&mut self, g: &Graph) -> Result<BettiDiagram> {
        self(g)
    }
}

/// How a [`ConeReport`] obtained its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Witnesses,
    Enumeration,
    HkSubspace,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Witnesses => "witnesses",
            Method::Enumeration => "enumeration",
            Method::HkSubspace => "hk_subspace",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Counters from an enumeration run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub graphs_visited: u64,
    /// Graphs that passed the height filter (all graphs when none is set).
    pub graphs_matched: u64,
    pub distinct_diagrams: u64,
    /// Diagrams outside `W_n` / `W_n^h` (support or HK vanishing failed).
    pub sandwich_violations: u64,
    pub stopped_early: bool,
    pub elapsed: Option<Duration>,
}

/// Result of a cone-dimension computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub n: usize,
    pub h: Option<usize>,
    pub field: FieldSpec,
    pub method: Method,
    pub dimension: usize,
    /// `|S_n|` or `dim W_n^h`, when the method produces a lower bound.
    pub upper_bound: Option<usize>,
    /// Lower bound met the upper bound.
    pub certified: bool,
    pub witnesses: Vec<Witness>,
    pub stats: Option<EnumerationStats>,
}

impl ConeReport {
    fn bare(n: usize, h: Option<usize>, method: Method, dimension: usize) -> Self {
        ConeReport {
            n,
            h,
            field: FieldSpec::Rationals,
            method,
            dimension,
            upper_bound: None,
            certified: false,
            witnesses: Vec::new(),
            stats: None,
        }
    }
}

fn check_height(n: usize, h: usize) -> Result<()> {
    if h == 0 || h >= n {
        return Err(Error::invalid(alloc::format!("height must satisfy 1 <= h <= n - 1, got h = {h}, n = {n}")));
    }
    Ok(())
}

/// `r^2` for `n = 2r`, `r^2 + r` for `n = 2r + 1`; with a height,
/// `h(n - h - 1) + 1`.
pub fn formula_dim(n: usize, h: Option<usize>) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    match h {
        None => {
            let r = n / 2;
            Ok(if n % 2 == 0 { r * r } else { r * r + r })
        }
        Some(h) => {
            check_height(n, h)?;
            Ok(h * (n - h - 1) + 1)
        }
    }
}

/// [`formula_dim`] wrapped as a report.
pub fn formula_report(n: usize, h: Option<usize>) -> Result<ConeReport> {
    Ok(ConeReport::bare(n, h, Method::Formula, formula_dim(n, h)?))
}

/// Whether `b` is nonzero at `p` and zero at every later member of `set`.
pub fn is_initial(b: &BettiDiagram, p: IndexPair, set: &IndexSet) -> Result<bool> {
    let later = set
        .after(p)
        .ok_or_else(|| Error::invalid(alloc::format!("{p} is not in the index set")))?;
    Ok(b.at(p) != 0 && later.iter().all(|&q| b.at(q) == 0))
}

/// Rank over `Q` of diagrams as vectors indexed by `(i, d)`.
pub fn diagram_rank<'a, I>(diagrams: I) -> usize
where
    I: IntoIterator<Item = &'a BettiDiagram>,
{
    let mut basis = SparseBasis::new();
    for b in diagrams {
        basis.insert(b.iter().map(|(p, v)| (p, BigInt::from(v))));
    }
    basis.rank()
}

/// `dim W_n^h`: vectors on `S_n^h` killed by `HK_1 .. HK_{h-1}`.
pub fn hk_subspace_dim(n: usize, h: usize) -> Result<usize> {
    check_height(n, h)?;
    let set = index_set(n, Some(h))?;
    let rows: Vec<Vec<BigInt>> = (1..h as u32)
        .map(|j| {
            set.members()
                .iter()
                .map(|p| {
                    let w = BigInt::from(p.d).pow(j);
                    if p.i % 2 == 0 {
                        w
                    } else {
                        -w
                    }
                })
                .collect()
        })
        .collect();
    Ok(set.len() - rank_bigint(rows))
}

/// [`hk_subspace_dim`] wrapped as a report.
pub fn hk_subspace_report(n: usize, h: usize) -> Result<ConeReport> {
    let mut report = ConeReport::bare(n, Some(h), Method::HkSubspace, hk_subspace_dim(n, h)?);
    report.upper_bound = Some(report.dimension);
    Ok(report)
}

/// The ambient upper bound used for certification.
pub fn upper_bound(n: usize, h: Option<usize>) -> Result<usize> {
    match h {
        None => Ok(index_set(n, None)?.len()),
        Some(h) => hk_subspace_dim(n, h),
    }
}
