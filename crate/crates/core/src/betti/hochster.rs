//! Hochster's formula over independence complexes:
//! `β_{i,d} = Σ_{|U| = d} dim H̃_{d-i-2}(Δ(G)_U)`.
//!
//! `Δ(G)_U` is the independence complex of the induced subgraph `G[U]`. If
//! `G[U]` has an isolated vertex the complex is a cone and contributes
//! nothing, which prunes most of the `2^n` sweep for sparse graphs.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::BettiDiagram;
use crate::complex::SimplicialComplex;
use crate::cone::IndexPair;
use crate::error::{Error, Result};
use crate::graph::{compress, pair_count, Graph, VertexSet};
use crate::homology::{reduced_homology_dims, FieldSpec};

/// Vertex cap for Hochster sweeps.
pub const MAX_HOCHSTER_VERTICES: usize = 16;

/// Dense `(n + 1) x (n + 1)` accumulator indexed by `(i, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseBetti {
    n: usize,
    cells: Vec<u64>,
}

impl DenseBetti {
    pub fn new(n: usize) -> Self {
        DenseBetti {
            n,
            cells: vec![0; (n + 1) * (n + 1)],
        }
    }

    #[inline]
    fn add(&mut self, i: usize, d: usize, v: u64) {
        self.cells[i * (self.n + 1) + d] += v;
    }

    /// Adds `other` cell by cell. Integer addition, so any merge order gives the same result.
    pub fn merge(&mut self, other: &DenseBetti) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.cells.iter_mut().zip(&other.cells) {
            *a += b;
        }
    }

    pub fn into_diagram(self) -> BettiDiagram {
        let w = self.n + 1;
        let mut b = BettiDiagram::new(self.n);
        for (k, &v) in self.cells.iter().enumerate() {
            b.add(IndexPair::new(k / w, k % w), v);
        }
        b
    }
}

#[inline]
fn has_isolated_within(g: &Graph, set: VertexSet) -> bool {
    let mut rest = set;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbors(k) & set == 0 {
            return true;
        }
    }
    false
}

#[inline]
fn is_clique_within(g: &Graph, set: VertexSet) -> bool {
    let mut rest = set;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbors(k) & set != set & !(1 << k) {
            return false;
        }
    }
    true
}

// Adds the homology of Δ(G)_U to the diagram cells it feeds.
fn contribute(g: &Graph, set: VertexSet, field: FieldSpec, acc: &mut DenseBetti) {
    let d = set.count_ones() as usize;
    if d < 2 || has_isolated_within(g, set) {
        return;
    }
    if is_clique_within(g, set) {
        // d isolated points: only H̃_0, of rank d - 1
        acc.add(d - 2, d, d as u64 - 1);
        return;
    }
    let complex = SimplicialComplex::independence_within(g, set);
    let profile = reduced_homology_dims(&complex, field);
    for (j, dim) in profile.nonzero() {
        let i = d as isize - j - 2;
        debug_assert!(i >= 0 && j >= 0, "nonempty Δ_U has no H̃_-1");
        acc.add(i as usize, d, dim as u64);
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_HOCHSTER_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for Hochster's formula",
            got: g.n(),
            limit: MAX_HOCHSTER_VERTICES,
        });
    }
    Ok(())
}

/// Contribution of the subsets whose bitmask lies in `subsets`.
///
/// Splitting `0..2^n` into ranges and merging the parts gives exactly
/// [`hochster_diagram`]; parallel drivers use this.
pub fn hochster_partial(g: &Graph, field: FieldSpec, subsets: Range<u32>) -> Result<DenseBetti> {
    check_size(g)?;
    let mut acc = DenseBetti::new(g.n());
    let end = subsets.end.min(1 << g.n());
    for set in subsets.start..end {
        contribute(g, set, field, &mut acc);
    }
    Ok(acc)
}

/// Graded Betti numbers of the edge ideal of `g` over `field`.
pub fn hochster_diagram(g: &Graph, field: FieldSpec) -> Result<BettiDiagram> {
    Ok(hochster_partial(g, field, 0..1 << g.n())?.into_diagram())
}

/// Nonzero `(j, dim H̃_j)` of the independence complex of every labelled
/// graph on `k <= max_k` vertices, keyed by edge mask.
///
/// Speeds up exhaustive sweeps: `Δ(G)_U` only depends on `G[U]`, so every
/// proper subset is a lookup.
pub struct SubgraphHomologyTable {
    field: FieldSpec,
    max_k: usize,
    profiles: Vec<Vec<Box<[(u8, u32)]>>>,
}

impl SubgraphHomologyTable {
    /// Largest supported `max_k`; `2^21` entries at `k = 7`.
    pub const MAX_K: usize = 7;

    pub fn new(max_k: usize, field: FieldSpec) -> Result<Self> {
        if max_k > Self::MAX_K {
            return Err(Error::Capacity {
                what: "homology table size",
                got: max_k,
                limit: Self::MAX_K,
            });
        }
        let profiles = (0..=max_k)
            .map(|k| {
                (0..1u64 << pair_count(k))
                    .map(|mask| {
                        let g = Graph::from_edge_mask(k, mask).expect("k <= 7");
                        let mut acc = DenseBetti::new(k);
                        contribute(&g, g.vertices(), field, &mut acc);
                        // only d = k cells can be set; store them as (j, dim)
                        (0..=k)
                            .filter_map(|i| {
                                let v = acc.cells[i * (k + 1) + k];
                                (v > 0).then(|| ((k - i - 2) as u8, v as u32))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(SubgraphHomologyTable { field, max_k, profiles })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    // Edge mask of G[set] relabelled to 0..k in pair_index order.
    #[inline]
    fn induced_mask(g: &Graph, set: VertexSet) -> u64 {
        let mut mask = 0u64;
        let mut rest = set;
        let mut pos = 0u32;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pos > 0 {
                let earlier = compress(g.neighbors(k) & set, set) & ((1 << pos) - 1);
                mask |= (earlier as u64) << (pos * (pos - 1) / 2);
            }
            pos += 1;
        }
        mask
    }

    /// Same result as [`hochster_diagram`] with this table's field.
    pub fn diagram(&self, g: &Graph) -> Result<BettiDiagram> {
        check_size(g)?;
        let mut acc = DenseBetti::new(g.n());
        for set in 1..1u32 << g.n() {
            let d = set.count_ones() as usize;
            if d < 2 {
                continue;
            }
            if d <= self.max_k {
                for &(j, dim) in self.profiles[d][Self::induced_mask(g, set) as usize].iter() {
                    acc.add(d - j as usize - 2, d, dim as u64);
                }
            } else {
                contribute(g, set, self.field, &mut acc);
            }
        }
        Ok(acc.into_diagram())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, empty, single_edge};

    #[test]
    fn hochster_examples() {
        let q = FieldSpec::Rationals;
        let k3 = hochster_diagram(&complete(3).unwrap(), q).unwrap();
        assert_eq!(k3, BettiDiagram::from_entries(3, [((0, 2), 3), ((1, 3), 2)]));
        let l = single_edge().unwrap();
        assert_eq!(hochster_diagram(&l, q).unwrap(), BettiDiagram::from_entries(2, [((0, 2), 1)]));
        let three_l = l.disjoint_union(&l).unwrap().disjoint_union(&l).unwrap();
        assert_eq!(
            hochster_diagram(&three_l, q).unwrap(),
            BettiDiagram::from_entries(6, [((0, 2), 3), ((1, 4), 3), ((2, 6), 1)])
        );
        for m in 0..6 {
            assert!(hochster_diagram(&empty(m).unwrap(), q).unwrap().is_empty());
        }
        assert!(hochster_diagram(&empty(17).unwrap(), q).is_err());
    }

    // Koszul complex on k independent quadrics: β_{i,2(i+1)} = C(k, i+1).
    #[test]
    fn disjoint_edges_match_koszul() {
        let l = single_edge().unwrap();
        let mut g = Graph::new(0).unwrap();
        for k in 1..=6usize {
            g = g.disjoint_union(&l).unwrap();
            let b = hochster_diagram(&g, FieldSpec::Rationals).unwrap();
            let mut want = BettiDiagram::new(2 * k);
            let mut binom = 1u64;
            for i in 0..k {
                binom = binom * (k - i) as u64 / (i + 1) as u64;
                want.add(IndexPair::new(i, 2 * (i + 1)), binom);
            }
            assert_eq!(b, want, "k = {k}");
        }
    }

    #[test]
    fn partial_sweeps_merge_to_the_full_diagram() {
        let g = Graph::from_edges(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1), (1, 4)]).unwrap();
        let full = hochster_diagram(&g, FieldSpec::Rationals).unwrap();
        let mut acc = hochster_partial(&g, FieldSpec::Rationals, 0..50).unwrap();
        acc.merge(&hochster_partial(&g, FieldSpec::Rationals, 50..97).unwrap());
        acc.merge(&hochster_partial(&g, FieldSpec::Rationals, 97..1 << 7).unwrap());
        assert_eq!(acc.into_diagram(), full);
    }

    #[test]
    fn table_agrees_with_direct_sweep() {
        let table = SubgraphHomologyTable::new(4, FieldSpec::Rationals).unwrap();
        for mask in (0..1u64 << pair_count(6)).step_by(7) {
            let g = Graph::from_edge_mask(6, mask).unwrap();
            assert_eq!(table.diagram(&g).unwrap(), hochster_diagram(&g, FieldSpec::Rationals).unwrap());
        }
        assert!(SubgraphHomologyTable::new(8, FieldSpec::Rationals).is_err());
    }
}
