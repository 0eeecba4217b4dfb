//! Labelled simple graphs on `{1..n}`.
//!
//! Vertex `v` (1-indexed) is bit `v - 1` of a [`VertexSet`]. All public
//! methods taking or returning vertex labels use the 1-indexed convention;
//! bitmasks are 0-indexed.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Bitmask of vertices, bit `k` is vertex `k + 1`.
pub type VertexSet = u32;

/// Hard cap on graph size; one machine word per neighbourhood.
pub const MAX_VERTICES: usize = 32;

/// A labelled simple graph.
///
/// `adj[k]` is the neighbourhood of vertex `k + 1`. Entries at and beyond
/// `n` are always zero, so derived equality and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_VERTICES],
}

/// The named families used throughout the cone constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_m`
    Complete,
    /// `E_m`
    Empty,
    /// `C_m`, needs `m >= 3`
    Cycle,
    /// `L`, always two vertices
    SingleEdge,
}

#[inline]
pub(crate) fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Number of unordered vertex pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{a, b}` (0-indexed, `a < b`) in the column-major
/// upper-triangle order used by graph6 and by [`Graph::from_edge_mask`].
#[inline]
pub const fn pair_index(a: usize, b: usize) -> usize {
    b * (b - 1) / 2 + a
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from 1-indexed edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Decodes a graph from an edge mask over the pairs in
    /// [`pair_index`] order. This is the enumeration index of labelled graphs.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 11 {
            return Err(Error::Capacity {
                what: "vertex count for edge-mask indexing",
                got: n,
                limit: 11,
            });
        }
        let mut g = Graph::new(n)?;
        let mut bit = 0;
        for b in 1..n {
            for a in 0..b {
                if mask >> bit & 1 == 1 {
                    g.adj[a] |= 1 << b;
                    g.adj[b] |= 1 << a;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; only defined for `n <= 11`.
    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        for b in 1..self.n.min(11) {
            for a in 0..b {
                if self.adj[a] >> b & 1 == 1 {
                    mask |= 1 << pair_index(a, b);
                }
            }
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Every vertex as a bitmask.
    pub fn vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::invalid(alloc::format!(
                "vertex {v} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(alloc::format!("loop at vertex {u}")));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Neighbourhood bitmask of the 0-indexed vertex `k`.
    #[inline]
    pub fn neighbors(&self, k: usize) -> VertexSet {
        self.adj[k]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency()
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as 1-indexed pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            let mut higher = self.adj[a] & !full_set(a + 1);
            while higher != 0 {
                let b = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((a + 1, b + 1));
            }
        }
        out
    }

    /// Vertices with no neighbours.
    pub fn isolated(&self) -> VertexSet {
        (0..self.n)
            .filter(|&k| self.adj[k] == 0)
            .fold(0, |acc, k| acc | 1 << k)
    }

    /// Same vertex set, edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let mut out = *self;
        for k in 0..self.n {
            out.adj[k] = !self.adj[k] & all & !(1 << k);
        }
        out
    }

    /// `self + other`; the vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let total = self.n + other.n;
        let mut out = Graph::new(total)?;
        out.adj[..self.n].copy_from_slice(self.adjacency());
        for k in 0..other.n {
            out.adj[self.n + k] = other.adj[k] << self.n;
        }
        Ok(out)
    }

    /// Induced subgraph on `set`, relabelled `1..m` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let set = set & self.vertices();
        let mut out = Graph {
            n: set.count_ones() as usize,
            adj: [0; MAX_VERTICES],
        };
        let mut rest = set;
        let mut pos = 0;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out.adj[pos] = compress(self.adj[k] & set, set);
            pos += 1;
        }
        out
    }

    /// Induced subgraph on the non-isolated vertices.
    pub fn strip_isolated(&self) -> Graph {
        self.induced(self.vertices() & !self.isolated())
    }

    /// Whether `cover` meets every edge.
    pub fn is_vertex_cover(&self, cover: VertexSet) -> bool {
        (0..self.n).all(|k| cover >> k & 1 == 1 || self.adj[k] & !cover == 0)
    }

    /// Whether `set` contains no edge.
    #[inline]
    pub fn is_independent(&self, set: VertexSet) -> bool {
        let mut rest = set;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[k] & set != 0 {
                return false;
            }
        }
        true
    }

    /// Minimum vertex cover size, which is the height of the edge ideal.
    pub fn height(&self) -> usize {
        self.min_vertex_cover().count_ones() as usize
    }

    /// A minimum vertex cover. Subsets are tried in ascending size, so the
    /// first hit is optimal.
    pub fn min_vertex_cover(&self) -> VertexSet {
        let n = self.n;
        let all = self.vertices();
        // Vertices of degree 0 never need to be in a cover.
        let useful = all & !self.isolated();
        if useful == 0 {
            return 0;
        }
        for size in 1..=n {
            // Gosper's hack over subsets of the non-isolated vertices.
            let m = useful.count_ones() as usize;
            if size > m {
                break;
            }
            let mut s: u64 = (1u64 << size) - 1;
            let limit = 1u64 << m;
            while s < limit {
                let cover = expand(s as u32, useful);
                if self.is_vertex_cover(cover) {
                    return cover;
                }
                let c = s & s.wrapping_neg();
                let r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        useful
    }

    /// Minimum size over all inclusion-maximal matchings.
    pub fn min_maximal_matching_size(&self) -> usize {
        let mut best = self.n / 2 + 1;
        self.matching_search(0, 0, 0, &mut best);
        if self.edge_count() == 0 {
            0
        } else {
            best
        }
    }

    // `matched`: vertices covered by the current matching. `excluded`:
    // vertices fixed as unmatched. Branches on the lowest free vertex that
    // still has a free neighbour: match it to each such neighbour, or exclude it.
    fn matching_search(&self, matched: VertexSet, excluded: VertexSet, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let blocked = matched | excluded;
        let pick = (0..self.n).find(|&k| blocked >> k & 1 == 0 && self.adj[k] & !blocked != 0);
        match pick {
            None => {
                // Maximal iff no edge joins two unmatched vertices.
                let free = self.vertices() & !matched;
                let maximal = (0..self.n).all(|k| free >> k & 1 == 0 || self.adj[k] & free == 0);
                if maximal {
                    *best = size;
                }
            }
            Some(u) => {
                let mut partners = self.adj[u] & !blocked;
                while partners != 0 {
                    let w = partners.trailing_zeros() as usize;
                    partners &= partners - 1;
                    self.matching_search(matched | 1 << u | 1 << w, excluded, size + 1, best);
                }
                self.matching_search(matched, excluded | 1 << u, size, best);
            }
        }
    }

    /// All independent sets as a simplicial complex (`n <= 16`).
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::independence(self)
    }
}

/// Packs the bits of `bits` selected by `set` into the low bits.
#[inline]
pub(crate) fn compress(bits: VertexSet, set: VertexSet) -> VertexSet {
    let mut out = 0;
    let mut rest = set;
    let mut pos = 0;
    while rest != 0 {
        let k = rest.trailing_zeros();
        rest &= rest - 1;
        out |= (bits >> k & 1) << pos;
        pos += 1;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `bits` over `set`.
#[inline]
pub(crate) fn expand(bits: VertexSet, set: VertexSet) -> VertexSet {
    let mut out = 0;
    let mut rest = set;
    let mut pos = 0;
    while rest != 0 {
        let k = rest.trailing_zeros();
        rest &= rest - 1;
        out |= (bits >> pos & 1) << k;
        pos += 1;
    }
    out
}

/// The standard member of `family` on `{1..m}` (or `{1, 2}` for `L`).
pub fn make_named(family: Family, m: usize) -> Result<Graph> {
    match family {
        Family::Complete => complete(m),
        Family::Empty => Graph::new(m),
        Family::Cycle => cycle(m),
        Family::SingleEdge => single_edge(),
    }
}

pub fn complete(m: usize) -> Result<Graph> {
    Ok(Graph::new(m)?.complement())
}

pub fn empty(m: usize) -> Result<Graph> {
    Graph::new(m)
}

pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::invalid(alloc::format!("cycle needs at least 3 vertices, got {m}")));
    }
    let mut g = Graph::new(m)?;
    for v in 1..m {
        g.add_edge(v, v + 1)?;
    }
    g.add_edge(m, 1)?;
    Ok(g)
}

pub fn single_edge() -> Result<Graph> {
    Graph::from_edges(2, &[(1, 2)])
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}

/// Compact one-line form `n;u v;u v;...`, the inline edge-list syntax.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (u, v) in self.edges() {
            write!(f, ";{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_height(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&s| g.edges().iter().all(|&(u, v)| s >> (u - 1) & 1 == 1 || s >> (v - 1) & 1 == 1))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    // Enumerates every edge subset, keeps the maximal matchings.
    fn brute_min_maximal_matching(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = usize::MAX;
        for s in 0u32..1 << edges.len() {
            let chosen: Vec<_> = (0..edges.len()).filter(|&k| s >> k & 1 == 1).map(|k| edges[k]).collect();
            let mut used = 0u32;
            let mut ok = true;
            for &(u, v) in &chosen {
                let b = 1 << (u - 1) | 1 << (v - 1);
                if used & b != 0 {
                    ok = false;
                }
                used |= b;
            }
            if !ok {
                continue;
            }
            let maximal = edges
                .iter()
                .all(|&(u, v)| used >> (u - 1) & 1 == 1 || used >> (v - 1) & 1 == 1);
            if maximal {
                best = best.min(chosen.len());
            }
        }
        best
    }

    #[test]
    fn named_families() {
        let k3 = make_named(Family::Complete, 3).unwrap();
        assert_eq!(k3.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        let e4 = make_named(Family::Empty, 4).unwrap();
        assert_eq!((e4.n(), e4.edge_count()), (4, 0));
        let c5 = make_named(Family::Cycle, 5).unwrap();
        assert_eq!(c5.edges(), vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        let l = make_named(Family::SingleEdge, 17).unwrap();
        assert_eq!((l.n(), l.edges()), (2, vec![(1, 2)]));
        assert!(matches!(cycle(2), Err(Error::InvalidArgument(_))));
        assert_eq!(complete(0).unwrap().n(), 0);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).unwrap().complement(), empty(4).unwrap());
        assert_eq!(empty(3).unwrap().complement(), complete(3).unwrap());
        let c5c = cycle(5).unwrap().complement();
        // chords of the pentagon: the cycle 1-3-5-2-4-1
        assert_eq!(c5c.edges(), vec![(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]);
    }

    #[test]
    fn disjoint_union_examples() {
        let l = single_edge().unwrap();
        let two_l = l.disjoint_union(&l).unwrap();
        assert_eq!((two_l.n(), two_l.edges()), (4, vec![(1, 2), (3, 4)]));
        let g = complete(2).unwrap().disjoint_union(&empty(2).unwrap()).unwrap();
        assert_eq!((g.n(), g.edges()), (4, vec![(1, 2)]));
        let c4e1 = cycle(4).unwrap().disjoint_union(&empty(1).unwrap()).unwrap();
        assert_eq!(c4e1.n(), 5);
        assert_eq!(c4e1.isolated(), 1 << 4);
        let big = complete(20).unwrap();
        assert!(matches!(big.disjoint_union(&big), Err(Error::Capacity { .. })));
    }

    #[test]
    fn strip_isolated_examples() {
        let g = complete(3).unwrap().disjoint_union(&empty(2).unwrap()).unwrap();
        assert_eq!(g.strip_isolated(), complete(3).unwrap());
        assert_eq!(empty(5).unwrap().strip_isolated().n(), 0);
        let l = single_edge().unwrap();
        let two_l = l.disjoint_union(&l).unwrap();
        assert_eq!(two_l.strip_isolated(), two_l);
        // isolated vertex in the middle is removed and labels close up
        let g = Graph::from_edges(4, &[(1, 3), (3, 4)]).unwrap();
        assert_eq!(g.strip_isolated().edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn height_examples() {
        for m in 1..=8 {
            assert_eq!(complete(m).unwrap().height(), m - 1);
        }
        assert_eq!(cycle(5).unwrap().height(), 3);
        assert_eq!(brute_height(&cycle(5).unwrap()), 3);
        assert_eq!(empty(7).unwrap().height(), 0);
    }

    #[test]
    fn matching_examples() {
        assert_eq!(complete(4).unwrap().min_maximal_matching_size(), 2);
        assert_eq!(brute_min_maximal_matching(&complete(4).unwrap()), 2);
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.min_maximal_matching_size(), 1);
        assert_eq!(empty(3).unwrap().min_maximal_matching_size(), 0);
        // path on 6 vertices: {23, 45} is maximal, nothing of size 1 is
        let p6 = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(p6.min_maximal_matching_size(), 2);
    }

    #[test]
    fn solvers_match_brute_force_on_all_small_graphs() {
        for n in 0..=5 {
            for mask in 0..1u64 << pair_count(n) {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                assert_eq!(g.height(), brute_height(&g), "{g:?}");
                assert_eq!(g.min_maximal_matching_size(), brute_min_maximal_matching(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn height_plus_edge_and_independence_dimension() {
        let l = single_edge().unwrap();
        for n in 1..=6 {
            for mask in 0..1u64 << pair_count(n) {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                let gl = g.disjoint_union(&l).unwrap();
                assert_eq!(gl.height(), g.height() + 1);
                let delta = g.independence_complex().unwrap();
                assert_eq!(g.height() as isize, n as isize - delta.dim() - 1);
            }
        }
    }

    #[test]
    fn covers_are_complements_of_faces() {
        for n in 1..=6 {
            for mask in 0..1u64 << pair_count(n) {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                let delta = g.independence_complex().unwrap();
                for u in 0u32..1 << n {
                    assert_eq!(g.is_vertex_cover(u), delta.contains(g.vertices() & !u));
                }
            }
        }
    }

    #[test]
    fn edge_mask_order_matches_graph6_layout() {
        // bit order (1,2), (1,3), (2,3), (1,4), ...
        let g = Graph::from_edge_mask(4, 0b001000).unwrap();
        assert_eq!(g.edges(), vec![(1, 4)]);
        assert_eq!(pair_index(0, 3), 3);
    }

    proptest! {
        #[test]
        fn complement_is_involution(n in 0usize..=11, mask in any::<u64>()) {
            let g = Graph::from_edge_mask(n, mask & ((1u64 << pair_count(n)) - 1)).unwrap();
            prop_assert_eq!(g.complement().complement(), g);
            prop_assert_eq!(Graph::from_edge_mask(n, g.edge_mask()).unwrap(), g);
        }

        #[test]
        fn adjacency_stays_symmetric(n in 2usize..=32, edges in proptest::collection::vec((1usize..=32, 1usize..=32), 0..40)) {
            let mut g = Graph::new(n).unwrap();
            for (u, v) in edges {
                let _ = g.add_edge(u, v);
            }
            for a in 0..n {
                prop_assert_eq!(g.neighbors(a) >> a & 1, 0);
                for b in 0..n {
                    prop_assert_eq!(g.neighbors(a) >> b & 1, g.neighbors(b) >> a & 1);
                }
            }
        }
    }
}
