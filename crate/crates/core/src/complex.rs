//! Finite simplicial complexes with faces stored as vertex bitmasks.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{full_set, Graph, VertexSet};

/// Largest ground set for which full face enumeration is attempted.
pub const MAX_COMPLEX_VERTICES: usize = 16;

/// A downward-closed family of faces on the ground set `{1..n}`.
///
/// `faces[k]` holds the faces with `k` vertices (dimension `k - 1`), sorted
/// ascending as integers. `faces[0]` is always `[0]`, the empty face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Vec<VertexSet>>,
}

impl SimplicialComplex {
    /// The complex `{∅}` on a ground set of size `n`.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            faces: vec![vec![0]],
        }
    }

    fn check_ground(n: usize) -> Result<()> {
        if n > MAX_COMPLEX_VERTICES {
            return Err(Error::Capacity {
                what: "complex ground set",
                got: n,
                limit: MAX_COMPLEX_VERTICES,
            });
        }
        Ok(())
    }

    /// Downward closure of `facets`.
    pub fn from_facets(n: usize, facets: &[VertexSet]) -> Result<Self> {
        Self::check_ground(n)?;
        let all = full_set(n);
        let mut seen = alloc::collections::BTreeSet::new();
        for &f in facets {
            if f & !all != 0 {
                return Err(Error::invalid("facet outside the ground set"));
            }
            // every subset of f
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        seen.insert(0);
        Ok(Self::from_sorted_unique(n, seen.into_iter()))
    }

    fn from_sorted_unique(n: usize, faces: impl Iterator<Item = VertexSet>) -> Self {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
        for f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        while by_size.len() > 1 && by_size.last().is_some_and(|v| v.is_empty()) {
            by_size.pop();
        }
        SimplicialComplex { n, faces: by_size }
    }

    /// Independence complex of `g`: faces are the sets spanning no edge.
    pub fn independence(g: &Graph) -> Result<Self> {
        Self::check_ground(g.n())?;
        Ok(Self::independence_within(g, g.vertices()))
    }

    /// Independence complex of `g` restricted to `set`, i.e. `Δ(g)_set`.
    /// The ground set stays `{1..g.n()}`. No size check.
    pub fn independence_within(g: &Graph, set: VertexSet) -> Self {
        let mut faces = vec![vec![0u32]];
        loop {
            let last = faces.last().unwrap();
            let mut next = Vec::new();
            for &f in last {
                let above = if f == 0 { set } else { set & !full_set(32 - f.leading_zeros() as usize) };
                let mut cand = above;
                while cand != 0 {
                    let v = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    if g.neighbors(v) & f == 0 {
                        next.push(f | 1 << v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            faces.push(next);
        }
        SimplicialComplex { n: g.n(), faces }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces with exactly `size` vertices.
    pub fn faces_of_size(&self, size: usize) -> &[VertexSet] {
        self.faces.get(size).map_or(&[], |v| v.as_slice())
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Vertices that appear in some face.
    pub fn vertex_support(&self) -> VertexSet {
        self.faces_of_size(1).iter().fold(0, |a, &f| a | f)
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces_of_size(face.count_ones() as usize)
            .binary_search(&face)
            .is_ok()
    }

    /// All faces contained in `set`.
    pub fn induced_subcomplex(&self, set: VertexSet) -> Self {
        let faces = self
            .faces
            .iter()
            .flat_map(|level| level.iter().copied().filter(|&f| f & !set == 0));
        Self::from_sorted_unique(self.n, faces)
    }

    /// `Σ (-1)^dim` over all faces including the empty one.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(size, level)| {
                let sign = if size % 2 == 1 { 1 } else { -1 };
                sign * level.len() as i64
            })
            .sum()
    }

    /// Join with a new apex vertex `n + 1`.
    pub fn cone(&self) -> Result<Self> {
        Self::check_ground(self.n + 1)?;
        let apex = 1 << self.n;
        let faces = self.all_faces().flat_map(|f| [f, f | apex]);
        let mut faces: Vec<_> = faces.collect();
        faces.sort_unstable();
        Ok(Self::from_sorted_unique(self.n + 1, faces.into_iter()))
    }

    /// Join with two new non-adjacent vertices `n + 1` and `n + 2`.
    pub fn suspension(&self) -> Result<Self> {
        Self::check_ground(self.n + 2)?;
        let (north, south) = (1 << self.n, 1 << (self.n + 1));
        let faces = self.all_faces().flat_map(|f| [f, f | north, f | south]);
        let mut faces: Vec<_> = faces.collect();
        faces.sort_unstable();
        Ok(Self::from_sorted_unique(self.n + 2, faces.into_iter()))
    }

    pub fn all_faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().flatten().copied()
    }

    /// Whether every subset of every face is a face.
    pub fn is_downward_closed(&self) -> bool {
        self.all_faces().all(|f| {
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !self.contains(f & !bit) {
                    return false;
                }
            }
            true
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, empty, single_edge};

    #[test]
    fn independence_examples() {
        let k3 = SimplicialComplex::independence(&complete(3).unwrap()).unwrap();
        assert_eq!(k3.all_faces().collect::<Vec<_>>(), vec![0, 0b001, 0b010, 0b100]);
        let l = single_edge().unwrap();
        let two_l = SimplicialComplex::independence(&l.disjoint_union(&l).unwrap()).unwrap();
        // edges 13, 14, 23, 24
        assert_eq!(two_l.faces_of_size(2), &[0b0101, 0b0110, 0b1001, 0b1010]);
        assert_eq!(two_l.dim(), 1);
        let e2 = SimplicialComplex::independence(&empty(2).unwrap()).unwrap();
        assert_eq!(e2, SimplicialComplex::from_facets(2, &[0b11]).unwrap());
        assert!(SimplicialComplex::independence(&empty(17).unwrap()).is_err());
    }

    #[test]
    fn independence_equals_clique_complex_of_complement() {
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (5, 6), (1, 6)]).unwrap();
        let gc = g.complement();
        let delta = g.independence_complex().unwrap();
        for s in 0u32..1 << 6 {
            let clique = (0..6).all(|a| (0..6).all(|b| a == b || s >> a & 1 == 0 || s >> b & 1 == 0 || gc.neighbors(a) >> b & 1 == 1));
            assert_eq!(delta.contains(s), clique);
        }
        assert!(delta.is_downward_closed());
    }

    #[test]
    fn induced_subcomplex_examples() {
        let l = single_edge().unwrap();
        let square = SimplicialComplex::independence(&l.disjoint_union(&l).unwrap()).unwrap();
        let two_points = square.induced_subcomplex(0b0011);
        assert_eq!(two_points.all_faces().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(square.induced_subcomplex(0), SimplicialComplex::void(4));
        assert_eq!(square.induced_subcomplex(0b1111), square);
    }

    #[test]
    fn cone_and_suspension_shapes() {
        let pts = SimplicialComplex::from_facets(2, &[0b01, 0b10]).unwrap();
        let s = pts.suspension().unwrap();
        assert_eq!(s.faces_of_size(2).len(), 4);
        assert_eq!(s.dim(), 1);
        let c = pts.cone().unwrap();
        assert_eq!(c.face_count(), 6);
        assert!(c.is_downward_closed() && s.is_downward_closed());
        assert_eq!(c.reduced_euler_characteristic(), 0);
    }
}
