//! Reduced simplicial homology dimensions over a field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::linalg::{rank_mod_p, rank_over_rationals};

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    /// `F_p`; construct through [`FieldSpec::prime`].
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(alloc::format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Rank of an integer matrix over this field.
    pub fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match self {
            FieldSpec::Rationals => rank_over_rationals(rows),
            FieldSpec::Prime(p) => rank_mod_p(rows, *p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut k = 2u64;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// `dims[j + 1] = dim H̃_j` for `j = -1 ..= dim Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_j`; zero outside the stored range.
    pub fn dim(&self, j: isize) -> usize {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    /// Highest stored degree, which is the dimension of the complex.
    pub fn top_degree(&self) -> isize {
        self.dims.len() as isize - 2
    }

    /// `(j, dim H̃_j)` for the nonzero degrees.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(j, d)| if j.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }
}

// Row k of ∂: the boundary of the k-th face of size `size`, as a dense vector
// over the faces of size `size - 1`.
fn boundary_rows(upper: &[VertexSet], lower: &[VertexSet]) -> Vec<Vec<i64>> {
    upper
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; lower.len()];
            let mut rest = face;
            let mut sign = 1i64;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let idx = lower
                    .binary_search(&(face & !bit))
                    .expect("complex is not downward closed");
                row[idx] = sign;
                sign = -sign;
            }
            row
        })
        .collect()
}

/// Reduced homology dimensions of `c` over `field`.
///
/// Uses the augmented chain complex, so `{∅}` has `H̃_{-1} = 1`.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let top = (c.dim() + 1) as usize; // largest face size
    // ranks[s] = rank of ∂ from faces of size s to size s - 1, s = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for size in 1..=top {
        let upper = c.faces_of_size(size);
        let lower = c.faces_of_size(size - 1);
        ranks[size] = match (upper.len(), lower.len()) {
            (0, _) | (_, 0) => 0,
            // ∂ into the single empty face is the augmentation map
            (_, _) if size == 1 => 1,
            _ => field.rank(&boundary_rows(upper, lower)),
        };
    }
    let dims = (0..=top)
        .map(|size| c.faces_of_size(size).len() - ranks[size] - ranks[size + 1])
        .collect();
    HomologyProfile { dims }
}
