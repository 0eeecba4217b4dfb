//! Closed forms and transfer rules for specific graph families.

use alloc::vec::Vec;

use super::{hochster_diagram, BettiDiagram};
use crate::cone::IndexPair;
use crate::error::{Error, Result};
use crate::graph::{empty, Graph};
use crate::homology::FieldSpec;

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

/// `β(K_m)`: `β_{i,i+2} = (i + 1) C(m, i + 2)` for `i = 0..=m-2`.
pub fn diagram_complete(m: usize) -> BettiDiagram {
    let mut b = BettiDiagram::new(m);
    for i in 0..m.saturating_sub(1) {
        b.add(IndexPair::new(i, i + 2), (i as u64 + 1) * binomial(m, i + 2));
    }
    b
}

/// The cycle-complement formula evaluated literally for any `m >= 3`:
/// `β_{i,i+2} = m(i+1)/(m-i-2) C(m-2, i+2)` for `i = 0..=m-4` and
/// `β_{m-3,m} = 1`.
///
/// At `m = 3` this gives `β_{0,3} = 1`, while `C_3^c = E_3` has the zero
/// diagram; [`diagram_cycle_complement`] therefore refuses `m = 3`.
pub fn cycle_complement_formula(m: usize) -> Result<BettiDiagram> {
    if m < 3 {
        return Err(Error::invalid(alloc::format!("cycle needs m >= 3, got {m}")));
    }
    let mut b = BettiDiagram::new(m);
    for i in 0..=m.saturating_sub(4) {
        if m < 4 {
            break;
        }
        let numerator = m as u64 * (i as u64 + 1) * binomial(m - 2, i + 2);
        let denominator = (m - i - 2) as u64;
        assert_eq!(numerator % denominator, 0, "non-integral cycle-complement entry at i = {i}");
        b.add(IndexPair::new(i, i + 2), numerator / denominator);
    }
    b.add(IndexPair::new(m - 3, m), 1);
    Ok(b)
}

/// `β((C_m)^c)` for `m >= 4`.
pub fn diagram_cycle_complement(m: usize) -> Result<BettiDiagram> {
    if m < 4 {
        return Err(Error::invalid(alloc::format!(
            "cycle-complement closed form holds for m >= 4 (C_3^c = E_3 has zero diagram), got {m}"
        )));
    }
    cycle_complement_formula(m)
}

/// `β(G + L)` from `β(G)`: `β_{i,d} + β_{i-1,d-2}`, with `β_{-1,0} = 1`.
///
/// The virtual entry is `H̃_{-1}` of the empty induced subcomplex; without
/// it `β_{0,2}(2L)` would come out as 1.
pub fn suspend_diagram(b: &BettiDiagram) -> BettiDiagram {
    let mut out = b.clone().with_n_context(b.n_context() + 2);
    out.add(IndexPair::new(0, 2), 1);
    for (p, v) in b.iter() {
        out.add(IndexPair::new(p.i + 1, p.d + 2), v);
    }
    out
}

/// `β^c(G + E_{m-l})` as far as it follows from `b = β^c(G)`.
///
/// Rows `d - i >= 3` are exact. Row 1 is only known to be nonzero at
/// `(i, i + 2)` for `i = 0..=m-2`; those positions are listed in `row_one`
/// and their values are left to [`PaddedComplement::with_row_one`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedComplement {
    pub upper: BettiDiagram,
    pub row_one: Vec<IndexPair>,
}

impl PaddedComplement {
    /// Fills row 1 from `full` (a Hochster diagram of the padded graph's
    /// complement), checking that `full` agrees on every upper row and is
    /// nonzero on every row-1 position.
    pub fn with_row_one(&self, full: &BettiDiagram) -> Result<BettiDiagram> {
        let upper_of_full: BettiDiagram = BettiDiagram::from_entries(
            self.upper.n_context(),
            full.iter().filter(|(p, _)| p.d - p.i >= 3),
        );
        if upper_of_full != self.upper {
            return Err(Error::Verification(alloc::format!(
                "padding rule gives {} on rows >= 2, Hochster gives {}",
                self.upper,
                upper_of_full
            )));
        }
        let mut out = self.upper.clone();
        for &p in &self.row_one {
            let v = full.at(p);
            if v == 0 {
                return Err(Error::Verification(alloc::format!("row-1 entry {p} vanishes")));
            }
            out.set(p, v);
        }
        if out != *full {
            return Err(Error::Verification(alloc::format!("row-1 support differs: {out} vs {full}")));
        }
        Ok(out)
    }
}

/// Padding rule for complements: from `b = β(G^c)` with `G` on `l` vertices,
/// the upper rows of `β^c(G + E_{m-l})` are
/// `β̃_{i,d} = Σ_{j=0..=i} C(m - l, i - j) b_{j, j+d-i}` for `(i, d) ∈ S_m`,
/// `d - i >= 3`.
///
/// The weight counts the ways to add `i - j` of the new isolated vertices to
/// a subset of `[l]`; they never change homology above degree 0.
pub fn pad_complement_diagram(b: &BettiDiagram, l: usize, m: usize) -> Result<PaddedComplement> {
    pad_with(b, l, m, |k| binomial(m - l, k))
}

/// The unweighted partial sum `Σ_{j=0..=i} b_{j, j+d-i}`. Equal to
/// [`pad_complement_diagram`] when `m = l + 1`, an overcount otherwise.
pub fn pad_complement_unweighted(b: &BettiDiagram, l: usize, m: usize) -> Result<PaddedComplement> {
    pad_with(b, l, m, |_| 1)
}

fn pad_with(b: &BettiDiagram, l: usize, m: usize, weight: impl Fn(usize) -> u64) -> Result<PaddedComplement> {
    if l >= m {
        return Err(Error::invalid(alloc::format!("padding needs l < m, got l = {l}, m = {m}")));
    }
    let mut upper = BettiDiagram::new(m);
    for i in 0..=m {
        for d in i + 3..=m {
            let p = IndexPair::new(i, d);
            if !p.in_s(m) {
                continue;
            }
            let shift = d - i;
            let v: u64 = (0..=i).map(|j| weight(i - j) * b.get(j, j + shift)).sum();
            upper.add(p, v);
        }
    }
    let row_one = (0..=m.saturating_sub(2)).filter(|_| m >= 2).map(|i| IndexPair::new(i, i + 2)).collect();
    Ok(PaddedComplement { upper, row_one })
}

/// `β^c(G + E_{m-l})` with row 1 filled in from Hochster on the padded
/// complement.
pub fn padded_complement_diagram(g: &Graph, m: usize, field: FieldSpec) -> Result<BettiDiagram> {
    let l = g.n();
    let base = hochster_diagram(&g.complement(), field)?;
    let padded = pad_complement_diagram(&base, l, m)?;
    let complement = g.disjoint_union(&empty(m - l)?)?.complement();
    padded.with_row_one(&hochster_diagram(&complement, field)?)
}
