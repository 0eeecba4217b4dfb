//! Betti diagrams of edge ideals.
//!
//! [`hochster_diagram`] is the ground truth. The closed forms and transfer
//! rules in [`rules`] are checked against it in the tests.

mod hochster;
pub mod rules;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::cone::IndexPair;
use crate::error::{Error, Result};

pub use hochster::{hochster_diagram, hochster_partial, DenseBetti, SubgraphHomologyTable, MAX_HOCHSTER_VERTICES};
pub use rules::{
    cycle_complement_formula, diagram_complete, diagram_cycle_complement, pad_complement_diagram, pad_complement_unweighted,
    padded_complement_diagram, suspend_diagram, PaddedComplement,
};

/// Sparse graded Betti numbers `β_{i,d}`; zero entries are never stored.
///
/// `n_context` is the vertex count of the ring the diagram was computed in.
/// It is carried for support checks and display and does not take part in
/// equality, ordering or hashing.
#[derive(Debug, Clone, Default)]
pub struct BettiDiagram {
    entries: BTreeMap<IndexPair, u64>,
    n_context: usize,
}

impl PartialEq for BettiDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for BettiDiagram {}

impl PartialOrd for BettiDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BettiDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl Hash for BettiDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl BettiDiagram {
    pub fn new(n_context: usize) -> Self {
        BettiDiagram {
            entries: BTreeMap::new(),
            n_context,
        }
    }

    pub fn from_entries<I, P>(n_context: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (P, u64)>,
        P: Into<IndexPair>,
    {
        let mut b = BettiDiagram::new(n_context);
        for (p, v) in entries {
            b.add(p.into(), v);
        }
        b
    }

    pub fn n_context(&self) -> usize {
        self.n_context
    }

    pub fn with_n_context(mut self, n: usize) -> Self {
        self.n_context = n;
        self
    }

    pub fn get(&self, i: usize, d: usize) -> u64 {
        self.at(IndexPair::new(i, d))
    }

    pub fn at(&self, p: IndexPair) -> u64 {
        self.entries.get(&p).copied().unwrap_or(0)
    }

    pub fn set(&mut self, p: IndexPair, v: u64) {
        if v == 0 {
            self.entries.remove(&p);
        } else {
            self.entries.insert(p, v);
        }
    }

    pub fn add(&mut self, p: IndexPair, v: u64) {
        if v != 0 {
            *self.entries.entry(p).or_insert(0) += v;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero cells.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero cells in `(i, d)` order.
    pub fn iter(&self) -> impl Iterator<Item = (IndexPair, u64)> + '_ {
        self.entries.iter().map(|(&p, &v)| (p, v))
    }

    pub fn support(&self) -> impl Iterator<Item = IndexPair> + '_ {
        self.entries.keys().copied()
    }

    /// `"(i,d)=v;..."` sorted by `(i, d)`; empty string for the zero diagram.
    pub fn canonical_string(&self) -> String {
        let mut out = String::new();
        for (k, (p, v)) in self.iter().enumerate() {
            if k > 0 {
                out.push(';');
            }
            out.push_str(&alloc::format!("{p}={v}"));
        }
        out
    }

    /// Reverse of [`BettiDiagram::canonical_string`].
    pub fn parse_canonical(text: &str, n_context: usize) -> Result<Self> {
        let mut b = BettiDiagram::new(n_context);
        for cell in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Error::invalid(alloc::format!("malformed diagram cell {cell:?}"));
            let (key, value) = cell.split_once('=').ok_or_else(bad)?;
            let key = key.trim().strip_prefix('(').and_then(|k| k.strip_suffix(')')).ok_or_else(bad)?;
            let (i, d) = key.split_once(',').ok_or_else(bad)?;
            let i = i.trim().parse().map_err(|_| bad())?;
            let d = d.trim().parse().map_err(|_| bad())?;
            let v: u64 = value.trim().parse().map_err(|_| bad())?;
            b.add(IndexPair::new(i, d), v);
        }
        Ok(b)
    }

    /// Entry-wise sum.
    pub fn sum(&self, other: &BettiDiagram) -> BettiDiagram {
        let mut out = self.clone();
        for (p, v) in other.iter() {
            out.add(p, v);
        }
        out.n_context = self.n_context.max(other.n_context);
        out
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// `HK_0(β), ..., HK_m(β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HkVector {
    pub values: Vec<i128>,
}

impl HkVector {
    /// Whether `HK_1 .. HK_{h-1}` all vanish.
    pub fn vanishes_below(&self, h: usize) -> bool {
        (1..h).all(|j| self.values.get(j).is_none_or(|&v| v == 0))
    }
}

/// `Σ (-1)^i d^j β_{i,d}`, exactly.
pub fn hk_functional(b: &BettiDiagram, j: u32) -> Result<i128> {
    let overflow = || Error::Overflow("Herzog–Kühl functional");
    b.iter().try_fold(0i128, |acc, (p, v)| {
        let term = (p.d as i128)
            .checked_pow(j)
            .and_then(|w| w.checked_mul(v as i128))
            .ok_or_else(overflow)?;
        let signed = if p.i % 2 == 0 { term } else { -term };
        acc.checked_add(signed).ok_or_else(overflow)
    })
}

pub fn hk_vector(b: &BettiDiagram, max_j: u32) -> Result<HkVector> {
    let values = (0..=max_j).map(|j| hk_functional(b, j)).collect::<Result<_>>()?;
    Ok(HkVector { values })
}

/// `max(d - i)` over the support.
pub fn regularity(b: &BettiDiagram) -> Result<usize> {
    b.support()
        .map(|p| p.d - p.i)
        .max()
        .ok_or_else(|| Error::Undefined("regularity of the zero diagram".into()))
}

/// Every support cell satisfies `i + 2 <= d <= min(2i + 2, n)`.
pub fn check_support_cn(b: &BettiDiagram, n: usize) -> bool {
    b.support().all(|p| p.in_s(n))
}

/// [`check_support_cn`] plus `d - i <= min(h, n - h) + 1`.
pub fn check_support_cnh(b: &BettiDiagram, n: usize, h: usize) -> bool {
    check_support_cn(b, n) && b.support().all(|p| p.d - p.i <= h.min(n.saturating_sub(h)) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> BettiDiagram {
        BettiDiagram::from_entries(4, [((0, 2), 6), ((1, 3), 8), ((2, 4), 3)])
    }

    #[test]
    fn hk_examples() {
        let b = k4();
        assert_eq!(hk_functional(&b, 1).unwrap(), 0);
        assert_eq!(hk_functional(&b, 2).unwrap(), 0);
        assert_eq!(hk_functional(&b, 0).unwrap(), 1);
        // 8*6 - 27*8 + 64*3
        assert_eq!(hk_functional(&b, 3).unwrap(), 24);
        let v = hk_vector(&b, 3).unwrap();
        assert_eq!(v.values, vec![1, 0, 0, 24]);
        assert!(v.vanishes_below(3));
        assert!(!v.vanishes_below(4));
        assert_eq!(hk_vector(&BettiDiagram::new(4), 4).unwrap().values, vec![0; 5]);
        let big = BettiDiagram::from_entries(40, [((0, 40), u64::MAX)]);
        assert!(matches!(hk_functional(&big, 30), Err(Error::Overflow(_))));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&k4()).unwrap(), 2);
        let c5c = BettiDiagram::from_entries(5, [((0, 2), 5), ((1, 3), 5), ((2, 5), 1)]);
        assert_eq!(regularity(&c5c).unwrap(), 3);
        let three_l = BettiDiagram::from_entries(6, [((0, 2), 3), ((1, 4), 3), ((2, 6), 1)]);
        assert_eq!(regularity(&three_l).unwrap(), 4);
        assert!(matches!(regularity(&BettiDiagram::new(3)), Err(Error::Undefined(_))));
    }

    #[test]
    fn support_examples() {
        let k6 = rules::diagram_complete(6);
        assert!(check_support_cn(&k6, 6));
        assert!(check_support_cnh(&k6, 6, 5));
        let three_l = BettiDiagram::from_entries(6, [((0, 2), 3), ((1, 4), 3), ((2, 6), 1)]);
        assert!(check_support_cn(&three_l, 6));
        assert!(check_support_cnh(&three_l, 6, 3));
        assert!(!check_support_cnh(&three_l, 6, 2));
        let c5c = BettiDiagram::from_entries(5, [((0, 2), 5), ((1, 3), 5), ((2, 5), 1)]);
        assert!(check_support_cnh(&c5c, 5, 3));
        assert!(!check_support_cn(&BettiDiagram::from_entries(6, [((0, 4), 1)]), 6));
    }

    #[test]
    fn canonical_round_trip() {
        let b = k4();
        assert_eq!(b.canonical_string(), "(0,2)=6;(1,3)=8;(2,4)=3");
        assert_eq!(BettiDiagram::parse_canonical(&b.canonical_string(), 4).unwrap(), b);
        assert!(BettiDiagram::parse_canonical("(0,2)=", 4).is_err());
        assert!(BettiDiagram::parse_canonical("", 4).unwrap().is_empty());
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut b = BettiDiagram::new(3);
        b.add(IndexPair::new(0, 2), 0);
        b.set(IndexPair::new(1, 3), 0);
        assert!(b.is_empty());
        b.set(IndexPair::new(1, 3), 2);
        b.set(IndexPair::new(1, 3), 0);
        assert!(b.is_empty());
    }
}
