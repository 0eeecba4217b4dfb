use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A homological position `(i, d)`: step `i`, internal degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    pub i: usize,
    pub d: usize,
}

impl IndexPair {
    pub const fn new(i: usize, d: usize) -> Self {
        IndexPair { i, d }
    }

    /// Row `d - i - 1` of the diagram layout (row 1 holds the linear strand).
    /// Only meaningful when `d > i`.
    pub const fn row(&self) -> usize {
        self.d - self.i - 1
    }

    /// `(i - 1, d - 2)`, the position a `+L` step comes from.
    pub fn unshifted(&self) -> Option<IndexPair> {
        (self.i >= 1 && self.d >= 2).then(|| IndexPair::new(self.i - 1, self.d - 2))
    }

    /// Whether `(i, d)` lies in `S_n`: `i + 2 <= d <= min(2i + 2, n)`.
    pub fn in_s(&self, n: usize) -> bool {
        self.i + 2 <= self.d && self.d <= (2 * self.i + 2).min(n)
    }

    /// Whether `(i, d)` lies in `S_n^h`.
    pub fn in_s_h(&self, n: usize, h: usize) -> bool {
        self.in_s(n) && self.d - self.i <= h.min(n.saturating_sub(h)) + 1
    }
}

impl From<(usize, usize)> for IndexPair {
    fn from((i, d): (usize, usize)) -> Self {
        IndexPair { i, d }
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.d)
    }
}

/// Row first, then ascending `i`.
pub fn cmp_plain(p: IndexPair, q: IndexPair) -> Ordering {
    (p.d - p.i, p.i).cmp(&(q.d - q.i, q.i))
}

/// The height-`h` order, written out condition by condition:
///
/// 1. `d - i < d' - i'`
/// 2. `d - i = d' - i' = 2` and `i < i'`
/// 3. `d - i = d' - i' > 2`, `h <= i'` and `i < i'`
/// 4. `d - i = d' - i' > 2`, `i, i' < h` and `i > i'`
pub fn precedes_h(p: IndexPair, q: IndexPair, h: usize) -> bool {
    let (rp, rq) = (p.d - p.i, q.d - q.i);
    rp < rq
        || (rp == 2 && rq == 2 && p.i < q.i)
        || (rp == rq && rp > 2 && h <= q.i && p.i < q.i)
        || (rp == rq && rp > 2 && p.i < h && q.i < h && p.i > q.i)
}

/// [`precedes_h`] as an [`Ordering`].
pub fn cmp_h(p: IndexPair, q: IndexPair, h: usize) -> Ordering {
    if p == q {
        Ordering::Equal
    } else if precedes_h(p, q, h) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Which total order an [`IndexSet`] is listed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Plain,
    Height(usize),
}

impl Order {
    pub fn cmp(&self, p: IndexPair, q: IndexPair) -> Ordering {
        match *self {
            Order::Plain => cmp_plain(p, q),
            Order::Height(h) => cmp_h(p, q, h),
        }
    }
}

/// `S_n` (no height) or `S_n^h`, listed in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    n: usize,
    h: Option<usize>,
    members: Vec<IndexPair>,
}

impl IndexSet {
    pub fn new(n: usize, h: Option<usize>) -> Result<Self> {
        if let Some(h) = h {
            if h >= n {
                return Err(Error::invalid(alloc::format!("height {h} must be below n = {n}")));
            }
        }
        let mut members: Vec<IndexPair> = (0..=n)
            .flat_map(|i| (i + 2..=n).map(move |d| IndexPair::new(i, d)))
            .filter(|p| match h {
                None => p.in_s(n),
                Some(h) => p.in_s_h(n, h),
            })
            .collect();
        let order = h.map_or(Order::Plain, Order::Height);
        members.sort_by(|&p, &q| order.cmp(p, q));
        Ok(IndexSet { n, h, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> Option<usize> {
        self.h
    }

    pub fn order(&self) -> Order {
        self.h.map_or(Order::Plain, Order::Height)
    }

    pub fn members(&self) -> &[IndexPair] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: IndexPair) -> bool {
        self.members.contains(&p)
    }

    /// Members strictly after `p` in the set's order.
    pub fn after(&self, p: IndexPair) -> Option<&[IndexPair]> {
        let pos = self.members.iter().position(|&q| q == p)?;
        Some(&self.members[pos + 1..])
    }
}

/// `S_n` in the plain order.
pub fn index_set(n: usize, h: Option<usize>) -> Result<IndexSet> {
    IndexSet::new(n, h)
}
