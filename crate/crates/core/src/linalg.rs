//! Exact rank computations.
//!
//! Dense ranks over `Q` use integer row reduction with content
//! normalisation: `r <- (a/g) r - (b/g) p`, then divide `r` by the gcd of its
//! entries. No fractions and no floating point. An `i128` pass is tried
//! first and abandoned on overflow in favour of [`BigInt`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over `Q`, or `None` if an intermediate value overflowed `i128`.
pub fn rank_i128(mut rows: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        // smallest nonzero pivot keeps growth down; unit pivots are common
        let pick = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs());
        let Some(p) = pick else { continue };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot = &top[rank];
        let a = pivot[col];
        for row in rest.iter_mut() {
            let b = row[col];
            if b == 0 {
                continue;
            }
            let g = gcd_i128(a, b);
            let (ma, mb) = (a / g, b / g);
            let mut content = 0i128;
            for j in col..ncols {
                let v = row[j].checked_mul(ma)?.checked_sub(pivot[j].checked_mul(mb)?)?;
                row[j] = v;
                if v != 0 {
                    content = gcd_i128(content, v);
                }
            }
            if content > 1 {
                row[col..].iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank over `Q` of an arbitrary integer matrix.
pub fn rank_bigint(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pick = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
        let Some(p) = pick else { continue };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            eliminate(row, pivot, col);
        }
        rank += 1;
    }
    rank
}

// row <- (a/g) row - (b/g) pivot, then strip content; a = pivot[col], b = row[col].
fn eliminate(row: &mut [BigInt], pivot: &[BigInt], col: usize) {
    let a = &pivot[col];
    let b = &row[col];
    let g = a.gcd(b);
    let (ma, mb) = (a / &g, b / &g);
    let mut content = BigInt::zero();
    for j in col..row.len() {
        row[j] = &row[j] * &ma - &pivot[j] * &mb;
        if !row[j].is_zero() {
            content = content.gcd(&row[j]);
        }
    }
    if content > BigInt::from(1) {
        row[col..].iter_mut().for_each(|v| *v /= &content);
    }
}

/// Rank over `Q` of a small integer matrix; `i128` first, then [`BigInt`].
pub fn rank_over_rationals(rows: &[Vec<i64>]) -> usize {
    let fast: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    rank_i128(fast).unwrap_or_else(|| {
        rank_bigint(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    })
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p`; entries are reduced mod `p`. `p` must be prime and `< 2^32`.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u32) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = row[col] * inv % p;
            for j in col..ncols {
                row[j] = (row[j] + p - f * pivot[j] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Incrementally maintained echelon basis of sparse integer vectors over `Q`.
///
/// Each stored row's pivot is its smallest key. Vectors are reduced against
/// rows in ascending pivot order, which only ever creates entries at larger keys.
#[derive(Debug, Clone)]
pub struct SparseBasis<K: Ord + Copy> {
    rows: BTreeMap<K, BTreeMap<K, BigInt>>,
    keys: alloc::collections::BTreeSet<K>,
}

impl<K: Ord + Copy> Default for SparseBasis<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Copy> SparseBasis<K> {
    pub fn new() -> Self {
        SparseBasis {
            rows: BTreeMap::new(),
            keys: alloc::collections::BTreeSet::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether the span is every vector supported on the keys seen so far.
    pub fn spans_all_seen_keys(&self) -> bool {
        self.rows.len() == self.keys.len()
    }

    /// Inserts `v`; returns `true` when the rank grew.
    pub fn insert<I>(&mut self, v: I) -> bool
    where
        I: IntoIterator<Item = (K, BigInt)>,
    {
        let mut v: BTreeMap<K, BigInt> = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        if v.is_empty() {
            return false;
        }
        // A vector inside a coordinate subspace the basis already fills is dependent.
        if self.spans_all_seen_keys() && v.keys().all(|k| self.keys.contains(k)) {
            return false;
        }
        for (pivot_key, row) in &self.rows {
            let Some(b) = v.get(pivot_key).cloned() else { continue };
            let a = &row[pivot_key];
            let g = a.gcd(&b);
            let (ma, mb) = (a / &g, &b / &g);
            for x in v.values_mut() {
                *x *= &ma;
            }
            for (k, r) in row {
                let e = v.entry(*k).or_insert_with(BigInt::zero);
                *e -= r * &mb;
            }
            v.retain(|_, x| !x.is_zero());
            if v.is_empty() {
                return false;
            }
        }
        let content = v.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if content > BigInt::from(1) {
            v.values_mut().for_each(|x| *x /= &content);
        }
        self.keys.extend(v.keys().copied());
        let pivot = *v.keys().next().unwrap();
        self.rows.insert(pivot, v);
        true
    }

    /// Folds another basis into this one.
    pub fn merge(&mut self, other: SparseBasis<K>) {
        for (_, row) in other.rows {
            self.insert(row);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    // Plain Gauss–Jordan over BigRational, the independent oracle.
    fn rank_rational_oracle(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, p);
            let piv = m[rank][col].clone();
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &piv;
                    for j in 0..ncols {
                        let t = &m[rank][j] * &f;
                        m[r][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_examples() {
        assert_eq!(rank_over_rationals(&[]), 0);
        assert_eq!(rank_over_rationals(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_over_rationals(&[vec![2, 0], vec![0, 2]]), 2);
        // rank 2 over Q but 1 over F_2
        assert_eq!(rank_mod_p(&[vec![2, 0], vec![0, 2]], 2), 0);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, -1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, -1]], 3), 2);
    }

    #[test]
    fn i128_overflow_falls_back() {
        let big = i64::MAX / 3;
        let rows = vec![vec![big, big - 1, 7], vec![big - 5, big, 11], vec![3, big, big - 2]];
        assert_eq!(rank_over_rationals(&rows), rank_rational_oracle(&rows));
    }

    #[test]
    fn sparse_basis_examples() {
        let mut b = SparseBasis::new();
        assert!(b.insert([(0, BigInt::from(1)), (2, BigInt::from(3))]));
        assert!(!b.insert([(0, BigInt::from(2)), (2, BigInt::from(6))]));
        assert!(b.insert([(2, BigInt::from(5))]));
        assert!(!b.insert([(0, BigInt::from(4))]));
        assert!(b.spans_all_seen_keys());
        assert_eq!(b.rank(), 2);
        assert!(!b.insert(Vec::<(i32, BigInt)>::new()));
    }

    proptest! {
        #[test]
        fn ranks_agree_with_rational_oracle(rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 5), 0..7)) {
            let want = rank_rational_oracle(&rows);
            prop_assert_eq!(rank_over_rationals(&rows), want);
            let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            prop_assert_eq!(rank_bigint(big), want);
            prop_assert!(rank_mod_p(&rows, 32749) <= want);
            let mut basis = SparseBasis::new();
            for r in &rows {
                basis.insert(r.iter().enumerate().map(|(k, &v)| (k, BigInt::from(v))));
            }
            prop_assert_eq!(basis.rank(), want);
        }

        #[test]
        fn merging_bases_is_order_independent(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..8), split in 0usize..8) {
            let split = split.min(rows.len());
            let to_vec = |r: &Vec<i64>| r.iter().enumerate().map(|(k, &v)| (k, BigInt::from(v))).collect::<Vec<_>>();
            let mut left = SparseBasis::new();
            let mut right = SparseBasis::new();
            rows[..split].iter().for_each(|r| { left.insert(to_vec(r)); });
            rows[split..].iter().for_each(|r| { right.insert(to_vec(r)); });
            let mut a = left.clone();
            a.merge(right.clone());
            right.merge(left);
            prop_assert_eq!(a.rank(), rank_rational_oracle(&rows));
            prop_assert_eq!(right.rank(), a.rank());
        }
    }
}
