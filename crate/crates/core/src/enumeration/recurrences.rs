//! Counting triangles produced by recurrences rather than enumeration.

use super::count::{factorial, Count};
use super::tables::DistributionTable;

/// Rows `0..=n_max` of a triangular array. Missing cells read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Count> Triangle<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize, k: usize) -> C {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Row `n`. Panics if `n > n_max`.
    pub fn row(&self, n: usize) -> &[C] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Row `n` read as a distribution, optionally shifting keys down by
    /// `shift` (cells below the shift are dropped).
    pub fn distribution(&self, n: usize, shift: usize) -> DistributionTable<C> {
        DistributionTable::from_counts(
            n,
            self.row(n)
                .iter()
                .enumerate()
                .skip(shift)
                .map(|(k, c)| (k - shift, c.clone())),
        )
    }
}

/// Unsigned Stirling numbers of the first kind `c(n, k)`, `0 <= k <= n <= n_max`.
pub fn stirling_table<C: Count>(n_max: usize) -> Triangle<C> {
    let mut rows: Vec<Vec<C>> = vec![vec![C::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(C::zero);
        let row = (0..=n)
            .map(|k| {
                let carried = if k == 0 { C::zero() } else { at(k - 1) };
                C::of(n - 1) * at(k) + carried
            })
            .collect();
        rows.push(row);
    }
    Triangle { rows }
}

/// Number of permutations of length `n` with `k` occurrences of `p₂`, from
/// `a(n,k) = n·a(n−1,k) + (n−1)·a(n−2,k−1) − (n−1)·a(n−2,k)`.
///
/// Row `n` has `⌊n/2⌋ + 1` cells.
pub fn des2_recurrence<C: Count>(n_max: usize) -> Triangle<C> {
    let mut rows: Vec<Vec<C>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n < 2 {
            rows.push(vec![C::one()]);
            continue;
        }
        let get = |m: usize, k: usize| rows[m].get(k).cloned().unwrap_or_else(C::zero);
        let mut row = vec![C::one()];
        for k in 1..=n / 2 {
            let plus = C::of(n) * get(n - 1, k) + C::of(n - 1) * get(n - 2, k - 1);
            let minus = C::of(n - 1) * get(n - 2, k);
            let value = plus
                .checked_sub(&minus)
                .unwrap_or_else(|| panic!("negative p2 count at n={n}, k={k}"));
            row.push(value);
        }
        rows.push(row);
    }
    Triangle { rows }
}

/// `Σ_{k=2}^{n} n!/k`, i.e. `n!(H_n − 1)`.
pub fn harmonic_popularity<C: Count>(n: usize) -> C {
    let f: C = factorial(n);
    (2..=n).fold(C::zero(), |acc, k| acc + f.clone() / C::of(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn stirling_examples() {
        let c: Triangle<u64> = stirling_table(8);
        assert_eq!(c.get(3, 2), 3);
        assert_eq!(c.get(4, 2), 11);
        for n in 0..=8 {
            assert_eq!(c.get(n, n), 1);
            assert_eq!(c.row(n).iter().sum::<u64>(), factorial::<u64>(n));
        }
        assert_eq!(c.get(5, 0), 0);
        assert_eq!(c.row(4), &[0, 6, 11, 6, 1]);
        assert_eq!(c.get(3, 9), 0);
    }

    #[test]
    fn des2_table_values() {
        let a: Triangle<u64> = des2_recurrence(8);
        assert_eq!(a.row(4), &[1, 20, 3]);
        assert_eq!(a.row(5), &[1, 84, 35]);
        assert_eq!(a.row(6), &[1, 409, 295, 15]);
        assert_eq!(a.row(7), &[1, 2365, 2359, 315]);
        assert_eq!(a.row(8), &[1, 16064, 19670, 4480, 105]);
        assert_eq!(a.get(5, 3), 0);
        assert_eq!(a.row(2), &[1, 1]);
        for n in 0..=8 {
            assert_eq!(a.row(n).iter().sum::<u64>(), factorial::<u64>(n));
        }
    }

    #[test]
    fn count_types_agree() {
        let small: Triangle<u64> = des2_recurrence(14);
        let big: Triangle<BigUint> = des2_recurrence(14);
        for n in 0..=14 {
            for k in 0..=n / 2 {
                assert_eq!(BigUint::from(small.get(n, k)), big.get(n, k));
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        let values: Vec<u64> = (1..=8).map(harmonic_popularity).collect();
        assert_eq!(values, vec![0, 1, 5, 26, 154, 1044, 8028, 69264]);
        assert_eq!(harmonic_popularity::<u64>(0), 0);
    }

    #[test]
    fn shifted_row_as_distribution() {
        let c: Triangle<u64> = stirling_table(4);
        let d = c.distribution(4, 1);
        assert_eq!(d.dense(), vec![6, 11, 6, 1]);
        assert_eq!(d.total(), 24);
    }
}
