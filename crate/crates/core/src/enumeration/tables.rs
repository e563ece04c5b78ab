//! Exact distribution tables built by exhaustive enumeration, optionally
//! split into prefix shards that run on separate threads.

use std::collections::BTreeMap;
use std::thread;

use num_bigint::BigUint;

use super::count::{factorial, Count};
use super::iter::{iter_permutations, Permutations};
use crate::error::{Error, Result};
use crate::patterns::{statistic, StatisticName};
use crate::perm::Permutation;

/// Largest length any enumeration will accept.
pub const HARD_LIMIT: usize = 12;

/// Counts indexed by statistic value. Zero counts are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable<C = BigUint> {
    n: usize,
    counts: BTreeMap<usize, C>,
}

impl<C: Count> DistributionTable<C> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_counts(n: usize, counts: impl IntoIterator<Item = (usize, C)>) -> Self {
        let mut table = Self::new(n);
        for (k, c) in counts {
            table.add(k, c);
        }
        table
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize) -> C {
        self.counts.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&mut self, k: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.counts.entry(k).or_insert_with(C::zero);
        *slot = slot.clone() + c;
    }

    /// Pointwise sum; panics on tables of different lengths.
    pub fn merge(&mut self, other: Self) {
        assert_eq!(self.n, other.n, "merging tables for different n");
        for (k, c) in other.counts {
            self.add(k, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &C)> {
        self.counts.iter().map(|(&k, c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> C {
        self.counts
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// `Σ k · count(k)`.
    pub fn popularity(&self) -> C {
        self.counts
            .iter()
            .fold(C::zero(), |acc, (&k, c)| acc + C::of(k) * c.clone())
    }

    /// Counts for `k = 0..=max_k` with zeros filled in.
    pub fn dense(&self) -> Vec<C> {
        let max = self.counts.keys().next_back().copied().unwrap_or(0);
        (0..=max).map(|k| self.get(k)).collect()
    }

    /// Smallest key where the two tables differ, with both counts.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, C, C)> {
        let keys: std::collections::BTreeSet<_> = self
            .counts
            .keys()
            .chain(other.counts.keys())
            .copied()
            .collect();
        keys.into_iter().find_map(|k| {
            let (x, y) = (self.get(k), other.get(k));
            (x != y).then_some((k, x, y))
        })
    }

    pub fn convert<D: Count>(&self) -> DistributionTable<D> {
        DistributionTable::from_counts(
            self.n,
            self.iter()
                .map(|(k, c)| (k, D::from_u128(to_u128(c)).expect("count overflow"))),
        )
    }
}

/// Counts indexed by a pair of statistic values. Zero counts are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointTable<C = BigUint> {
    n: usize,
    counts: BTreeMap<(usize, usize), C>,
}

impl<C: Count> JointTable<C> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> C {
        self.counts.get(&(a, b)).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&mut self, a: usize, b: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.counts.entry((a, b)).or_insert_with(C::zero);
        *slot = slot.clone() + c;
    }

    pub fn merge(&mut self, other: Self) {
        assert_eq!(self.n, other.n, "merging tables for different n");
        for ((a, b), c) in other.counts {
            self.add(a, b, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &C)> {
        self.counts.iter().map(|(&ab, c)| (ab, c))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> C {
        self.counts
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn first_marginal(&self) -> DistributionTable<C> {
        DistributionTable::from_counts(self.n, self.iter().map(|((a, _), c)| (a, c.clone())))
    }

    pub fn second_marginal(&self) -> DistributionTable<C> {
        DistributionTable::from_counts(self.n, self.iter().map(|((_, b), c)| (b, c.clone())))
    }

    /// First cell (in key order) where the two tables differ, with both counts.
    pub fn first_difference(&self, other: &Self) -> Option<((usize, usize), C, C)> {
        let keys: std::collections::BTreeSet<_> = self
            .counts
            .keys()
            .chain(other.counts.keys())
            .copied()
            .collect();
        keys.into_iter().find_map(|(a, b)| {
            let (x, y) = (self.get(a, b), other.get(a, b));
            (x != y).then_some(((a, b), x, y))
        })
    }
}

fn to_u128<C: Count>(c: &C) -> u128 {
    c.to_string().parse().expect("count exceeds u128")
}

/// Length cap and shard count for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    cap: usize,
    shards: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            cap: Self::DEFAULT_CAP,
            shards: 1,
        }
    }
}

impl EnumConfig {
    pub const DEFAULT_CAP: usize = 11;

    pub fn new(cap: usize, shards: usize) -> Result<Self> {
        if cap > HARD_LIMIT {
            return Err(Error::CapExceeded {
                len: cap,
                cap: HARD_LIMIT,
            });
        }
        if shards == 0 {
            return Err(Error::InvalidPrefix(
                "shard count must be at least 1".into(),
            ));
        }
        Ok(Self { cap, shards })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn shards(&self) -> usize {
        self.shards
    }

    pub fn with_shards(self, shards: usize) -> Result<Self> {
        Self::new(self.cap, shards)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded {
                len: n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn permutations(&self, n: usize, prefix: &[usize]) -> Result<Permutations> {
        self.check(n)?;
        iter_permutations(n, prefix)
    }

    /// Runs `visit` over `S_n`, split by first value into `shards` groups
    /// that run in parallel, then merges the per-shard accumulators in shard
    /// order.
    pub fn fold<T, I, V, M>(&self, n: usize, init: I, visit: V, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, &Permutation) + Sync,
        M: Fn(&mut T, T),
    {
        self.check(n)?;
        let shards = self.shards.min(n.max(1));
        let run_shard = |s: usize| {
            let mut acc = init();
            if n == 0 {
                iter_permutations(0, &[])
                    .expect("valid")
                    .visit(|p| visit(&mut acc, p));
                return acc;
            }
            for first in (1..=n).filter(|v| (v - 1) % shards == s) {
                iter_permutations(n, &[first])
                    .expect("valid")
                    .visit(|p| visit(&mut acc, p));
            }
            acc
        };
        let mut parts: Vec<T> = if shards == 1 {
            vec![run_shard(0)]
        } else {
            thread::scope(|scope| {
                let handles: Vec<_> = (0..shards)
                    .map(|s| scope.spawn(move || run_shard(s)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("shard panicked"))
                    .collect()
            })
        };
        let mut acc = parts.remove(0);
        for part in parts {
            merge(&mut acc, part);
        }
        Ok(acc)
    }

    pub fn distribution_by<C, F>(&self, n: usize, stat: F) -> Result<DistributionTable<C>>
    where
        C: Count,
        F: Fn(&Permutation) -> usize + Sync,
    {
        let counts = self.fold(
            n,
            || vec![0u64; n + 2],
            |acc, p| {
                let k = stat(p);
                if k >= acc.len() {
                    acc.resize(k + 1, 0);
                }
                acc[k] += 1;
            },
            merge_vecs,
        )?;
        Ok(DistributionTable::from_counts(
            n,
            counts
                .into_iter()
                .enumerate()
                .map(|(k, c)| (k, C::from_u64(c).expect("overflow"))),
        ))
    }

    pub fn joint_by<C, F>(&self, n: usize, stats: F) -> Result<JointTable<C>>
    where
        C: Count,
        F: Fn(&Permutation) -> (usize, usize) + Sync,
    {
        let counts = self.fold(
            n,
            BTreeMap::<(usize, usize), u64>::new,
            |acc, p| *acc.entry(stats(p)).or_insert(0) += 1,
            |acc, other| {
                for (ab, c) in other {
                    *acc.entry(ab).or_insert(0) += c;
                }
            },
        )?;
        let mut table = JointTable::new(n);
        for ((a, b), c) in counts {
            table.add(a, b, C::from_u64(c).expect("overflow"));
        }
        Ok(table)
    }

    pub fn distribution(&self, name: StatisticName, n: usize) -> Result<DistributionTable> {
        self.distribution_by(n, |p| statistic(name, p))
    }

    pub fn joint_distribution(
        &self,
        a: StatisticName,
        b: StatisticName,
        n: usize,
    ) -> Result<JointTable> {
        self.joint_by(n, |p| (statistic(a, p), statistic(b, p)))
    }

    pub fn popularity(&self, name: StatisticName, n: usize) -> Result<BigUint> {
        Ok(self.distribution(name, n)?.popularity())
    }
}

fn merge_vecs(acc: &mut Vec<u64>, other: Vec<u64>) {
    if other.len() > acc.len() {
        acc.resize(other.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

pub fn distribution(name: StatisticName, n: usize) -> Result<DistributionTable> {
    EnumConfig::default().distribution(name, n)
}

pub fn joint_distribution(a: StatisticName, b: StatisticName, n: usize) -> Result<JointTable> {
    EnumConfig::default().joint_distribution(a, b, n)
}

pub fn popularity(name: StatisticName, n: usize) -> Result<BigUint> {
    EnumConfig::default().popularity(name, n)
}

/// `n!` as the expected total of every table over `S_n`.
pub fn expected_total<C: Count>(n: usize) -> C {
    factorial(n)
}
