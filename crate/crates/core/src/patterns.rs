//! Mesh patterns and the statistic roster.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A classical pattern together with shaded unit squares.
///
/// The square `(a, b)` lies between the `a`-th and `(a+1)`-th pattern points
/// horizontally and between the `b`-th and `(b+1)`-th smallest pattern values
/// vertically, with sentinels at `0` and `k+1` on both axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshPattern {
    base: Permutation,
    shaded: BTreeSet<(usize, usize)>,
}

impl MeshPattern {
    pub fn new(
        base: Permutation,
        shaded: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let k = base.len();
        let shaded: BTreeSet<_> = shaded.into_iter().collect();
        if let Some(&(a, b)) = shaded.iter().find(|&&(a, b)| a > k || b > k) {
            return Err(Error::ShadingOutOfRange(a, b));
        }
        Ok(Self { base, shaded })
    }

    fn descent_with(extra: (usize, usize)) -> Self {
        let base = Permutation::from_values_unchecked(vec![2, 1]);
        let shaded = [(1, 0), (1, 1), (1, 2), extra];
        Self {
            base,
            shaded: shaded.into_iter().collect(),
        }
    }

    /// `p_i`: an adjacent descent with the square at height `i` left of it shaded.
    ///
    /// Panics unless `i <= 2`.
    pub fn left(i: usize) -> Self {
        assert!(i <= 2, "p_{i} is not defined");
        Self::descent_with((0, i))
    }

    /// `p′_i`: an adjacent descent with the square at height `i` right of it shaded.
    ///
    /// Panics unless `i <= 2`.
    pub fn right(i: usize) -> Self {
        assert!(i <= 2, "p'_{i} is not defined");
        Self::descent_with((2, i))
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn shaded(&self) -> &BTreeSet<(usize, usize)> {
        &self.shaded
    }

    /// Number of occurrences in `p`, by brute force over all index tuples.
    pub fn count(&self, p: &Permutation) -> usize {
        let k = self.base.len();
        let n = p.len();
        if k > n {
            return 0;
        }
        let mut idx: Vec<usize> = (1..=k).collect();
        let mut total = 0;
        loop {
            if self.is_occurrence(p, &idx) {
                total += 1;
            }
            // next k-subset of 1..=n in lexicographic order
            let mut j = k;
            while j > 0 && idx[j - 1] == n - k + j {
                j -= 1;
            }
            if j == 0 {
                return total;
            }
            idx[j - 1] += 1;
            for l in j..k {
                idx[l] = idx[l - 1] + 1;
            }
        }
    }

    fn is_occurrence(&self, p: &Permutation, idx: &[usize]) -> bool {
        let k = idx.len();
        let n = p.len();
        let vals: Vec<usize> = idx.iter().map(|&i| p.at(i)).collect();
        for a in 0..k {
            for b in 0..k {
                if (vals[a] < vals[b]) != (self.base.at(a + 1) < self.base.at(b + 1)) {
                    return false;
                }
            }
        }
        if self.shaded.is_empty() {
            return true;
        }
        let mut xs = Vec::with_capacity(k + 2);
        xs.push(0);
        xs.extend_from_slice(idx);
        xs.push(n + 1);
        let mut ys = Vec::with_capacity(k + 2);
        ys.push(0);
        let mut sorted = vals;
        sorted.sort_unstable();
        ys.extend(sorted);
        ys.push(n + 1);
        self.shaded.iter().all(|&(a, b)| {
            ((xs[a] + 1)..xs[a + 1]).all(|j| {
                let v = p.at(j);
                v <= ys[b] || v >= ys[b + 1]
            })
        })
    }
}

/// Positions `i` with `π_i > i` such that no `j < i` has `i ≤ π_j < π_i`.
pub fn pex_positions(p: &Permutation) -> Vec<usize> {
    let w = p.as_slice();
    (1..=w.len())
        .filter(|&i| {
            let v = w[i - 1];
            v > i && !w[..i - 1].iter().any(|&u| i <= u && u < v)
        })
        .collect()
}

/// Number of pure excedances.
pub fn pex(p: &Permutation) -> usize {
    pex_positions(p).len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatisticName {
    Des,
    Exc,
    Fix,
    Cyc,
    Pcyc,
    Lrmax,
    Des0,
    Des1,
    Des2,
    Pdes,
    Pex,
}

impl StatisticName {
    pub const ALL: [StatisticName; 11] = [
        Self::Des,
        Self::Exc,
        Self::Fix,
        Self::Cyc,
        Self::Pcyc,
        Self::Lrmax,
        Self::Des0,
        Self::Des1,
        Self::Des2,
        Self::Pdes,
        Self::Pex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Des => "des",
            Self::Exc => "exc",
            Self::Fix => "fix",
            Self::Cyc => "cyc",
            Self::Pcyc => "pcyc",
            Self::Lrmax => "lrmax",
            Self::Des0 => "des0",
            Self::Des1 => "des1",
            Self::Des2 => "des2",
            Self::Pdes => "pdes",
            Self::Pex => "pex",
        }
    }

    pub fn eval(self, p: &Permutation) -> usize {
        statistic(self, p)
    }
}

impl fmt::Display for StatisticName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatisticName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_owned()))
    }
}

/// Evaluates a statistic. The `des_i` family is computed by direct scans that
/// agree with [`MeshPattern::count`] on `p_i`.
pub fn statistic(name: StatisticName, p: &Permutation) -> usize {
    use StatisticName::*;
    let w = p.as_slice();
    match name {
        Des => w.windows(2).filter(|x| x[0] > x[1]).count(),
        Exc => w.iter().enumerate().filter(|&(i, &v)| v > i + 1).count(),
        Fix => w.iter().enumerate().filter(|&(i, &v)| v == i + 1).count(),
        Cyc => p.cycle_decomposition().cyc(),
        Pcyc => p.cycle_decomposition().pcyc(),
        Lrmax => {
            let mut max = 0;
            w.iter()
                .filter(|&&v| {
                    let is_max = v > max;
                    max = max.max(v);
                    is_max
                })
                .count()
        }
        Des0 => {
            // descent whose bottom is below every earlier value
            let mut min = usize::MAX;
            let mut count = 0;
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] && w[i + 1] < min {
                    count += 1;
                }
                min = min.min(w[i]);
            }
            count
        }
        Des1 | Pdes => (0..w.len().saturating_sub(1))
            .filter(|&i| {
                let (top, bottom) = (w[i], w[i + 1]);
                top > bottom && !w[..i].iter().any(|&u| bottom < u && u < top)
            })
            .count(),
        Des2 => {
            // descent whose top is a left-to-right maximum
            let mut max = 0;
            let mut count = 0;
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] && w[i] > max {
                    count += 1;
                }
                max = max.max(w[i]);
            }
            count
        }
        Pex => pex(p),
    }
}
