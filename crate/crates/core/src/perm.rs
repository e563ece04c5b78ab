//! Permutations in one-line notation.
//!
//! Positions and values are 1-based everywhere in the public API; the empty
//! permutation is a valid permutation of length zero. Products follow the
//! convention `(σ·π)(i) = σ(π(i))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transposition::TranspositionArray;

/// A permutation of `1..=n`, stored as its one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

/// The trivial symmetries of the square grid that act on permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
    ReverseComplement,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 || v > len {
                return Err(Error::ValueOutOfRange { value: v, len });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    /// Wraps a word already known to be a bijection of `1..=n`.
    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(
            Self::new(values.clone()).is_ok(),
            "not a permutation: {values:?}"
        );
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    /// Raw access for in-place enumeration; callers keep the word a bijection.
    pub(crate) fn values_mut(&mut self) -> &mut Vec<usize> {
        &mut self.values
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.values
    }

    /// `π(i)` for a 1-based position `i`.
    ///
    /// Panics if `i` is not in `1..=n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.values.iter().copied()
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_derangement(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    /// Sorted fixed points.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) == i).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { values: inv }
    }

    /// The product `self · other`, i.e. `i ↦ self(other(i))`.
    ///
    /// Panics if the lengths differ.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different lengths"
        );
        Self {
            values: other.values.iter().map(|&v| self.at(v)).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Self {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn reverse_complement(&self) -> Self {
        let n = self.len();
        Self {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn apply_symmetry(&self, sym: Symmetry) -> Self {
        match sym {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
            Symmetry::ReverseComplement => self.reverse_complement(),
        }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        CycleDecomposition::of(self)
    }

    pub fn transposition_array(&self) -> TranspositionArray {
        TranspositionArray::from_permutation(self)
    }

    /// Shifts every value `>= x` up by one and appends `x`.
    pub fn insert_last(&self, x: usize) -> Result<Self> {
        let max = self.len() + 1;
        if x == 0 || x > max {
            return Err(Error::InsertionOutOfRange { value: x, max });
        }
        let mut values: Vec<usize> = self
            .values
            .iter()
            .map(|&v| if v >= x { v + 1 } else { v })
            .collect();
        values.push(x);
        Ok(Self { values })
    }

    /// Deletes the fixed points and rescales what is left.
    ///
    /// Returns the derangement obtained this way together with the sorted
    /// set of deleted fixed points.
    pub fn strip_fixed_points(&self) -> (Self, Vec<usize>) {
        let fixed = self.fixed_points();
        if fixed.is_empty() {
            return (self.clone(), fixed);
        }
        // rank[v] = position of v among the non-fixed values
        let mut rank = vec![0; self.len() + 1];
        let mut next = 1;
        for (v, r) in rank.iter_mut().enumerate().skip(1) {
            if self.at(v) != v {
                *r = next;
                next += 1;
            }
        }
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v != i + 1)
            .map(|(_, &v)| rank[v])
            .collect();
        (Self { values }, fixed)
    }

    /// Inverse of [`strip_fixed_points`](Self::strip_fixed_points): embeds the
    /// derangement on the complement of `fixed` and makes every element of
    /// `fixed` a fixed point.
    pub fn insert_fixed_points(derangement: &Self, fixed: &[usize]) -> Result<Self> {
        let m = derangement.len();
        let n = m + fixed.len();
        if let Some(i) = (1..=m).find(|&i| derangement.at(i) == i) {
            return Err(Error::NotDerangement(i));
        }
        let mut is_fixed = vec![false; n + 1];
        for &i in fixed {
            if i == 0 || i > n {
                return Err(Error::InconsistentFixedPoints {
                    len: m,
                    detail: format!("position {i} outside 1..={n}"),
                });
            }
            if is_fixed[i] {
                return Err(Error::InconsistentFixedPoints {
                    len: m,
                    detail: format!("position {i} listed twice"),
                });
            }
            is_fixed[i] = true;
        }
        let free: Vec<usize> = (1..=n).filter(|&i| !is_fixed[i]).collect();
        let mut values: Vec<usize> = (1..=n).collect();
        for (k, &pos) in free.iter().enumerate() {
            values[pos - 1] = free[derangement.values[k] - 1];
        }
        Ok(Self { values })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Self::new(parse_integers(text)?)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reverse" => Ok(Self::Reverse),
            "complement" => Ok(Self::Complement),
            "inverse" => Ok(Self::Inverse),
            "reverse_complement" | "reverse-complement" => Ok(Self::ReverseComplement),
            _ => Err(Error::UnknownSymmetry(s.to_owned())),
        }
    }
}

/// Tokenises whitespace/comma separated positive integers.
///
/// A lone token of two or more digits is read digit by digit (`"231"` is
/// `2 3 1`), which is only meaningful for lengths up to nine.
pub(crate) fn parse_integers(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut tokens = Vec::new();
    let pieces: Vec<&str> = trimmed.split(',').collect();
    for piece in &pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::EmptyToken(text.to_owned()));
        }
        tokens.extend(piece.split_whitespace());
    }
    let parse = |tok: &str| -> Result<usize> {
        if !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidToken(tok.to_owned()));
        }
        tok.parse::<usize>()
            .map_err(|_| Error::InvalidToken(tok.to_owned()))
    };
    if tokens.len() == 1 && tokens[0].len() > 1 {
        let tok = tokens[0];
        if !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidToken(tok.to_owned()));
        }
        return Ok(tok.bytes().map(|b| (b - b'0') as usize).collect());
    }
    tokens.into_iter().map(parse).collect()
}

/// Disjoint cycles of a permutation, each led by its maximum, ordered by
/// ascending maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    len: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    fn of(p: &Permutation) -> Self {
        let n = p.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        // Leaders visited from the top down, so each orbit is first met at its maximum.
        for m in (1..=n).rev() {
            if seen[m] {
                continue;
            }
            let mut cycle = vec![m];
            seen[m] = true;
            let mut x = p.at(m);
            while x != m {
                seen[x] = true;
                cycle.push(x);
                x = p.at(x);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        Self { len: n, cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn cyc(&self) -> usize {
        self.cycles.len()
    }

    pub fn fix(&self) -> usize {
        self.cycles.iter().filter(|c| c.len() == 1).count()
    }

    /// Cycles of length at least two.
    pub fn pcyc(&self) -> usize {
        self.cycles.iter().filter(|c| c.len() >= 2).count()
    }

    pub fn pure_cycles(&self) -> impl Iterator<Item = &[usize]> {
        self.cycles
            .iter()
            .filter(|c| c.len() >= 2)
            .map(Vec::as_slice)
    }

    /// Rebuilds the permutation by applying every orbit.
    pub fn to_permutation(&self) -> Permutation {
        let mut values: Vec<usize> = (1..=self.len).collect();
        for cycle in &self.cycles {
            for (k, &x) in cycle.iter().enumerate() {
                values[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_values_unchecked(values)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("<")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(">")?;
        }
        Ok(())
    }
}
