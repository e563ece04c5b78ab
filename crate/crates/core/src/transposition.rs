//! Transposition arrays: the factorisation
//! `π = ⟨t₁,1⟩·⟨t₂,2⟩⋯⟨tₙ,n⟩` with `1 ≤ tᵢ ≤ i`.
//!
//! Entries equal to their index are the fixed points of the array, and their
//! number is the number of cycles of `π`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{parse_integers, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranspositionArray {
    entries: Vec<usize>,
}

impl TranspositionArray {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (k, &t) in entries.iter().enumerate() {
            let index = k + 1;
            if t == 0 || t > index {
                return Err(Error::MalformedTranspositionArray { index, value: t });
            }
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(entries
            .iter()
            .enumerate()
            .all(|(k, &t)| 1 <= t && t <= k + 1));
        Self { entries }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n).collect(),
        }
    }

    /// Peels factors from `i = n` down to `1`: the current permutation sends
    /// `tᵢ = π⁻¹(i)` to `i`, and right-multiplying by `⟨tᵢ,i⟩` clears it.
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut word = p.as_slice().to_vec();
        let mut pos = p.inverse().into_vec();
        let mut entries = vec![0; n];
        for i in (1..=n).rev() {
            let j = pos[i - 1];
            entries[i - 1] = j;
            if j != i {
                // current ← current · ⟨j,i⟩ swaps one-line positions j and i
                let vi = word[i - 1];
                word.swap(j - 1, i - 1);
                pos[vi - 1] = j;
                pos[i - 1] = i;
            }
        }
        Self { entries }
    }

    /// Evaluates the product left to right.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.len();
        let mut word: Vec<usize> = (1..=n).collect();
        for (k, &t) in self.entries.iter().enumerate() {
            word.swap(t - 1, k);
        }
        Permutation::from_values_unchecked(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.entries
    }

    /// `tᵢ` for a 1-based index.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) == i).collect()
    }

    pub fn fix(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .filter(|&(k, &t)| t == k + 1)
            .count()
    }

    /// First index violating the star condition, if any.
    pub fn star_violation(&self) -> Option<usize> {
        let n = self.len();
        // later[v]: whether some entry after the current index equals v
        let mut later = vec![false; n + 1];
        for i in (1..=n).rev() {
            let t = self.at(i);
            if t == i && !later[i] {
                return Some(i);
            }
            later[t] = true;
        }
        None
    }

    /// Membership in `T_n^•`: `tᵢ = i` forces some `j > i` with `t_j = i`.
    /// Exactly the arrays of derangements.
    pub fn is_star(&self) -> bool {
        self.star_violation().is_none()
    }

    /// Every array of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        let mut next = Some(vec![1usize; n]);
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            let mut k = n;
            while k > 0 {
                if succ[k - 1] < k {
                    succ[k - 1] += 1;
                    next = Some(succ);
                    break;
                }
                succ[k - 1] = 1;
                k -= 1;
            }
            Some(Self { entries: current })
        })
    }
}

impl fmt::Display for TranspositionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TranspositionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TranspositionArray[{self}]")
    }
}

impl FromStr for TranspositionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_integers(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(s: &str) -> TranspositionArray {
        s.parse().unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(
            Permutation::identity(5).transposition_array(),
            TranspositionArray::identity(5)
        );
        assert_eq!(p("2 1").transposition_array(), t("1 1"));
        assert_eq!(p("2 3 1").transposition_array(), t("1 1 2"));
    }

    #[test]
    fn backward_examples() {
        assert_eq!(t("1 1 2").to_permutation(), p("2 3 1"));
        assert_eq!(t("1 1 1").to_permutation(), p("3 1 2"));
        assert_eq!(t("1 2 3 4").to_permutation(), Permutation::identity(4));
        assert_eq!(
            TranspositionArray::identity(0).to_permutation(),
            Permutation::identity(0)
        );
    }

    #[test]
    fn product_matches_explicit_transpositions() {
        // ⟨1,2⟩·⟨1,3⟩ under (σ·π)(i) = σ(π(i))
        let a = p("2 1 3");
        let b = p("3 2 1");
        assert_eq!(a.compose(&b), t("1 1 1").to_permutation());
    }

    #[test]
    fn malformed_arrays() {
        assert_eq!(
            "1 3".parse::<TranspositionArray>(),
            Err(Error::MalformedTranspositionArray { index: 2, value: 3 })
        );
        assert!(TranspositionArray::new(vec![0]).is_err());
    }

    #[test]
    fn star_predicate() {
        assert!(t("1 1").is_star());
        assert!(!t("1 2").is_star());
        assert_eq!(t("1 2").star_violation(), Some(2));
        assert_eq!(t("1 1 3").star_violation(), Some(3));
        assert!(t("1 1 2 4 4 2 1 1 9 1 9 10").is_star());
        assert!(TranspositionArray::identity(0).is_star());
    }

    #[test]
    fn all_arrays_enumerates_product_set() {
        let all: Vec<_> = TranspositionArray::all(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], t("1 1 1"));
        assert_eq!(all[5], t("1 2 3"));
        assert_eq!(TranspositionArray::all(0).count(), 1);
    }
}
