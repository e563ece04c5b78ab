//! Lexicographic enumeration of permutations extending a fixed prefix.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct Permutations {
    current: Permutation,
    fixed: usize,
    done: bool,
}

/// All permutations of `1..=n` beginning with `prefix`, in lexicographic
/// order. With an empty prefix there are exactly `n!` of them (one for
/// `n = 0`).
pub fn iter_permutations(n: usize, prefix: &[usize]) -> Result<Permutations> {
    if prefix.len() > n {
        return Err(Error::InvalidPrefix(format!("prefix longer than {n}")));
    }
    let mut used = vec![false; n + 1];
    for &v in prefix {
        if v == 0 || v > n {
            return Err(Error::InvalidPrefix(format!("value {v} outside 1..={n}")));
        }
        if used[v] {
            return Err(Error::InvalidPrefix(format!("value {v} repeated")));
        }
        used[v] = true;
    }
    let mut word = prefix.to_vec();
    word.extend((1..=n).filter(|&v| !used[v]));
    Ok(Permutations {
        current: Permutation::from_values_unchecked(word),
        fixed: prefix.len(),
        done: false,
    })
}

pub fn iter_derangements(n: usize) -> impl Iterator<Item = Permutation> {
    iter_permutations(n, &[])
        .expect("empty prefix")
        .filter(Permutation::is_derangement)
}

impl Permutations {
    /// Steps the free suffix to its lexicographic successor.
    fn advance(&mut self) {
        let w = &mut self.current.values_mut()[self.fixed..];
        let len = w.len();
        if len < 2 {
            self.done = true;
            return;
        }
        let mut i = len - 1;
        while i > 0 && w[i - 1] > w[i] {
            i -= 1;
        }
        if i == 0 {
            self.done = true;
            return;
        }
        let mut j = len - 1;
        while w[j] < w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
    }

    /// Calls `f` on every remaining permutation without allocating one per step.
    pub fn visit(mut self, mut f: impl FnMut(&Permutation)) {
        while !self.done {
            f(&self.current);
            self.advance();
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(it: Permutations) -> Vec<String> {
        it.map(|p| p.as_slice().iter().map(usize::to_string).collect())
            .collect()
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(
            words(iter_permutations(3, &[]).unwrap()),
            vec!["123", "132", "213", "231", "312", "321"]
        );
        assert_eq!(
            words(iter_permutations(3, &[2]).unwrap()),
            vec!["213", "231"]
        );
        assert_eq!(
            words(iter_permutations(3, &[3, 1, 2]).unwrap()),
            vec!["312"]
        );
    }

    #[test]
    fn empty_permutation() {
        let all: Vec<_> = iter_permutations(0, &[]).unwrap().collect();
        assert_eq!(all, vec![Permutation::identity(0)]);
    }

    #[test]
    fn counts_are_factorials() {
        let mut f = 1;
        for n in 1..=7 {
            f *= n;
            assert_eq!(iter_permutations(n, &[]).unwrap().count(), f);
        }
        assert_eq!(iter_derangements(5).count(), 44);
    }

    #[test]
    fn visit_matches_iterator() {
        let mut seen = Vec::new();
        iter_permutations(4, &[3])
            .unwrap()
            .visit(|p| seen.push(p.clone()));
        assert_eq!(
            seen,
            iter_permutations(4, &[3]).unwrap().collect::<Vec<_>>()
        );
    }

    #[test]
    fn invalid_prefixes() {
        assert!(matches!(
            iter_permutations(3, &[4]),
            Err(Error::InvalidPrefix(_))
        ));
        assert!(matches!(
            iter_permutations(3, &[1, 1]),
            Err(Error::InvalidPrefix(_))
        ));
        assert!(matches!(
            iter_permutations(1, &[1, 2]),
            Err(Error::InvalidPrefix(_))
        ));
        assert!(iter_permutations(3, &[0]).is_err());
    }
}
