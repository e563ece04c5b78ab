//! Flattened terms of the OEIS entries these counts belong to, generated
//! locally for cross-checking.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::recurrences::{des2_recurrence, harmonic_popularity, stirling_table};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeisSequence {
    /// `n!(H_n − 1)` from `n = 1`.
    A001705,
    /// Stirling numbers of the first kind, rows `n = 0, 1, …`, `k = 0..=n`.
    A132393,
    /// The `p₂` triangle, rows `n = 1, 2, …`, `k = 0..=⌊n/2⌋`.
    A136394,
}

impl OeisSequence {
    pub const ALL: [OeisSequence; 3] = [Self::A001705, Self::A132393, Self::A136394];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::A001705 => "A001705",
            Self::A132393 => "A132393",
            Self::A136394 => "A136394",
        }
    }
}

impl fmt::Display for OeisSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OeisSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|q| q.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSequence(s.to_owned()))
    }
}

/// The first `count` terms in storage order.
pub fn oeis_terms(seq: OeisSequence, count: usize) -> Vec<BigUint> {
    match seq {
        OeisSequence::A001705 => (1..=count).map(harmonic_popularity).collect(),
        OeisSequence::A132393 => {
            // row n holds n+1 terms, so `count` rows always suffice
            let t = stirling_table::<BigUint>(count);
            t.rows().iter().flatten().take(count).cloned().collect()
        }
        OeisSequence::A136394 => {
            let t = des2_recurrence::<BigUint>(count);
            t.rows()
                .iter()
                .skip(1)
                .flatten()
                .take(count)
                .cloned()
                .collect()
        }
    }
}
