//! Foata's fundamental transformation.
//!
//! [`cycle_word`] writes the cycles maximum first, in ascending order of
//! maxima, and erases the parentheses; it carries drops (`π_i < i`) to
//! descents. [`foata`] is its conjugate by reverse-complement, read
//! backwards, and carries descents to excedances: `des π = exc foata(π)`.

use crate::perm::Permutation;

pub fn cycle_word(p: &Permutation) -> Permutation {
    let word = p.cycle_decomposition().cycles().concat();
    Permutation::from_values_unchecked(word)
}

/// Inverse of [`cycle_word`]: cut the word before every left-to-right
/// maximum and read each piece as a cycle.
pub fn cycle_word_inverse(word: &Permutation) -> Permutation {
    let w = word.as_slice();
    let mut values = vec![0; w.len()];
    let mut start = 0;
    while start < w.len() {
        let lead = w[start];
        let mut end = start + 1;
        while end < w.len() && w[end] < lead {
            end += 1;
        }
        let cycle = &w[start..end];
        for (k, &x) in cycle.iter().enumerate() {
            values[x - 1] = cycle[(k + 1) % cycle.len()];
        }
        start = end;
    }
    Permutation::from_values_unchecked(values)
}

pub fn foata(p: &Permutation) -> Permutation {
    cycle_word_inverse(&p.reverse_complement()).reverse_complement()
}

pub fn foata_inverse(p: &Permutation) -> Permutation {
    cycle_word(&p.reverse_complement()).reverse_complement()
}
