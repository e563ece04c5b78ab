//! The map sending occurrences of `p₂` to pure cycles.
//!
//! A permutation factors uniquely as `B₀ t₁ A₁ B₁ t₂ A₂ B₂ … t_k A_k B_k`
//! where the `t_j` are the `p₂` tops (left-to-right maxima starting a
//! descent), `A_j` is the maximal run after `t_j` of values below it and `B_j`
//! is an increasing run of left-to-right maxima. `phi` turns each `t_j A_j`
//! into a cycle and every `B` entry into a fixed point.

use std::fmt;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Des2Block {
    pub top: usize,
    /// `A_j`: never empty.
    pub below: Vec<usize>,
    /// `B_j`: increasing, every entry above `top`.
    pub rising: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Des2Decomposition {
    pub prefix: Vec<usize>,
    pub blocks: Vec<Des2Block>,
}

impl Des2Decomposition {
    pub fn tops(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(|b| b.top)
    }

    /// Concatenates the blocks back into the one-line word.
    pub fn word(&self) -> Vec<usize> {
        let mut w = self.prefix.clone();
        for b in &self.blocks {
            w.push(b.top);
            w.extend_from_slice(&b.below);
            w.extend_from_slice(&b.rising);
        }
        w
    }
}

impl fmt::Display for Des2Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(xs: &[usize]) -> String {
            let items: Vec<String> = xs.iter().map(usize::to_string).collect();
            format!("({})", items.join(","))
        }
        write!(f, "B0={}", list(&self.prefix))?;
        for (j, b) in self.blocks.iter().enumerate() {
            let j = j + 1;
            write!(
                f,
                "; top{j}={} A{j}={} B{j}={}",
                b.top,
                list(&b.below),
                list(&b.rising)
            )?;
        }
        Ok(())
    }
}

pub fn des2_decompose(p: &Permutation) -> Des2Decomposition {
    let w = p.as_slice();
    let n = w.len();
    let mut dec = Des2Decomposition::default();
    let mut max = 0;
    let mut i = 0;
    while i < n {
        let v = w[i];
        // Outside the A runs every entry is a new left-to-right maximum.
        assert!(
            v > max,
            "des2 decomposition broke at position {} of {p}",
            i + 1
        );
        max = v;
        if i + 1 < n && w[i + 1] < v {
            let mut j = i + 1;
            while j < n && w[j] < v {
                j += 1;
            }
            dec.blocks.push(Des2Block {
                top: v,
                below: w[i + 1..j].to_vec(),
                rising: Vec::new(),
            });
            i = j;
        } else {
            match dec.blocks.last_mut() {
                Some(b) => b.rising.push(v),
                None => dec.prefix.push(v),
            }
            i += 1;
        }
    }
    dec
}

pub fn phi(p: &Permutation) -> Permutation {
    phi_of(&des2_decompose(p), p.len())
}

pub(crate) fn phi_of(dec: &Des2Decomposition, n: usize) -> Permutation {
    let mut values: Vec<usize> = (1..=n).collect();
    for b in &dec.blocks {
        let mut prev = b.top;
        for &x in &b.below {
            values[prev - 1] = x;
            prev = x;
        }
        values[prev - 1] = b.top;
    }
    Permutation::from_values_unchecked(values)
}

/// Pure cycles written maximum first in ascending order of maxima, with the
/// fixed points dropped into the gaps between consecutive maxima.
pub fn phi_inv(sigma: &Permutation) -> Permutation {
    let cd = sigma.cycle_decomposition();
    let pure: Vec<&[usize]> = cd.pure_cycles().collect();
    let fixed = sigma.fixed_points();
    let mut word = Vec::with_capacity(sigma.len());
    let mut f = fixed.iter().copied().peekable();
    for cycle in &pure {
        let top = cycle[0];
        while let Some(x) = f.next_if(|&x| x < top) {
            word.push(x);
        }
        word.extend_from_slice(cycle);
    }
    word.extend(f);
    Permutation::from_values_unchecked(word)
}
