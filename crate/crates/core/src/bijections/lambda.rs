//! The labelled free-square grid of a derangement and the map `λ` from
//! derangements to star transposition arrays, with `fix λ(π) = pex π`.
//!
//! Column `i` of the grid is skipped when `i` or `π_i` is a pure-excedance
//! position. Otherwise row `j` is free when
//!
//! * `j ≠ i`,
//! * no `k > i` has `π_k = j`,
//! * `j` is not a pure-excedance position with `j < i` and `π⁻¹(j) < i`,
//! * it is not the case that `j > i` sits at some `k < i` while every value
//!   of `[i, j−1]` sits at a position `> i`.
//!
//! Free rows are labelled `1, 2, …` bottom to top. For a column that is not
//! skipped, `λ_i` is the `ℓ`-th smallest element of `[1, i−1]` once the
//! pure excedances `k < i` with `π⁻¹(k) < i` are removed, where `ℓ` is the
//! label of `(i, π_i)`.

use std::collections::HashMap;
use std::fmt;

use crate::enumeration::iter_permutations;
use crate::error::{Error, Result};
use crate::patterns::pex_positions;
use crate::perm::Permutation;
use crate::transposition::TranspositionArray;

/// Default length cap for [`lambda_inv`].
pub const LAMBDA_INV_CAP: usize = 32;
/// Default length cap for [`LambdaTable`].
pub const LAMBDA_TABLE_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridColumn {
    pub excluded: bool,
    /// Free rows, ascending; the label of a row is its index here plus one.
    pub free_rows: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeSquareGrid {
    columns: Vec<GridColumn>,
}

impl FreeSquareGrid {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Column `i`, 1-based.
    pub fn column(&self, i: usize) -> &GridColumn {
        &self.columns[i - 1]
    }

    pub fn columns(&self) -> &[GridColumn] {
        &self.columns
    }

    /// Label of square `(i, j)`, if it is free.
    pub fn label(&self, i: usize, j: usize) -> Option<usize> {
        let col = self.column(i);
        if col.excluded {
            return None;
        }
        col.free_rows.binary_search(&j).ok().map(|k| k + 1)
    }
}

impl fmt::Display for FreeSquareGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, col) in self.columns.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "column {}:", k + 1)?;
            if col.excluded {
                write!(f, " excluded")?;
                continue;
            }
            for (l, row) in col.free_rows.iter().enumerate() {
                write!(f, " {row}[{}]", l + 1)?;
            }
        }
        Ok(())
    }
}

/// Derived data shared by the grid and `λ`.
struct Layout<'a> {
    word: &'a [usize],
    /// `pos[v]` = π⁻¹(v), 1-based, index 0 unused.
    pos: Vec<usize>,
    is_pex: Vec<bool>,
}

impl<'a> Layout<'a> {
    fn new(p: &'a Permutation) -> Result<Self> {
        if let Some(i) = (1..=p.len()).find(|&i| p.at(i) == i) {
            return Err(Error::NotDerangement(i));
        }
        let n = p.len();
        let mut pos = vec![0; n + 1];
        for (k, &v) in p.as_slice().iter().enumerate() {
            pos[v] = k + 1;
        }
        let mut is_pex = vec![false; n + 1];
        for i in pex_positions(p) {
            is_pex[i] = true;
        }
        Ok(Self {
            word: p.as_slice(),
            pos,
            is_pex,
        })
    }

    fn n(&self) -> usize {
        self.word.len()
    }

    fn value(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    fn column(&self, i: usize) -> GridColumn {
        let n = self.n();
        let v = self.value(i);
        if self.is_pex[i] || self.is_pex[v] {
            return GridColumn {
                excluded: true,
                free_rows: Vec::new(),
            };
        }
        // smallest value >= i not sitting strictly right of column i
        let first_left = (i..=n).find(|&u| self.pos[u] <= i).unwrap_or(n + 1);
        let free_rows = (1..=n)
            .filter(|&j| {
                let at = self.pos[j];
                j != i
                    && at <= i
                    && !(self.is_pex[j] && j < i && at < i)
                    && !(j > i && at < i && first_left == j)
            })
            .collect();
        GridColumn {
            excluded: false,
            free_rows,
        }
    }

    /// `[1, i−1]` minus the pure excedances `k < i` already closed by `π⁻¹(k) < i`.
    fn rank_values(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..i).filter(move |&k| !(self.is_pex[k] && self.pos[k] < i))
    }
}

pub fn free_square_grid(p: &Permutation) -> Result<FreeSquareGrid> {
    let layout = Layout::new(p)?;
    Ok(FreeSquareGrid {
        columns: (1..=p.len()).map(|i| layout.column(i)).collect(),
    })
}

pub fn lambda_map(p: &Permutation) -> Result<TranspositionArray> {
    lambda_with_grid(p).map(|(t, _)| t)
}

/// `λ(π)` together with the grid it was read from.
pub fn lambda_with_grid(p: &Permutation) -> Result<(TranspositionArray, FreeSquareGrid)> {
    let layout = Layout::new(p)?;
    let n = p.len();
    let mut entries = Vec::with_capacity(n);
    let mut columns = Vec::with_capacity(n);
    for i in 1..=n {
        let v = layout.value(i);
        assert!(
            !(layout.is_pex[i] && layout.is_pex[v]),
            "{i} and π_{i} = {v} are both pure excedances of {p}"
        );
        let column = layout.column(i);
        let t = if layout.is_pex[i] {
            i
        } else if layout.is_pex[v] {
            v
        } else {
            let label = column
                .free_rows
                .binary_search(&v)
                .unwrap_or_else(|_| panic!("square ({i}, {v}) of {p} is not free"))
                + 1;
            layout
                .rank_values(i)
                .nth(label - 1)
                .unwrap_or_else(|| panic!("label {label} of column {i} of {p} exceeds its range"))
        };
        assert!(1 <= t && t <= i, "λ_{i} = {t} out of range for {p}");
        entries.push(t);
        columns.push(column);
    }
    Ok((
        TranspositionArray::from_entries_unchecked(entries),
        FreeSquareGrid { columns },
    ))
}

fn check_star(t: &TranspositionArray) -> Result<()> {
    match t.star_violation() {
        Some(i) => Err(Error::NotStarArray(i)),
        None => Ok(()),
    }
}

/// The unique derangement with `λ(π) = t`, using the default cap.
pub fn lambda_inv(t: &TranspositionArray) -> Result<Permutation> {
    lambda_inv_capped(t, LAMBDA_INV_CAP)
}

/// Reconstructs `π` column by column from the right.
///
/// Once the values to the right of column `i` are known, everything `λ_i`
/// depends on is known too: a pure-excedance column is forced to the smallest
/// free value above `i`, and any other column has at most two candidates (the
/// pure excedance `λ_i` itself, or the one square whose rank matches `λ_i`).
/// The result is checked by running `λ` forwards.
pub fn lambda_inv_capped(t: &TranspositionArray, cap: usize) -> Result<Permutation> {
    let n = t.len();
    if n > cap {
        return Err(Error::CapExceeded { len: n, cap });
    }
    check_star(t)?;
    let is_pex: Vec<bool> = (0..=n).map(|i| i > 0 && t.at(i) == i).collect();
    let mut search = InverseSearch {
        t,
        is_pex,
        placed: vec![false; n + 1],
        word: vec![0; n],
    };
    if search.fill(n) {
        let p = Permutation::from_values_unchecked(search.word);
        debug_assert_eq!(lambda_map(&p).as_ref(), Ok(t));
        Ok(p)
    } else {
        Err(Error::NoPreimage(t.to_string()))
    }
}

struct InverseSearch<'a> {
    t: &'a TranspositionArray,
    is_pex: Vec<bool>,
    /// `placed[v]`: value `v` already sits right of the current column.
    placed: Vec<bool>,
    word: Vec<usize>,
}

impl InverseSearch<'_> {
    fn fill(&mut self, i: usize) -> bool {
        if i == 0 {
            let p = Permutation::from_values_unchecked(self.word.clone());
            return lambda_map(&p).as_ref() == Ok(self.t);
        }
        for c in self.candidates(i) {
            self.word[i - 1] = c;
            self.placed[c] = true;
            if self.fill(i - 1) {
                return true;
            }
            self.placed[c] = false;
        }
        false
    }

    fn candidates(&self, i: usize) -> Vec<usize> {
        let n = self.t.len();
        let ti = self.t.at(i);
        let unplaced = |v: usize| !self.placed[v];
        // Column i is a pure excedance iff [i, c) sits entirely right of i.
        let closes_pex = |c: usize| c > i && (i..c).all(|u| self.placed[u]);

        if self.is_pex[i] {
            return (i + 1..=n)
                .find(|&c| unplaced(c))
                .filter(|&c| closes_pex(c) && !self.is_pex[c])
                .into_iter()
                .collect();
        }
        let mut out = Vec::new();
        if self.is_pex[ti] && unplaced(ti) && ti != i && !closes_pex(ti) {
            out.push(ti);
        }
        for c in (1..=n).filter(|&c| c != i && unplaced(c) && !self.is_pex[c]) {
            if closes_pex(c) {
                continue;
            }
            if self.rank_entry(i, c) == Some(ti) {
                out.push(c);
                // labels are strictly increasing in the row, so at most one match
                break;
            }
        }
        out
    }

    /// The value `λ_i` would take if `π_i = c`, given the placed values.
    fn rank_entry(&self, i: usize, c: usize) -> Option<usize> {
        let n = self.t.len();
        // left of column i: neither placed nor c itself
        let left = |v: usize| !self.placed[v] && v != c;
        let first_left = (i..=n).find(|&u| !self.placed[u]).unwrap_or(n + 1);
        let label = (1..=c)
            .filter(|&j| {
                j != i
                    && !self.placed[j]
                    && !(self.is_pex[j] && j < i && left(j))
                    && !(j > i && left(j) && first_left == j)
            })
            .count();
        (1..i)
            .filter(|&k| !(self.is_pex[k] && left(k)))
            .nth(label.checked_sub(1)?)
    }
}

/// Inverse of `λ` by lookup, built by running `λ` over every derangement of
/// one length.
#[derive(Debug, Clone)]
pub struct LambdaTable {
    n: usize,
    inverse: HashMap<TranspositionArray, Permutation>,
}

impl LambdaTable {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_capped(n, LAMBDA_TABLE_CAP)
    }

    pub fn build_capped(n: usize, cap: usize) -> Result<Self> {
        if n > cap {
            return Err(Error::CapExceeded { len: n, cap });
        }
        let mut inverse = HashMap::new();
        for p in iter_permutations(n, &[])?.filter(Permutation::is_derangement) {
            let t = lambda_map(&p)?;
            let previous = inverse.insert(t, p);
            assert!(
                previous.is_none(),
                "λ is not injective on derangements of length {n}"
            );
        }
        Ok(Self { n, inverse })
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    pub fn invert(&self, t: &TranspositionArray) -> Result<Permutation> {
        if t.len() != self.n {
            return Err(Error::NoPreimage(t.to_string()));
        }
        check_star(t)?;
        self.inverse
            .get(t)
            .cloned()
            .ok_or_else(|| Error::NoPreimage(t.to_string()))
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

    const WORKED: &str = "6 8 12 5 4 7 3 2 11 1 9 10";

    #[test]
    fn worked_grid_columns() {
        let grid = free_square_grid(&p(WORKED)).unwrap();
        assert_eq!(grid.column(2).free_rows, vec![8]);
        assert_eq!(grid.column(3).free_rows, vec![8, 12]);
        assert_eq!(grid.column(6).free_rows, vec![5, 7, 8, 12]);
        assert_eq!(grid.column(7).free_rows, vec![3, 5, 6, 8, 12]);
        assert_eq!(grid.column(8).free_rows, vec![2, 3, 5, 6, 7, 12]);
        assert_eq!(grid.column(12).free_rows, vec![2, 3, 5, 6, 7, 8, 10, 11]);
        for i in [1, 4, 5, 9, 10, 11] {
            assert!(grid.column(i).excluded, "column {i}");
        }
        assert_eq!(grid.label(12, 10), Some(7));
        assert_eq!(grid.label(7, 4), None);
        assert_eq!(grid.label(1, 6), None);
    }

    #[test]
    fn small_grid() {
        let grid = free_square_grid(&p("3 1 2")).unwrap();
        assert!(grid.column(1).excluded);
        assert!(grid.column(2).excluded);
        assert_eq!(grid.column(3).free_rows, vec![2]);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            lambda_map(&p(WORKED)).unwrap(),
            t("1 1 2 4 4 2 1 1 9 1 9 10")
        );
        assert_eq!(lambda_map(&p("2 3 1")).unwrap(), t("1 1 1"));
        assert_eq!(lambda_map(&p("3 1 2")).unwrap(), t("1 1 2"));
        assert_eq!(lambda_map(&p("2 1")).unwrap(), t("1 1"));
        assert_eq!(lambda_map(&Permutation::identity(0)).unwrap(), t(""));
    }

    #[test]
    fn lambda_rejects_fixed_points() {
        assert_eq!(lambda_map(&p("1 3 2")), Err(Error::NotDerangement(1)));
        assert_eq!(free_square_grid(&p("2 1 3")), Err(Error::NotDerangement(3)));
    }

    #[test]
    fn lambda_inv_examples() {
        assert_eq!(lambda_inv(&t("1 1 1")).unwrap(), p("2 3 1"));
        assert_eq!(lambda_inv(&t("1 1 2")).unwrap(), p("3 1 2"));
        assert_eq!(
            lambda_inv(&t("1 1 2 4 4 2 1 1 9 1 9 10")).unwrap(),
            p(WORKED)
        );
    }

    #[test]
    fn lambda_inv_errors() {
        assert_eq!(lambda_inv(&t("1 2")), Err(Error::NotStarArray(2)));
        assert_eq!(
            lambda_inv_capped(&t("1 1 1"), 2),
            Err(Error::CapExceeded { len: 3, cap: 2 })
        );
        assert!(matches!(
            LambdaTable::build(10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn search_and_table_inverses_agree() {
        for n in 0..=7 {
            let table = LambdaTable::build(n).unwrap();
            let mut stars = 0;
            for arr in TranspositionArray::all(n).filter(TranspositionArray::is_star) {
                stars += 1;
                let a = table.invert(&arr).unwrap();
                let b = lambda_inv(&arr).unwrap();
                assert_eq!(a, b, "{arr}");
                assert_eq!(lambda_map(&a).unwrap(), arr);
            }
            assert_eq!(stars, table.len());
        }
    }
}
