//! Truncated bivariate exponential generating functions.

use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::recurrences::Triangle;

/// Scalar for series arithmetic: `BigRational` for exact work, `f64` for a
/// quick floating check.
pub trait Field:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("scalar cannot represent integer")
    }
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + std::fmt::Debug
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Polynomial in `y`, lowest degree first.
type Poly<F> = Vec<F>;

fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_add<F: Field>(a: &mut Poly<F>, b: &[F]) {
    if b.len() > a.len() {
        a.resize(b.len(), F::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() + y.clone();
    }
}

fn poly_scale<F: Field>(a: &[F], c: &F) -> Poly<F> {
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// A bivariate series `Σ_n Σ_k c(n,k) xⁿ yᵏ` truncated after `xⁿ`, one
/// polynomial in `y` per power of `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateSeries<F> {
    coeffs: Vec<Poly<F>>,
}

impl<F: Field> BivariateSeries<F> {
    /// Builds the series from the `y`-polynomial of each `xⁿ`, `n = 0..=n_max`.
    pub fn from_fn(n_max: usize, mut f: impl FnMut(usize) -> Poly<F>) -> Self {
        Self {
            coeffs: (0..=n_max).map(&mut f).collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, n: usize, k: usize) -> F {
        self.coeffs
            .get(n)
            .and_then(|p| p.get(k))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Cauchy product in `x`, truncated to the shorter of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let n_max = self.n_max().min(other.n_max());
        Self::from_fn(n_max, |n| {
            let mut acc = Vec::new();
            for m in 0..=n {
                poly_add(&mut acc, &poly_mul(&self.coeffs[m], &other.coeffs[n - m]));
            }
            acc
        })
    }

    /// Rows of `n!·[xⁿ yᵏ]`.
    pub fn to_table(&self) -> SeriesTable<F> {
        let mut fact = F::one();
        let rows = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| {
                if n > 0 {
                    fact = fact.clone() * F::of(n);
                }
                let mut row = poly_scale(p, &fact);
                while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
                    row.pop();
                }
                row
            })
            .collect();
        SeriesTable { rows }
    }
}

/// Entry `(n, k)` is `n!·[xⁿ yᵏ]` of a bivariate EGF.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTable<F> {
    rows: Vec<Vec<F>>,
}

impl<F: Field> SeriesTable<F> {
    pub fn get(&self, n: usize, k: usize) -> F {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn row(&self, n: usize) -> &[F] {
        &self.rows[n]
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }
}

impl SeriesTable<BigRational> {
    /// Panics if some entry is not a nonnegative integer.
    pub fn to_integers(&self) -> Triangle<BigUint> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, q)| {
                        assert!(
                            q.is_integer(),
                            "EGF entry ({n},{k}) = {q} is not an integer"
                        );
                        assert!(!q.is_negative(), "EGF entry ({n},{k}) = {q} is negative");
                        q.to_integer().to_biguint().expect("nonnegative")
                    })
                    .collect()
            })
            .collect();
        Triangle::from_rows(rows)
    }
}

impl SeriesTable<f64> {
    /// Rounds every entry, panicking if one is further than `tol` from an integer.
    pub fn to_rounded(&self, tol: f64) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut out: Vec<u64> = row
                    .iter()
                    .map(|&x| {
                        let r = x.round();
                        assert!(
                            (x - r).abs() <= tol * r.abs().max(1.0),
                            "{x} is not near an integer"
                        );
                        r.to_u64().expect("nonnegative")
                    })
                    .collect();
                while out.len() > 1 && out.last() == Some(&0) {
                    out.pop();
                }
                out
            })
            .collect()
    }
}

/// `e^{x(1−y)} · (1−x)^{−y}` up to `x^{n_max}`.
///
/// The first factor contributes `(1−y)ᵐ/m!` at `xᵐ`, the second the rising
/// factorial `y(y+1)⋯(y+m−1)/m!`.
pub fn egf_a2_series<F: Field>(n_max: usize) -> SeriesTable<F> {
    let one_minus_y = vec![F::one(), F::zero() - F::one()];
    let mut power = vec![F::one()];
    let mut rising = vec![F::one()];
    let mut fact = F::one();
    let mut exp_part = Vec::with_capacity(n_max + 1);
    let mut pow_part = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        if m > 0 {
            fact = fact.clone() * F::of(m);
            power = poly_mul(&power, &one_minus_y);
            rising = poly_mul(&rising, &[F::of(m - 1), F::one()]);
        }
        let inv = F::one() / fact.clone();
        exp_part.push(poly_scale(&power, &inv));
        pow_part.push(poly_scale(&rising, &inv));
    }
    let e = BivariateSeries { coeffs: exp_part };
    let p = BivariateSeries { coeffs: pow_part };
    e.mul(&p).to_table()
}

/// Exact `n!·[xⁿ yᵏ] A²(x, y)` as integers.
pub fn egf_a2_coefficients(n_max: usize) -> Triangle<BigUint> {
    egf_a2_series::<BigRational>(n_max).to_integers()
}
