use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul};

use num_traits::{CheckedSub, FromPrimitive, One, Zero};

/// Exact nonnegative integer type used for counting: `u64`, `u128` or
/// `BigUint`.
pub trait Count:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + CheckedSub
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("count type too narrow")
    }
}

impl<T> Count for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + Add<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + CheckedSub
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

pub fn factorial<C: Count>(n: usize) -> C {
    (1..=n).fold(C::one(), |acc, k| acc * C::of(k))
}
