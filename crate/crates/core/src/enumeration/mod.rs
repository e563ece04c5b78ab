//! Exhaustive enumeration, exact tables, recurrences and series.

mod count;
mod iter;
mod oeis;
mod recurrences;
mod series;
mod tables;

pub use count::{factorial, Count};
pub use iter::{iter_derangements, iter_permutations, Permutations};
pub use oeis::{oeis_terms, OeisSequence};
pub use recurrences::{des2_recurrence, harmonic_popularity, stirling_table, Triangle};
pub use series::{egf_a2_coefficients, egf_a2_series, BivariateSeries, Field, SeriesTable};
pub use tables::{
    distribution, expected_total, joint_distribution, popularity, DistributionTable, EnumConfig,
    JointTable, HARD_LIMIT,
};
