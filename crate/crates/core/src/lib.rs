//! Permutation statistics, mesh patterns and the bijections relating pure
//! excedances, pure descents and cycles, with an exhaustive checker.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod patterns;
pub mod perm;
pub mod transposition;
pub mod verify;

pub use error::{Error, Result};
pub use patterns::{pex, pex_positions, statistic, MeshPattern, StatisticName};
pub use perm::{CycleDecomposition, Permutation, Symmetry};
pub use transposition::TranspositionArray;
pub use verify::{run_check, run_check_with, CheckId, Status, VerificationReport};

/// Exact counts.
pub type Distribution = enumeration::DistributionTable<num_bigint::BigUint>;
/// Exact joint counts.
pub type Joint = enumeration::JointTable<num_bigint::BigUint>;
/// Exact counting triangle.
pub type BigTriangle = enumeration::Triangle<num_bigint::BigUint>;
/// EGF coefficients over the rationals.
pub type RationalSeries = enumeration::SeriesTable<num_rational::BigRational>;
