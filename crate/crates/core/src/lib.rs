//! Exact truncated q-series arithmetic and enumeration of partitions with
//! initial repetitions, together with a registry of Legendre-type theorems
//! checked three ways: by enumeration, by q-series algebra, and against the
//! predicted quadratic-exponent indicator.

pub mod builders;
pub mod classes;
pub mod closed_forms;
pub mod error;
pub mod partition;
pub mod series;
pub mod verify;

pub use builders::{QuadraticIndicator, SeriesId, SignRule, Slater9Variant};
pub use classes::{ClassDecomposition, ClassId, SignConvention, SignedCount};
pub use error::{BuildError, PartitionError, SeriesError};
pub use partition::Partition;
pub use series::{Mismatch, Sign, SignedMonomial, TruncatedSeries};
pub use verify::{verify, verify_all, Status, TheoremId, VerificationReport};
