//! Partitions, weighted graded polynomials, Newton-identity conversions,
//! and the multiplicative-sequence generator.

pub mod graded;
pub mod newton;
pub mod partition;
pub mod sequence;

pub use graded::{GradedPolynomial, Monomial, Substitution, VarKind};
pub use newton::{elementary_to_power_sums, power_sums_to_elementary};
pub use partition::{partitions_of, Partition};
pub use sequence::multiplicative_sequence;
