//! Exact enumeration of crossings and nestings in colored set partitions.
//!
//! The crate is organised around five layers:
//!
//! * [`partition`]: set partitions, their arcs and colorings, and brute-force
//!   crossing/nesting statistics.
//! * [`tableaux`]: integer and r-partite partitions, the RSK-based map to
//!   vacillating tableaux, and the rim-hook isomorphism.
//! * [`variants`]: matchings, enhanced partitions, colored permutations and
//!   tangled diagrams, with their encodings as colored matchings.
//! * [`counting`]: walk counting on the step multigraph, in `N^r`, and in the
//!   quarter plane.
//! * [`series`]: rational generating functions, constant terms, polynomials
//!   in the number of colors, and P-recurrences.
//!
//! [`checks`] bundles the end-to-end verifications used by the CLI.

pub mod bound;
pub mod checks;
pub mod counting;
pub mod error;
pub mod partition;
pub mod series;
pub mod tableaux;
pub mod variants;

pub use bound::Bound;
pub use error::{Error, Result};

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigUint;
