//! Exact Poincaré series for spaces of commuting tuples in the classical
//! compact Lie groups, computed as Weyl-group class sums of graded traces,
//! together with the character theory needed to decompose the torus homology
//! into irreducibles and to scan for homological and representation stability.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: exact rationals, truncated power series and polynomials in `q`.
//! - [`partitions`]: partitions, bipartitions, centralizer orders, class sizes.
//! - [`weyl`]: Weyl-group descriptors, conjugacy classes and graded determinants.
//! - [`molien`]: Poincaré series of every supported space and stability scans.
//! - [`repstab`]: characters of `S_n` and `B_n`, multiplicities, branching,
//!   invariant dimensions and symmetric products.
//! - [`oracle`]: element-by-element ground truth at small rank.
//! - [`exec`]: sequential or rayon-backed evaluation of independent terms.

pub mod arith;
pub mod error;
pub mod exec;
pub mod molien;
pub mod oracle;
pub mod partitions;
pub mod repstab;
pub mod weyl;

pub use arith::{ExactPolynomial, ExactRational, TruncatedSeries};
pub use error::{Error, Result};
pub use exec::Execution;
pub use molien::{SpaceKind, SpaceRecipe, StabilityReport};
pub use partitions::{Bipartition, Partition};
pub use weyl::{DetVariant, FamilyAlias, WeightedClass, WeylFamily, WeylFamilyDescriptor};
