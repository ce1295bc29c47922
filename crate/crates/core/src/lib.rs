//! Spectral analysis of partially ranked data on the rook monoid `R_n`.
//!
//! The crate is organised bottom-up:
//!
//! * [`rook`]: partial rankings and the arithmetic of `R_n`.
//! * [`semigroup`]: finite inverse semigroups given by a multiplication
//!   table, their D-classes, maximal subgroups and the groupoid basis.
//! * [`symmetric`]: partitions, characters and isotypic projection in the
//!   group algebra of `S_k`, plus the full/partial ranking analysis on `S_n`.
//! * [`algebra`]: the algebra of `R_n` in the semigroup and groupoid bases.
//! * [`spectral`]: interpretable functions and the two analysis pipelines.
//! * [`io`]: ballot files, fixtures, run configuration and report rendering.
//!
//! All arithmetic is exact over the rationals ([`Rational`]).

pub mod algebra;
mod error;
pub mod io;
pub mod rook;
pub mod semigroup;
pub mod spectral;
pub mod symmetric;

pub use error::{Error, Result};

/// Exact rational scalar used for every coefficient and statistic.
pub type Rational = num_rational::Ratio<i64>;

pub use algebra::{AlgebraElement, Basis};
pub use rook::{PartialRanking, Permutation, Subset};
pub use spectral::{Dataset, InterpretableFunction, SpectralReport};
pub use symmetric::{GroupAlgebraElement, IntegerPartition};
