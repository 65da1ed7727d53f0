//! Exact combinatorics of symbolic powers of star configurations.
//!
//! Everything is computed in the monomial model where each form `F_j` is a
//! variable `x_j`. Degrees are kept in F-degree units (number of forms in a
//! product) and multiplied by `δ` only when a graded answer is reported.

pub mod betti;
pub mod combinat;
pub mod diophantine;
pub mod error;
pub mod generators;
pub mod monomial;
pub mod normal_form;
pub mod oracle;
pub mod order;
pub mod params;
pub mod partition;

pub use betti::BettiTable;
pub use combinat::{binomial, enumerate_subsets};
pub use error::{Error, Result};
pub use monomial::{FMonomial, FormSubset};
pub use normal_form::NormalForm;
pub use oracle::MonomialIdeal;
pub use params::StarParams;
pub use partition::{enumerate_partitions, Partition};
