//! Exact verification of inequalities among term-normalized symmetric
//! functions.
//!
//! The crate evaluates monomial, power-sum and complete homogeneous symmetric
//! functions over exact rationals, decides the dominance order on partitions,
//! and rebuilds the certificate that `H_{n,(2^4)} >= H_{n,(3,1^5)}` for every
//! `n` even though `(2^4)` does not majorize `(3,1^5)`, together with the
//! extension of that pair to every degree `d >= 8`.

pub mod certificate;
pub mod cli;
pub mod error;
pub mod optimizer;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sampling;
pub mod symmetric;

pub use error::{Error, Result};
pub use partition::{counterexample_pair, enumerate_partitions, majorizes, Partition};
pub use poly::{RationalFunction, SparsePoly};
pub use rational::Rational;
pub use symmetric::{EvalPoint, FamilyTag};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
