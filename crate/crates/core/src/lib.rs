//! Exact combinatorics of boson normal ordering.
//!
//! Everything is computed over arbitrary-precision rationals: truncated
//! exponential generating functions, Stirling/Bell tables, normal ordering of
//! creation/annihilation words, the diagram expansion of the product formula,
//! and the graded Hopf algebras BELL and DIAG built on connected diagrams.

pub mod boson;
pub mod combinatorics;
pub mod diagrams;
pub mod error;
pub mod hopf;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
pub use rational::Rational;
pub use series::{apply_diff_operator, BivariatePoly, EGFSeries};
