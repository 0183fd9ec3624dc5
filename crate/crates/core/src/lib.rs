//! Exact classification of first L^p-cohomology for solvable Lie algebras.
//!
//! The crate decides, from rational structure constants, which of three
//! regimes a simply connected solvable group falls into (torsion everywhere,
//! negatively curved with a critical exponent, or vanishing cohomology),
//! computes the critical exponent as a certified rational interval, and
//! backs the verdict with two numerical labs: an exponential-rate /
//! quadrature check of the exponent threshold on diagonal models, and
//! graph-level isoperimetric experiments.

pub mod catalog;
pub mod classifier;
pub mod isoperimetry;
pub mod liealg;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod spectral;
pub mod threshold;

pub use liealg::{LieAlgebra, LieAlgError, ModularCharacter, Subspace, ValidationReport, Violation};
pub use matrix::{MatrixError, RatMatrix};
pub use poly::RatPolynomial;
pub use rat::{Rat, RatInterval};
