//! Arbitrary-precision laboratory for Hankel determinants, AAK singular values,
//! and convergence-rate experiments on products of rational/meromorphic
//! approximation errors.
//!
//! The crate is organized around a small numeric substrate ([`numkernel`]) and a
//! stack of domain modules built on top of it:
//!
//! * [`series`] — analytic test functions with known pole structure, Taylor
//!   coefficient generation, circle sampling, and series rescaling;
//! * [`hankel`] — Hankel matrices of Taylor coefficients, their determinants,
//!   and ratio-of-determinant estimates for radii of meromorphy;
//! * [`aak`] — truncated weighted Hankel operators, their singular values
//!   (meromorphic approximation errors), and the determinant/product and
//!   bilinear-orthogonality checks;
//! * [`walsh`] — the experiment engine for superdiagonal products, scaled
//!   products, quotients, two-circle comparisons, and subsequence selection;
//! * [`faber`] — exterior conformal maps for non-disc sets, level curves, and
//!   Faber coefficient extraction reducing continuum experiments to the disc;
//! * [`catalog`] — named built-in function specs and maps used by the CLI and
//!   the test suites.

pub mod aak;
pub mod catalog;
pub mod dft;
pub mod error;
pub mod faber;
pub mod hankel;
pub mod numkernel;
pub mod rates;
pub mod series;
pub mod walsh;

pub use error::{Error, Result};
pub use numkernel::{Complex, DenseMatrix, PrecisionContext, Real};
