//! Coherent states of the trigonometric Pöschl-Teller well and their
//! revival dynamics.
//!
//! The crate is organized bottom-up: [`specfun`] evaluates log-gamma and
//! the orthogonal polynomials, [`eigensystem`] builds spectra and
//! normalized bound states, [`coherent`] produces expansion coefficients,
//! and [`dynamics`] evolves them (revivals, autocorrelation, carpets,
//! fractional-revival decomposition, classical comparison). [`cli`] wires
//! all of it to CSV/PGM artifacts.

// Guards are written as `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod coherent;
pub mod dynamics;
pub mod eigensystem;
pub mod error;
pub mod io;
pub mod quadrature;
pub mod specfun;

pub use coherent::{aocs_coeffs, docs_coeffs, pt_docs_coeffs, CoefficientSet, Family};
pub use eigensystem::{Potential, PtParams, SpatialGrid, SptParams};
pub use error::{Error, Result};
