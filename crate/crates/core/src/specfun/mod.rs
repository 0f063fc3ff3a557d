//! Special functions shared by the eigenfunction and coefficient code.
//!
//! Everything here is a pure function of its arguments. Gamma-function
//! products are carried in log space through [`LogWeight`] and only
//! exponentiated once the full ratio is assembled, since `Γ(2ρ + n)`
//! overflows a double well inside the range of useful basis sizes.

pub(crate) mod gamma;
pub(crate) mod orthopoly;

pub use gamma::{log_gamma, LogWeight};
pub use orthopoly::{gegenbauer, gegenbauer_all, jacobi, jacobi_all};
