//! Trigonometric Pöschl-Teller wells: parameters, spectra, bound states.
//!
//! Two families are supported. The symmetric well
//! `V(y) = (α²/2m) ρ(ρ-1) / cos²(αy)` on `|y| < π/(2α)` uses the natural
//! variable `x̄ = sin(αy)` and Gegenbauer polynomials; the general well adds
//! `k(k-1) / sin²(αy)`, lives on `0 < y < π/(2α)` and uses `u = sin²(αy)`
//! with Jacobi polynomials of argument `1 - 2u`. Units have `ħ = 1`.

mod basis;
mod grid;
mod params;

pub use basis::{pt_eigenfunction, spt_eigenfunction, Basis};
pub use grid::SpatialGrid;
pub use params::{Potential, PtParams, SptParams};
