use std::f64::consts::PI;

use crate::eigensystem::{Potential, PtParams, SpatialGrid, SptParams};
use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma_unchecked as lgamma;
use crate::specfun::orthopoly::{gegenbauer_sweep, jacobi_sweep};

/// Normalized eigenfunctions `ψ_0..ψ_nmax` tabulated on a grid.
#[derive(Clone, Debug)]
pub struct Basis {
    nmax: usize,
    npts: usize,
    values: Vec<f64>,
}

impl Basis {
    /// One polynomial recurrence sweep per grid point.
    pub fn new(potential: &Potential, nmax: usize, grid: &SpatialGrid) -> Result<Self> {
        let npts = grid.len();
        let mut values = vec![0.0; (nmax + 1) * npts];
        match potential {
            Potential::Symmetric(p) => {
                let log_norm: Vec<f64> = (0..=nmax).map(|n| spt_log_norm(p, n)).collect();
                for (j, &y) in grid.coords.iter().enumerate() {
                    let xbar = grid.points[j];
                    // (1 - x̄²)^{ρ/2} = cos(αy)^ρ, taken from y for accuracy near the walls.
                    let log_env = p.rho * (p.alpha * y).cos().ln();
                    gegenbauer_sweep(nmax, p.rho, xbar, |n, c| {
                        values[n * npts + j] = (log_norm[n] + log_env).exp() * c;
                    });
                }
            }
            Potential::General(p) => {
                let (a, b) = (p.k - 0.5, p.rho - 0.5);
                let log_norm: Vec<f64> = (0..=nmax).map(|n| pt_log_norm(p, n)).collect();
                for (j, &y) in grid.coords.iter().enumerate() {
                    let (s, c) = (p.alpha * y).sin_cos();
                    // (1 - u)^{ρ/2} u^{k/2} with u = sin²(αy); Jacobi argument 1 - 2u = cos(2αy).
                    let log_env = p.rho * c.ln() + p.k * s.ln();
                    let arg = (2.0 * p.alpha * y).cos();
                    jacobi_sweep(nmax, a, b, arg, |n, v| {
                        values[n * npts + j] = (log_norm[n] + log_env).exp() * v;
                    });
                }
            }
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical(format!(
                "eigenfunction table overflowed at nmax = {nmax}"
            )));
        }
        Ok(Basis { nmax, npts, values })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn npts(&self) -> usize {
        self.npts
    }

    pub fn psi(&self, n: usize) -> &[f64] {
        &self.values[n * self.npts..(n + 1) * self.npts]
    }
}

/// `ln` of `[α n! (n+ρ) Γ(ρ) Γ(2ρ) / (√π Γ(ρ+½) Γ(n+2ρ))]^{1/2}`.
fn spt_log_norm(p: &SptParams, n: usize) -> f64 {
    let nf = n as f64;
    0.5 * (p.alpha.ln() + lgamma(nf + 1.0) + (nf + p.rho).ln() + lgamma(p.rho) + lgamma(2.0 * p.rho)
        - 0.5 * PI.ln()
        - lgamma(p.rho + 0.5)
        - lgamma(nf + 2.0 * p.rho))
}

/// `ln` of `[2α (k+ρ+2n) n! Γ(k+ρ+n) / (Γ(k+n+½) Γ(ρ+n+½))]^{1/2}`.
fn pt_log_norm(p: &PtParams, n: usize) -> f64 {
    let nf = n as f64;
    0.5 * ((2.0 * p.alpha * (p.k + p.rho + 2.0 * nf)).ln() + lgamma(nf + 1.0) + lgamma(p.k + p.rho + nf)
        - lgamma(p.k + nf + 0.5)
        - lgamma(p.rho + nf + 0.5))
}

/// `ψ_n` of the symmetric well at every grid point.
pub fn spt_eigenfunction(params: &SptParams, n: usize, grid: &SpatialGrid) -> Result<Vec<f64>> {
    let basis = Basis::new(&Potential::Symmetric(*params), n, grid)?;
    Ok(basis.psi(n).to_vec())
}

/// `ψ_n` of the general well at every grid point.
pub fn pt_eigenfunction(params: &PtParams, n: usize, grid: &SpatialGrid) -> Result<Vec<f64>> {
    let basis = Basis::new(&Potential::General(*params), n, grid)?;
    Ok(basis.psi(n).to_vec())
}
