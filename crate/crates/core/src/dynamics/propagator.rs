use num_complex::Complex64;

use crate::coherent::CoefficientSet;
use crate::dynamics::cycles_to_angle;
use crate::eigensystem::{Basis, SpatialGrid};
use crate::error::{Error, Result};

/// Complex wavefunction on a grid at time `time` (units of `T_rev`).
#[derive(Clone, Debug, PartialEq)]
pub struct WaveSample {
    pub grid: SpatialGrid,
    pub values: Vec<Complex64>,
    pub time: f64,
}

impl WaveSample {
    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        self.grid.integrate(self.values.iter().map(|v| v.norm_sqr()))
    }
}

/// A coefficient set with its eigenfunctions tabulated on one grid.
///
/// Building the table is the expensive step; every evaluation afterwards
/// is a phase rotation plus one pass over the table.
#[derive(Clone, Debug)]
pub struct Propagator<'a> {
    cs: &'a CoefficientSet,
    grid: &'a SpatialGrid,
    basis: Basis,
}

impl<'a> Propagator<'a> {
    pub fn new(cs: &'a CoefficientSet, grid: &'a SpatialGrid) -> Result<Self> {
        if grid.is_empty() {
            return Err(Error::domain("spatial grid is empty"));
        }
        let basis = Basis::new(&cs.potential, cs.truncation(), grid)?;
        Ok(Propagator { cs, grid, basis })
    }

    pub fn coefficients(&self) -> &CoefficientSet {
        self.cs
    }

    pub fn grid(&self) -> &SpatialGrid {
        self.grid
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// `Σ c_n ψ_n(x_j)` for arbitrary complex weights `c_n`.
    pub fn synthesize(&self, weights: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.grid.len()];
        for (n, c) in weights.iter().enumerate() {
            for (o, &p) in out.iter_mut().zip(self.basis.psi(n)) {
                *o += c * p;
            }
        }
        out
    }

    /// Weights `d_n e^{-i E_n t}` at `τ = t / T_rev`.
    pub fn phased_coefficients(&self, tau: f64) -> Vec<Complex64> {
        let pot = &self.cs.potential;
        self.cs
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &d)| d * Complex64::from_polar(1.0, -cycles_to_angle(pot.revival_cycles(n) * tau)))
            .collect()
    }

    /// Weights `d_n e^{-2πi n τ / τ_cl}` of the linearized packet.
    pub fn classical_coefficients(&self, tau: f64, tcl_over_trev: f64) -> Vec<Complex64> {
        let turns = tau / tcl_over_trev;
        self.cs
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &d)| d * Complex64::from_polar(1.0, -cycles_to_angle(n as f64 * turns)))
            .collect()
    }

    pub fn field(&self, tau: f64) -> Vec<Complex64> {
        self.synthesize(&self.phased_coefficients(tau))
    }

    pub fn evolve(&self, tau: f64) -> WaveSample {
        WaveSample { grid: self.grid.clone(), values: self.field(tau), time: tau }
    }

    pub fn density(&self, tau: f64) -> Vec<f64> {
        self.field(tau).iter().map(|v| v.norm_sqr()).collect()
    }

    pub fn classical_field(&self, tau: f64, tcl_over_trev: f64) -> Vec<Complex64> {
        self.synthesize(&self.classical_coefficients(tau, tcl_over_trev))
    }

    /// `∫ f(y) |χ(y, t)|² dy`.
    pub fn expectation(&self, tau: f64, f: impl Fn(f64) -> f64) -> f64 {
        let density = self.density(tau);
        self.grid.integrate(self.grid.coords.iter().zip(density).map(|(&y, p)| f(y) * p))
    }

    /// `⟨χ(t) | χ(0)⟩` by quadrature on the grid.
    pub fn overlap_with_initial(&self, tau: f64) -> Complex64 {
        let now = self.field(tau);
        let start = self.field(0.0);
        self.grid.weights.iter().zip(now.iter().zip(&start)).map(|(w, (a, b))| w * a.conj() * b).sum()
    }
}

/// `χ(x̄, t) = Σ d_n ψ_n(x̄) e^{-i E_n t}` at `τ = t / T_rev`.
pub fn evolve(cs: &CoefficientSet, grid: &SpatialGrid, tau: f64) -> Result<WaveSample> {
    Ok(Propagator::new(cs, grid)?.evolve(tau))
}

/// `χ_cl(x̄, t) = Σ d_n ψ_n(x̄) e^{-2πi n t / T_cl}`; both times in units of `T_rev`.
pub fn classical_wavepacket(cs: &CoefficientSet, grid: &SpatialGrid, tau: f64, tcl_over_trev: f64) -> Result<WaveSample> {
    if !(tcl_over_trev > 0.0) {
        return Err(Error::domain(format!("classical period must be positive, got {tcl_over_trev}")));
    }
    let prop = Propagator::new(cs, grid)?;
    Ok(WaveSample { grid: grid.clone(), values: prop.classical_field(tau, tcl_over_trev), time: tau })
}
