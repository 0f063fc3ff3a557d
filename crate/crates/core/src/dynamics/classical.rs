use std::f64::consts::PI;

use crate::coherent::CoefficientSet;
use crate::eigensystem::{Potential, PtParams};
use crate::error::{Error, Result};

/// Classical motion in the general well at fixed energy.
///
/// With `w = cos(y/a)` the equation of motion is harmonic in `w`:
/// `w(t) = (α₁ - β₁)/2 + √Δ cos(√(2E/m) t / a)`. For `a = 1/(2α)` this is
/// the same coordinate the quantum eigenfunctions use.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassicalParams {
    pub a: f64,
    pub energy: f64,
    pub mass: f64,
    /// `α²/m`.
    pub v0: f64,
    pub alpha1: f64,
    pub beta1: f64,
    pub delta: f64,
}

impl ClassicalParams {
    pub fn new(a: f64, energy: f64, params: &PtParams) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::domain(format!("length scale a must be positive, got {a}")));
        }
        let v0 = params.alpha * params.alpha / params.mass;
        let threshold = Self::threshold_energy(params);
        if !(energy > threshold) {
            return Err(Error::domain(format!(
                "classical energy {energy} must exceed the well minimum {threshold}"
            )));
        }
        let alpha1 = v0 / energy * params.rho * (params.rho - 1.0);
        let beta1 = v0 / energy * params.k * (params.k - 1.0);
        let (sa, sb) = (alpha1.sqrt(), beta1.sqrt());
        let delta = (1.0 - 0.5 * (sa + sb).powi(2)) * (1.0 - 0.5 * (sa - sb).powi(2));
        if !(delta >= 0.0) {
            return Err(Error::domain(format!("oscillation amplitude squared is negative ({delta})")));
        }
        Ok(ClassicalParams { a, energy, mass: params.mass, v0, alpha1, beta1, delta })
    }

    /// Energy `(V₀/2)(√(ρ(ρ-1)) + √(k(k-1)))²` at the bottom of the well.
    pub fn threshold_energy(params: &PtParams) -> f64 {
        let v0 = params.alpha * params.alpha / params.mass;
        let s = (params.rho * (params.rho - 1.0)).sqrt() + (params.k * (params.k - 1.0)).sqrt();
        0.5 * v0 * s * s
    }

    /// Energy from the mean energy of a coherent state, with `a = 1/(2α)`.
    pub fn for_coherent_state(cs: &CoefficientSet) -> Result<Self> {
        let Potential::General(params) = cs.potential else {
            return Err(Error::domain("classical trajectory is defined for the general well"));
        };
        Self::new(0.5 / params.alpha, cs.mean_energy(), &params)
    }

    pub fn angular_frequency(&self) -> f64 {
        (2.0 * self.energy / self.mass).sqrt() / self.a
    }

    /// `2πa √(m / 2E)`.
    pub fn period(&self) -> f64 {
        2.0 * PI / self.angular_frequency()
    }

    /// Position at absolute time `t`, starting from the turning point.
    pub fn position(&self, t: f64) -> Result<f64> {
        let arg = 0.5 * (self.alpha1 - self.beta1) + self.delta.sqrt() * (self.angular_frequency() * t).cos();
        if arg.abs() > 1.0 + 1e-12 {
            return Err(Error::Numerical(format!("arccos argument {arg} outside [-1, 1]")));
        }
        Ok(self.a * arg.clamp(-1.0, 1.0).acos())
    }
}

pub fn classical_trajectory(cp: &ClassicalParams, t: f64) -> Result<f64> {
    cp.position(t)
}
