use crate::coherent::{CoefficientSet, Family};
use crate::dynamics::{cycles_to_angle, Propagator, TimeSeries};
use crate::eigensystem::{Potential, PtParams};
use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma_unchecked as lgamma;
use crate::specfun::LogWeight;

/// Closed-form series for the position of a general-well displacement state.
///
/// `z(t) = N Σ_n (2 A_n cos[(E_{n+1} - E_n) t] - C_n)` is the expectation of
/// `cos(2αy)`; the reported position is `(1/α) arcsin √((1 - z)/2)`.
/// Coefficients are generated straight from Gamma functions, independently
/// of the normalized `d_n`, and `N` is the reciprocal of the unnormalized
/// weight `Σ_n |d̃_n|²` over the retained levels.
#[derive(Clone, Debug)]
pub struct PositionSeries {
    alpha: f64,
    /// `2 N A_n`, `n = 0..N-1`.
    off_diagonal: Vec<f64>,
    /// Cycles of `E_{n+1} - E_n` per revival time.
    gap_cycles: Vec<f64>,
    /// `N Σ C_n`.
    diagonal: f64,
}

impl PositionSeries {
    pub fn new(cs: &CoefficientSet) -> Result<Self> {
        let (Family::PtDocs, Potential::General(p)) = (cs.family, cs.potential) else {
            return Err(Error::domain("closed-form position series needs a general-well displacement state"));
        };
        let beta = cs.coherence;
        let last = cs.truncation();
        let weight = |n: usize| -> LogWeight { weight_term(&p, beta, n) };
        let scale = (0..=last).map(|n| weight(n).log_magnitude).fold(f64::NEG_INFINITY, f64::max);
        let rescale = LogWeight { log_magnitude: -scale, sign: 1 };
        let norm: f64 = (0..=last).map(|n| (weight(n) * rescale).value()).sum();

        let diagonal = (0..=last).map(|n| (c_term(&p, beta, n) * rescale).value()).sum::<f64>() / norm;
        let off_diagonal = (0..last).map(|n| 2.0 * (a_term(&p, beta, n) * rescale).value() / norm).collect();
        let pot = cs.potential;
        let gap_cycles = (0..last).map(|n| pot.revival_cycles(n + 1) - pot.revival_cycles(n)).collect();
        Ok(PositionSeries { alpha: p.alpha, off_diagonal, gap_cycles, diagonal })
    }

    /// Rescale `N` so the series reproduces a given initial position:
    /// `z(0) = 1 - 2 sin²(α x0)`. `N` stays fixed for all later times.
    pub fn anchored(mut self, x0: f64) -> Result<Self> {
        let target = 1.0 - 2.0 * (self.alpha * x0).sin().powi(2);
        let current = self.z(0.0);
        if current == 0.0 || !target.is_finite() {
            return Err(Error::Numerical(format!("cannot anchor position series at x0 = {x0}")));
        }
        let f = target / current;
        self.off_diagonal.iter_mut().for_each(|a| *a *= f);
        self.diagonal *= f;
        Ok(self)
    }

    /// `⟨cos 2αy⟩` at `τ = t / T_rev`.
    pub fn z(&self, tau: f64) -> f64 {
        let oscillating: f64 = self
            .off_diagonal
            .iter()
            .zip(&self.gap_cycles)
            .map(|(a, g)| a * cycles_to_angle(g * tau).cos())
            .sum();
        oscillating - self.diagonal
    }

    pub fn position(&self, tau: f64) -> Result<f64> {
        let s = 0.5 * (1.0 - self.z(tau));
        if !(-1e-12..=1.0 + 1e-12).contains(&s) {
            return Err(Error::Numerical(format!("arcsin argument squared {s} outside [0, 1]")));
        }
        Ok(s.clamp(0.0, 1.0).sqrt().asin() / self.alpha)
    }
}

/// `β^{2n} Γ(k+n+½) Γ(ρ+n+½) / ((k+ρ+2n) n! Γ(k+ρ+n))`.
fn weight_term(p: &PtParams, beta: f64, n: usize) -> LogWeight {
    let nf = n as f64;
    let (rho, k) = (p.rho, p.k);
    LogWeight::powi(beta, 2 * n as u32)
        * LogWeight {
            log_magnitude: lgamma(k + nf + 0.5) + lgamma(rho + nf + 0.5)
                - (k + rho + 2.0 * nf).ln()
                - lgamma(nf + 1.0)
                - lgamma(k + rho + nf),
            sign: 1,
        }
}

/// `A_n = -β^{2n+1} 2Γ(ρ+n+3/2)Γ(k+n+3/2) / (Γ(ρ+k+n) n! (2n+ρ+k)(2n+ρ+k+1)(2n+ρ+k+2))`.
fn a_term(p: &PtParams, beta: f64, n: usize) -> LogWeight {
    let nf = n as f64;
    let (rho, k) = (p.rho, p.k);
    let s = 2.0 * nf + rho + k;
    LogWeight::powi(beta, 2 * n as u32 + 1)
        * LogWeight {
            log_magnitude: 2f64.ln() + lgamma(rho + nf + 1.5) + lgamma(k + nf + 1.5)
                - lgamma(rho + k + nf)
                - lgamma(nf + 1.0)
                - (s * (s + 1.0) * (s + 2.0)).ln(),
            sign: -1,
        }
}

/// `C_n = β^{2n} Γ(ρ+n+½)Γ(k+n+½)(k+ρ-1)(k-ρ) / (Γ(ρ+k+n) n! (2n+ρ+k)(2n+ρ+k-1)(2n+ρ+k+1))`.
fn c_term(p: &PtParams, beta: f64, n: usize) -> LogWeight {
    let nf = n as f64;
    let (rho, k) = (p.rho, p.k);
    let s = 2.0 * nf + rho + k;
    let factor = (k + rho - 1.0) * (k - rho) / (s * (s - 1.0) * (s + 1.0));
    LogWeight::powi(beta, 2 * n as u32)
        * LogWeight {
            log_magnitude: lgamma(rho + nf + 0.5) + lgamma(k + nf + 0.5) - lgamma(rho + k + nf) - lgamma(nf + 1.0),
            sign: 1,
        }
        * factor
}

/// Closed-form `⟨x(t)⟩` at `τ = t / T_rev`.
pub fn expectation_x_closed(cs: &CoefficientSet, tau: f64) -> Result<f64> {
    PositionSeries::new(cs)?.position(tau)
}

/// `∫ y |χ(y, t)|² dy` on the propagator's grid.
pub fn expectation_x_quadrature(prop: &Propagator<'_>, tau: f64) -> f64 {
    prop.expectation(tau, |y| y)
}

/// Mean spacing of upward crossings of the series mean, or `None` with
/// fewer than two crossings.
pub fn dominant_period(series: &TimeSeries<f64>) -> Option<f64> {
    let mean = series.values.iter().sum::<f64>() / series.len() as f64;
    let crossings: Vec<f64> = series
        .times
        .windows(2)
        .zip(series.values.windows(2))
        .filter(|(_, v)| v[0] < mean && v[1] >= mean)
        .map(|(t, v)| t[0] + (mean - v[0]) / (v[1] - v[0]) * (t[1] - t[0]))
        .collect();
    if crossings.len() < 2 {
        return None;
    }
    Some((crossings[crossings.len() - 1] - crossings[0]) / (crossings.len() - 1) as f64)
}
