//! Exact time evolution of coherent states and the revival analysis built on it.
//!
//! Every public time argument is in units of the revival time of the
//! state's potential, written `τ = t / T_rev`. Since `E_n T_rev / 2π` is a
//! quadratic in `n` with unit leading coefficient, phases are reduced
//! modulo one cycle before exponentiation, which keeps rational `τ`
//! (halves, quarters, eighths) exact.

mod autocorr;
mod carpet;
mod classical;
mod expectation;
mod fractional;
mod propagator;
pub(crate) mod series;

pub use autocorr::autocorrelation;
pub use carpet::{carpet, CarpetRaster};
pub use classical::{classical_trajectory, ClassicalParams};
pub use expectation::{dominant_period, expectation_x_closed, expectation_x_quadrature, PositionSeries};
pub use fractional::{
    eighth_revival_interference, fractional_decomposition, FractionalRevival, InterferenceReport, PairTerm,
};
pub use propagator::{classical_wavepacket, evolve, Propagator, WaveSample};
pub use series::{linspace, TimeSeries};

use crate::eigensystem::Potential;

/// Characteristic times of a well, in absolute units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RevivalTimes {
    pub t_rev: f64,
    /// `2π / E'(0)`; for the symmetric well this is `2πm / (α²ρ)`.
    pub t_cl_ground: f64,
    /// `2π / E'(n̄)` at the mean level of the state.
    pub t_cl_mean: f64,
}

impl RevivalTimes {
    pub fn t_cl_ground_over_trev(&self) -> f64 {
        self.t_cl_ground / self.t_rev
    }

    pub fn t_cl_mean_over_trev(&self) -> f64 {
        self.t_cl_mean / self.t_rev
    }
}

pub fn revival_times(potential: &Potential, nbar: f64) -> RevivalTimes {
    let two_pi = 2.0 * std::f64::consts::PI;
    RevivalTimes {
        t_rev: potential.revival_time(),
        t_cl_ground: two_pi / potential.energy_slope(0.0),
        t_cl_mean: two_pi / potential.energy_slope(nbar),
    }
}

/// `2π · frac(x)` for a cycle count `x`.
pub(crate) fn cycles_to_angle(x: f64) -> f64 {
    2.0 * std::f64::consts::PI * (x - x.floor())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigensystem::SptParams;
    use std::f64::consts::PI;

    #[test]
    fn spt_revival_times() {
        let pot: Potential = SptParams::new(2.0, 10.0).unwrap().into();
        let rt = revival_times(&pot, 9.0);
        assert!((rt.t_rev - PI).abs() < 1e-15);
        assert!((rt.t_cl_ground - PI / 20.0).abs() < 1e-15);
        assert!((rt.t_cl_mean - PI / 38.0).abs() < 1e-15);
        assert!((rt.t_cl_ground_over_trev() - 1.0 / 20.0).abs() < 1e-15);
    }
}
