use num_complex::Complex64;

use crate::coherent::CoefficientSet;
use crate::dynamics::{cycles_to_angle, TimeSeries};
use crate::error::Result;

/// `A(t) = ⟨χ(t)|χ(0)⟩ = Σ |d_n|² e^{+i E_n t}` over times in units of `T_rev`.
///
/// Orthonormality of the basis reduces the overlap to a phase sum, so no
/// spatial grid is involved.
pub fn autocorrelation(cs: &CoefficientSet, times: &[f64]) -> Result<TimeSeries<Complex64>> {
    let probs: Vec<f64> = cs.probabilities().collect();
    let cycles: Vec<f64> = (0..probs.len()).map(|n| cs.potential.revival_cycles(n)).collect();
    let values = times
        .iter()
        .map(|&tau| {
            probs
                .iter()
                .zip(&cycles)
                .map(|(p, c)| p * Complex64::from_polar(1.0, cycles_to_angle(c * tau)))
                .sum()
        })
        .collect();
    TimeSeries::new(times.to_vec(), values)
}
