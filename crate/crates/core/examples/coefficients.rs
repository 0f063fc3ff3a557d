// Expansion coefficients of the three coherent-state families and the
// statistics of their level distributions.

use std::error::Error;

use pt_revival::coherent::coherence_for_peak;
use pt_revival::{aocs_coeffs, docs_coeffs, pt_docs_coeffs, Family, Potential, PtParams, SptParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let well = SptParams::new(2.0, 10.0)?;
    for cs in [docs_coeffs(0.8, &well, 1e-8)?, aocs_coeffs(30.0, &well, 1e-8)?] {
        let s = cs.stats();
        println!(
            "{:8} c={:<5} N={:3} nbar={:7.4} var={:7.4} peak={} support={:?}",
            cs.family.to_string(),
            cs.coherence,
            cs.truncation(),
            s.nbar,
            s.variance,
            s.argmax,
            s.support
        );
    }

    let general = PtParams::new(2.0, 5.0, 5.0)?;
    let cs = pt_docs_coeffs(0.1, &general, 1e-8)?;
    let head: Vec<String> = cs.probabilities().take(4).map(|p| format!("{p:.3e}")).collect();
    println!("pt-docs  beta=0.1 |d_n|^2 = {}", head.join(", "));

    // Recover the parameters that put the peak at n = 9 for rho = 15.
    let wide: Potential = SptParams::new(2.0, 15.0)?.into();
    let beta = coherence_for_peak(Family::SptDocs, &wide, 9, 0.99, 1e-8)?;
    let gamma = coherence_for_peak(Family::SptAocs, &wide, 9, 100.0, 1e-8)?;
    let d = docs_coeffs(beta, &SptParams::new(2.0, 15.0)?, 1e-8)?.stats();
    let a = aocs_coeffs(gamma, &SptParams::new(2.0, 15.0)?, 1e-8)?.stats();
    println!("rho=15 peak at 9: beta={beta:.4} (var {:.2}), gamma={gamma:.3} (var {:.2})", d.variance, a.variance);
    assert!(a.variance < d.variance);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
