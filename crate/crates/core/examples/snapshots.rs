// Wave packet snapshots at the initial, quarter and half revival times.

use std::error::Error;

use pt_revival::dynamics::Propagator;
use pt_revival::{docs_coeffs, SpatialGrid, SptParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = SptParams::new(2.0, 10.0)?;
    let cs = docs_coeffs(0.8, &params, 1e-10)?;
    let grid = SpatialGrid::uniform(&cs.potential, 512)?;
    let prop = Propagator::new(&cs, &grid)?;

    let xbar = |tau: f64| prop.expectation(tau, |y| (params.alpha * y).sin());
    for tau in [0.0, 0.125, 0.25, 0.5, 1.0] {
        let density = prop.density(tau);
        let peak = density.iter().cloned().fold(0.0, f64::max);
        let at = density.iter().position(|&d| d == peak).unwrap_or(0);
        println!("t={tau:<5} <xbar>={:+.4} peak {peak:.3} at xbar={:+.3}", xbar(tau), grid.points[at]);
    }

    // At T_rev/2 the packet is the mirror image of the initial one.
    let start = prop.density(0.0);
    let half = prop.density(0.5);
    let n = start.len();
    let mismatch = (0..n).map(|j| (half[j] - start[n - 1 - j]).abs()).fold(0.0, f64::max);
    println!("mirror mismatch {mismatch:.2e}");
    assert!(mismatch < 1e-9);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
