// Decomposition of the state at T_rev/8 into four classical sub-packets.

use std::error::Error;

use pt_revival::dynamics::{eighth_revival_interference, fractional_decomposition, revival_times, Propagator};
use pt_revival::{docs_coeffs, SpatialGrid, SptParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let frac = fractional_decomposition(1, 8)?;
    println!("r/s = 1/8, l = {}", frac.l);
    for (p, a) in frac.amplitudes.iter().enumerate() {
        println!("  a_{p} = {:+.6} {:+.6}i", a.re, a.im);
    }

    let cs = docs_coeffs(0.8, &SptParams::new(2.0, 10.0)?, 1e-10)?;
    let grid = SpatialGrid::uniform(&cs.potential, 512)?;
    let prop = Propagator::new(&cs, &grid)?;
    let times = revival_times(&cs.potential, cs.stats().nbar);
    let exact = prop.field(frac.time());
    for (label, tcl) in [("ground", times.t_cl_ground_over_trev()), ("mean", times.t_cl_mean_over_trev())] {
        let rebuilt = prop.fractional_reconstruction(&frac, tcl);
        let err = exact.iter().zip(&rebuilt).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        println!("T_cl from {label:6} level: T_cl/T_rev = {tcl:.5}, reconstruction error {err:.2e}");
    }

    let report = eighth_revival_interference(&prop);
    for &i in &report.ranking {
        let pair = &report.pairs[i];
        println!("  pair {:?}: |interference| = {:.4e}", pair.pair, pair.l1);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
