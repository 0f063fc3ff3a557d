// The autocorrelation function and its revival peaks.

use std::error::Error;

use pt_revival::dynamics::{autocorrelation, linspace};
use pt_revival::{docs_coeffs, SptParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cs = docs_coeffs(0.8, &SptParams::new(2.0, 10.0)?, 1e-8)?;
    let series = autocorrelation(&cs, &linspace(1.0, 2049))?.map(|a| a.norm_sqr());
    let mean = series.values.iter().sum::<f64>() / series.len() as f64;
    println!("2049 samples over one revival, mean |A|^2 = {mean:.4}");

    let fractions = [0.0, 0.125, 0.2, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0];
    let at = autocorrelation(&cs, &fractions)?;
    for (t, a) in fractions.iter().zip(&at.values) {
        println!("t/T_rev = {t:.4}  |A|^2 = {:.6}", a.norm_sqr());
    }
    // At T_rev/2 the overlap is real: the alternating sum of |d_n|^2.
    println!("A(T_rev/2) = {:.6e}", at.values[5].re);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
