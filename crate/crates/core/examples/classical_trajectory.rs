// Classical motion at the coherent state's mean energy compared with the
// quantum position trace.

use std::error::Error;

use pt_revival::dynamics::{dominant_period, linspace, ClassicalParams, PositionSeries, TimeSeries};
use pt_revival::{pt_docs_coeffs, PtParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = PtParams::new(2.0, 5.0, 5.0)?;
    let cs = pt_docs_coeffs(0.1, &params, 1e-10)?;
    let cp = ClassicalParams::for_coherent_state(&cs)?;
    let t_rev = cs.potential.revival_time();
    println!(
        "E_c = {:.4} (threshold {:.4}), a = {}, delta = {:.4}",
        cp.energy,
        ClassicalParams::threshold_energy(&params),
        cp.a,
        cp.delta
    );

    let times = linspace(1.0, 4001);
    let series = PositionSeries::new(&cs)?;
    let quantum = times.iter().map(|&t| series.position(t)).collect::<Result<Vec<_>, _>>()?;
    let quantum = TimeSeries::new(times.clone(), quantum)?;
    let classical = times.iter().map(|&t| cp.position(t * t_rev)).collect::<Result<Vec<_>, _>>()?;
    let classical = TimeSeries::new(times, classical)?;

    let tq = dominant_period(&quantum).ok_or("no oscillation in the quantum trace")?;
    let tc = dominant_period(&classical).ok_or("no oscillation in the classical trace")?;
    println!("period / T_rev: quantum {tq:.5}, classical {tc:.5} (closed form {:.5})", cp.period() / t_rev);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
