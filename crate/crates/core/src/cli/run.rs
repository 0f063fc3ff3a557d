use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::cli::config::{
    AutocorrArgs, CarpetArgs, ClassicalArgs, CoeffsArgs, Command, FamilyArg, Format, FractionalArgs, RunConfig,
    SnapshotArgs, StateArgs, XpectArgs, XpectMethod, XpectNorm,
};
use crate::coherent::{coefficients, CoefficientSet, Family};
use crate::dynamics::{
    autocorrelation, carpet, fractional_decomposition, linspace, ClassicalParams, PositionSeries, Propagator,
    TimeSeries,
};
use crate::eigensystem::{Potential, PtParams, SpatialGrid, SptParams};
use crate::error::{Error, Result};
use crate::io::write_atomic;

pub const THREADS_ENV: &str = "PT_REVIVAL_THREADS";

/// What a successful run reports on standard output.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub line: String,
    pub outputs: Vec<PathBuf>,
}

pub fn run(config: &RunConfig) -> Result<Summary> {
    let start = Instant::now();
    let (mut line, outputs) = match &config.command {
        Command::Coeffs(a) => coeffs(a)?,
        Command::Snapshot(a) => snapshot(a)?,
        Command::Carpet(a) => carpet_cmd(a)?,
        Command::Autocorr(a) => autocorr(a)?,
        Command::Fractional(a) => fractional(a)?,
        Command::Xpect(a) => xpect(a)?,
        Command::Classical(a) => classical(a)?,
    };
    line.push_str(&format!(" wall={:.3}s", start.elapsed().as_secs_f64()));
    Ok(Summary { line, outputs })
}

fn state(args: &StateArgs, default_family: FamilyArg) -> Result<CoefficientSet> {
    let family: Family = args.family.unwrap_or(default_family).into();
    let alpha = args.alpha.unwrap_or(2.0);
    let mass = args.mass.unwrap_or(1.0);
    let (potential, default_coherence) = match family {
        Family::SptDocs | Family::SptAocs => {
            let p = SptParams::with_mass(alpha, args.rho.unwrap_or(10.0), mass)?;
            (Potential::Symmetric(p), if family == Family::SptDocs { 0.8 } else { 30.0 })
        }
        Family::PtDocs => {
            let p = PtParams::with_mass(alpha, args.rho.unwrap_or(5.0), args.k.unwrap_or(5.0), mass)?;
            (Potential::General(p), 0.1)
        }
    };
    let coherence = match family {
        Family::SptAocs => args.gamma.or(args.beta),
        _ => args.beta.or(args.gamma),
    }
    .unwrap_or(default_coherence);
    match &args.coeffs_file {
        Some(path) => {
            let file = BufReader::new(File::open(path)?);
            CoefficientSet::read_csv(file, family, coherence, potential, args.tol)
        }
        None => coefficients(family, coherence, &potential, args.tol),
    }
}

fn describe(cs: &CoefficientSet) -> String {
    let s = cs.stats();
    format!("family={} coherence={} nbar={:.6} N={}", cs.family, cs.coherence, s.nbar, cs.truncation())
}

fn check_resolution(name: &str, n: usize) -> Result<()> {
    if n >= 2 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must satisfy {name} >= 2, got {n}")))
    }
}

fn check_t_max(t_max: f64) -> Result<()> {
    if t_max > 0.0 && t_max.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("t-max must satisfy t-max > 0, got {t_max}")))
    }
}

fn save(path: &Path, fill: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<Vec<PathBuf>> {
    write_atomic(path, fill)?;
    Ok(vec![path.to_path_buf()])
}

fn coeffs(a: &CoeffsArgs) -> Result<(String, Vec<PathBuf>)> {
    let cs = state(&a.state, FamilyArg::SptDocs)?;
    let out = save(&a.output, |w| cs.write_csv(w))?;
    Ok((describe(&cs), out))
}

fn snapshot(a: &SnapshotArgs) -> Result<(String, Vec<PathBuf>)> {
    check_resolution("nx", a.nx)?;
    if a.times.is_empty() {
        return Err(Error::Domain("times must list at least one time".into()));
    }
    let cs = state(&a.state, FamilyArg::SptDocs)?;
    let grid = SpatialGrid::uniform(&cs.potential, a.nx)?;
    let prop = Propagator::new(&cs, &grid)?;
    let densities: Vec<Vec<f64>> = a.times.iter().map(|&t| prop.density(t)).collect();
    let out = save(&a.output, |w| {
        write!(w, "xbar,y")?;
        for t in &a.times {
            write!(w, ",t={t}")?;
        }
        writeln!(w)?;
        for j in 0..grid.len() {
            write!(w, "{:.11e},{:.11e}", grid.points[j], grid.coords[j])?;
            for d in &densities {
                write!(w, ",{:.11e}", d[j])?;
            }
            writeln!(w)?;
        }
        Ok(())
    })?;
    Ok((describe(&cs), out))
}

/// Rayon pool capped by `PT_REVIVAL_THREADS` when set.
fn worker_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Domain(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::Numerical(format!("cannot start worker pool: {e}")))
}

fn carpet_cmd(a: &CarpetArgs) -> Result<(String, Vec<PathBuf>)> {
    check_resolution("nx", a.nx)?;
    check_resolution("nt", a.nt)?;
    check_t_max(a.t_max)?;
    let cs = state(&a.state, FamilyArg::SptDocs)?;
    let grid = SpatialGrid::uniform(&cs.potential, a.nx)?;
    let times = linspace(a.t_max, a.nt);
    let raster = worker_pool()?.install(|| carpet(&cs, &grid, &times))?;
    let default = match a.format {
        Format::Csv => "carpet.csv",
        Format::Pgm => "carpet.pgm",
    };
    let path = a.output.clone().unwrap_or_else(|| PathBuf::from(default));
    let out = save(&path, |w| match a.format {
        Format::Csv => raster.write_csv(w),
        Format::Pgm => raster.write_pgm(w),
    })?;
    Ok((describe(&cs), out))
}

fn autocorr(a: &AutocorrArgs) -> Result<(String, Vec<PathBuf>)> {
    check_resolution("nt", a.nt)?;
    check_t_max(a.t_max)?;
    let cs = state(&a.state, FamilyArg::SptDocs)?;
    let series = autocorrelation(&cs, &linspace(a.t_max, a.nt))?;
    let out = if a.modulus_squared {
        let sq = series.map(|v| v.norm_sqr());
        save(&a.output, |w| sq.write_csv(w))?
    } else {
        save(&a.output, |w| series.write_csv(w))?
    };
    Ok((describe(&cs), out))
}

fn fractional(a: &FractionalArgs) -> Result<(String, Vec<PathBuf>)> {
    let f = fractional_decomposition(a.r, a.s)?;
    let mut line = format!("r={} s={} l={}", f.r, f.s, f.l);
    for (p, amp) in f.amplitudes.iter().enumerate() {
        line.push_str(&format!(" a_{p}={:.15}{:+.15}i", amp.re, amp.im));
    }
    let out = match &a.output {
        Some(path) => save(path, |w| {
            writeln!(w, "p,re,im")?;
            for (p, amp) in f.amplitudes.iter().enumerate() {
                writeln!(w, "{p},{:.16e},{:.16e}", amp.re, amp.im)?;
            }
            Ok(())
        })?,
        None => Vec::new(),
    };
    Ok((line, out))
}

fn general_state(args: &StateArgs) -> Result<CoefficientSet> {
    let cs = state(args, FamilyArg::PtDocs)?;
    if cs.family != Family::PtDocs {
        return Err(Error::Domain("family must be pt-docs for the general well".into()));
    }
    Ok(cs)
}

fn xpect(a: &XpectArgs) -> Result<(String, Vec<PathBuf>)> {
    check_resolution("nt", a.nt)?;
    check_t_max(a.t_max)?;
    let cs = general_state(&a.state)?;
    let times = linspace(a.t_max, a.nt);
    let values = match a.method {
        XpectMethod::Closed => {
            let mut series = PositionSeries::new(&cs)?;
            if a.normalization == XpectNorm::Anchored {
                check_resolution("nodes", a.nodes)?;
                let grid = SpatialGrid::gauss_legendre(&cs.potential, a.nodes)?;
                series = series.anchored(Propagator::new(&cs, &grid)?.expectation(0.0, |y| y))?;
            }
            times.iter().map(|&t| series.position(t)).collect::<Result<Vec<_>>>()?
        }
        XpectMethod::Quadrature => {
            check_resolution("nodes", a.nodes)?;
            let grid = SpatialGrid::gauss_legendre(&cs.potential, a.nodes)?;
            let prop = Propagator::new(&cs, &grid)?;
            times.iter().map(|&t| prop.expectation(t, |y| y)).collect()
        }
    };
    let series = TimeSeries::new(times, values)?;
    let out = save(&a.output, |w| series.write_csv(w))?;
    Ok((describe(&cs), out))
}

fn classical(a: &ClassicalArgs) -> Result<(String, Vec<PathBuf>)> {
    check_resolution("nt", a.nt)?;
    check_t_max(a.t_max)?;
    let cs = general_state(&a.state)?;
    let Potential::General(params) = cs.potential else { unreachable!("checked by general_state") };
    let energy = a.energy.unwrap_or_else(|| cs.mean_energy());
    let cp = ClassicalParams::new(a.a.unwrap_or(0.5 / params.alpha), energy, &params)?;
    let t_rev = cs.potential.revival_time();
    let times = linspace(a.t_max, a.nt);
    let values = times.iter().map(|&tau| cp.position(tau * t_rev)).collect::<Result<Vec<_>>>()?;
    let series = TimeSeries::new(times, values)?;
    let out = save(&a.output, |w| series.write_csv(w))?;
    Ok((
        format!("{} energy={:.6} period_over_Trev={:.6}", describe(&cs), cp.energy, cp.period() / t_rev),
        out,
    ))
}
