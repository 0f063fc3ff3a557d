use std::io::Write;

use rayon::prelude::*;

use crate::coherent::CoefficientSet;
use crate::dynamics::Propagator;
use crate::eigensystem::SpatialGrid;
use crate::error::{Error, Result};

/// `|χ(x, t)|²` on a (time × space) grid, rows ascending in time.
#[derive(Clone, Debug, PartialEq)]
pub struct CarpetRaster {
    pub grid: SpatialGrid,
    /// Times in units of `T_rev`.
    pub times: Vec<f64>,
    /// Row-major, `times.len()` rows of `grid.len()` entries.
    pub density: Vec<f64>,
}

/// Evaluate the carpet. Rows are independent and computed in parallel on
/// the current rayon pool; the result does not depend on the partition.
pub fn carpet(cs: &CoefficientSet, grid: &SpatialGrid, times: &[f64]) -> Result<CarpetRaster> {
    if times.is_empty() || grid.is_empty() {
        return Err(Error::domain("carpet needs nonempty space and time grids"));
    }
    let prop = Propagator::new(cs, grid)?;
    let nx = grid.len();
    let mut density = vec![0.0; nx * times.len()];
    density.par_chunks_mut(nx).zip(times.par_iter()).for_each(|(row, &tau)| {
        for (cell, v) in row.iter_mut().zip(prop.field(tau)) {
            *cell = v.norm_sqr();
        }
    });
    Ok(CarpetRaster { grid: grid.clone(), times: times.to_vec(), density })
}

impl CarpetRaster {
    pub fn nx(&self) -> usize {
        self.grid.len()
    }

    pub fn nt(&self) -> usize {
        self.times.len()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let nx = self.nx();
        &self.density[i * nx..(i + 1) * nx]
    }

    /// `∫ |χ|² dy` along row `i`.
    pub fn row_integral(&self, i: usize) -> f64 {
        self.grid.integrate(self.row(i).iter().copied())
    }

    pub fn max(&self) -> f64 {
        self.density.iter().copied().fold(0.0, f64::max)
    }

    /// CSV matrix: header row `t_over_Trev\xbar` followed by the spatial points,
    /// then one row per time led by the time value. 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        write!(out, "t_over_Trev\\x")?;
        for x in &self.grid.points {
            write!(out, ",{x:.11e}")?;
        }
        writeln!(out)?;
        for (i, t) in self.times.iter().enumerate() {
            write!(out, "{t:.11e}")?;
            for v in self.row(i) {
                write!(out, ",{v:.11e}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    /// Binary 8-bit PGM (`P5`), time increasing downward, intensity linear
    /// from 0 to the raster maximum.
    pub fn write_pgm<W: Write>(&self, mut out: W) -> Result<()> {
        write!(out, "P5\n{} {}\n255\n", self.nx(), self.nt())?;
        let max = self.max();
        let scale = if max > 0.0 { 255.0 / max } else { 0.0 };
        let bytes: Vec<u8> = self.density.iter().map(|v| (v * scale).round().clamp(0.0, 255.0) as u8).collect();
        out.write_all(&bytes)?;
        Ok(())
    }
}
