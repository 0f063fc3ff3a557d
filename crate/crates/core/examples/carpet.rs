// A quantum carpet over one revival period, written as a PGM image.

use std::error::Error;
use std::fs::File;
use std::io::BufWriter;

use pt_revival::dynamics::{carpet, linspace};
use pt_revival::{docs_coeffs, SpatialGrid, SptParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cs = docs_coeffs(0.8, &SptParams::new(2.0, 10.0)?, 1e-8)?;
    let grid = SpatialGrid::uniform(&cs.potential, 256)?;
    let raster = carpet(&cs, &grid, &linspace(1.0, 256))?;

    let worst = (0..raster.nt()).map(|i| (raster.row_integral(i) - 1.0).abs()).fold(0.0, f64::max);
    println!("{}x{} carpet, max density {:.3}, worst row norm error {worst:.1e}", raster.nt(), raster.nx(), raster.max());

    let path = std::env::temp_dir().join("pt_revival_carpet.pgm");
    raster.write_pgm(BufWriter::new(File::create(&path)?))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
