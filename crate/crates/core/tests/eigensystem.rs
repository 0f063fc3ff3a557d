use pt_revival::eigensystem::{Basis, Potential, PtParams, SpatialGrid, SptParams};
use pt_revival::specfun::{jacobi, log_gamma};

fn gram_error(basis: &Basis, grid: &SpatialGrid) -> f64 {
    let mut worst: f64 = 0.0;
    for m in 0..=basis.nmax() {
        for n in m..=basis.nmax() {
            let ip = grid.integrate(basis.psi(m).iter().zip(basis.psi(n)).map(|(a, b)| a * b));
            let want = if m == n { 1.0 } else { 0.0 };
            worst = worst.max((ip - want).abs());
        }
    }
    worst
}

#[test]
fn spt_gram_matrix_is_identity() {
    let pot: Potential = SptParams::new(2.0, 10.0).unwrap().into();
    let grid = SpatialGrid::gauss_legendre(&pot, 800).unwrap();
    let basis = Basis::new(&pot, 25, &grid).unwrap();
    let err = gram_error(&basis, &grid);
    assert!(err <= 1e-8, "max Gram error {err:e}");
}

#[test]
fn pt_gram_matrix_is_identity() {
    for (rho, k) in [(5.0, 5.0), (5.0, 3.0), (2.5, 7.0)] {
        let pot: Potential = PtParams::new(2.0, rho, k).unwrap().into();
        let grid = SpatialGrid::gauss_legendre(&pot, 800).unwrap();
        let basis = Basis::new(&pot, 20, &grid).unwrap();
        let err = gram_error(&basis, &grid);
        assert!(err <= 1e-8, "rho={rho} k={k}: max Gram error {err:e}");
    }
}

/// Same envelope and normalization, but with the Jacobi superscripts swapped.
fn swapped_pt(p: &PtParams, n: usize, y: f64) -> f64 {
    let nf = n as f64;
    let log_norm = 0.5
        * ((2.0 * p.alpha * (p.k + p.rho + 2.0 * nf)).ln() + log_gamma(nf + 1.0).unwrap()
            + log_gamma(p.k + p.rho + nf).unwrap()
            - log_gamma(p.k + nf + 0.5).unwrap()
            - log_gamma(p.rho + nf + 0.5).unwrap());
    let (s, c) = (p.alpha * y).sin_cos();
    let env = p.rho * c.ln() + p.k * s.ln();
    (log_norm + env).exp() * jacobi(n, p.rho - 0.5, p.k - 0.5, (2.0 * p.alpha * y).cos()).unwrap()
}

#[test]
fn swapped_jacobi_convention_is_not_orthonormal() {
    let p = PtParams::new(2.0, 5.0, 3.0).unwrap();
    let pot: Potential = p.into();
    let grid = SpatialGrid::gauss_legendre(&pot, 800).unwrap();
    let psi: Vec<Vec<f64>> = (0..=6).map(|n| grid.coords.iter().map(|&y| swapped_pt(&p, n, y)).collect()).collect();
    let mut worst: f64 = 0.0;
    for m in 0..psi.len() {
        for n in 0..psi.len() {
            let ip = grid.integrate(psi[m].iter().zip(&psi[n]).map(|(a, b)| a * b));
            worst = worst.max((ip - if m == n { 1.0 } else { 0.0 }).abs());
        }
    }
    assert!(worst > 1e-2, "swapped convention unexpectedly orthonormal ({worst:e})");
}

#[test]
fn spt_parity_on_symmetric_grid() {
    let pot: Potential = SptParams::new(2.0, 10.0).unwrap().into();
    for npts in [400, 513] {
        let grid = SpatialGrid::uniform(&pot, npts).unwrap();
        let basis = Basis::new(&pot, 30, &grid).unwrap();
        for n in 0..=30 {
            let psi = basis.psi(n);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let worst = (0..npts).map(|j| (psi[npts - 1 - j] - sign * psi[j]).abs()).fold(0.0, f64::max);
            assert!(worst <= 1e-10, "n={n}: parity defect {worst:e}");
        }
    }
}

#[test]
fn pt_node_count_matches_level() {
    let pot: Potential = PtParams::new(2.0, 5.0, 5.0).unwrap().into();
    let grid = SpatialGrid::uniform(&pot, 2000).unwrap();
    let basis = Basis::new(&pot, 10, &grid).unwrap();
    for n in 0..=10 {
        let psi = basis.psi(n);
        let peak = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        // Ignore the numerically flat tails near the walls.
        let significant: Vec<f64> = psi.iter().copied().filter(|v| v.abs() > 1e-12 * peak).collect();
        let changes = significant.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
        assert_eq!(changes, n, "level {n}");
    }
}

/// RMS of `(-(1/2m) d²/dy² + V - E) ψ` by five-point differences, relative to `E · rms(ψ)`.
fn residual(pot: &Potential, nmax: usize, npts: usize) -> Vec<f64> {
    let grid = SpatialGrid::uniform(pot, npts).unwrap();
    let basis = Basis::new(pot, nmax, &grid).unwrap();
    let h = grid.coords[1] - grid.coords[0];
    let m = pot.mass();
    (0..=nmax)
        .map(|n| {
            let psi = basis.psi(n);
            let e = pot.energy(n);
            let (mut r2, mut p2) = (0.0, 0.0);
            for j in 2..npts - 2 {
                let d2 = (-psi[j - 2] + 16.0 * psi[j - 1] - 30.0 * psi[j] + 16.0 * psi[j + 1] - psi[j + 2])
                    / (12.0 * h * h);
                let v = pot.potential(grid.coords[j]).unwrap();
                let r = -d2 / (2.0 * m) + (v - e) * psi[j];
                r2 += r * r;
                p2 += psi[j] * psi[j];
            }
            (r2 / p2).sqrt() / e
        })
        .collect()
}

#[test]
fn spt_eigen_equation_residual() {
    for pot in [SptParams::new(2.0, 10.0).unwrap(), SptParams::with_mass(1.0, 3.5, 0.7).unwrap()] {
        for (n, r) in residual(&pot.into(), 15, 4000).into_iter().enumerate() {
            assert!(r <= 1e-4, "{pot:?} n={n}: relative residual {r:e}");
        }
    }
}

#[test]
fn pt_eigen_equation_residual() {
    for pot in [PtParams::new(2.0, 5.0, 5.0).unwrap(), PtParams::with_mass(1.5, 4.0, 2.5, 2.0).unwrap()] {
        for (n, r) in residual(&pot.into(), 15, 4000).into_iter().enumerate() {
            assert!(r <= 1e-4, "{pot:?} n={n}: relative residual {r:e}");
        }
    }
}

#[test]
fn spt_second_difference_is_constant() {
    let p = SptParams::with_mass(2.0, 10.0, 1.0).unwrap();
    for n in 1..200 {
        assert!(p.energy(n + 1) > p.energy(n));
        let d2 = p.energy(n + 1) - 2.0 * p.energy(n) + p.energy(n - 1);
        assert!((d2 - 4.0).abs() <= 1e-12 * p.energy(n + 1), "n={n}: {d2}");
    }
}

#[test]
fn pt_level_gap_matches_oscillation_frequency() {
    let p = PtParams::new(2.0, 5.0, 5.0).unwrap();
    for n in 0..50 {
        let gap = p.energy(n + 1) - p.energy(n);
        assert_eq!(gap, 2.0 * 4.0 * (2.0 * n as f64 + 11.0));
    }
    assert_eq!(p.energy(1) - p.energy(0), 88.0);
}

#[test]
fn normalization_of_level_nine() {
    let pot: Potential = SptParams::new(2.0, 10.0).unwrap().into();
    let grid = SpatialGrid::gauss_legendre(&pot, 400).unwrap();
    let basis = Basis::new(&pot, 9, &grid).unwrap();
    let norm = grid.integrate(basis.psi(9).iter().map(|v| v * v));
    assert!((norm - 1.0).abs() <= 1e-8, "{norm}");
}
