//! Forward three-term recurrences for Gegenbauer and Jacobi polynomials.

use crate::error::{Error, Result};

fn check_gegenbauer(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("Gegenbauer parameter must satisfy rho > 0, got {rho}")))
    }
}

fn check_jacobi(a: f64, b: f64) -> Result<()> {
    if a > -1.0 && b > -1.0 && a.is_finite() && b.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("Jacobi parameters must satisfy a > -1 and b > -1, got ({a}, {b})")))
    }
}

/// `C_n^ρ(x)`.
pub fn gegenbauer(n: usize, rho: f64, x: f64) -> Result<f64> {
    check_gegenbauer(rho)?;
    let mut out = 1.0;
    gegenbauer_sweep(n, rho, x, |_, c| out = c);
    Ok(out)
}

/// `[C_0^ρ(x), ..., C_nmax^ρ(x)]` from one recurrence pass.
pub fn gegenbauer_all(nmax: usize, rho: f64, x: f64) -> Result<Vec<f64>> {
    check_gegenbauer(rho)?;
    let mut out = Vec::with_capacity(nmax + 1);
    gegenbauer_sweep(nmax, rho, x, |_, c| out.push(c));
    Ok(out)
}

/// Calls `sink(n, C_n)` for n = 0..=nmax.
pub(crate) fn gegenbauer_sweep(nmax: usize, rho: f64, x: f64, mut sink: impl FnMut(usize, f64)) {
    let mut prev = 1.0;
    sink(0, prev);
    if nmax == 0 {
        return;
    }
    let mut cur = 2.0 * rho * x;
    sink(1, cur);
    for n in 2..=nmax {
        let nf = n as f64;
        let next = (2.0 * (nf + rho - 1.0) * x * cur - (nf + 2.0 * rho - 2.0) * prev) / nf;
        prev = cur;
        cur = next;
        sink(n, cur);
    }
}

/// `P_n^{(a,b)}(x)`.
pub fn jacobi(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    check_jacobi(a, b)?;
    let mut out = 1.0;
    jacobi_sweep(n, a, b, x, |_, p| out = p);
    Ok(out)
}

/// `[P_0^{(a,b)}(x), ..., P_nmax^{(a,b)}(x)]` from one recurrence pass.
pub fn jacobi_all(nmax: usize, a: f64, b: f64, x: f64) -> Result<Vec<f64>> {
    check_jacobi(a, b)?;
    let mut out = Vec::with_capacity(nmax + 1);
    jacobi_sweep(nmax, a, b, x, |_, p| out.push(p));
    Ok(out)
}

pub(crate) fn jacobi_sweep(nmax: usize, a: f64, b: f64, x: f64, mut sink: impl FnMut(usize, f64)) {
    let mut prev = 1.0;
    sink(0, prev);
    if nmax == 0 {
        return;
    }
    // P_1 written out: the generic step divides by 2n + a + b, which vanishes at n = 0 when a + b = -1.
    let mut cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    sink(1, cur);
    let ab = a + b;
    let diff_sq = a * a - b * b;
    for n in 1..nmax {
        let nf = n as f64;
        let s = 2.0 * nf + ab;
        let lead = 2.0 * (nf + 1.0) * (nf + ab + 1.0) * s;
        let mid = (s + 1.0) * ((s + 2.0) * s * x + diff_sq);
        let tail = 2.0 * (nf + a) * (nf + b) * (s + 2.0);
        let next = (mid * cur - tail * prev) / lead;
        prev = cur;
        cur = next;
        sink(n + 1, cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gegenbauer_low_orders() {
        assert_eq!(gegenbauer(0, 15.0, 0.3).unwrap(), 1.0);
        assert!((gegenbauer(1, 15.0, 0.3).unwrap() - 9.0).abs() < 1e-14);
        assert_eq!(gegenbauer_all(0, 10.0, 0.5).unwrap(), vec![1.0]);
        assert_eq!(gegenbauer_all(2, 10.0, 0.0).unwrap(), vec![1.0, 0.0, -10.0]);
    }

    #[test]
    fn gegenbauer_all_is_bitwise_consistent() {
        let all = gegenbauer_all(30, 15.0, 0.9).unwrap();
        for (n, v) in all.iter().enumerate() {
            assert_eq!(v.to_bits(), gegenbauer(n, 15.0, 0.9).unwrap().to_bits());
        }
    }

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi(0, 4.5, 9.5, 0.2).unwrap(), 1.0);
        for &(a, b, x) in &[(4.5, 9.5, 0.2), (-0.5, -0.5, 0.7), (0.3, -0.9, -0.4)] {
            let want = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
            assert!((jacobi(1, a, b, x).unwrap() - want).abs() < 1e-14);
        }
    }

    #[test]
    fn jacobi_legendre_special_case() {
        // a = b = 0 gives Legendre: P_2 = (3x^2 - 1)/2, P_3 = (5x^3 - 3x)/2.
        let x = 0.37;
        assert!((jacobi(2, 0.0, 0.0, x).unwrap() - (3.0 * x * x - 1.0) / 2.0).abs() < 1e-15);
        assert!((jacobi(3, 0.0, 0.0, x).unwrap() - (5.0 * x * x * x - 3.0 * x) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn jacobi_handles_a_plus_b_minus_one() {
        // Chebyshev-like pair (a, b) = (-1/2, -1/2); P_n(1) = Γ(n + 1/2) / (Γ(1/2) n!).
        let p = jacobi_all(6, -0.5, -0.5, 1.0).unwrap();
        let mut want = 1.0;
        for (n, v) in p.iter().enumerate() {
            assert!((v - want).abs() < 1e-14, "n={n}");
            want *= (n as f64 + 0.5) / (n as f64 + 1.0);
        }
        assert!(jacobi(3, -0.25, -0.75, 0.1).unwrap().is_finite());
    }

    #[test]
    fn parameter_domain() {
        assert!(gegenbauer(3, 0.0, 0.1).is_err());
        assert!(jacobi(3, -1.0, 0.5, 0.1).is_err());
        assert!(jacobi_all(3, 0.5, -2.0, 0.1).is_err());
    }
}
