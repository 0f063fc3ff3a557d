//! Independent reference implementations used only by tests.
#![allow(dead_code)]

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// Terminating ₂F₁(-n, b; c; z) summed exactly in rational arithmetic.
fn hyp2f1_terminating(n: usize, b: &BigRational, c: &BigRational, z: &BigRational) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for j in 0..n {
        let jj = BigRational::from_integer(BigInt::from(j));
        let minus_n = BigRational::from_integer(BigInt::from(-(n as i64)));
        term = term * (&minus_n + &jj) * (b + &jj) / ((c + &jj) * (&jj + BigRational::one())) * z;
        sum += &term;
    }
    sum
}

fn pochhammer(a: &BigRational, n: usize) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, j| acc * (a + BigRational::from_integer(BigInt::from(j))))
}

fn factorial(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, j| acc * BigRational::from_integer(BigInt::from(j)))
}

/// `C_n^ρ(x) = (2ρ)_n / n! · ₂F₁(-n, 2ρ+n; ρ+½; (1-x)/2)`, exact for binary `ρ`, `x`.
pub fn gegenbauer_exact(n: usize, rho: f64, x: f64) -> f64 {
    let (rho, x) = (rat(rho), rat(x));
    let two = BigRational::from_integer(BigInt::from(2));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let b = &two * &rho + BigRational::from_integer(BigInt::from(n));
    let c = &rho + &half;
    let z = (BigRational::one() - x) / &two;
    let value = pochhammer(&(&two * &rho), n) / factorial(n) * hyp2f1_terminating(n, &b, &c, &z);
    value.to_f64().unwrap()
}

/// `P_n^{(a,b)}(x) = (a+1)_n / n! · ₂F₁(-n, a+b+n+1; a+1; (1-x)/2)`.
pub fn jacobi_exact(n: usize, a: f64, b: f64, x: f64) -> f64 {
    let (a, b, x) = (rat(a), rat(b), rat(x));
    let two = BigRational::from_integer(BigInt::from(2));
    let a1 = &a + BigRational::one();
    let upper = &a + &b + BigRational::from_integer(BigInt::from(n + 1));
    let z = (BigRational::one() - x) / &two;
    let value = pochhammer(&a1, n) / factorial(n) * hyp2f1_terminating(n, &upper, &a1, &z);
    if value.is_zero() {
        0.0
    } else {
        value.to_f64().unwrap()
    }
}

/// Scale for an absolute error floor: the polynomial's sup-norm on `[-1, 1]`.
pub fn gegenbauer_scale(n: usize, rho: f64) -> f64 {
    gegenbauer_exact(n, rho, 1.0).abs()
}

pub fn jacobi_scale(n: usize, a: f64, b: f64) -> f64 {
    jacobi_exact(n, a, b, 1.0).abs().max(jacobi_exact(n, a, b, -1.0).abs())
}

/// `ln Γ(x)` for `x = m + 1/2` or integer `x`, by the recurrence down to
/// `Γ(1/2) = √π` or `Γ(1) = 1`.
pub fn log_gamma_by_recurrence(x: f64) -> f64 {
    let frac = x - x.floor();
    let (mut base, mut acc) = if frac == 0.5 {
        (0.5, 0.5 * std::f64::consts::PI.ln())
    } else {
        assert_eq!(frac, 0.0);
        (1.0, 0.0)
    };
    let mut terms = Vec::new();
    while base < x {
        terms.push(base);
        base += 1.0;
    }
    // Sum small terms first.
    for t in terms {
        acc += f64::ln(t);
    }
    acc
}

/// Direct `A(t) = Σ |d_n|² exp(i E_n t)` in absolute time.
pub fn autocorrelation_direct(probs: &[f64], energy: impl Fn(usize) -> f64, t: f64) -> (f64, f64) {
    probs.iter().enumerate().fold((0.0, 0.0), |(re, im), (n, p)| {
        let ph = energy(n) * t;
        (re + p * ph.cos(), im + p * ph.sin())
    })
}
