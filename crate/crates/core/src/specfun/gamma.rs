use std::ops::{Div, Mul};

use crate::error::{Error, Result};

// Lanczos approximation, g = 671/128, 14 terms. Digits kept as published.
const LANCZOS_G: f64 = 5.242_187_5;
#[allow(clippy::excessive_precision)]
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// Natural log of the gamma function for positive real arguments.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_unchecked(x))
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    let tmp = x + LANCZOS_G;
    let lead = (x + 0.5) * tmp.ln() - tmp;
    let mut denom = x;
    let mut series = LANCZOS_C0;
    for c in LANCZOS_COEFFS {
        denom += 1.0;
        series += c / denom;
    }
    lead + (SQRT_TWO_PI * series / x).ln()
}

/// A real number stored as sign and log-magnitude.
///
/// Products and quotients stay in log space; `value()` exponentiates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogWeight {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl LogWeight {
    pub const ZERO: LogWeight = LogWeight { log_magnitude: f64::NEG_INFINITY, sign: 0 };
    pub const ONE: LogWeight = LogWeight { log_magnitude: 0.0, sign: 1 };

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            LogWeight { log_magnitude: v.abs().ln(), sign: if v > 0.0 { 1 } else { -1 } }
        }
    }

    /// `Γ(x)` for `x > 0`.
    pub fn gamma(x: f64) -> Result<Self> {
        Ok(LogWeight { log_magnitude: log_gamma(x)?, sign: 1 })
    }

    /// `x^n` with `n` a nonnegative integer, sign tracked exactly.
    pub fn powi(x: f64, n: u32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        if x == 0.0 {
            return Self::ZERO;
        }
        let sign = if x < 0.0 && n % 2 == 1 { -1 } else { 1 };
        LogWeight { log_magnitude: n as f64 * x.abs().ln(), sign }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Square root of a nonnegative weight.
    pub fn sqrt(self) -> Self {
        debug_assert!(self.sign >= 0);
        LogWeight { log_magnitude: 0.5 * self.log_magnitude, sign: self.sign }
    }

    pub fn recip(self) -> Self {
        assert!(self.sign != 0, "reciprocal of zero LogWeight");
        LogWeight { log_magnitude: -self.log_magnitude, sign: self.sign }
    }

    pub fn value(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_magnitude.exp(),
        }
    }
}

impl Mul for LogWeight {
    type Output = LogWeight;

    fn mul(self, rhs: LogWeight) -> LogWeight {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        LogWeight { log_magnitude: self.log_magnitude + rhs.log_magnitude, sign: self.sign * rhs.sign }
    }
}

impl Div for LogWeight {
    type Output = LogWeight;

    fn div(self, rhs: LogWeight) -> LogWeight {
        assert!(rhs.sign != 0, "division by zero LogWeight");
        LogWeight { log_magnitude: self.log_magnitude - rhs.log_magnitude, sign: self.sign * rhs.sign }
    }
}

impl Mul<f64> for LogWeight {
    type Output = LogWeight;

    fn mul(self, rhs: f64) -> LogWeight {
        self * LogWeight::from_value(rhs)
    }
}

impl Div<f64> for LogWeight {
    type Output = LogWeight;

    fn div(self, rhs: f64) -> LogWeight {
        self / LogWeight::from_value(rhs)
    }
}
