use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Symmetric Pöschl-Teller well.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SptParams {
    pub alpha: f64,
    pub rho: f64,
    pub mass: f64,
}

/// General trigonometric Pöschl-Teller well with a second strength `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PtParams {
    pub alpha: f64,
    pub rho: f64,
    pub k: f64,
    pub mass: f64,
}

fn check(name: &str, value: f64, lower: f64) -> Result<()> {
    if value.is_finite() && value > lower {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must satisfy {name} > {lower}, got {value}")))
    }
}

impl SptParams {
    pub fn new(alpha: f64, rho: f64) -> Result<Self> {
        Self::with_mass(alpha, rho, 1.0)
    }

    pub fn with_mass(alpha: f64, rho: f64, mass: f64) -> Result<Self> {
        check("alpha", alpha, 0.0)?;
        check("rho", rho, 1.0)?;
        check("mass", mass, 0.0)?;
        Ok(SptParams { alpha, rho, mass })
    }

    /// `E_n = (α²/2m)(n + ρ)²`.
    pub fn energy(&self, n: usize) -> f64 {
        let q = n as f64 + self.rho;
        self.alpha * self.alpha / (2.0 * self.mass) * q * q
    }

    pub fn potential(&self, y: f64) -> Result<f64> {
        let half_width = PI / (2.0 * self.alpha);
        if !(y.abs() < half_width) {
            return Err(Error::domain(format!("y = {y} outside the open well (-{half_width}, {half_width})")));
        }
        let c = (self.alpha * y).cos();
        Ok(self.alpha * self.alpha / (2.0 * self.mass) * self.rho * (self.rho - 1.0) / (c * c))
    }
}

impl PtParams {
    pub fn new(alpha: f64, rho: f64, k: f64) -> Result<Self> {
        Self::with_mass(alpha, rho, k, 1.0)
    }

    pub fn with_mass(alpha: f64, rho: f64, k: f64, mass: f64) -> Result<Self> {
        check("alpha", alpha, 0.0)?;
        check("rho", rho, 1.0)?;
        check("k", k, 1.0)?;
        check("mass", mass, 0.0)?;
        Ok(PtParams { alpha, rho, k, mass })
    }

    /// `E_n = (α²/2m)(2n + ρ + k)²`, so that `E_{n+1} - E_n = (2α²/m)(2n + ρ + k + 1)`.
    pub fn energy(&self, n: usize) -> f64 {
        let q = 2.0 * n as f64 + self.rho + self.k;
        self.alpha * self.alpha / (2.0 * self.mass) * q * q
    }

    pub fn potential(&self, y: f64) -> Result<f64> {
        let width = PI / (2.0 * self.alpha);
        if !(y > 0.0 && y < width) {
            return Err(Error::domain(format!("y = {y} outside the open well (0, {width})")));
        }
        let (s, c) = (self.alpha * y).sin_cos();
        let scale = self.alpha * self.alpha / (2.0 * self.mass);
        Ok(scale * (self.rho * (self.rho - 1.0) / (c * c) + self.k * (self.k - 1.0) / (s * s)))
    }

    /// Location of the potential minimum inside `(0, π/2α)`.
    pub fn potential_minimum(&self) -> f64 {
        let ratio = self.k * (self.k - 1.0) / (self.rho * (self.rho - 1.0));
        ratio.powf(0.25).atan() / self.alpha
    }
}

/// Either well family; the dynamics code is written against this.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Potential {
    Symmetric(SptParams),
    General(PtParams),
}

impl From<SptParams> for Potential {
    fn from(p: SptParams) -> Self {
        Potential::Symmetric(p)
    }
}

impl From<PtParams> for Potential {
    fn from(p: PtParams) -> Self {
        Potential::General(p)
    }
}

impl Potential {
    pub fn alpha(&self) -> f64 {
        match self {
            Potential::Symmetric(p) => p.alpha,
            Potential::General(p) => p.alpha,
        }
    }

    pub fn mass(&self) -> f64 {
        match self {
            Potential::Symmetric(p) => p.mass,
            Potential::General(p) => p.mass,
        }
    }

    pub fn energy(&self, n: usize) -> f64 {
        match self {
            Potential::Symmetric(p) => p.energy(n),
            Potential::General(p) => p.energy(n),
        }
    }

    pub fn potential(&self, y: f64) -> Result<f64> {
        match self {
            Potential::Symmetric(p) => p.potential(y),
            Potential::General(p) => p.potential(y),
        }
    }

    /// Open interval of the physical coordinate `y`.
    pub fn domain(&self) -> (f64, f64) {
        let w = PI / (2.0 * self.alpha());
        match self {
            Potential::Symmetric(_) => (-w, w),
            Potential::General(_) => (0.0, w),
        }
    }

    /// Physical coordinate to the polynomial variable (`x̄` or `u`).
    pub fn natural(&self, y: f64) -> f64 {
        let s = (self.alpha() * y).sin();
        match self {
            Potential::Symmetric(_) => s,
            Potential::General(_) => s * s,
        }
    }

    /// Inverse of [`Potential::natural`].
    pub fn physical(&self, natural: f64) -> f64 {
        match self {
            Potential::Symmetric(_) => natural.asin() / self.alpha(),
            Potential::General(_) => natural.sqrt().asin() / self.alpha(),
        }
    }

    /// Revival time: `4πm/α²` (symmetric), `πm/α²` (general).
    pub fn revival_time(&self) -> f64 {
        let base = PI * self.mass() / (self.alpha() * self.alpha());
        match self {
            Potential::Symmetric(_) => 4.0 * base,
            Potential::General(_) => base,
        }
    }

    /// `E_n T_rev / 2π`: the number of phase cycles level `n` winds through
    /// in one revival time. Quadratic in `n` with unit leading coefficient.
    pub fn revival_cycles(&self, n: usize) -> f64 {
        match self {
            Potential::Symmetric(p) => {
                let q = n as f64 + p.rho;
                q * q
            }
            Potential::General(p) => {
                let q = 2.0 * n as f64 + p.rho + p.k;
                q * q / 4.0
            }
        }
    }

    /// `dE/dn` at real `n`.
    pub fn energy_slope(&self, n: f64) -> f64 {
        let a2m = self.alpha() * self.alpha() / self.mass();
        match self {
            Potential::Symmetric(p) => a2m * (n + p.rho),
            Potential::General(p) => 2.0 * a2m * (2.0 * n + p.rho + p.k),
        }
    }

    /// Linear coefficient `b` of `revival_cycles(n) - revival_cycles(0) = n² + b n`.
    /// Equals `T_rev / T_cl` for the classical period taken at the ground level.
    pub fn linear_cycles(&self) -> f64 {
        match self {
            Potential::Symmetric(p) => 2.0 * p.rho,
            Potential::General(p) => p.rho + p.k,
        }
    }
}
