//! Coherent-state expansion coefficients over the bound-state basis.
//!
//! Three families are built here: displacement-operator states of the
//! symmetric well (`d_n ∝ (-β)^n`), annihilation-operator states of the
//! symmetric well (`d_n ∝ γ^n`), and displacement-operator states of the
//! general well. Coefficients are generated in log space, truncated once
//! a geometric majorant certifies the dropped tail, and L²-normalized.

use std::fmt;
use std::io::{BufRead, Write};

use crate::eigensystem::{Potential, PtParams, SptParams};
use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma_unchecked as lgamma;

/// Hard cap on the number of generated terms.
pub const MAX_TERMS: usize = 10_000;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SptDocs,
    SptAocs,
    PtDocs,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SptDocs => "spt-docs",
            Family::SptAocs => "spt-aocs",
            Family::PtDocs => "pt-docs",
        })
    }
}

/// Truncated, normalized coefficients `d_0..d_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientSet {
    pub family: Family,
    /// β for displacement-type states, γ for the annihilation-type state.
    pub coherence: f64,
    pub potential: Potential,
    pub coeffs: Vec<f64>,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistributionStats {
    pub nbar: f64,
    pub variance: f64,
    pub argmax: usize,
    /// Smallest interval holding every `n` with `|d_n|² ≥ 1e-4 · max`.
    pub support: (usize, usize),
}

/// Log-magnitude and sign of the unnormalized `d_n`, plus a bound
/// `q(N) ≥ |d_{m+1} / d_m|` valid for every `m ≥ N`.
trait Recipe {
    fn log_term(&self, n: usize) -> (f64, i8);
    fn ratio_bound(&self, n: usize) -> f64;
}

struct SptDocs {
    beta: f64,
    rho: f64,
}

impl Recipe for SptDocs {
    fn log_term(&self, n: usize) -> (f64, i8) {
        let nf = n as f64;
        let rho = self.rho;
        let log = nf * self.beta.abs().ln() + lgamma(rho + nf + 0.5)
            - 0.5 * (lgamma(2.0 * rho + nf) + lgamma(nf + 1.0) + (nf + rho).ln());
        (log, alternating(-self.beta, n))
    }

    fn ratio_bound(&self, n: usize) -> f64 {
        let nf = n as f64;
        let excess = (self.rho - 0.5).powi(2) / ((nf + 2.0 * self.rho) * (nf + 1.0));
        self.beta.abs() * (1.0 + excess).sqrt()
    }
}

struct SptAocs {
    gamma: f64,
    rho: f64,
}

impl Recipe for SptAocs {
    fn log_term(&self, n: usize) -> (f64, i8) {
        let nf = n as f64;
        let log = nf * self.gamma.abs().ln()
            - 0.5 * (lgamma(2.0 * self.rho + nf) + lgamma(nf + 1.0) + (nf + self.rho).ln());
        (log, alternating(self.gamma, n))
    }

    fn ratio_bound(&self, n: usize) -> f64 {
        let nf = n as f64;
        self.gamma.abs() / ((nf + 2.0 * self.rho) * (nf + 1.0)).sqrt()
    }
}

struct PtDocs {
    beta: f64,
    rho: f64,
    k: f64,
}

impl Recipe for PtDocs {
    fn log_term(&self, n: usize) -> (f64, i8) {
        let nf = n as f64;
        let (rho, k) = (self.rho, self.k);
        let log = nf * self.beta.abs().ln()
            + 0.5
                * (lgamma(k + nf + 0.5) + lgamma(rho + nf + 0.5)
                    - (k + rho + 2.0 * nf).ln()
                    - lgamma(nf + 1.0)
                    - lgamma(k + rho + nf));
        (log, alternating(-self.beta, n))
    }

    fn ratio_bound(&self, n: usize) -> f64 {
        let nf = n as f64;
        let excess = (self.k - 0.5) * (self.rho - 0.5) / ((nf + 1.0) * (nf + self.k + self.rho));
        self.beta.abs() * (1.0 + excess).sqrt()
    }
}

fn alternating(base: f64, n: usize) -> i8 {
    if base < 0.0 && n % 2 == 1 {
        -1
    } else {
        1
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("truncation tolerance must lie in (0, 1), got {tol}")))
    }
}

fn build(
    family: Family,
    coherence: f64,
    potential: Potential,
    tol: f64,
    recipe: &dyn Recipe,
) -> Result<CoefficientSet> {
    check_tol(tol)?;
    if !coherence.is_finite() {
        return Err(Error::domain(format!("coherence parameter must be finite, got {coherence}")));
    }
    if coherence == 0.0 {
        return Ok(CoefficientSet { family, coherence, potential, coeffs: vec![1.0], tol });
    }

    let log_tol = tol.ln();
    let mut terms: Vec<(f64, i8)> = Vec::new();
    let mut max_log = f64::NEG_INFINITY;
    let mut last = None;
    for n in 0..MAX_TERMS {
        let term = recipe.log_term(n);
        terms.push(term);
        max_log = max_log.max(term.0);
        if term.0 - max_log >= log_tol {
            continue;
        }
        let q = recipe.ratio_bound(n);
        if q >= 1.0 {
            continue;
        }
        // Mass relative to the peak: retained ≥ 1, dropped ≤ |d_n|² q²/(1 - q²).
        let rel_last = 2.0 * (term.0 - max_log);
        let tail = rel_last.exp() * q * q / (1.0 - q * q);
        if tail < tol * tol {
            last = Some(n);
            break;
        }
    }
    let Some(last) = last else {
        return Err(Error::NonConvergence { terms: MAX_TERMS, param: coherence });
    };

    let mut coeffs: Vec<f64> = terms[..=last]
        .iter()
        .map(|&(log, sign)| f64::from(sign) * (log - max_log).exp())
        .collect();
    let norm = coeffs.iter().map(|d| d * d).sum::<f64>().sqrt();
    coeffs.iter_mut().for_each(|d| *d /= norm);
    Ok(CoefficientSet { family, coherence, potential, coeffs, tol })
}

/// Displacement-operator coherent state of the symmetric well.
pub fn docs_coeffs(beta: f64, params: &SptParams, tol: f64) -> Result<CoefficientSet> {
    let recipe = SptDocs { beta, rho: params.rho };
    build(Family::SptDocs, beta, Potential::Symmetric(*params), tol, &recipe)
}

/// Annihilation-operator coherent state of the symmetric well.
pub fn aocs_coeffs(gamma: f64, params: &SptParams, tol: f64) -> Result<CoefficientSet> {
    let recipe = SptAocs { gamma, rho: params.rho };
    build(Family::SptAocs, gamma, Potential::Symmetric(*params), tol, &recipe)
}

/// Displacement-operator coherent state of the general well.
pub fn pt_docs_coeffs(beta: f64, params: &PtParams, tol: f64) -> Result<CoefficientSet> {
    let recipe = PtDocs { beta, rho: params.rho, k: params.k };
    build(Family::PtDocs, beta, Potential::General(*params), tol, &recipe)
}

/// Dispatch on family; `potential` must match the family's well.
pub fn coefficients(family: Family, coherence: f64, potential: &Potential, tol: f64) -> Result<CoefficientSet> {
    match (family, potential) {
        (Family::SptDocs, Potential::Symmetric(p)) => docs_coeffs(coherence, p, tol),
        (Family::SptAocs, Potential::Symmetric(p)) => aocs_coeffs(coherence, p, tol),
        (Family::PtDocs, Potential::General(p)) => pt_docs_coeffs(coherence, p, tol),
        _ => Err(Error::domain(format!("family {family} does not match the supplied potential"))),
    }
}

impl CoefficientSet {
    /// Wrap externally produced coefficients; they must already be normalized.
    pub fn from_coefficients(
        family: Family,
        coherence: f64,
        potential: Potential,
        coeffs: Vec<f64>,
        tol: f64,
    ) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|d| !d.is_finite()) {
            return Err(Error::domain("coefficients must be a nonempty list of finite values"));
        }
        let norm: f64 = coeffs.iter().map(|d| d * d).sum();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::domain(format!("coefficients are not normalized (sum of squares {norm})")));
        }
        Ok(CoefficientSet { family, coherence, potential, coeffs, tol })
    }

    /// Truncation index `N` (last retained level).
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.coeffs.iter().map(|d| d * d)
    }

    pub fn mean_energy(&self) -> f64 {
        self.probabilities().enumerate().map(|(n, p)| p * self.potential.energy(n)).sum()
    }

    pub fn stats(&self) -> DistributionStats {
        distribution_stats(self)
    }

    /// CSV with header `n,d_n`, 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "n,d_n")?;
        for (n, d) in self.coeffs.iter().enumerate() {
            writeln!(out, "{n},{d:.16e}")?;
        }
        Ok(())
    }

    /// Read coefficients written by [`CoefficientSet::write_csv`].
    pub fn read_csv<R: BufRead>(
        input: R,
        family: Family,
        coherence: f64,
        potential: Potential,
        tol: f64,
    ) -> Result<Self> {
        let mut lines = input.lines();
        match lines.next().transpose()? {
            Some(h) if h.trim() == "n,d_n" => {}
            other => return Err(Error::Parse(format!("expected header `n,d_n`, found {other:?}"))),
        }
        let mut coeffs = Vec::new();
        for (row, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (n, d) = line
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("row {row}: expected `n,d_n`")))?;
            let n: usize = n.trim().parse().map_err(|e| Error::Parse(format!("row {row}: {e}")))?;
            if n != coeffs.len() {
                return Err(Error::Parse(format!("row {row}: expected index {}, found {n}", coeffs.len())));
            }
            coeffs.push(d.trim().parse::<f64>().map_err(|e| Error::Parse(format!("row {row}: {e}")))?);
        }
        Self::from_coefficients(family, coherence, potential, coeffs, tol)
    }
}

pub fn distribution_stats(cs: &CoefficientSet) -> DistributionStats {
    let probs: Vec<f64> = cs.probabilities().collect();
    let nbar: f64 = probs.iter().enumerate().map(|(n, p)| n as f64 * p).sum();
    let variance = probs.iter().enumerate().map(|(n, p)| (n as f64 - nbar).powi(2) * p).sum();
    let (argmax, &max) = probs
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("coefficient set is never empty");
    let threshold = 1e-4 * max;
    let lo = probs.iter().position(|&p| p >= threshold).unwrap_or(0);
    let hi = probs.iter().rposition(|&p| p >= threshold).unwrap_or(0);
    DistributionStats { nbar, variance, argmax, support: (lo, hi) }
}

/// Coherence parameter placing the peak of `|d_n|²` at `target`.
///
/// Bisects for the parameter interval on which the argmax equals `target`
/// and returns its midpoint. `upper` bounds the search.
pub fn coherence_for_peak(family: Family, potential: &Potential, target: usize, upper: f64, tol: f64) -> Result<f64> {
    let argmax = |c: f64| -> Result<usize> { Ok(coefficients(family, c, potential, tol)?.stats().argmax) };
    // Smallest parameter whose argmax reaches `level`.
    let threshold = |level: usize| -> Result<f64> {
        let (mut lo, mut hi) = (0.0, upper);
        if argmax(hi)? < level {
            return Err(Error::domain(format!("no coherence parameter below {upper} peaks at n = {level}")));
        }
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if argmax(mid)? >= level {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo < 1e-12 * upper {
                break;
            }
        }
        Ok(hi)
    };
    let enter = threshold(target)?;
    let leave = threshold(target + 1).unwrap_or(upper);
    let mid = 0.5 * (enter + leave);
    if argmax(mid)? != target {
        return Err(Error::Numerical(format!("peak scan did not isolate n = {target}")));
    }
    Ok(mid)
}
