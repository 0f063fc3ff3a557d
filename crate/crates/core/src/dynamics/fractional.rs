use num_complex::Complex64;

use crate::dynamics::{cycles_to_angle, revival_times, Propagator};
use crate::error::{Error, Result};

/// Decomposition of the state at `t = (r/s) T_rev` into `l` shifted
/// copies of the linearized ("classical") packet.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalRevival {
    pub r: u64,
    pub s: u64,
    /// Period of `n² r / s` modulo one: `s/2` when `4 | s`, else `s`.
    pub l: u64,
    /// `a_p = (1/l) Σ_{n<l} exp[2πi(np/l - n² r/s)]`.
    pub amplitudes: Vec<Complex64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn fractional_decomposition(r: u64, s: u64) -> Result<FractionalRevival> {
    if s == 0 {
        return Err(Error::domain("fractional revival needs s > 0"));
    }
    if gcd(r, s) != 1 {
        return Err(Error::domain(format!("r = {r} and s = {s} must be coprime")));
    }
    let l = if s.is_multiple_of(4) { s / 2 } else { s };
    let amplitudes = (0..l)
        .map(|p| {
            let sum: Complex64 = (0..l)
                .map(|n| {
                    let lin = ((n * p) % l) as f64 / l as f64;
                    let quad = ((u128::from(n) * u128::from(n) * u128::from(r)) % u128::from(s)) as f64 / s as f64;
                    Complex64::from_polar(1.0, cycles_to_angle(lin - quad))
                })
                .sum();
            sum / l as f64
        })
        .collect();
    Ok(FractionalRevival { r, s, l, amplitudes })
}

impl FractionalRevival {
    pub fn time(&self) -> f64 {
        self.r as f64 / self.s as f64
    }

    pub fn unitarity(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// One cross term `2 Re(conj(a_p χ_p) a_q χ_q)` of the fractional density.
#[derive(Clone, Debug, PartialEq)]
pub struct PairTerm {
    /// One-based sub-packet labels, `first < second`.
    pub pair: (usize, usize),
    pub values: Vec<f64>,
    /// `∫ |term| dy`.
    pub l1: f64,
    /// `∫ |Re(conj(χ_p) χ_q)| dy`, without the amplitude phases.
    pub raw_l1: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterferenceReport {
    pub decomposition: FractionalRevival,
    pub tcl_over_trev: f64,
    /// `|a_p|² |χ_p|²` for each sub-packet.
    pub subpacket_densities: Vec<Vec<f64>>,
    pub pairs: Vec<PairTerm>,
    /// Indices into `pairs`, strongest `l1` first.
    pub ranking: Vec<usize>,
}

impl InterferenceReport {
    pub fn pair(&self, first: usize, second: usize) -> Option<&PairTerm> {
        self.pairs.iter().find(|p| p.pair == (first, second))
    }

    /// Sum of every sub-packet density and cross term.
    pub fn total_density(&self) -> Vec<f64> {
        let mut total = vec![0.0; self.subpacket_densities[0].len()];
        for d in self.subpacket_densities.iter().chain(self.pairs.iter().map(|p| &p.values)) {
            total.iter_mut().zip(d).for_each(|(t, v)| *t += v);
        }
        total
    }
}

impl Propagator<'_> {
    /// Sub-packets `χ_cl(τ₀ + p τ_cl / l)` for `p = 0..l`, at `τ₀ = r/s`.
    pub fn subpackets(&self, frac: &FractionalRevival, tcl_over_trev: f64) -> Vec<Vec<Complex64>> {
        let tau0 = frac.time();
        (0..frac.l)
            .map(|p| self.classical_field(tau0 + p as f64 * tcl_over_trev / frac.l as f64, tcl_over_trev))
            .collect()
    }

    /// `e^{-iE_0 t} Σ_p a_p χ_cl(τ₀ + p τ_cl / l)`.
    ///
    /// Equal to the evolved state at `τ₀` when `T_rev / T_cl` is the linear
    /// coefficient of the level cycles; the prefactor restores the global
    /// phase the linearized packet drops.
    pub fn fractional_reconstruction(&self, frac: &FractionalRevival, tcl_over_trev: f64) -> Vec<Complex64> {
        let tau0 = frac.time();
        let global = Complex64::from_polar(1.0, -cycles_to_angle(self.coefficients().potential.revival_cycles(0) * tau0));
        let mut out = vec![Complex64::new(0.0, 0.0); self.grid().len()];
        for (a, packet) in frac.amplitudes.iter().zip(self.subpackets(frac, tcl_over_trev)) {
            for (o, v) in out.iter_mut().zip(packet) {
                *o += global * a * v;
            }
        }
        out
    }

    pub fn interference(&self, frac: &FractionalRevival, tcl_over_trev: f64) -> InterferenceReport {
        let packets = self.subpackets(frac, tcl_over_trev);
        let grid = self.grid();
        let weighted: Vec<Vec<Complex64>> = frac
            .amplitudes
            .iter()
            .zip(&packets)
            .map(|(a, p)| p.iter().map(|v| a * v).collect())
            .collect();
        let subpacket_densities = weighted.iter().map(|p| p.iter().map(|v| v.norm_sqr()).collect()).collect();
        let mut pairs = Vec::new();
        for i in 0..packets.len() {
            for j in i + 1..packets.len() {
                let values: Vec<f64> =
                    weighted[i].iter().zip(&weighted[j]).map(|(u, v)| 2.0 * (u.conj() * v).re).collect();
                let raw = packets[i].iter().zip(&packets[j]).map(|(u, v)| (u.conj() * v).re.abs());
                pairs.push(PairTerm {
                    pair: (i + 1, j + 1),
                    l1: grid.integrate(values.iter().map(|v| v.abs())),
                    raw_l1: grid.integrate(raw),
                    values,
                });
            }
        }
        let mut ranking: Vec<usize> = (0..pairs.len()).collect();
        ranking.sort_by(|&a, &b| pairs[b].l1.total_cmp(&pairs[a].l1));
        InterferenceReport { decomposition: frac.clone(), tcl_over_trev, subpacket_densities, pairs, ranking }
    }
}

/// Four-packet analysis at `T_rev / 8` using the ground-level classical period.
pub fn eighth_revival_interference(prop: &Propagator<'_>) -> InterferenceReport {
    let frac = fractional_decomposition(1, 8).expect("1 and 8 are coprime");
    let tcl = revival_times(&prop.coefficients().potential, 0.0).t_cl_ground_over_trev();
    prop.interference(&frac, tcl)
}
