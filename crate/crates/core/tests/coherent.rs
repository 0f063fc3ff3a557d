#![allow(clippy::excessive_precision)]

use proptest::prelude::*;
use pt_revival::coherent::{coherence_for_peak, coefficients, distribution_stats};
use pt_revival::dynamics::Propagator;
use pt_revival::{aocs_coeffs, docs_coeffs, pt_docs_coeffs, CoefficientSet, Family, Potential, PtParams, SpatialGrid, SptParams};

fn spt(rho: f64) -> SptParams {
    SptParams::new(2.0, rho).unwrap()
}

fn assert_ratios(cs: &CoefficientSet, want: impl Fn(f64) -> f64) {
    assert!(cs.truncation() > 100, "need levels through 101, got N = {}", cs.truncation());
    for n in 0..=100 {
        let got = (cs.coeffs[n + 1] / cs.coeffs[n]).powi(2);
        let expect = want(n as f64);
        assert!((got - expect).abs() <= 1e-10 * expect, "n={n}: {got} vs {expect}");
    }
}

#[test]
fn docs_ratio_identity() {
    for rho in [1.5, 5.0, 10.0, 15.0] {
        let beta = 0.9;
        let cs = docs_coeffs(beta, &spt(rho), 1e-12).unwrap();
        assert_ratios(&cs, |n| {
            beta * beta * (rho + n + 0.5).powi(2) * (n + rho) / ((2.0 * rho + n) * (n + 1.0) * (n + rho + 1.0))
        });
    }
}

#[test]
fn aocs_ratio_identity() {
    for rho in [1.5, 5.0, 10.0, 15.0] {
        let gamma = 90.0;
        let cs = aocs_coeffs(gamma, &spt(rho), 1e-12).unwrap();
        assert_ratios(&cs, |n| gamma * gamma * (n + rho) / ((2.0 * rho + n) * (n + 1.0) * (n + rho + 1.0)));
    }
}

#[test]
fn pt_docs_ratio_identity() {
    let k = 5.0;
    for rho in [1.5, 5.0, 10.0, 15.0] {
        let beta = 0.9;
        let cs = pt_docs_coeffs(beta, &PtParams::new(2.0, rho, k).unwrap(), 1e-12).unwrap();
        assert_ratios(&cs, |n| {
            let s = k + rho + 2.0 * n;
            beta * beta * (k + n + 0.5) * (rho + n + 0.5) * s / ((s + 2.0) * (n + 1.0) * (k + rho + n))
        });
    }
}

#[test]
fn halving_tolerance_only_touches_the_tail() {
    let sets = [
        (Family::SptDocs, 0.8, Potential::from(spt(10.0))),
        (Family::SptAocs, 30.0, Potential::from(spt(10.0))),
        (Family::PtDocs, 0.5, Potential::from(PtParams::new(2.0, 5.0, 5.0).unwrap())),
    ];
    for (family, c, pot) in sets {
        for tol in [1e-6, 1e-8, 1e-10] {
            let a = coefficients(family, c, &pot, tol).unwrap();
            let b = coefficients(family, c, &pot, tol / 2.0).unwrap();
            assert!(b.truncation() >= a.truncation());
            for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                assert!((x.abs() - y.abs()).abs() < 1e-12, "{family} tol={tol}");
            }
        }
    }
}

#[test]
fn docs_golden_beta_08_rho_10() {
    let cs = docs_coeffs(0.8, &spt(10.0), 1e-8).unwrap();
    let golden = [0.1052468889664817, -0.18848518182356763, 0.25618052691105527, -0.3029654423470435];
    for (d, g) in cs.coeffs.iter().zip(golden) {
        assert!((d - g).abs() < 1e-13, "{d} vs {g}");
    }
    let s = cs.stats();
    assert_eq!(s.argmax, 5);
    assert_eq!(s.support, (0, 33));
    assert!((s.nbar - 6.7849739688123635).abs() < 1e-12);
    assert!((s.variance - 15.307897442741172).abs() < 1e-10);
}

#[test]
fn pt_docs_golden() {
    let cs = pt_docs_coeffs(0.8, &PtParams::new(2.0, 5.0, 5.0).unwrap(), 1e-10).unwrap();
    let golden = [
        0.32011409478118883,
        -0.40659950934528804,
        0.41733562469592661,
        -0.39038173072685778,
        0.3470727083728033,
        -0.29909302956050691,
    ];
    for (d, g) in cs.coeffs.iter().zip(golden) {
        assert!((d - g).abs() < 1e-13, "{d} vs {g}");
    }
    let cs = pt_docs_coeffs(0.1, &PtParams::new(2.0, 5.0, 5.0).unwrap(), 1e-10).unwrap();
    let p: Vec<f64> = cs.probabilities().collect();
    for (got, want) in p.iter().zip([0.975011, 0.0245784, 0.000404586, 5.53145e-6]) {
        assert!((got - want).abs() <= 1e-5 * want, "{got} vs {want}");
    }
}

#[test]
fn fig1_peak_scan() {
    let pot: Potential = spt(15.0).into();
    let beta = coherence_for_peak(Family::SptDocs, &pot, 9, 0.99, 1e-8).unwrap();
    assert!((0.8039..=0.8226).contains(&beta), "beta = {beta}");
    let gamma = coherence_for_peak(Family::SptAocs, &pot, 9, 100.0, 1e-8).unwrap();
    assert!((18.9..=20.15).contains(&gamma), "gamma = {gamma}");
    let docs = docs_coeffs(beta, &spt(15.0), 1e-8).unwrap().stats();
    let aocs = aocs_coeffs(gamma, &spt(15.0), 1e-8).unwrap().stats();
    assert_eq!((docs.argmax, aocs.argmax), (9, 9));
    assert!(aocs.variance < docs.variance);
    assert!(aocs.support.1 <= 30);
}

#[test]
fn larger_beta_is_flatter() {
    let p = spt(15.0);
    let mut last = 0.0;
    for beta in [0.5, 0.7, 0.8, 0.85, 0.9] {
        let v = docs_coeffs(beta, &p, 1e-8).unwrap().stats().variance;
        assert!(v > last, "beta={beta}");
        last = v;
    }
}

fn mean_xbar(cs: &CoefficientSet) -> f64 {
    let grid = SpatialGrid::gauss_legendre(&cs.potential, 800).unwrap();
    let prop = Propagator::new(cs, &grid).unwrap();
    prop.expectation(0.0, |y| (2.0 * y).sin())
}

#[test]
fn sign_convention_selects_the_wall() {
    let p = spt(10.0);
    let left = mean_xbar(&docs_coeffs(0.8, &p, 1e-10).unwrap());
    let right = mean_xbar(&docs_coeffs(-0.8, &p, 1e-10).unwrap());
    assert!((left + 0.7765).abs() < 1e-3, "{left}");
    assert!((left + right).abs() < 1e-12);
    let aocs = mean_xbar(&aocs_coeffs(30.0, &p, 1e-10).unwrap());
    assert!((aocs - 0.942).abs() < 1e-3, "{aocs}");
}

#[test]
fn single_level_stats() {
    let cs = CoefficientSet::from_coefficients(Family::SptDocs, 0.0, spt(10.0).into(), vec![1.0], 1e-8).unwrap();
    let s = distribution_stats(&cs);
    assert_eq!((s.nbar, s.variance, s.argmax, s.support), (0.0, 0.0, 0, (0, 0)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn docs_normalized_with_alternating_signs(beta in 0.01f64..0.95, rho in 1.05f64..20.0) {
        let cs = docs_coeffs(beta, &spt(rho), 1e-8).unwrap();
        prop_assert!((cs.probabilities().sum::<f64>() - 1.0).abs() < 1e-12);
        for (n, d) in cs.coeffs.iter().enumerate() {
            prop_assert_eq!(d.signum(), if n % 2 == 0 { 1.0 } else { -1.0 });
        }
    }

    #[test]
    fn aocs_normalized_and_positive(gamma in 0.1f64..200.0, rho in 1.05f64..20.0) {
        let cs = aocs_coeffs(gamma, &spt(rho), 1e-8).unwrap();
        prop_assert!((cs.probabilities().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(cs.coeffs.iter().all(|&d| d > 0.0));
    }

    #[test]
    fn pt_docs_normalized(beta in -0.95f64..0.95, rho in 1.05f64..12.0, k in 1.05f64..12.0) {
        let cs = pt_docs_coeffs(beta, &PtParams::new(2.0, rho, k).unwrap(), 1e-8).unwrap();
        prop_assert!((cs.probabilities().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
