//! Property tests for the module invariants: series-tail bounds at the
//! stated orders, Taylor round-trips, truncation rules, and algebraic
//! identities of the Fock layer.

use num_complex::Complex64;
use proptest::prelude::*;

use gfstates::fock::{self, CoefficientSeries, Family, Ladder, QuantumLabel};
use gfstates::genfun::{self, GeneratingFunction, Parity};
use gfstates::specfun;
use gfstates::states;
use gfstates::verify::{integrate_radial, Support};

/// |closed - series(N)| ≤ 10 · (local tail envelope), with a small floor for
/// the rounding that dominates once the series has fully converged. The
/// envelope is the largest of the last four included terms: oscillatory
/// kernels put isolated zeros in the term sequence, so the literal final
/// term alone can spuriously undershoot the tail.
fn tail_bound(spec: &GeneratingFunction, x: f64, t: Complex64, order: usize) -> Result<(), TestCaseError> {
    let closed = genfun::gf_closed(spec, x, t).unwrap();
    let (sum, _) = genfun::gf_series(spec, x, t, order).unwrap();
    let mut envelope = 0.0_f64;
    for back in 0..4 {
        let (_, last) = genfun::gf_series(spec, x, t, order - back).unwrap();
        envelope = envelope.max(last);
    }
    let bound = 10.0 * envelope + 1e-11 * closed.norm().max(1.0);
    prop_assert!(
        (closed - sum).norm() <= bound,
        "{spec:?} x={x} t={t}: diff {} > bound {}",
        (closed - sum).norm(),
        bound
    );
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        // fixed seed: identical runs explore identical grids
        rng_seed: proptest::test_runner::RngSeed::Fixed(987654321),
        failure_persistence: None,
        .. ProptestConfig::default()
    })]

    #[test]
    fn gf_tail_bound_hermite(x in -3.0..3.0f64, r in 0.0..1.5f64, arg in 0.0..std::f64::consts::TAU) {
        tail_bound(&GeneratingFunction::Hermite, x, Complex64::from_polar(r, arg), 60)?;
    }

    #[test]
    fn gf_tail_bound_legendre(m in 0u32..5, x in -0.9..0.9f64, r in 0.0..0.8f64, arg in 0.0..std::f64::consts::TAU) {
        tail_bound(&GeneratingFunction::LegendreM { m }, x, Complex64::from_polar(r, arg), 80)?;
    }

    #[test]
    fn gf_tail_bound_laguerre_plus(mi in 0usize..3, x in 0.0..8.0f64, z in 0.0..3.0f64) {
        let m = [0.5, 1.0, 2.0][mi];
        tail_bound(&GeneratingFunction::LaguerrePlus { m }, x, Complex64::new(z, 0.0), 80)?;
    }

    #[test]
    fn gf_tail_bound_laguerre_minus(m in 0.0..5.0f64, x in 0.0..5.0f64, r in 0.0..0.8f64, arg in 0.0..std::f64::consts::TAU) {
        tail_bound(&GeneratingFunction::LaguerreMinus { m }, x, Complex64::from_polar(r, arg), 80)?;
    }

    #[test]
    fn gf_tail_bound_laguerre_zero(m in 0u32..6, x in 0.0..5.0f64, r in 0.0..0.8f64, arg in 0.0..std::f64::consts::TAU) {
        tail_bound(&GeneratingFunction::LaguerreZero { m: m as f64 }, x, Complex64::from_polar(r, arg), 80)?;
    }

    #[test]
    fn gf_tail_bound_bessel(k in 0u32..4, beta in 1.0..2.0f64, x in 0.2..4.0f64, r in 0.0..0.5f64, arg in 0.0..std::f64::consts::TAU, odd in any::<bool>()) {
        let spec = if odd {
            GeneratingFunction::BesselOdd { k, beta }
        } else {
            GeneratingFunction::BesselEven { k, beta }
        };
        tail_bound(&spec, x, Complex64::from_polar(r, arg), 40)?;
    }

    // re-summing extracted Taylor coefficients reproduces the closed form
    // inside half the convergence radius
    #[test]
    fn taylor_roundtrip_legendre(m in 0u32..5, x in -0.9..0.9f64, r in 0.0..0.5f64, arg in 0.0..std::f64::consts::TAU) {
        let spec = GeneratingFunction::LegendreM { m };
        let ts = genfun::extract_taylor(&spec, x, 120).unwrap();
        let t = Complex64::from_polar(r, arg);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut tp = Complex64::new(1.0, 0.0);
        for &c in &ts.coeffs {
            sum += c * tp;
            tp *= t;
        }
        let closed = genfun::gf_closed(&spec, x, t).unwrap();
        prop_assert!((closed - sum).norm() <= 1e-9 * closed.norm().max(1.0));
    }

    #[test]
    fn taylor_roundtrip_bessel_odd(k in 0u32..4, beta in 1.0..2.0f64, x in 0.2..4.0f64, r in 0.0..0.25f64) {
        let spec = GeneratingFunction::BesselOdd { k, beta };
        let ts = genfun::extract_taylor(&spec, x, 40).unwrap();
        let t = Complex64::new(r, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut tp = Complex64::new(1.0, 0.0);
        for &c in &ts.coeffs {
            sum += c * tp;
            tp *= t;
        }
        let closed = genfun::gf_closed(&spec, x, t).unwrap();
        prop_assert!((closed - sum).norm() <= 1e-9 * closed.norm().max(1.0));
    }

    // normalization at the stated truncation rules
    #[test]
    fn canonical_norm_tail(zre in -2.0..2.0f64, zim in -2.0..2.0f64) {
        let z = Complex64::new(zre, zim);
        let n = states::truncation_entire(z.norm());
        let s = states::canonical_cs(z, n).unwrap();
        prop_assert!((s.norm_sq() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn legendre_norm_tail(m in 0u32..6, r in 0.0..0.9f64, arg in 0.0..std::f64::consts::TAU) {
        let z = Complex64::from_polar(r, arg);
        let n = states::truncation_disc(r);
        let s = states::legendre_cs(m, z, n).unwrap();
        prop_assert!((s.norm_sq() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn bessel_cs_norm_tail(k in 0u32..3, r in 0.0..3.0f64, arg in 0.0..std::f64::consts::TAU, odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let z = Complex64::from_polar(r, arg);
        let n = states::truncation_entire(r);
        let s = states::bessel_cs(parity, k, z, n).unwrap();
        prop_assert!((s.norm_sq() - 1.0).abs() < 1e-10);
    }

    // overlap positivity: self-overlap 1, Cauchy-Schwarz for pairs
    #[test]
    fn overlap_cauchy_schwarz(m in 0u32..4, r1 in 0.0..0.85f64, a1 in 0.0..std::f64::consts::TAU, r2 in 0.0..0.85f64, a2 in 0.0..std::f64::consts::TAU) {
        let n = states::truncation_disc(r1.max(r2)) + 100;
        let s1 = states::legendre_cs(m, Complex64::from_polar(r1, a1), n).unwrap();
        let s2 = states::legendre_cs(m, Complex64::from_polar(r2, a2), n).unwrap();
        let self1 = fock::inner_product(&s1, &s1).unwrap();
        prop_assert!((self1.re - 1.0).abs() < 1e-9);
        let ip = fock::inner_product(&s1, &s2).unwrap();
        prop_assert!(ip.norm() <= 1.0 + 1e-10);
    }

    // coherent states stay lowering-eigenvectors across their parameter space
    #[test]
    fn bg_eigen_residual(lambda in -0.45..3.0f64, zre in -1.5..1.5f64, zim in -1.5..1.5f64) {
        let z = Complex64::new(zre, zim);
        let s = states::cs_bg(lambda, z, 60).unwrap();
        let res = fock::eigen_residual(Ladder::Su11Lower, &s, -z).unwrap();
        prop_assert!(res < 1e-12);
    }

    #[test]
    fn landau_eigen_residual(m in 0u32..5, wre in -1.0..1.0f64, wim in -1.0..1.0f64) {
        let w = Complex64::new(wre, wim);
        let s = states::landau_cs(m, w, 60).unwrap();
        let res = fock::eigen_residual(Ladder::LandauA, &s, w).unwrap();
        prop_assert!(res < 1e-12);
    }

    // ⟨a|b⟩ = conj(⟨b|a⟩)
    #[test]
    fn inner_product_hermitian(coeffs in proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 5..20)) {
        let labels: Vec<QuantumLabel> = (0..coeffs.len() as u32).map(|n| QuantumLabel::Sho { n }).collect();
        let c1: Vec<Complex64> = coeffs.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
        let c2: Vec<Complex64> = coeffs.iter().rev().map(|&(a, b)| Complex64::new(b, -a)).collect();
        let s1 = CoefficientSeries::new(Family::Sho, labels.clone(), c1).unwrap();
        let s2 = CoefficientSeries::new(Family::Sho, labels, c2).unwrap();
        let ab = fock::inner_product(&s1, &s2).unwrap();
        let ba = fock::inner_product(&s2, &s1).unwrap();
        prop_assert!((ab - ba.conj()).norm() < 1e-13);
    }

    // half-line quadrature against the gamma-function identity
    #[test]
    fn quadrature_gamma_identity(p in 0.0..6.0f64, a in 0.5..3.0f64) {
        let exact = (specfun::ln_gamma(p + 1.0) - (p + 1.0) * a.ln()).exp();
        let q = integrate_radial(&|r: f64| r.powf(p) * (-a * r).exp() / exact, Support::HalfLine, 1e-11).unwrap();
        prop_assert!((q.value - 1.0).abs() < 1e-9);
    }
}

// deterministic spot checks of grid corners the random strategies may miss
#[test]
fn gf_tail_bound_grid_corners() {
    for (spec, x, t, order) in [
        (GeneratingFunction::LegendreM { m: 4 }, 0.9, Complex64::new(0.8, 0.0), 80),
        (GeneratingFunction::LaguerreMinus { m: 5.0 }, 5.0, Complex64::new(-0.8, 0.0), 80),
        (GeneratingFunction::BesselEven { k: 3, beta: 2.0 }, 0.2, Complex64::new(0.5, 0.0), 40),
    ] {
        tail_bound(&spec, x, t, order).unwrap();
    }
}
