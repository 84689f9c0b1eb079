//! Gating self-tests: kernel cross-checks on randomized grids, the
//! Gaussian-measure moment baseline, and a small orthogonality gate.
//! These must pass before any formula adjudication is trusted.

use std::f64::consts::PI;

use crate::specfun;
use crate::states::{self, Point};
use crate::verify::quadrature::{integrate_radial, Support};
use crate::verify::report::VerificationReport;
use crate::verify::SplitMix64;

use super::{params_map, CheckConfig, ResidualTracker};

/// Generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j!.
fn gen_binomial(a: f64, j: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..j {
        p *= (a - i as f64) / (i as f64 + 1.0);
    }
    p
}

/// Explicit finite-sum Hermite: H_n(x) = n! Σ_k (-1)^k (2x)^{n-2k}/(k!(n-2k)!).
fn hermite_sum(n: u32, x: f64) -> f64 {
    let nf = specfun::factorial(n as u64);
    let mut s = 0.0;
    for k in 0..=(n / 2) {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * (2.0 * x).powi((n - 2 * k) as i32)
            / (specfun::factorial(k as u64) * specfun::factorial((n - 2 * k) as u64));
    }
    nf * s
}

/// Explicit finite-sum Laguerre: L_n^α(x) = Σ_k (-1)^k C(n+α, n-k) x^k/k!.
fn laguerre_sum(n: u32, alpha: f64, x: f64) -> f64 {
    let mut s = 0.0;
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * gen_binomial(n as f64 + alpha, n - k) * x.powi(k as i32) / specfun::factorial(k as u64);
    }
    s
}

pub fn specfun_selftest(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-9);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();

    // recurrence vs explicit sums, n ≤ 12, 100 random points each
    let mut worst_h = 0.0_f64;
    let mut worst_l = 0.0_f64;
    for _ in 0..100 {
        let x = rng.uniform(-3.0, 3.0);
        let n = (rng.uniform(0.0, 13.0) as u32).min(12);
        let h = specfun::hermite(n, x);
        let hs = hermite_sum(n, x);
        let r = (h - hs).abs() / hs.abs().max(1.0);
        worst_h = worst_h.max(r);
        tracker.observe(r, || format!("hermite n={n} x={x:.4}"));

        let xl = rng.uniform(0.0, 6.0);
        let alpha = if rng.next_u64().is_multiple_of(2) {
            (rng.uniform(-3.0, 5.0)).round()
        } else {
            rng.uniform(-2.0, 4.0)
        };
        let l = specfun::assoc_laguerre(n, alpha, xl);
        let ls = laguerre_sum(n, alpha, xl);
        let r = (l - ls).abs() / ls.abs().max(1.0);
        worst_l = worst_l.max(r);
        tracker.observe(r, || format!("laguerre n={n} alpha={alpha:.4} x={xl:.4}"));
    }
    notes.push(format!("hermite recurrence vs explicit sum: max rel {worst_h:.3e}"));
    notes.push(format!("laguerre recurrence vs explicit sum: max rel {worst_l:.3e}"));

    // Gauss contiguous relation c(1-x)F(a,b;c;x) - cF(a-1,b;c;x) + (c-b)xF(a,b;c+1;x) = 0
    let mut worst_f = 0.0_f64;
    for _ in 0..60 {
        let a = rng.uniform(0.3, 3.0);
        let b = rng.uniform(0.3, 3.0);
        let c = rng.uniform(0.6, 4.0);
        let x = rng.uniform(-0.8, 0.8);
        let f1 = specfun::gauss_2f1(a, b, c, x).unwrap();
        let f2 = specfun::gauss_2f1(a - 1.0, b, c, x).unwrap();
        let f3 = specfun::gauss_2f1(a, b, c + 1.0, x).unwrap();
        let t1 = c * (1.0 - x) * f1;
        let t2 = -c * f2;
        let t3 = (c - b) * x * f3;
        let scale = t1.abs().max(t2.abs()).max(t3.abs()).max(1.0);
        let r = (t1 + t2 + t3).abs() / scale;
        worst_f = worst_f.max(r);
        tracker.observe(r, || format!("2F1 contiguous a={a:.3} b={b:.3} c={c:.3} x={x:.3}"));
    }
    notes.push(format!("2F1 contiguous relation: max rel {worst_f:.3e}"));

    // half-integer Bessel closed forms on (0, 30]
    let mut worst_b = 0.0_f64;
    for i in 1..=60 {
        let x = 0.5 * i as f64;
        let envelope = (2.0 / (PI * x)).sqrt();
        let j_half = envelope * x.sin();
        let j_3half = envelope * (x.sin() / x - x.cos());
        let r1 = (specfun::bessel_j(0.5, x).unwrap() - j_half).abs() / envelope;
        let r2 = (specfun::bessel_j(1.5, x).unwrap() - j_3half).abs() / envelope;
        let r = r1.max(r2);
        worst_b = worst_b.max(r);
        tracker.observe(r, || format!("bessel half-integer x={x}"));
    }
    notes.push(format!("bessel vs half-integer closed forms: max envelope-rel {worst_b:.3e}"));

    notes.push(tracker.into_note());
    VerificationReport::new(
        "selftest_specfun",
        params_map(&[("seed", cfg.seed.to_string())]),
        "hermite/laguerre n<=12 x100, 2F1 contiguous x60, bessel half-integer x in (0,30]".into(),
        worst_h.max(worst_l).max(worst_f).max(worst_b),
        tol,
        notes,
    )
}

/// Canonical-measure baseline: with K(r) = e^{-r²}/π the n-th diagonal
/// moment of ∫|z⟩⟨z| dμ is exactly 1 (the radial integral is n!/2).
pub fn moment_gaussian(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-10);
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();
    for n in 0..=10u32 {
        let nf = specfun::factorial(n as u64);
        let result = integrate_radial(
            &|r: f64| 2.0 * r.powi(2 * n as i32 + 1) * (-r * r).exp() / nf,
            Support::HalfLine,
            1e-12,
        );
        match result {
            Ok(q) => {
                let r = (q.value - 1.0).abs();
                tracker.observe(r, || format!("moment n={n} ({} nodes)", q.nodes_used));
            }
            Err(e) => {
                notes.push(format!("moment n={n}: quadrature failed: {e}"));
                tracker.observe(f64::MAX, || format!("moment n={n}"));
            }
        }
    }
    let worst = tracker.worst();
    notes.push(tracker.into_note());
    VerificationReport::new(
        "selftest_moment_gaussian",
        params_map(&[]),
        "canonical coherent states, Gaussian measure, moments n = 0..=10".into(),
        worst,
        tol,
        notes,
    )
}

/// Small-grid Laguerre orthogonality gate (the full check runs in the
/// orthogonality suite).
pub fn orthogonality_laguerre_gate(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let lambda = cfg.lambda_override.unwrap_or(1.5);
    let n_max = 6usize;
    let mut tracker = ResidualTracker::new();
    let consts = cfg.constants;
    for n in 0..=n_max {
        for m in n..=n_max {
            let value = integrate_radial(
                &|x: f64| {
                    let a = states::basis_wavefunction(
                        crate::fock::Family::CalogeroSutherland,
                        &crate::fock::QuantumLabel::CalogeroSutherland { n: n as u32, lambda },
                        Point::Line { x },
                        &consts,
                    )
                    .map(|v| v.re)
                    .unwrap_or(f64::NAN);
                    let b = states::basis_wavefunction(
                        crate::fock::Family::CalogeroSutherland,
                        &crate::fock::QuantumLabel::CalogeroSutherland { n: m as u32, lambda },
                        Point::Line { x },
                        &consts,
                    )
                    .map(|v| v.re)
                    .unwrap_or(f64::NAN);
                    a * b
                },
                Support::HalfLine,
                1e-11,
            );
            let expected = if n == m { 1.0 } else { 0.0 };
            match value {
                Ok(q) => tracker.observe((q.value - expected).abs(), || format!("(n,m)=({n},{m})")),
                Err(_) => tracker.observe(f64::MAX, || format!("(n,m)=({n},{m}) quadrature failure")),
            }
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "selftest_orthogonality_laguerre",
        params_map(&[("lambda", format!("{lambda}"))]),
        format!("Gram of half-line oscillator basis, n,m <= {n_max}"),
        worst,
        tol,
        vec![note],
    )
}
