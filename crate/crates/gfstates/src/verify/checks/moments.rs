//! Resolution-of-identity moment checks. Angular integrals are reduced
//! analytically (phase orthogonality); only radial moments are quadratured.
//! Printed-formula discrepancies are reported with diagnostic ratios, never
//! silently corrected; corrected candidates run as separately labeled checks.

use std::f64::consts::PI;

use crate::genfun::Parity;
use crate::specfun;
use crate::states;
use crate::verify::quadrature::{integrate_radial, Support};
use crate::verify::report::VerificationReport;

use super::{params_map, CheckConfig, ResidualTracker};

struct MomentOutcome {
    value: Option<f64>,
    quad_error: f64,
    note: Option<String>,
}

fn run_moment<F: Fn(f64) -> f64>(f: F, support: Support, target: f64) -> MomentOutcome {
    match integrate_radial(&f, support, target) {
        Ok(q) => MomentOutcome { value: Some(q.value), quad_error: q.error_estimate, note: None },
        Err(e) => MomentOutcome {
            value: None,
            quad_error: f64::MAX,
            note: Some(format!("quadrature did not converge: {e}")),
        },
    }
}

/// Even flat-band family: 2π ∫ r^{2m+1} (r/sinh r) K(r) dr = (2m+1)!,
/// β-independent. With the |𝔷| reading of the printed density this closes
/// exactly; gated.
pub fn flatband_even(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();
    for m in 0..=8u32 {
        let target = specfun::factorial(2 * m as u64 + 1);
        let out = run_moment(
            move |r: f64| {
                let w = r / r.sinh(); // -> 0 for large r, 1 at r -> 0
                let k = states::bessel_measure(Parity::Even, r).unwrap_or(f64::NAN);
                2.0 * PI * r.powi(2 * m as i32 + 1) * w * k / target
            },
            Support::HalfLine,
            1e-10,
        );
        match out.value {
            Some(v) => tracker.observe((v - 1.0).abs(), || format!("m={m} (quad err {:.1e})", out.quad_error)),
            None => {
                tracker.observe(f64::MAX, || format!("m={m}"));
                notes.push(out.note.unwrap());
            }
        }
    }
    let worst = tracker.worst();
    notes.push(tracker.into_note());
    VerificationReport::new(
        "moment_flatband_even",
        params_map(&[]),
        "moments m = 0..=8 of the even flat-band measure (|z| reading), target (2m+1)!".into(),
        worst,
        tol,
        notes,
    )
}

/// Odd family with the density exactly as printed. The measured moment is
/// (2m+1)! where (2m)! is required: recorded as a failure with the
/// per-index diagnostic ratio 2m+1. Informational.
pub fn flatband_odd_printed(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();
    for m in 0..=8u32 {
        let target = specfun::factorial(2 * m as u64);
        let out = run_moment(
            move |r: f64| {
                let w = 1.0 / r.cosh();
                let k = states::bessel_measure(Parity::Odd, r).unwrap_or(f64::NAN);
                2.0 * PI * r.powi(2 * m as i32 + 1) * w * k / target
            },
            Support::HalfLine,
            1e-10,
        );
        match out.value {
            Some(v) => {
                notes.push(format!(
                    "m={m}: measured/required = {v:.10e} (expected diagnostic ratio 2m+1 = {})",
                    2 * m + 1
                ));
                tracker.observe((v - 1.0).abs(), || format!("m={m}"));
            }
            None => {
                tracker.observe(f64::MAX, || format!("m={m}"));
                notes.push(out.note.unwrap());
            }
        }
    }
    notes.push("the printed density misses a 1/|z| factor; see moment_flatband_odd_corrected".into());
    let worst = tracker.worst();
    notes.push(tracker.into_note());
    VerificationReport::new(
        "moment_flatband_odd_printed",
        params_map(&[]),
        "moments m = 0..=8 of the odd flat-band measure as printed, target (2m)!".into(),
        worst,
        tol,
        notes,
    )
}

/// The 1/r-amended odd density: moments close on (2m)!. Informational
/// companion of the printed-density check.
pub fn flatband_odd_corrected(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let mut tracker = ResidualTracker::new();
    for m in 0..=8u32 {
        let target = specfun::factorial(2 * m as u64);
        let out = run_moment(
            move |r: f64| {
                let w = 1.0 / r.cosh();
                let k = states::bessel_measure_odd_corrected(r).unwrap_or(f64::NAN);
                2.0 * PI * r.powi(2 * m as i32 + 1) * w * k / target
            },
            Support::HalfLine,
            1e-10,
        );
        match out.value {
            Some(v) => tracker.observe((v - 1.0).abs(), || format!("m={m}")),
            None => tracker.observe(f64::MAX, || format!("m={m}")),
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "moment_flatband_odd_corrected",
        params_map(&[]),
        "moments m = 0..=8 of the 1/r-amended odd density, target (2m)!".into(),
        worst,
        tol,
        vec![note],
    )
}

fn sphere_weight_sq(l: u32, m: u32) -> f64 {
    (specfun::log_factorial((l + m) as u64) - specfun::log_factorial((l - m) as u64)).exp()
        / (2.0 * l as f64 + 1.0)
}

/// First printed line of the unit-disc density, with the series M_m. The
/// density's M_m factor cancels the state normalization analytically, so the
/// reduced integrand is quadratured directly. Informational.
pub fn legendre_line1(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();
    for &m in &[1u32, 2] {
        let mut per_m = Vec::new();
        for l in m..=(m + 6) {
            let g2 = sphere_weight_sq(l, m);
            let fact = specfun::factorial(2 * m as u64 - 2);
            let out = run_moment(
                move |r: f64| {
                    let rm2 = 1.0 / (r * r);
                    2.0 * r.powi(2 * l as i32 + 1) * (1.0 + rm2) * (1.0 - rm2).powi(2 * m as i32 - 2) * g2 / fact
                },
                Support::UnitInterval,
                1e-10,
            );
            match out.value {
                Some(v) => {
                    per_m.push(format!("l={l}: moment = {v:.10e} (quad err {:.1e})", out.quad_error));
                    tracker.observe((v - 1.0).abs(), || format!("m={m} l={l}"));
                }
                None => {
                    per_m.push(format!("l={l}: divergent ({})", out.note.unwrap()));
                    tracker.observe(f64::MAX, || format!("m={m} l={l}"));
                }
            }
        }
        notes.push(format!("m={m}: {}", per_m.join("; ")));
    }
    notes.push(
        "verdict: with the series M_m, the first printed line satisfies the moment condition exactly at m=1; \
         at m=2 the l=m moment diverges at r->0 and the finite moments mismatch"
            .into(),
    );
    let worst = tracker.worst();
    notes.push(tracker.into_note());
    VerificationReport::new(
        "moment_legendre_line1",
        params_map(&[]),
        "unit-disc moments, m in {1,2}, l <= m+6, first printed density line over series M_m".into(),
        worst,
        tol,
        notes,
    )
}

/// Second printed line, evaluated verbatim, against the series M_m
/// normalization. Informational.
pub fn legendre_line2(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();
    for &m in &[1u32, 2] {
        let mut per_m = Vec::new();
        for l in m..=(m + 6) {
            let g2 = sphere_weight_sq(l, m);
            let out = run_moment(
                move |r: f64| {
                    let k = states::legendre_measure_printed(m, r).unwrap_or(f64::NAN);
                    let mn = states::legendre_norm_series_auto(m, r).unwrap_or(f64::NAN);
                    2.0 * PI * r.powi(2 * l as i32 + 1) * k / mn * g2
                },
                Support::UnitInterval,
                1e-10,
            );
            match out.value {
                Some(v) => {
                    per_m.push(format!("l={l}: moment = {v:.10e} (quad err {:.1e})", out.quad_error));
                    tracker.observe((v - 1.0).abs(), || format!("m={m} l={l}"));
                }
                None => {
                    per_m.push(format!("l={l}: divergent ({})", out.note.unwrap()));
                    tracker.observe(f64::MAX, || format!("m={m} l={l}"));
                }
            }
        }
        // pointwise comparison of the two printed density lines
        let mut ratios = Vec::new();
        for &r in &[0.1, 0.5, 0.8] {
            let line1 = states::legendre_measure_line1(m, r).unwrap();
            let line2 = states::legendre_measure_printed(m, r).unwrap();
            ratios.push(format!("r={r}: line2/line1 = {:.6e}", line2 / line1));
        }
        notes.push(format!("m={m}: {}; {}", per_m.join("; "), ratios.join(", ")));
    }
    notes.push(
        "the two printed lines coincide only under the printed (3m)! normalization; under the series M_m they differ pointwise".into(),
    );
    notes.push(
        "verdict: the second printed line bakes in the printed (3m)! parameterization; against the series M_m \
         its ratio grows like (1-r^2)^(m-2), so every m=1 moment diverges at the disc edge, while at m=2 the \
         l=2 moment diverges at r->0 and the finite ones mismatch by large factors"
            .into(),
    );
    let worst = tracker.worst();
    notes.push(tracker.into_note());
    VerificationReport::new(
        "moment_legendre_line2",
        params_map(&[]),
        "unit-disc moments, m in {1,2}, l <= m+6, second printed density line over series M_m".into(),
        worst,
        tol,
        notes,
    )
}
