//! Generating-function identity checks: closed form vs defining partial sum
//! on family-specific grids, plus the spherical-harmonic sum identity.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::genfun::{self, GeneratingFunction};
use crate::specfun;
use crate::verify::report::VerificationReport;

use super::{params_map, CheckConfig, ResidualTracker};

fn phase_grid(radii: &[f64], n_phases: usize) -> Vec<Complex64> {
    let mut out = Vec::new();
    for &r in radii {
        for j in 0..n_phases {
            let arg = 2.0 * PI * j as f64 / n_phases as f64;
            out.push(Complex64::from_polar(r, arg));
        }
    }
    out
}

struct GfGrid {
    spec: GeneratingFunction,
    xs: Vec<f64>,
    ts: Vec<Complex64>,
    label: String,
}

fn run_gf_identity(
    check_id: &str,
    grids: Vec<GfGrid>,
    order: usize,
    tol: f64,
    grid_summary: String,
) -> VerificationReport {
    let mut tracker = ResidualTracker::new();
    let mut notes = Vec::new();
    let mut last_term_worst = 0.0_f64;
    for grid in &grids {
        let mut family_worst = 0.0_f64;
        for &x in &grid.xs {
            for &t in &grid.ts {
                let closed = match genfun::gf_closed(&grid.spec, x, t) {
                    Ok(v) => v,
                    Err(e) => {
                        notes.push(format!("{} x={x} t={t}: closed form error: {e}", grid.label));
                        tracker.observe(f64::MAX, || format!("{} x={x} t={t}", grid.label));
                        continue;
                    }
                };
                let (sum, last) = match genfun::gf_series(&grid.spec, x, t, order) {
                    Ok(v) => v,
                    Err(e) => {
                        notes.push(format!("{} x={x} t={t}: series error: {e}", grid.label));
                        tracker.observe(f64::MAX, || format!("{} x={x} t={t}", grid.label));
                        continue;
                    }
                };
                let r = (closed - sum).norm() / closed.norm().max(1.0);
                family_worst = family_worst.max(r);
                last_term_worst = last_term_worst.max(last / closed.norm().max(1.0));
                tracker.observe(r, || format!("{} x={x} t={t}", grid.label));
            }
        }
        notes.push(format!("{}: max residual {family_worst:.3e}", grid.label));
    }
    notes.push(format!("largest scaled final series term: {last_term_worst:.3e}"));
    let worst = tracker.worst();
    notes.push(tracker.into_note());
    VerificationReport::new(check_id, params_map(&[("order", order.to_string())]), grid_summary, worst, tol, notes)
}

pub fn hermite(cfg: &CheckConfig) -> VerificationReport {
    let grids = vec![GfGrid {
        spec: GeneratingFunction::Hermite,
        xs: vec![-3.0, -1.5, 0.0, 1.5, 3.0],
        ts: phase_grid(&[0.3, 0.9, 1.5], 5),
        label: "hermite".into(),
    }];
    run_gf_identity(
        "gf_identity_hermite",
        grids,
        60,
        cfg.tolerance(1e-10),
        "x in {-3..3}(5), |t| in {0.3,0.9,1.5} x 5 phases, order 60".into(),
    )
}

pub fn legendre(cfg: &CheckConfig) -> VerificationReport {
    let mut grids = Vec::new();
    for m in 0..=4u32 {
        grids.push(GfGrid {
            spec: GeneratingFunction::LegendreM { m },
            xs: vec![-0.9, -0.45, 0.0, 0.45, 0.9],
            ts: phase_grid(&[0.2, 0.5, 0.8], 5),
            label: format!("legendre m={m}"),
        });
    }
    run_gf_identity(
        "gf_identity_legendre",
        grids,
        200,
        cfg.tolerance(1e-8),
        "m <= 4, x in {-0.9..0.9}(5), |t| in {0.2,0.5,0.8} x 5 phases, order 200".into(),
    )
}

pub fn laguerre_plus(cfg: &CheckConfig) -> VerificationReport {
    // the closed form (Bessel J route) is exercised on the nonnegative real
    // axis; complex t is covered by the series round-trip tests
    let mut grids = Vec::new();
    for &m in &[0.5, 1.0, 2.0] {
        grids.push(GfGrid {
            spec: GeneratingFunction::LaguerrePlus { m },
            xs: vec![0.0, 0.5, 2.0, 5.0, 8.0],
            ts: [0.0, 0.6, 1.5, 3.0].iter().map(|&z| Complex64::new(z, 0.0)).collect(),
            label: format!("laguerre_plus m={m}"),
        });
    }
    run_gf_identity(
        "gf_identity_laguerre_plus",
        grids,
        80,
        cfg.tolerance(1e-8),
        "m in {0.5,1,2}, x in [0,8](5), z in {0,0.6,1.5,3} real, order 80".into(),
    )
}

pub fn laguerre_minus(cfg: &CheckConfig) -> VerificationReport {
    let mut grids = Vec::new();
    for &m in &[0.0, 1.0, 2.5, 5.0] {
        grids.push(GfGrid {
            spec: GeneratingFunction::LaguerreMinus { m },
            xs: vec![0.0, 1.0, 2.5, 5.0],
            ts: phase_grid(&[0.2, 0.5, 0.8], 5),
            label: format!("laguerre_minus m={m}"),
        });
    }
    run_gf_identity(
        "gf_identity_laguerre_minus",
        grids,
        250,
        cfg.tolerance(1e-8),
        "m in {0,1,2.5,5}, x in [0,5](4), |z| in {0.2,0.5,0.8} x 5 phases, order 250".into(),
    )
}

pub fn laguerre_zero(cfg: &CheckConfig) -> VerificationReport {
    let mut grids = Vec::new();
    for &m in &[0.0, 1.0, 3.0, 5.0] {
        grids.push(GfGrid {
            spec: GeneratingFunction::LaguerreZero { m },
            xs: vec![0.0, 1.0, 2.5, 5.0],
            ts: phase_grid(&[0.2, 0.5, 0.8], 5),
            label: format!("laguerre_zero m={m}"),
        });
    }
    run_gf_identity(
        "gf_identity_laguerre_zero",
        grids,
        250,
        cfg.tolerance(1e-8),
        "m in {0,1,3,5}, x in [0,5](4), |z| in {0.2,0.5,0.8} x 5 phases, order 250".into(),
    )
}

pub fn bessel_even(cfg: &CheckConfig) -> VerificationReport {
    let mut grids = Vec::new();
    for k in 0..=3u32 {
        for &beta in &[1.0, 2.0] {
            grids.push(GfGrid {
                spec: GeneratingFunction::BesselEven { k, beta },
                xs: vec![0.2, 1.0, 2.5, 4.0],
                ts: phase_grid(&[0.05, 0.2, 0.5], 4),
                label: format!("bessel_even k={k} beta={beta}"),
            });
        }
    }
    run_gf_identity(
        "gf_identity_bessel_even",
        grids,
        40,
        cfg.tolerance(1e-8),
        "k <= 3, beta in {1,2}, x in [0.2,4](4), |t| in {0.05,0.2,0.5} x 4 phases, order 40".into(),
    )
}

pub fn bessel_odd(cfg: &CheckConfig) -> VerificationReport {
    let mut grids = Vec::new();
    for k in 0..=3u32 {
        for &beta in &[1.0, 2.0] {
            grids.push(GfGrid {
                spec: GeneratingFunction::BesselOdd { k, beta },
                xs: vec![0.2, 1.0, 2.5, 4.0],
                ts: phase_grid(&[0.05, 0.2, 0.5], 4),
                label: format!("bessel_odd k={k} beta={beta}"),
            });
        }
    }
    run_gf_identity(
        "gf_identity_bessel_odd",
        grids,
        40,
        cfg.tolerance(1e-8),
        "k <= 3, beta in {1,2}, x in [0.2,4](4), |t| in {0.05,0.2,0.5} x 4 phases, order 40".into(),
    )
}

/// Sum identity tying the Legendre generating function to spherical
/// harmonics: (-1)^m e^{imφ}/√(4π) G(θ,t) = Σ_l t^l √((l+2m)!/(l!(2l+2m+1))) Y^m_{m+l}(θ,φ).
pub fn spherical_sum(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-8);
    let order = 150usize;
    let mut tracker = ResidualTracker::new();
    for m in 0..=3u32 {
        for &theta in &[0.4_f64, 1.1, 2.0] {
            for &phi in &[0.0_f64, 1.3] {
                for &t in &[
                    Complex64::new(0.3, 0.0),
                    Complex64::from_polar(0.3, 2.1),
                    Complex64::new(0.7, 0.0),
                    Complex64::from_polar(0.7, 2.1),
                ] {
                    let g = genfun::gf_closed(&GeneratingFunction::LegendreM { m }, theta.cos(), t).unwrap();
                    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                    let lhs = sign * Complex64::new(0.0, m as f64 * phi).exp() / (4.0 * PI).sqrt() * g;
                    let mut rhs = Complex64::new(0.0, 0.0);
                    let mut tp = Complex64::new(1.0, 0.0);
                    for l in 0..=order as u32 {
                        let w = (0.5
                            * (specfun::log_factorial((l + 2 * m) as u64) - specfun::log_factorial(l as u64)
                                - (2.0 * (l + m) as f64 + 1.0).ln()))
                        .exp();
                        rhs += tp * w * specfun::spherical_harmonic(l + m, m as i32, theta, phi).unwrap();
                        tp *= t;
                    }
                    let r = (lhs - rhs).norm() / lhs.norm().max(1.0);
                    tracker.observe(r, || format!("m={m} theta={theta} phi={phi} t={t}"));
                }
            }
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "gf_spherical_sum",
        params_map(&[("order", order.to_string())]),
        "m <= 3, theta in {0.4,1.1,2.0}, phi in {0,1.3}, |t| in {0.3,0.7} x 2 phases".into(),
        worst,
        tol,
        vec![note],
    )
}
