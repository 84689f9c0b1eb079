//! Ladder-algebra checks: commutator closures at the coefficient level and
//! coherent-state eigenvector residuals on retained indices.

use num_complex::Complex64;

use crate::fock::{self, CoefficientSeries, Family, Ladder, QuantumLabel};
use crate::states;
use crate::verify::report::VerificationReport;
use crate::verify::SplitMix64;

use super::{params_map, CheckConfig, ResidualTracker};

fn seeded_sho_series(seed: u64, n_max: usize) -> CoefficientSeries {
    let mut rng = SplitMix64::new(seed);
    let labels = (0..=n_max as u32).map(|n| QuantumLabel::Sho { n }).collect();
    let coeffs = (0..=n_max)
        .map(|_| Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
        .collect();
    CoefficientSeries::new(Family::Sho, labels, coeffs).unwrap().normalized()
}

/// [a, a†] acts as the identity on the retained window 0..N-1.
pub fn commutator_sho(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-12);
    let n_max = cfg.truncation(60);
    let s = seeded_sho_series(cfg.seed, n_max);
    let aad = fock::ladder_apply(Ladder::ShoLower, &fock::ladder_apply(Ladder::ShoRaise, &s).unwrap()).unwrap();
    let ada = fock::ladder_apply(Ladder::ShoRaise, &fock::ladder_apply(Ladder::ShoLower, &s).unwrap()).unwrap();
    let mut tracker = ResidualTracker::new();
    for (label, &c) in s.labels().iter().zip(s.coeffs().iter()).take(s.len() - 1) {
        // scale by the local operator magnitude (n+1) so roundoff in the
        // √ products is measured relatively
        let QuantumLabel::Sho { n } = *label else { unreachable!() };
        let scale = (n as f64 + 1.0).max(1.0);
        let r = (aad.coeff(label) - ada.coeff(label) - c).norm() / scale;
        tracker.observe(r, || format!("n={n}"));
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "ladder_commutator_sho",
        params_map(&[("n_max", n_max.to_string()), ("seed", cfg.seed.to_string())]),
        format!("[a, a_dag] = 1 window identity on a random series, N = {n_max}"),
        worst,
        tol,
        vec!["residuals scaled by the local matrix-element magnitude".into(), note],
    )
}

/// (J₊J₋ − J₋J₊ + 2 J₃) annihilates every basis ket.
pub fn su11_closure(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-12);
    let n_max = cfg.truncation(60);
    let lambdas = cfg.lambdas(&[0.7, 1.0, 1.5, 3.0]);
    let mut tracker = ResidualTracker::new();
    for &lambda in &lambdas {
        for n in 0..=n_max as u32 {
            let ket = CoefficientSeries::basis_ket(
                Family::CalogeroSutherland,
                QuantumLabel::CalogeroSutherland { n, lambda },
            )
            .unwrap();
            let jpjm = fock::ladder_apply(Ladder::Su11Raise, &fock::ladder_apply(Ladder::Su11Lower, &ket).unwrap()).unwrap();
            let jmjp = fock::ladder_apply(Ladder::Su11Lower, &fock::ladder_apply(Ladder::Su11Raise, &ket).unwrap()).unwrap();
            let j3 = fock::ladder_apply(Ladder::Su11Diag, &ket).unwrap();
            let label = ket.labels()[0];
            let nf = n as f64;
            let scale = ((nf + 1.0) * (nf + lambda + 0.5)).max(1.0);
            let r = (jpjm.coeff(&label) - jmjp.coeff(&label) + 2.0 * j3.coeff(&label)).norm() / scale;
            tracker.observe(r, || format!("lambda={lambda} n={n}"));
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "ladder_su11_closure",
        params_map(&[("lambdas", format!("{lambdas:?}")), ("n_max", n_max.to_string())]),
        format!("(J+ J- - J- J+ + 2 J3) ket = 0 for n <= {n_max}"),
        worst,
        tol,
        vec!["residuals scaled by the local matrix-element magnitude".into(), note],
    )
}

/// The two Landau ladder copies commute with each other and each closes to 1.
pub fn weyl_heisenberg(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-12);
    let mut rng = SplitMix64::new(cfg.seed ^ 0x5eed);
    let mut labels = Vec::new();
    for n in 0..=8i64 {
        for m in -n..=4i64 {
            labels.push(QuantumLabel::Landau { n, m });
        }
    }
    labels.sort();
    let coeffs: Vec<Complex64> = (0..labels.len())
        .map(|_| Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
        .collect();
    let s = CoefficientSeries::new(Family::Landau, labels, coeffs).unwrap().normalized();
    let pairs = [
        (Ladder::LandauA, Ladder::LandauADag, 1.0),
        (Ladder::LandauB, Ladder::LandauBDag, 1.0),
        (Ladder::LandauA, Ladder::LandauBDag, 0.0),
        (Ladder::LandauA, Ladder::LandauB, 0.0),
        (Ladder::LandauADag, Ladder::LandauBDag, 0.0),
        (Ladder::LandauADag, Ladder::LandauB, 0.0),
    ];
    let mut tracker = ResidualTracker::new();
    for (p, q, unit) in pairs {
        let pq = fock::ladder_apply(p, &fock::ladder_apply(q, &s).unwrap()).unwrap();
        let qp = fock::ladder_apply(q, &fock::ladder_apply(p, &s).unwrap()).unwrap();
        for (label, &c) in s.labels().iter().zip(s.coeffs().iter()) {
            let QuantumLabel::Landau { n, m } = *label else { unreachable!() };
            let scale = ((n + m + 1).max(n + 1) as f64).max(1.0);
            let r = (pq.coeff(label) - qp.coeff(label) - unit * c).norm() / scale;
            tracker.observe(r, || format!("[{}, {}] at (n,m)=({n},{m})", p.name(), q.name()));
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "ladder_weyl_heisenberg",
        params_map(&[("seed", cfg.seed.to_string())]),
        "two ladder copies on Landau labels n <= 8, m in [-n, 4]".into(),
        worst,
        tol,
        vec![note],
    )
}

pub fn eigen_canonical(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-12);
    let n_max = cfg.truncation(60);
    let zs = [
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(-0.3, 0.4),
        Complex64::new(1.2, -0.7),
    ];
    let mut tracker = ResidualTracker::new();
    for &z in &zs {
        let s = states::canonical_cs(z, n_max).unwrap();
        let r = fock::eigen_residual(Ladder::ShoLower, &s, z).unwrap();
        tracker.observe(r, || format!("z={z}"));
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "ladder_eigen_canonical",
        params_map(&[("n_max", n_max.to_string())]),
        "a |z> = z |z> residual on retained indices, 4 complex z".into(),
        worst,
        tol,
        vec![note],
    )
}

pub fn eigen_bg(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-12);
    let n_max = cfg.truncation(60);
    let lambdas = cfg.lambdas(&[0.7, 1.5, 3.0]);
    let zs = [Complex64::new(0.3, 0.0), Complex64::new(-0.2, 0.5), Complex64::new(0.8, 0.0)];
    let mut tracker = ResidualTracker::new();
    for &lambda in &lambdas {
        for &z in &zs {
            let s = states::cs_bg(lambda, z, n_max).unwrap();
            let r = fock::eigen_residual(Ladder::Su11Lower, &s, -z).unwrap();
            tracker.observe(r, || format!("lambda={lambda} z={z}"));
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "ladder_eigen_bg",
        params_map(&[("lambdas", format!("{lambdas:?}")), ("n_max", n_max.to_string())]),
        "J- |z>_BG = -z |z>_BG residual on retained indices".into(),
        worst,
        tol,
        vec![note],
    )
}

pub fn eigen_landau(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-12);
    let n_max = cfg.truncation(60);
    let ws = [Complex64::new(0.4, 0.0), Complex64::new(0.3, -0.6)];
    let mut tracker = ResidualTracker::new();
    for &m in &[0u32, 1, 3] {
        for &w in &ws {
            let s = states::landau_cs(m, w, n_max).unwrap();
            let r = fock::eigen_residual(Ladder::LandauA, &s, w).unwrap();
            tracker.observe(r, || format!("m={m} w={w}"));
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "ladder_eigen_landau",
        params_map(&[("n_max", n_max.to_string())]),
        "within-family lowering (matrix element sqrt(n+m)) eigen-residual on Landau states".into(),
        worst,
        tol,
        vec![
            "the lowering that fixes the family is the (n,m)->(n-1,m+1) shift; its eigenvalue is the state parameter w".into(),
            note,
        ],
    )
}
