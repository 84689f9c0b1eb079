//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one pass/fail line. Informational adjudications must be emitted
//! with their diagnostics; gated identities must be green.

use std::time::Instant;

use gfstates::verify::checks::{run_ids, CheckConfig};
use gfstates::verify::VerificationReport;

fn run(ids: &[&str]) -> Vec<VerificationReport> {
    run_ids(ids, &CheckConfig::default()).expect("known check ids").reports
}

fn report<'a>(reports: &'a [VerificationReport], id: &str) -> &'a VerificationReport {
    reports
        .iter()
        .find(|r| r.check_id == id)
        .unwrap_or_else(|| panic!("missing report for {id}"))
}

fn line(criterion: &str, pass: bool, detail: String) {
    println!("criterion {criterion}: {} — {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_generating_function_identities() {
    let started = Instant::now();
    let ids = [
        "gf_identity_hermite",
        "gf_identity_legendre",
        "gf_identity_laguerre_plus",
        "gf_identity_laguerre_minus",
        "gf_identity_laguerre_zero",
        "gf_identity_bessel_even",
        "gf_identity_bessel_odd",
    ];
    let reports = run(&ids);
    let elapsed = started.elapsed();
    let mut pass = elapsed.as_secs_f64() < 60.0;
    let mut worst = ("", 0.0_f64);
    for id in ids {
        let r = report(&reports, id);
        let tol_ok = if id == "gf_identity_hermite" { r.tolerance <= 1e-10 } else { r.tolerance <= 1e-8 };
        pass &= r.pass && tol_ok;
        if r.max_residual > worst.1 {
            worst = (id, r.max_residual);
        }
    }
    line(
        "1 (generating-function identities)",
        pass,
        format!("worst {} residual {:.3e}, runtime {elapsed:?}", worst.0, worst.1),
    );
}

#[test]
fn criterion_2_ladder_eigen_suite() {
    let ids = [
        "ladder_commutator_sho",
        "ladder_su11_closure",
        "ladder_weyl_heisenberg",
        "ladder_eigen_canonical",
        "ladder_eigen_bg",
        "ladder_eigen_landau",
    ];
    let reports = run(&ids);
    let mut pass = true;
    let mut worst = 0.0_f64;
    for id in ids {
        let r = report(&reports, id);
        pass &= r.pass && r.tolerance <= 1e-12;
        worst = worst.max(r.max_residual);
    }
    line("2 (ladder/eigenvalue suite, N = 60, tol 1e-12)", pass, format!("worst residual {worst:.3e}"));
}

#[test]
fn criterion_3_state_gf_correspondences() {
    let gated = ["correspondence_sho", "correspondence_bg", "correspondence_kp", "correspondence_landau"];
    let mut ids = gated.to_vec();
    ids.push("correspondence_flatband_even");
    let reports = run(&ids);
    let mut pass = true;
    for id in gated {
        let r = report(&reports, id);
        pass &= r.pass && r.tolerance <= 1e-8;
    }
    // the flat-band correspondence is reported; when its residual exceeds
    // tolerance the report must localize the mismatched prefactor
    let fb = report(&reports, "correspondence_flatband_even");
    let localized = fb.pass
        || fb.notes.iter().any(|n| n.contains("term ratios"))
            && fb.notes.iter().any(|n| n.contains("expected ratio pattern"));
    pass &= localized;
    line(
        "3 (state/GF correspondences)",
        pass,
        format!(
            "gated residuals ok; flat-band correspondence residual {:.3e} with prefactor localization emitted",
            fb.max_residual
        ),
    );
}

#[test]
fn criterion_4_normalization_oracle() {
    let reports = run(&[
        "normalization_legendre_self",
        "normalization_legendre_printed_m0",
        "normalization_legendre_printed_adjudication",
    ]);
    let self_ok = report(&reports, "normalization_legendre_self");
    let m0 = report(&reports, "normalization_legendre_printed_m0");
    let adj = report(&reports, "normalization_legendre_printed_adjudication");
    let factors_emitted = adj.notes.iter().filter(|n| n.contains("printed/series")).count() >= 15;
    let pass = self_ok.pass
        && self_ok.tolerance <= 1e-10
        && m0.pass
        && m0.tolerance <= 1e-10
        && factors_emitted
        && adj.pass; // candidate parameterization matches the oracle
    line(
        "4 (normalization oracle)",
        pass,
        format!(
            "self-overlap residual {:.3e}; printed form matches at m=0 ({:.3e}); m>=1 discrepancy factors emitted",
            self_ok.max_residual, m0.max_residual
        ),
    );
}

#[test]
fn criterion_5_resolution_of_identity_moments() {
    let reports = run(&[
        "selftest_moment_gaussian",
        "moment_flatband_even",
        "moment_flatband_odd_printed",
        "moment_flatband_odd_corrected",
        "moment_legendre_line1",
        "moment_legendre_line2",
    ]);
    let gauss = report(&reports, "selftest_moment_gaussian");
    let even = report(&reports, "moment_flatband_even");
    let odd_printed = report(&reports, "moment_flatband_odd_printed");
    let odd_fixed = report(&reports, "moment_flatband_odd_corrected");
    let mut pass = gauss.pass && gauss.tolerance <= 1e-10;
    pass &= even.pass && even.tolerance <= 1e-8;
    // the printed odd measure must be recorded as failing with the ratio diagnostics
    pass &= !odd_printed.pass;
    let ratios = odd_printed.notes.iter().filter(|n| n.contains("measured/required")).count();
    pass &= ratios == 9;
    pass &= odd_fixed.pass;
    // every reported unit-disc moment is either converged with relative
    // quadrature error < 1e-8 or explicitly recorded as divergent
    let mut moments = 0usize;
    let mut divergent = 0usize;
    for id in ["moment_legendre_line1", "moment_legendre_line2"] {
        for note in &report(&reports, id).notes {
            if !note.starts_with("m=") {
                continue;
            }
            for item in note.split("; ") {
                if let Some(idx) = item.find("moment = ") {
                    let rest = &item[idx + 9..];
                    let value: f64 = rest.split(' ').next().unwrap().parse().unwrap();
                    let err: f64 = rest
                        .split("quad err ")
                        .nth(1)
                        .unwrap()
                        .trim_end_matches(')')
                        .parse()
                        .unwrap();
                    assert!(
                        err <= 1e-8 * value.abs().max(1.0),
                        "{id}: {item} exceeds the quadrature error budget"
                    );
                    moments += 1;
                } else if item.contains("divergent") {
                    divergent += 1;
                }
            }
        }
    }
    pass &= moments + divergent == 28; // m in {1,2} x (l <= m+6) x two density lines
    line(
        "5 (resolution-of-identity moments)",
        pass,
        format!(
            "gaussian {:.1e}; flat-band even {:.1e}; odd printed ratio diagnostics x{ratios}; \
             disc moments: {moments} converged (quad err < 1e-8), {divergent} recorded divergent",
            gauss.max_residual, even.max_residual
        ),
    );
}

#[test]
fn criterion_6_orthogonality_quadrature() {
    let reports = run(&[
        "orthogonality_laguerre",
        "orthogonality_sphere",
        "orthogonality_landau",
        "orthogonality_flatband_even",
        "orthogonality_flatband_odd",
    ]);
    let mut pass = true;
    for id in ["orthogonality_laguerre", "orthogonality_sphere", "orthogonality_landau"] {
        let r = report(&reports, id);
        pass &= r.pass && r.tolerance <= 1e-8;
    }
    for id in ["orthogonality_flatband_even", "orthogonality_flatband_odd"] {
        let r = report(&reports, id);
        pass &= r.pass && r.tolerance <= 1e-6;
    }
    let worst_core = ["orthogonality_laguerre", "orthogonality_sphere", "orthogonality_landau"]
        .iter()
        .map(|id| report(&reports, id).max_residual)
        .fold(0.0_f64, f64::max);
    let worst_band = ["orthogonality_flatband_even", "orthogonality_flatband_odd"]
        .iter()
        .map(|id| report(&reports, id).max_residual)
        .fold(0.0_f64, f64::max);
    line(
        "6 (orthogonality quadrature)",
        pass,
        format!("Gram deviations: core {worst_core:.3e} (< 1e-8), flat band {worst_band:.3e} (< 1e-6)"),
    );
}

#[test]
fn criterion_7_spectrum_and_degeneracy() {
    let started = Instant::now();
    let reports = run(&["spectrum_values", "degeneracy_scan"]);
    let elapsed = started.elapsed();
    let values = report(&reports, "spectrum_values");
    let scan = report(&reports, "degeneracy_scan");
    let mut pass = values.pass && values.max_residual == 0.0;
    pass &= scan.pass;
    pass &= scan.notes.iter().any(|n| n.starts_with("multiplicity table"));
    pass &= scan.notes.iter().any(|n| n.contains("claim verdict"));
    // the claim fails in range; counterexamples must be listed explicitly
    pass &= scan.notes.iter().any(|n| n.contains("claim verdict: FALSE") && n.contains("P=63"));
    pass &= elapsed.as_secs_f64() < 5.0;
    line(
        "7 (spectrum and degeneracy scan)",
        pass,
        format!("exact rational energies; multiplicity table and explicit verdict emitted in {elapsed:?}"),
    );
}

#[test]
fn criterion_8_determinism_and_gating() {
    let cfg = CheckConfig::default();
    let all: Vec<&str> = gfstates::verify::suite_ids("all").unwrap();
    let run1 = run_ids(&all, &cfg).unwrap();
    let run2 = run_ids(&all, &cfg).unwrap();
    let json1 = gfstates::verify::render_reports(&run1.reports, gfstates::verify::OutputFormat::Json);
    let json2 = gfstates::verify::render_reports(&run2.reports, gfstates::verify::OutputFormat::Json);
    let mut pass = json1 == json2;

    // gating: a failing baseline suppresses informational adjudications
    let sabotaged = CheckConfig { tol_override: Some(1e-300), ..CheckConfig::default() };
    let gated_run = run_ids(&["moment_flatband_odd_printed"], &sabotaged).unwrap();
    let suppressed = !gated_run.reports.iter().any(|r| r.check_id == "moment_flatband_odd_printed")
        && gated_run.notes.iter().any(|n| n.contains("suppressed"));
    pass &= suppressed;

    // with the default config the baseline gate passes and the adjudication
    // is emitted after it
    let emitted = run_ids(&["moment_flatband_odd_printed"], &cfg).unwrap();
    let position = emitted.reports.iter().position(|r| r.check_id == "moment_flatband_odd_printed");
    pass &= position == Some(emitted.reports.len() - 1) && emitted.reports.len() > 1;

    line(
        "8 (determinism and gating)",
        pass,
        format!(
            "bit-identical reports across runs ({} bytes); informational checks gated behind the baseline suite",
            json1.len()
        ),
    );
}
