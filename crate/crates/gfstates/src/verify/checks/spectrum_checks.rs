//! Flat-band spectrum checks: exact direct substitutions and the degeneracy
//! scan with its explicit claim verdict.

use crate::verify::report::VerificationReport;
use crate::verify::spectrum::{degeneracy_scan, spectrum, spectrum_p};

use super::{params_map, CheckConfig, ResidualTracker};

/// E_{l,m} values match direct substitution exactly (energies are
/// quarter-integers times the prefactor, so f64 comparison is exact).
pub fn values(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-15);
    let consts = cfg.constants;
    let mut tracker = ResidualTracker::new();
    tracker.observe((spectrum(0, 1, &consts) - 0.75 * consts.spectrum_prefactor).abs(), || "(l,m)=(0,1)".into());
    tracker.observe((spectrum(0, 0, &consts) + 0.25 * consts.spectrum_prefactor).abs(), || "(l,m)=(0,0)".into());
    for l in -6..=6i64 {
        for m in -6..=6i64 {
            let exact = consts.spectrum_prefactor * spectrum_p(l, m) as f64 / 4.0;
            let r = (spectrum(l, m, &consts) - exact).abs();
            tracker.observe(r, || format!("(l,m)=({l},{m})"));
        }
    }
    let worst = tracker.worst();
    let note = tracker.into_note();
    VerificationReport::new(
        "spectrum_values",
        params_map(&[("prefactor", format!("{}", consts.spectrum_prefactor))]),
        "direct substitutions plus exact quarter-integer identity on |l|,|m| <= 6".into(),
        worst,
        tol,
        vec![note],
    )
}

/// Exhaustive scan over the square-integrable labels with |l|, |m| ≤ 20;
/// groups energies exactly and tests the prime-degeneracy claim.
pub fn degeneracy(cfg: &CheckConfig) -> VerificationReport {
    let tol = cfg.tolerance(1e-15);
    let scan = degeneracy_scan(20, &cfg.constants);
    let mut notes = Vec::new();
    let hist = scan
        .histogram
        .iter()
        .map(|(mult, count)| format!("{count} classes with multiplicity {mult}"))
        .collect::<Vec<_>>()
        .join(", ");
    notes.push(format!("multiplicity table: {hist}"));
    if scan.counterexamples.is_empty() {
        notes.push("claim verdict: TRUE in range (nondegenerate iff P prime, two-fold otherwise)".into());
    } else {
        let shown: Vec<String> = scan
            .counterexamples
            .iter()
            .take(8)
            .map(|&(p, full)| {
                let class = scan.classes.iter().find(|c| c.p == p).unwrap();
                format!(
                    "P={p} ({}) multiplicity {full}, in-range states {:?}",
                    if class.prime { "prime" } else { "composite" },
                    class.states
                )
            })
            .collect();
        notes.push(format!(
            "claim verdict: FALSE — 'no degeneracy iff P prime, two-fold otherwise' fails for {} energies \
             (multiplicity judged window-independently from the odd factorizations of P); e.g. {}",
            scan.counterexamples.len(),
            shown.join("; ")
        ));
        let prime_violation = scan
            .counterexamples
            .iter()
            .any(|&(p, _)| scan.classes.iter().any(|c| c.p == p && c.prime && c.full_multiplicity != 1));
        if !prime_violation {
            notes.push(
                "the prime direction holds (every prime-P energy is nondegenerate); composite energies can carry \
                 more than two states (three or more factorizations)"
                    .into(),
            );
        }
    }
    notes.push(format!("{} exact energy classes enumerated", scan.classes.len()));
    // gated content: the internal exactness of the scan (quarter-integer
    // energies, mirror symmetry, positivity); the claim verdict is
    // informational and lives in the notes
    let residual = if scan.consistent { 0.0 } else { 1.0 };
    VerificationReport::new(
        "degeneracy_scan",
        params_map(&[("range", "20".into())]),
        "square-integrable labels m <= -1, m <= l <= -m-1, mirror l <-> -l-1 collapsed".into(),
        residual,
        tol,
        notes,
    )
}
