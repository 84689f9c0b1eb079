//! Check registry, shared runner machinery, and suite resolution.

mod correspondence;
mod gf;
mod ladder;
mod moments;
mod normalization;
mod orthogonality;
mod selftests;
mod spectrum_checks;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::states::ModelConstants;

use super::report::VerificationReport;

/// Runtime configuration shared by all checks.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub constants: ModelConstants,
    /// When set, replaces every selected check's default tolerance.
    pub tol_override: Option<f64>,
    /// When set, replaces the default series truncation (N = 60).
    pub truncation_override: Option<usize>,
    /// When set, collapses λ grids to this single value.
    pub lambda_override: Option<f64>,
    /// Seed for the randomized parameter grids.
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            constants: ModelConstants::default(),
            tol_override: None,
            truncation_override: None,
            lambda_override: None,
            seed: 42,
        }
    }
}

impl CheckConfig {
    pub fn tolerance(&self, default: f64) -> f64 {
        self.tol_override.unwrap_or(default)
    }

    pub fn truncation(&self, default: usize) -> usize {
        self.truncation_override.unwrap_or(default)
    }

    pub fn lambdas(&self, default: &[f64]) -> Vec<f64> {
        match self.lambda_override {
            Some(l) => vec![l],
            None => default.to_vec(),
        }
    }
}

/// A registered check.
#[derive(Debug, Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    /// Gated checks decide the exit status; informational ones never do.
    pub gated: bool,
    pub suites: &'static [&'static str],
}

const BASELINE: &[&str] = &["baseline", "all"];
const GF: &[&str] = &["gf", "all"];
const BASELINE_GF: &[&str] = &["baseline", "gf", "all"];
const LADDER: &[&str] = &["ladder", "all"];
const BASELINE_LADDER: &[&str] = &["baseline", "ladder", "all"];
const CORRESPONDENCE: &[&str] = &["correspondence", "all"];
const NORMALIZATION: &[&str] = &["normalization", "all"];
const MOMENTS: &[&str] = &["moments", "all"];
const BASELINE_MOMENTS: &[&str] = &["baseline", "moments", "all"];
const ORTHOGONALITY: &[&str] = &["orthogonality", "all"];
const BASELINE_ORTHO: &[&str] = &["baseline", "orthogonality", "all"];
const SPECTRUM: &[&str] = &["spectrum", "all"];

/// Catalog in execution order.
pub const CATALOG: &[CheckDef] = &[
    CheckDef { id: "selftest_specfun", gated: true, suites: BASELINE },
    CheckDef { id: "selftest_moment_gaussian", gated: true, suites: BASELINE_MOMENTS },
    CheckDef { id: "selftest_orthogonality_laguerre", gated: true, suites: BASELINE_ORTHO },
    CheckDef { id: "gf_identity_hermite", gated: true, suites: BASELINE_GF },
    CheckDef { id: "gf_identity_legendre", gated: true, suites: GF },
    CheckDef { id: "gf_identity_laguerre_plus", gated: true, suites: GF },
    CheckDef { id: "gf_identity_laguerre_minus", gated: true, suites: GF },
    CheckDef { id: "gf_identity_laguerre_zero", gated: true, suites: GF },
    CheckDef { id: "gf_identity_bessel_even", gated: true, suites: GF },
    CheckDef { id: "gf_identity_bessel_odd", gated: true, suites: GF },
    CheckDef { id: "gf_spherical_sum", gated: true, suites: GF },
    CheckDef { id: "ladder_commutator_sho", gated: true, suites: BASELINE_LADDER },
    CheckDef { id: "ladder_su11_closure", gated: true, suites: LADDER },
    CheckDef { id: "ladder_weyl_heisenberg", gated: true, suites: LADDER },
    CheckDef { id: "ladder_eigen_canonical", gated: true, suites: BASELINE_LADDER },
    CheckDef { id: "ladder_eigen_bg", gated: true, suites: LADDER },
    CheckDef { id: "ladder_eigen_landau", gated: true, suites: LADDER },
    CheckDef { id: "correspondence_sho", gated: true, suites: CORRESPONDENCE },
    CheckDef { id: "correspondence_bg", gated: true, suites: CORRESPONDENCE },
    CheckDef { id: "correspondence_kp", gated: true, suites: CORRESPONDENCE },
    CheckDef { id: "correspondence_landau", gated: true, suites: CORRESPONDENCE },
    CheckDef { id: "correspondence_flatband_even", gated: false, suites: CORRESPONDENCE },
    CheckDef { id: "normalization_legendre_self", gated: true, suites: NORMALIZATION },
    CheckDef { id: "normalization_legendre_printed_m0", gated: true, suites: NORMALIZATION },
    CheckDef { id: "normalization_legendre_printed_adjudication", gated: false, suites: NORMALIZATION },
    CheckDef { id: "overlap_legendre_m0", gated: true, suites: NORMALIZATION },
    CheckDef { id: "overlap_legendre_adjudication", gated: false, suites: NORMALIZATION },
    CheckDef { id: "moment_flatband_even", gated: true, suites: MOMENTS },
    CheckDef { id: "moment_flatband_odd_printed", gated: false, suites: MOMENTS },
    CheckDef { id: "moment_flatband_odd_corrected", gated: false, suites: MOMENTS },
    CheckDef { id: "moment_legendre_line1", gated: false, suites: MOMENTS },
    CheckDef { id: "moment_legendre_line2", gated: false, suites: MOMENTS },
    CheckDef { id: "orthogonality_laguerre", gated: true, suites: ORTHOGONALITY },
    CheckDef { id: "orthogonality_sphere", gated: true, suites: ORTHOGONALITY },
    CheckDef { id: "orthogonality_landau", gated: true, suites: ORTHOGONALITY },
    CheckDef { id: "orthogonality_flatband_even", gated: true, suites: ORTHOGONALITY },
    CheckDef { id: "orthogonality_flatband_odd", gated: true, suites: ORTHOGONALITY },
    CheckDef { id: "orthogonality_flatband_beta", gated: false, suites: ORTHOGONALITY },
    CheckDef { id: "spectrum_values", gated: true, suites: SPECTRUM },
    CheckDef { id: "degeneracy_scan", gated: true, suites: SPECTRUM },
];

pub fn catalog() -> &'static [CheckDef] {
    CATALOG
}

pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    CATALOG.iter().find(|c| c.id == id)
}

/// All check ids belonging to a suite name, in execution order.
pub fn suite_ids(suite: &str) -> Option<Vec<&'static str>> {
    let ids: Vec<&'static str> = CATALOG
        .iter()
        .filter(|c| c.suites.contains(&suite))
        .map(|c| c.id)
        .collect();
    if ids.is_empty() {
        None
    } else {
        Some(ids)
    }
}

/// Run one check by id.
pub fn run_check(id: &str, cfg: &CheckConfig) -> Result<VerificationReport> {
    let def = find_check(id).ok_or_else(|| Error::domain("run_check", format!("unknown check id '{id}'")))?;
    let report = match def.id {
        "selftest_specfun" => selftests::specfun_selftest(cfg),
        "selftest_moment_gaussian" => selftests::moment_gaussian(cfg),
        "selftest_orthogonality_laguerre" => selftests::orthogonality_laguerre_gate(cfg),
        "gf_identity_hermite" => gf::hermite(cfg),
        "gf_identity_legendre" => gf::legendre(cfg),
        "gf_identity_laguerre_plus" => gf::laguerre_plus(cfg),
        "gf_identity_laguerre_minus" => gf::laguerre_minus(cfg),
        "gf_identity_laguerre_zero" => gf::laguerre_zero(cfg),
        "gf_identity_bessel_even" => gf::bessel_even(cfg),
        "gf_identity_bessel_odd" => gf::bessel_odd(cfg),
        "gf_spherical_sum" => gf::spherical_sum(cfg),
        "ladder_commutator_sho" => ladder::commutator_sho(cfg),
        "ladder_su11_closure" => ladder::su11_closure(cfg),
        "ladder_weyl_heisenberg" => ladder::weyl_heisenberg(cfg),
        "ladder_eigen_canonical" => ladder::eigen_canonical(cfg),
        "ladder_eigen_bg" => ladder::eigen_bg(cfg),
        "ladder_eigen_landau" => ladder::eigen_landau(cfg),
        "correspondence_sho" => correspondence::sho(cfg),
        "correspondence_bg" => correspondence::bg(cfg),
        "correspondence_kp" => correspondence::kp(cfg),
        "correspondence_landau" => correspondence::landau(cfg),
        "correspondence_flatband_even" => correspondence::flatband_even(cfg),
        "normalization_legendre_self" => normalization::legendre_self(cfg),
        "normalization_legendre_printed_m0" => normalization::legendre_printed_m0(cfg),
        "normalization_legendre_printed_adjudication" => normalization::legendre_printed_adjudication(cfg),
        "overlap_legendre_m0" => normalization::overlap_m0(cfg),
        "overlap_legendre_adjudication" => normalization::overlap_adjudication(cfg),
        "moment_flatband_even" => moments::flatband_even(cfg),
        "moment_flatband_odd_printed" => moments::flatband_odd_printed(cfg),
        "moment_flatband_odd_corrected" => moments::flatband_odd_corrected(cfg),
        "moment_legendre_line1" => moments::legendre_line1(cfg),
        "moment_legendre_line2" => moments::legendre_line2(cfg),
        "orthogonality_laguerre" => orthogonality::laguerre(cfg),
        "orthogonality_sphere" => orthogonality::sphere(cfg),
        "orthogonality_landau" => orthogonality::landau(cfg),
        "orthogonality_flatband_even" => orthogonality::flatband_even(cfg),
        "orthogonality_flatband_odd" => orthogonality::flatband_odd(cfg),
        "orthogonality_flatband_beta" => orthogonality::flatband_beta(cfg),
        "spectrum_values" => spectrum_checks::values(cfg),
        "degeneracy_scan" => spectrum_checks::degeneracy(cfg),
        _ => unreachable!("catalog and dispatch are maintained together"),
    };
    Ok(report)
}

/// Result of running a selection of checks.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub reports: Vec<VerificationReport>,
    /// Number of gated checks that failed (informational checks never count).
    pub gated_failures: usize,
    /// Orchestration notes (gating decisions).
    pub notes: Vec<String>,
}

/// Run the given checks in catalog order. When the selection contains
/// informational checks, the baseline suite runs first as a gate: if any
/// baseline check fails, informational adjudications are suppressed.
pub fn run_ids(ids: &[&str], cfg: &CheckConfig) -> Result<RunOutcome> {
    for id in ids {
        if find_check(id).is_none() {
            return Err(Error::domain("run_ids", format!("unknown check id '{id}'")));
        }
    }
    let selected: Vec<&'static str> = CATALOG
        .iter()
        .filter(|c| ids.contains(&c.id))
        .map(|c| c.id)
        .collect();
    let wants_informational = selected.iter().any(|id| !find_check(id).unwrap().gated);
    let mut run_list: Vec<&'static str> = Vec::new();
    let mut notes = Vec::new();
    if wants_informational {
        let baseline = suite_ids("baseline").unwrap();
        for id in &baseline {
            if !selected.contains(id) {
                run_list.push(id);
            }
        }
        if !run_list.is_empty() {
            notes.push(format!(
                "baseline gate prepended before informational adjudications: {}",
                run_list.join(", ")
            ));
        }
    }
    run_list.extend(selected.iter().copied());
    // restore catalog order
    let ordered: Vec<&'static str> = CATALOG
        .iter()
        .filter(|c| run_list.contains(&c.id))
        .map(|c| c.id)
        .collect();

    let mut reports = Vec::new();
    let mut gated_failures = 0usize;
    let mut baseline_failed = false;
    let baseline_ids = suite_ids("baseline").unwrap();
    for id in ordered {
        let def = find_check(id).unwrap();
        if !def.gated && baseline_failed {
            notes.push(format!("informational check '{id}' suppressed: baseline gate failed"));
            continue;
        }
        let report = run_check(id, cfg)?;
        if def.gated && !report.pass {
            gated_failures += 1;
            if baseline_ids.contains(&id) {
                baseline_failed = true;
            }
        }
        reports.push(report);
    }
    Ok(RunOutcome { reports, gated_failures, notes })
}

/// Shared helper: track the worst residual and where it happened.
pub(crate) struct ResidualTracker {
    worst: f64,
    at: String,
}

impl ResidualTracker {
    pub fn new() -> Self {
        ResidualTracker { worst: 0.0, at: String::new() }
    }

    pub fn observe(&mut self, residual: f64, location: impl FnOnce() -> String) {
        let r = if residual.is_finite() { residual } else { f64::MAX };
        if r > self.worst || self.at.is_empty() {
            self.worst = r;
            self.at = location();
        }
    }

    pub fn worst(&self) -> f64 {
        self.worst
    }

    pub fn into_note(self) -> String {
        format!("worst residual {:.3e} at {}", self.worst, self.at)
    }
}

pub(crate) fn params_map(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_unique_and_dispatchable() {
        let mut seen = std::collections::BTreeSet::new();
        for def in CATALOG {
            assert!(seen.insert(def.id), "duplicate id {}", def.id);
            assert!(def.suites.contains(&"all"));
        }
    }

    #[test]
    fn suites_resolve() {
        assert!(suite_ids("baseline").unwrap().len() >= 4);
        assert!(suite_ids("all").unwrap().len() == CATALOG.len());
        assert!(suite_ids("nonexistent").is_none());
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(run_ids(&["nope"], &CheckConfig::default()).is_err());
    }
}
