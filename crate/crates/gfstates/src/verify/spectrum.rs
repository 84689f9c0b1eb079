//! Flat-band energy spectrum and the exact degeneracy scan.
//!
//! Energies are quarter-integers times the prefactor: E_{l,m} =
//! prefactor · P/4 with P = (2m-2l-1)(2m+2l+1), so grouping uses exact
//! integer arithmetic on P, never float equality.

use std::collections::BTreeMap;

use crate::states::ModelConstants;

/// E_{l,m} = prefactor (m - l - 1/2)(m + l + 1/2).
pub fn spectrum(l: i64, m: i64, constants: &ModelConstants) -> f64 {
    constants.spectrum_prefactor * (m as f64 - l as f64 - 0.5) * (m as f64 + l as f64 + 0.5)
}

/// The integer 4E/prefactor = (2m-2l-1)(2m+2l+1).
pub fn spectrum_p(l: i64, m: i64) -> i64 {
    (2 * (m - l) - 1) * (2 * (m + l) + 1)
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// One exact-energy class found by the scan.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyClass {
    /// P = 4E/prefactor, always ≡ 3 (mod 4) on the bound-state labels.
    pub p: i64,
    /// Canonical state labels (l, m) with l < 0; each state also has the
    /// mirror representative (-l-1, m) solving the same radial equation.
    pub states: Vec<(i64, i64)>,
    pub prime: bool,
    /// Window-independent multiplicity from the odd factorizations of P
    /// with u + v ≡ 0 (mod 4); in-range states may undercount it.
    pub full_multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegeneracyScan {
    pub range: i64,
    pub classes: Vec<EnergyClass>,
    /// (P, full multiplicity) pairs violating "multiplicity 1 iff P prime,
    /// two-fold otherwise", judged on the window-independent multiplicity.
    pub counterexamples: Vec<(i64, usize)>,
    /// in-range multiplicity -> number of energy classes with that count
    pub histogram: BTreeMap<usize, usize>,
    /// exact internal consistency: E = P/4, P ≡ 3 (mod 4), P > 0
    pub consistent: bool,
}

/// Number of distinct bound states with 4E = P, counted from the ordered
/// factorizations P = u·v (u, v odd positive, u + v ≡ 0 mod 4) with the
/// mirror pair (u,v) ↔ (v,u) collapsed. u = v never qualifies, so the
/// ordered count is even.
pub fn full_multiplicity(p: i64) -> usize {
    if p <= 0 {
        return 0;
    }
    let mut ordered = 0usize;
    let mut d = 1i64;
    while d * d <= p {
        if p % d == 0 {
            let e = p / d;
            if (d + e) % 4 == 0 {
                ordered += if d == e { 1 } else { 2 };
            }
        }
        d += 1;
    }
    ordered / 2
}

/// Enumerate the square-integrable labels (m ≤ -1, m ≤ l ≤ -m-1) with
/// |l|, |m| ≤ range, collapse the l ↔ -l-1 mirror (same energy, same
/// radial equation), group by exact P, and test the degeneracy claim.
pub fn degeneracy_scan(range: i64, constants: &ModelConstants) -> DegeneracyScan {
    let mut by_p: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    let mut consistent = true;
    for m in -range..=-1 {
        // canonical representatives l ∈ [m, -1]; the mirror -l-1 ∈ [0, -m-1]
        for l in m..=-1 {
            if l.abs() > range || (-l - 1) > range {
                continue;
            }
            let p = spectrum_p(l, m);
            let p_mirror = spectrum_p(-l - 1, m);
            if p != p_mirror || p.rem_euclid(4) != 3 || p <= 0 {
                consistent = false;
            }
            let e = spectrum(l, m, constants);
            if e != constants.spectrum_prefactor * p as f64 / 4.0 {
                consistent = false;
            }
            by_p.entry(p).or_default().push((l, m));
        }
    }
    let mut classes = Vec::with_capacity(by_p.len());
    let mut counterexamples = Vec::new();
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for (p, states) in by_p {
        let prime = is_prime(p);
        let mult = states.len();
        let full = full_multiplicity(p);
        if full < mult {
            consistent = false; // the window can only undercount
        }
        *histogram.entry(mult).or_insert(0) += 1;
        // the claim: no degeneracy iff P prime, two-fold otherwise
        let claim_mult = if prime { 1 } else { 2 };
        if full != claim_mult {
            counterexamples.push((p, full));
        }
        classes.push(EnergyClass { p, states, prime, full_multiplicity: full });
    }
    DegeneracyScan { range, classes, counterexamples, histogram, consistent }
}
