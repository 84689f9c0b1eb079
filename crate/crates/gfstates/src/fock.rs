//! Model-agnostic truncated Fock-space algebra: labeled coefficient series,
//! ladder operators defined by their matrix elements, and eigenvalue-residual
//! evaluation.
//!
//! Series are immutable values; every operation returns a new series.

use num_complex::Complex64;
use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Basis-state families. The Calogero-Sutherland λ rides on the label
/// (it selects the Hilbert space), flat-band k is encoded in the labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sho,
    Sphere,
    CalogeroSutherland,
    Landau,
    FlatBandEven,
    FlatBandOdd,
}

/// A basis-state label within one family.
#[derive(Debug, Clone, Copy)]
pub enum QuantumLabel {
    Sho { n: u32 },
    Sphere { l: u32, m: i32 },
    CalogeroSutherland { n: u32, lambda: f64 },
    /// Landau level n ≥ 0 and second index m ≥ -n.
    Landau { n: i64, m: i64 },
    FlatBand { l: i64, m: i64 },
}

impl QuantumLabel {
    /// Does this label belong to the given family's basis? Flat-band labels
    /// serve both parities; the series' family tag picks one.
    pub fn belongs_to(&self, family: Family) -> bool {
        matches!(
            (self, family),
            (QuantumLabel::Sho { .. }, Family::Sho)
                | (QuantumLabel::Sphere { .. }, Family::Sphere)
                | (QuantumLabel::CalogeroSutherland { .. }, Family::CalogeroSutherland)
                | (QuantumLabel::Landau { .. }, Family::Landau)
                | (QuantumLabel::FlatBand { .. }, Family::FlatBandEven | Family::FlatBandOdd)
        )
    }

    fn key(&self) -> (u8, i64, i64, u64) {
        match *self {
            QuantumLabel::Sho { n } => (0, n as i64, 0, 0),
            QuantumLabel::Sphere { l, m } => (1, l as i64, m as i64, 0),
            QuantumLabel::CalogeroSutherland { n, lambda } => (2, n as i64, 0, lambda.to_bits()),
            QuantumLabel::Landau { n, m } => (3, n, m, 0),
            QuantumLabel::FlatBand { l, m } => (4, l, m, 0),
        }
    }

    /// Family-specific index constraints.
    pub fn valid(&self) -> bool {
        match *self {
            QuantumLabel::Sho { .. } => true,
            QuantumLabel::Sphere { l, m } => m.unsigned_abs() <= l,
            QuantumLabel::CalogeroSutherland { lambda, .. } => lambda > -0.5,
            QuantumLabel::Landau { n, m } => n >= 0 && m >= -n,
            QuantumLabel::FlatBand { m, .. } => m <= -1,
        }
    }
}

impl PartialEq for QuantumLabel {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}
impl Eq for QuantumLabel {}
impl PartialOrd for QuantumLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for QuantumLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// A truncated Fock expansion: ordered labels with complex coefficients.
/// `norm_const` records the positive factor the raw coefficients were
/// divided by during normalization (raw = norm_const × stored).
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    family: Family,
    labels: Vec<QuantumLabel>,
    coeffs: Vec<Complex64>,
    norm_const: Option<f64>,
}

impl CoefficientSeries {
    pub fn new(family: Family, labels: Vec<QuantumLabel>, coeffs: Vec<Complex64>) -> Result<Self> {
        if labels.len() != coeffs.len() {
            return Err(Error::domain("coefficient_series", "label/coefficient length mismatch"));
        }
        if labels.is_empty() {
            return Err(Error::domain("coefficient_series", "empty series"));
        }
        for w in labels.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::domain("coefficient_series", "labels must be strictly ordered"));
            }
        }
        for l in &labels {
            if !l.valid() {
                return Err(Error::domain("coefficient_series", format!("invalid label {l:?}")));
            }
            if !l.belongs_to(family) {
                return Err(Error::FamilyMismatch(format!("label {l:?} in a {family:?} series")));
            }
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::domain("coefficient_series", "non-finite coefficient"));
        }
        Ok(CoefficientSeries { family, labels, coeffs, norm_const: None })
    }

    /// A single basis ket with unit coefficient.
    pub fn basis_ket(family: Family, label: QuantumLabel) -> Result<Self> {
        CoefficientSeries::new(family, vec![label], vec![Complex64::new(1.0, 0.0)])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn labels(&self) -> &[QuantumLabel] {
        &self.labels
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn norm_const(&self) -> Option<f64> {
        self.norm_const
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn coeff(&self, label: &QuantumLabel) -> Complex64 {
        match self.labels.binary_search(label) {
            Ok(i) => self.coeffs[i],
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }

    /// Divide by the ℓ² norm and record it.
    pub fn normalized(mut self) -> Self {
        let n = self.norm_sq().sqrt();
        for c in self.coeffs.iter_mut() {
            *c /= n;
        }
        self.norm_const = Some(n);
        self
    }

    /// Divide by an externally supplied constant (e.g. an analytic
    /// normalization) and record it.
    pub fn normalized_by(mut self, constant: f64) -> Self {
        for c in self.coeffs.iter_mut() {
            *c /= constant;
        }
        self.norm_const = Some(constant);
        self
    }
}

/// Ladder direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Raise,
    Diagonal,
}

/// An abstract ladder operator defined by its label shift and matrix element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    /// a φ_n = √n φ_{n-1}
    ShoLower,
    /// a† φ_n = √(n+1) φ_{n+1}
    ShoRaise,
    /// J₋ |n,λ⟩ = √(n(n+λ-1/2)) |n-1,λ⟩
    Su11Lower,
    /// J₊ |n,λ⟩ = √((n+1)(n+λ+1/2)) |n+1,λ⟩
    Su11Raise,
    /// J₃ |n,λ⟩ = (n + λ/2 + 1/4) |n,λ⟩
    Su11Diag,
    /// a |n,m⟩ = √n |n-1,m+1⟩
    LandauA,
    /// a† |n,m⟩ = √(n+1) |n+1,m-1⟩
    LandauADag,
    /// b |n,m⟩ = √(n+m) |n,m-1⟩
    LandauB,
    /// b† |n,m⟩ = √(n+m+1) |n,m+1⟩
    LandauBDag,
}

impl Ladder {
    pub fn name(&self) -> &'static str {
        match self {
            Ladder::ShoLower => "a",
            Ladder::ShoRaise => "a_dag",
            Ladder::Su11Lower => "J_minus",
            Ladder::Su11Raise => "J_plus",
            Ladder::Su11Diag => "J_3",
            Ladder::LandauA => "landau_a",
            Ladder::LandauADag => "landau_a_dag",
            Ladder::LandauB => "landau_b",
            Ladder::LandauBDag => "landau_b_dag",
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            Ladder::ShoLower | Ladder::Su11Lower | Ladder::LandauA | Ladder::LandauB => Direction::Lower,
            Ladder::ShoRaise | Ladder::Su11Raise | Ladder::LandauADag | Ladder::LandauBDag => Direction::Raise,
            Ladder::Su11Diag => Direction::Diagonal,
        }
    }

    pub fn compatible(&self, family: Family) -> bool {
        matches!(
            (self, family),
            (Ladder::ShoLower | Ladder::ShoRaise, Family::Sho)
                | (Ladder::Su11Lower | Ladder::Su11Raise | Ladder::Su11Diag, Family::CalogeroSutherland)
                | (
                    Ladder::LandauA | Ladder::LandauADag | Ladder::LandauB | Ladder::LandauBDag,
                    Family::Landau
                )
        )
    }

    /// Image label and matrix element; `None` when the operator annihilates
    /// the label (lowering off the bottom of the ladder).
    pub fn apply_label(&self, label: &QuantumLabel) -> Option<(QuantumLabel, f64)> {
        match (*self, *label) {
            (Ladder::ShoLower, QuantumLabel::Sho { n }) => {
                if n == 0 {
                    None
                } else {
                    Some((QuantumLabel::Sho { n: n - 1 }, (n as f64).sqrt()))
                }
            }
            (Ladder::ShoRaise, QuantumLabel::Sho { n }) => {
                Some((QuantumLabel::Sho { n: n + 1 }, ((n + 1) as f64).sqrt()))
            }
            (Ladder::Su11Lower, QuantumLabel::CalogeroSutherland { n, lambda }) => {
                if n == 0 {
                    None
                } else {
                    let nf = n as f64;
                    Some((
                        QuantumLabel::CalogeroSutherland { n: n - 1, lambda },
                        (nf * (nf + lambda - 0.5)).sqrt(),
                    ))
                }
            }
            (Ladder::Su11Raise, QuantumLabel::CalogeroSutherland { n, lambda }) => {
                let nf = n as f64;
                Some((
                    QuantumLabel::CalogeroSutherland { n: n + 1, lambda },
                    ((nf + 1.0) * (nf + lambda + 0.5)).sqrt(),
                ))
            }
            (Ladder::Su11Diag, QuantumLabel::CalogeroSutherland { n, lambda }) => Some((
                QuantumLabel::CalogeroSutherland { n, lambda },
                n as f64 + 0.5 * lambda + 0.25,
            )),
            (Ladder::LandauA, QuantumLabel::Landau { n, m }) => {
                if n == 0 {
                    None
                } else {
                    Some((QuantumLabel::Landau { n: n - 1, m: m + 1 }, (n as f64).sqrt()))
                }
            }
            (Ladder::LandauADag, QuantumLabel::Landau { n, m }) => {
                Some((QuantumLabel::Landau { n: n + 1, m: m - 1 }, ((n + 1) as f64).sqrt()))
            }
            (Ladder::LandauB, QuantumLabel::Landau { n, m }) => {
                if n + m == 0 {
                    None
                } else {
                    Some((QuantumLabel::Landau { n, m: m - 1 }, ((n + m) as f64).sqrt()))
                }
            }
            (Ladder::LandauBDag, QuantumLabel::Landau { n, m }) => {
                Some((QuantumLabel::Landau { n, m: m + 1 }, ((n + m + 1) as f64).sqrt()))
            }
            _ => None,
        }
    }
}

/// Apply a ladder operator to a series: coefficients are mapped through the
/// matrix elements and labels shifted. Lowering the ground label contributes
/// zero rather than erroring.
pub fn ladder_apply(op: Ladder, s: &CoefficientSeries) -> Result<CoefficientSeries> {
    if !op.compatible(s.family()) {
        return Err(Error::FamilyMismatch(format!(
            "ladder {} applied to {:?} series",
            op.name(),
            s.family()
        )));
    }
    let mut acc: std::collections::BTreeMap<QuantumLabel, Complex64> = std::collections::BTreeMap::new();
    for (label, &c) in s.labels.iter().zip(s.coeffs.iter()) {
        if let Some((target, elem)) = op.apply_label(label) {
            *acc.entry(target).or_insert(Complex64::new(0.0, 0.0)) += elem * c;
        }
    }
    if acc.is_empty() {
        // fully annihilated: represent as zero coefficient on the ground label
        return CoefficientSeries::new(s.family, vec![s.labels[0]], vec![Complex64::new(0.0, 0.0)]);
    }
    let (labels, coeffs): (Vec<_>, Vec<_>) = acc.into_iter().unzip();
    CoefficientSeries::new(s.family, labels, coeffs)
}

/// Max over retained labels of |(op s - eigenvalue s)|, excluding the
/// dropped tail index (the top label of s, whose image coefficient is
/// incomplete after lowering).
pub fn eigen_residual(op: Ladder, s: &CoefficientSeries, eigenvalue: Complex64) -> Result<f64> {
    let applied = ladder_apply(op, s)?;
    let mut worst = 0.0_f64;
    for (label, &c) in s.labels.iter().zip(s.coeffs.iter()).take(s.len() - 1) {
        let r = (applied.coeff(label) - eigenvalue * c).norm();
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

/// Σ conj(c1) c2 over shared labels.
pub fn inner_product(s1: &CoefficientSeries, s2: &CoefficientSeries) -> Result<Complex64> {
    if s1.family() != s2.family() {
        return Err(Error::FamilyMismatch(format!("{:?} vs {:?}", s1.family(), s2.family())));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut i = 0;
    let mut j = 0;
    while i < s1.len() && j < s2.len() {
        match s1.labels[i].cmp(&s2.labels[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                acc += s1.coeffs[i].conj() * s2.coeffs[j];
                i += 1;
                j += 1;
            }
        }
    }
    Ok(acc)
}
