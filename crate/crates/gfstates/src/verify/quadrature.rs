//! Adaptive Gauss-Kronrod quadrature on finite intervals, with a
//! geometric-panel driver for the exponentially weighted half line.

use crate::error::{Error, Result};

/// Outcome of a quadrature request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub nodes_used: usize,
}

/// Integration support of the radial measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    UnitInterval,
    HalfLine,
}

// 15-point Kronrod extension of 7-point Gauss (positive abscissae).
const XGK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_27,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_2,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_299,
    0.209_482_141_084_728,
];
const WG: [f64; 4] = [
    0.129_484_966_168_87,
    0.279_705_391_489_276_67,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

struct PanelEstimate {
    value: f64,
    error: f64,
    finite: bool,
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> PanelEstimate {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut finite = fc.is_finite();
    let mut resabs = fc.abs() * WGK[7];
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate().take(7) {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        finite &= f1.is_finite() && f2.is_finite();
        kronrod += wk * (f1 + f2);
        resabs += wk * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    let raw_err = ((kronrod - gauss) * half).abs();
    // standard rescaling: the K-G difference underestimates smooth errors
    let scaled = if raw_err != 0.0 {
        let resasc = resabs * half.abs();
        if resasc != 0.0 {
            (200.0 * raw_err / resasc).powf(1.5).min(1.0) * resasc
        } else {
            raw_err
        }
    } else {
        raw_err
    };
    PanelEstimate { value, error: scaled.max(raw_err), finite }
}

/// Adaptive integration on [a, b]. The tolerance is applied as
/// max(target · |result|, target) so that integrals that are exactly zero
/// (Gram off-diagonals) still terminate; integrands here are O(1)-scaled.
pub fn integrate_interval<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, target: f64, max_panels: usize) -> Result<QuadratureResult> {
    #[derive(Debug)]
    struct Panel {
        a: f64,
        b: f64,
        value: f64,
        error: f64,
    }
    let first = gauss_kronrod(f, a, b);
    if !first.finite {
        return Err(Error::Convergence {
            context: "integrate_interval",
            best_estimate: 0.0,
            error_estimate: f64::MAX,
        });
    }
    let mut panels = vec![Panel { a, b, value: first.value, error: first.error }];
    let mut nodes = 15usize;
    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.error).sum();
        let bound = (target * total.abs()).max(target);
        if err <= bound {
            return Ok(QuadratureResult { value: total, error_estimate: err, nodes_used: nodes });
        }
        if panels.len() >= max_panels {
            return Err(Error::Convergence {
                context: "integrate_interval",
                best_estimate: total,
                error_estimate: err,
            });
        }
        // split the worst panel (deterministic: first max)
        let mut worst = 0usize;
        for (i, p) in panels.iter().enumerate() {
            if p.error > panels[worst].error {
                worst = i;
            }
        }
        let Panel { a: pa, b: pb, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (pa + pb);
        for (lo, hi) in [(pa, mid), (mid, pb)] {
            let est = gauss_kronrod(f, lo, hi);
            nodes += 15;
            if !est.finite {
                let total: f64 = panels.iter().map(|p| p.value).sum();
                return Err(Error::Convergence {
                    context: "integrate_interval",
                    best_estimate: total,
                    error_estimate: f64::MAX,
                });
            }
            panels.push(Panel { a: lo, b: hi, value: est.value, error: est.error });
        }
    }
}

/// Adaptive quadrature of the radial supports used by the measure and
/// orthogonality checks. Half-line integration extends geometric panels
/// [0,1], [1,2], [2,4], ... until two consecutive panels are negligible.
///
/// ```
/// use gfstates::verify::{integrate_radial, Support};
///
/// let q = integrate_radial(&|r: f64| r.powi(5) * (-r).exp(), Support::HalfLine, 1e-12).unwrap();
/// assert!((q.value - 120.0).abs() < 1e-9);
/// ```
pub fn integrate_radial<F: Fn(f64) -> f64>(f: &F, support: Support, target_rel_err: f64) -> Result<QuadratureResult> {
    if target_rel_err.is_nan() || target_rel_err <= 0.0 {
        return Err(Error::domain("integrate_radial", "target_rel_err must be positive"));
    }
    match support {
        Support::UnitInterval => integrate_interval(f, 0.0, 1.0, target_rel_err, 800),
        Support::HalfLine => {
            let mut total = 0.0_f64;
            let mut err = 0.0_f64;
            let mut nodes = 0usize;
            let mut lo = 0.0_f64;
            let mut hi = 1.0_f64;
            let mut quiet_panels = 0u32;
            for panel_index in 0..48 {
                let part = integrate_interval(f, lo, hi, target_rel_err * 0.25, 400)?;
                total += part.value;
                err += part.error_estimate;
                nodes += part.nodes_used;
                let scale = total.abs().max(1.0);
                // panels through [32, 64] are always examined so integrands
                // peaking far from the origin cannot trigger an early stop
                if panel_index >= 7 && part.value.abs() + part.error_estimate < 0.05 * target_rel_err * scale {
                    quiet_panels += 1;
                    if quiet_panels >= 2 {
                        return Ok(QuadratureResult { value: total, error_estimate: err, nodes_used: nodes });
                    }
                } else {
                    quiet_panels = 0;
                }
                lo = hi;
                hi *= 2.0;
            }
            Err(Error::Convergence {
                context: "integrate_radial(half_line)",
                best_estimate: total,
                error_estimate: err.max(f64::MIN_POSITIVE),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_integrals() {
        let r = integrate_radial(&|x: f64| (-x).exp(), Support::HalfLine, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let r = integrate_radial(&|x: f64| x.powi(5) * (-x).exp(), Support::HalfLine, 1e-12).unwrap();
        assert!((r.value - 120.0).abs() < 1e-9 * 120.0);
        // Γ(18) with an O(1) rescaling
        let target = 355_687_428_096_000.0_f64; // 17!
        let r = integrate_radial(&|x: f64| x.powi(17) * (-x).exp() / target, Support::HalfLine, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn unit_interval_polynomial() {
        let r = integrate_radial(&|x: f64| x.powi(3), Support::UnitInterval, 1e-12).unwrap();
        assert!((r.value - 0.25).abs() < 1e-14);
    }

    #[test]
    fn gaussian_moments() {
        // ∫₀^∞ r^{2n+1} e^{-r²} dr = n!/2
        for n in 0..=10u32 {
            let nf = crate::specfun::factorial(n as u64);
            let r = integrate_radial(
                &|x: f64| x.powi(2 * n as i32 + 1) * (-x * x).exp() / (0.5 * nf),
                Support::HalfLine,
                1e-12,
            )
            .unwrap();
            assert!((r.value - 1.0).abs() < 1e-11, "n={n}: {}", r.value);
        }
    }

    #[test]
    fn divergent_integral_reports_nonconvergence() {
        let out = integrate_radial(&|x: f64| 1.0 / x, Support::UnitInterval, 1e-10);
        assert!(matches!(out, Err(Error::Convergence { .. })));
    }

    #[test]
    fn zero_integrand_terminates() {
        let r = integrate_radial(&|_| 0.0, Support::HalfLine, 1e-12).unwrap();
        assert_eq!(r.value, 0.0);
    }
}
