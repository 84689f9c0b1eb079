//! Closed-form generating-function evaluators, their defining partial sums,
//! and Taylor-coefficient extraction in the expansion variable.
//!
//! The two-index Bessel-type functions of the flat-band model are only
//! reachable through Taylor extraction: their generating functions contain
//! √t factors that cancel in pairs, leaving an integer-power series whose
//! coefficients define the functions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::Series;
use crate::specfun;

/// Parity selector for the flat-band generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// One generating-function family with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratingFunction {
    /// exp(2xt - t²) = Σ tⁿ/n! H_n(x), entire in t.
    Hermite,
    /// (2m-1)!! (1-x²)^{m/2} (1 + t² - 2xt)^{-(m+1/2)} = Σ t^l P^m_{m+l}(x), |t| < 1.
    LegendreM { m: u32 },
    /// (xt)^{-m/2} J_m(2√(xt)) e^t = Σ tⁿ/(n+m)! L^m_n(x), m > -1, entire.
    LaguerrePlus { m: f64 },
    /// e^{-xt/(1-t)} (1-t)^{-(m+1)} = Σ tⁿ L^m_n(x), |t| < 1.
    LaguerreMinus { m: f64 },
    /// (1+t)^m e^{-xt} = Σ tⁿ L^{m-n}_n(x), |t| < 1.
    LaguerreZero { m: f64 },
    /// x^{-k}/(2√(xt)) [(1-√(xt))^{2k} e^{β√(t/x)} - (1+√(xt))^{2k} e^{-β√(t/x)}], x > 0.
    BesselEven { k: u32, beta: f64 },
    /// x^{-k-1}/2 [(1-√(xt))^{2k+1} e^{β√(t/x)} + (1+√(xt))^{2k+1} e^{-β√(t/x)}], x > 0.
    BesselOdd { k: u32, beta: f64 },
}

/// Taylor coefficients of a generating function in its expansion variable.
/// Coefficients are real because extraction always happens at real x.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    pub coeffs: Vec<f64>,
    pub variable: &'static str,
}

impl GeneratingFunction {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GeneratingFunction::Hermite | GeneratingFunction::LegendreM { .. } => Ok(()),
            GeneratingFunction::LaguerrePlus { m } => {
                if m > -1.0 {
                    Ok(())
                } else {
                    Err(Error::domain("generating_function", format!("LaguerrePlus requires m > -1, got {m}")))
                }
            }
            GeneratingFunction::LaguerreMinus { m } | GeneratingFunction::LaguerreZero { m } => {
                if m.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain("generating_function", "non-finite Laguerre parameter"))
                }
            }
            GeneratingFunction::BesselEven { beta, .. } | GeneratingFunction::BesselOdd { beta, .. } => {
                if beta > 0.0 {
                    Ok(())
                } else {
                    Err(Error::domain("generating_function", format!("Bessel family requires beta > 0, got {beta}")))
                }
            }
        }
    }

    fn check_x(&self, x: f64) -> Result<()> {
        match *self {
            GeneratingFunction::LegendreM { .. } if !(-1.0..=1.0).contains(&x) => {
                Err(Error::domain("gf_closed", format!("Legendre argument |x| > 1 (x = {x})")))
            }
            GeneratingFunction::BesselEven { .. } | GeneratingFunction::BesselOdd { .. } if x <= 0.0 => Err(
                Error::domain("gf_closed", format!("Bessel families need x > 0 for a fixed √(xt) branch (x = {x})")),
            ),
            _ => Ok(()),
        }
    }

    fn check_t(&self, t: Complex64) -> Result<()> {
        match *self {
            GeneratingFunction::LegendreM { .. }
            | GeneratingFunction::LaguerreMinus { .. }
            | GeneratingFunction::LaguerreZero { .. } => {
                // the convergence-disc boundary is excluded
                if t.norm() < 1.0 {
                    Ok(())
                } else {
                    Err(Error::domain("gf_closed", format!("|t| = {} outside the open unit disc", t.norm())))
                }
            }
            _ => Ok(()),
        }
    }
}

/// L^{m-n}_n(x) = Σ_{k=0}^{n} C(m, n-k) (-x)^k / k!, the n-th series term of
/// the third Laguerre generating function. The generalized binomial
/// coefficient vanishes identically for integer m < n-k, so only the stable
/// tail survives.
fn laguerre_shifted_term(m: f64, n: usize, x: f64) -> f64 {
    let mut sum = 0.0_f64;
    for k in 0..=n {
        let j = (n - k) as u32;
        let mut binom = 1.0_f64;
        for i in 0..j {
            binom *= (m - i as f64) / (i as f64 + 1.0);
        }
        if binom == 0.0 {
            continue;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += binom * sign * x.powi(k as i32) * (-specfun::log_factorial(k as u64)).exp();
    }
    sum
}

/// (2m)!/(2^m m!) (1-x²)^{m/2} = (2m-1)!! s^m, the t⁰ coefficient of the
/// Legendre generating function. Interleaved product avoids overflow.
fn legendre_prefactor(m: u32, x: f64) -> f64 {
    let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    let mut p = 1.0_f64;
    for i in 1..=m {
        p *= (2 * i - 1) as f64 * s;
    }
    p
}

/// sinh(a)/a, series near zero.
fn sinhc(a: Complex64) -> Complex64 {
    if a.norm() < 1e-4 {
        let a2 = a * a;
        Complex64::new(1.0, 0.0) + a2 / 6.0 + a2 * a2 / 120.0
    } else {
        a.sinh() / a
    }
}

fn binomial(n: u32, j: u32) -> f64 {
    let mut p = 1.0_f64;
    for i in 0..j {
        p *= (n - i) as f64 / (i + 1) as f64;
    }
    p
}

/// Evaluate the printed closed form at real x and complex t, principal
/// branch of √(xt) for the Bessel families.
pub fn gf_closed(spec: &GeneratingFunction, x: f64, t: Complex64) -> Result<Complex64> {
    spec.validate()?;
    spec.check_x(x)?;
    spec.check_t(t)?;
    match *spec {
        GeneratingFunction::Hermite => Ok((2.0 * x * t - t * t).exp()),
        GeneratingFunction::LegendreM { m } => {
            // 1 + t² - 2xt = (1 - t e^{iθ})(1 - t e^{-iθ}); each factor has
            // positive real part on |t| < 1, so the principal logs add safely.
            let theta = x.acos();
            let e = Complex64::new(0.0, theta).exp();
            let ln1 = (Complex64::new(1.0, 0.0) - t * e).ln();
            let ln2 = (Complex64::new(1.0, 0.0) - t * e.conj()).ln();
            let p = (-(m as f64 + 0.5) * (ln1 + ln2)).exp();
            Ok(legendre_prefactor(m, x) * p)
        }
        GeneratingFunction::LaguerrePlus { m } => {
            // closed form is only exercised on the nonnegative real t axis;
            // complex t is served by gf_series
            if t.im != 0.0 || t.re < 0.0 || x < 0.0 {
                return Err(Error::domain(
                    "gf_closed",
                    "LaguerrePlus closed form requires real t >= 0 and x >= 0 (use gf_series off-axis)",
                ));
            }
            let z = t.re;
            let xz = x * z;
            let value = if xz == 0.0 {
                (-specfun::ln_gamma(m + 1.0)).exp() * z.exp()
            } else {
                xz.powf(-0.5 * m) * specfun::bessel_j(m, 2.0 * xz.sqrt())? * z.exp()
            };
            Ok(Complex64::new(value, 0.0))
        }
        GeneratingFunction::LaguerreMinus { m } => {
            let one = Complex64::new(1.0, 0.0);
            Ok((-x * t / (one - t)).exp() * (-(m + 1.0) * (one - t).ln()).exp())
        }
        GeneratingFunction::LaguerreZero { m } => {
            let one = Complex64::new(1.0, 0.0);
            Ok((m * (one + t).ln()).exp() * (-x * t).exp())
        }
        GeneratingFunction::BesselEven { k, beta } => {
            let u = t.sqrt();
            let s = x.sqrt() * u;
            let a = beta * u / x.sqrt();
            // (1-s)^{2k} ∓ (1+s)^{2k} split into even/odd binomial parts so the
            // whole expression is explicitly even in u (integer powers of t)
            let mut sum = Complex64::new(0.0, 0.0); // (1-s)^{2k} + (1+s)^{2k}
            let mut sp = Complex64::new(1.0, 0.0); // s^j
            for j in (0..=2 * k).step_by(2) {
                sum += 2.0 * binomial(2 * k, j) * sp;
                sp *= s * s;
            }
            // [(1-s)^{2k} - (1+s)^{2k}] / s = -2 Σ_{j odd} C(2k,j) s^{j-1}
            let mut diff_over_s = Complex64::new(0.0, 0.0);
            let mut sp = Complex64::new(1.0, 0.0);
            let mut j = 1;
            while j <= 2 * k {
                diff_over_s += -2.0 * binomial(2 * k, j) * sp;
                sp *= s * s;
                j += 2;
            }
            let xf = x.powi(-(k as i32));
            Ok(0.5 * xf * (diff_over_s * a.cosh() + sum * (beta / x) * sinhc(a)))
        }
        GeneratingFunction::BesselOdd { k, beta } => {
            let u = t.sqrt();
            let s = x.sqrt() * u;
            let a = beta * u / x.sqrt();
            let n = 2 * k + 1;
            let mut even_part = Complex64::new(0.0, 0.0); // (1-s)^n + (1+s)^n
            let mut odd_part = Complex64::new(0.0, 0.0); // (1-s)^n - (1+s)^n
            let mut sp = Complex64::new(1.0, 0.0);
            for j in 0..=n {
                let c = binomial(n, j);
                if j % 2 == 0 {
                    even_part += 2.0 * c * sp;
                } else {
                    odd_part += -2.0 * c * sp;
                }
                sp *= s;
            }
            let xf = x.powi(-(k as i32 + 1));
            Ok(0.5 * xf * (even_part * a.cosh() + odd_part * a.sinh()))
        }
    }
}

/// Partial sum of the defining series up to `order`, plus the magnitude of
/// the final included term as a convergence diagnostic.
pub fn gf_series(spec: &GeneratingFunction, x: f64, t: Complex64, order: usize) -> Result<(Complex64, f64)> {
    spec.validate()?;
    spec.check_x(x)?;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = 0.0_f64;
    match *spec {
        GeneratingFunction::Hermite => {
            let mut h_prev = 0.0_f64;
            let mut h = 1.0_f64; // H_0
            let mut w = Complex64::new(1.0, 0.0); // tⁿ/n!
            for n in 0..=order {
                let term = w * h;
                sum += term;
                last = term.norm();
                let hp = 2.0 * x * h - 2.0 * n as f64 * h_prev;
                h_prev = h;
                h = hp;
                w *= t / (n as f64 + 1.0);
            }
        }
        GeneratingFunction::LegendreM { m } => {
            let mf = m as f64;
            let mut p_prev = 0.0_f64;
            let mut p = legendre_prefactor(m, x); // P^m_m
            let mut w = Complex64::new(1.0, 0.0);
            for l in 0..=order {
                let term = w * p;
                sum += term;
                last = term.norm();
                // advance P^m_{m+l} -> P^m_{m+l+1}
                let ll = mf + l as f64;
                let p_next = if l == 0 {
                    x * (2.0 * mf + 1.0) * p
                } else {
                    ((2.0 * ll + 1.0) * x * p - (ll + mf) * p_prev) / (ll + 1.0 - mf)
                };
                p_prev = p;
                p = p_next;
                w *= t;
            }
        }
        GeneratingFunction::LaguerrePlus { m } => {
            let mut l_prev = 0.0_f64;
            let mut l = 1.0_f64;
            let mut w = Complex64::new((-specfun::ln_gamma(m + 1.0)).exp(), 0.0); // tⁿ/Γ(n+m+1)
            for n in 0..=order {
                let term = w * l;
                sum += term;
                last = term.norm();
                let nf = n as f64;
                let lp = ((2.0 * nf + 1.0 + m - x) * l - (nf + m) * l_prev) / (nf + 1.0);
                l_prev = l;
                l = lp;
                w *= t / (nf + m + 1.0);
            }
        }
        GeneratingFunction::LaguerreMinus { m } => {
            let mut l_prev = 0.0_f64;
            let mut l = 1.0_f64;
            let mut w = Complex64::new(1.0, 0.0);
            for n in 0..=order {
                let term = w * l;
                sum += term;
                last = term.norm();
                let nf = n as f64;
                let lp = ((2.0 * nf + 1.0 + m - x) * l - (nf + m) * l_prev) / (nf + 1.0);
                l_prev = l;
                l = lp;
                w *= t;
            }
        }
        GeneratingFunction::LaguerreZero { m } => {
            // L^{m-n}_n(x) by its explicit finite sum Σ_k C(m, n-k)(-x)^k/k!;
            // the recurrence in the (very negative) upper index passes
            // through exponentially large intermediates and is unusable here
            let mut w = Complex64::new(1.0, 0.0);
            for n in 0..=order {
                let term = w * laguerre_shifted_term(m, n, x);
                sum += term;
                last = term.norm();
                w *= t;
            }
        }
        GeneratingFunction::BesselEven { .. } | GeneratingFunction::BesselOdd { .. } => {
            let ts = extract_taylor(spec, x, order)?;
            let mut w = Complex64::new(1.0, 0.0);
            for &c in ts.coeffs.iter() {
                let term = w * c;
                sum += term;
                last = term.norm();
                w *= t;
            }
        }
    }
    Ok((sum, last))
}

/// Coefficients of t^0..t^order of the closed form, by truncated
/// power-series arithmetic. For the Bessel families the expansion runs in
/// u = √t and the residual half-integer powers must cancel below 1e-9.
pub fn extract_taylor(spec: &GeneratingFunction, x: f64, order: usize) -> Result<TaylorSeries> {
    spec.validate()?;
    spec.check_x(x)?;
    match *spec {
        GeneratingFunction::Hermite => {
            let g = Series::poly(&[0.0, 2.0 * x, -1.0], order).exp();
            Ok(TaylorSeries { coeffs: g.c, variable: "t" })
        }
        GeneratingFunction::LegendreM { m } => {
            let q = Series::poly(&[1.0, -2.0 * x, 1.0], order);
            let g = q.powf(-(m as f64 + 0.5)).scale(legendre_prefactor(m, x));
            Ok(TaylorSeries { coeffs: g.c, variable: "t" })
        }
        GeneratingFunction::LaguerrePlus { m } => {
            // (xz)^{-m/2} J_m(2√(xz)) = Σ_j (-x)^j z^j / (j! Γ(m+j+1)), entire
            let mut bess = Series::zeros(order);
            let mut cj = (-specfun::ln_gamma(m + 1.0)).exp();
            for j in 0..=order {
                bess.c[j] = cj;
                cj *= -x / ((j as f64 + 1.0) * (m + j as f64 + 1.0));
            }
            let mut ex = Series::zeros(order);
            let mut w = 1.0_f64;
            for j in 0..=order {
                ex.c[j] = w;
                w /= j as f64 + 1.0;
            }
            Ok(TaylorSeries { coeffs: bess.mul(&ex).c, variable: "z" })
        }
        GeneratingFunction::LaguerreMinus { m } => {
            // u(t) = -x t/(1-t) = -x (t + t² + ...)
            let mut u = Series::zeros(order);
            for j in 1..=order {
                u.c[j] = -x;
            }
            let body = u.exp();
            let pow = Series::poly(&[1.0, -1.0], order).powf(-(m + 1.0));
            Ok(TaylorSeries { coeffs: body.mul(&pow).c, variable: "z" })
        }
        GeneratingFunction::LaguerreZero { m } => {
            let pow = Series::poly(&[1.0, 1.0], order).powf(m);
            let ex = Series::poly(&[0.0, -x], order).exp();
            Ok(TaylorSeries { coeffs: pow.mul(&ex).c, variable: "z" })
        }
        GeneratingFunction::BesselEven { k, beta } => {
            let f = bessel_bracket(2 * k, beta, x, 2 * order + 1)?;
            // G = x^{-k} f(u) / (2 √x u): integer powers need the even-index
            // coefficients of f (the half powers of t) to vanish
            check_half_powers(&f, 0, "extract_taylor(BesselEven)")?;
            let xf = x.powi(-(k as i32)) / (2.0 * x.sqrt());
            let coeffs = (0..=order).map(|mm| xf * f.series.c[2 * mm + 1]).collect();
            Ok(TaylorSeries { coeffs, variable: "t" })
        }
        GeneratingFunction::BesselOdd { k, beta } => {
            let g = bessel_bracket_sum(2 * k + 1, beta, x, 2 * order)?;
            check_half_powers(&g, 1, "extract_taylor(BesselOdd)")?;
            let xf = 0.5 * x.powi(-(k as i32) - 1);
            let coeffs = (0..=order).map(|mm| xf * g.series.c[2 * mm]).collect();
            Ok(TaylorSeries { coeffs, variable: "t" })
        }
    }
}

/// (1-√x u)^n e^{βu/√x} - (1+√x u)^n e^{-βu/√x} as a series in u.
/// Also returns the magnitudes before cancellation for the residual check.
fn bessel_bracket(n: u32, beta: f64, x: f64, u_order: usize) -> Result<SeriesWithScale> {
    let sx = x.sqrt();
    let a = beta / sx;
    let mut exp_plus = Series::zeros(u_order);
    let mut exp_minus = Series::zeros(u_order);
    let mut w = 1.0_f64;
    for j in 0..=u_order {
        exp_plus.c[j] = w;
        exp_minus.c[j] = if j % 2 == 0 { w } else { -w };
        w *= a / (j as f64 + 1.0);
    }
    let mut poly_minus = Series::zeros(u_order);
    let mut poly_plus = Series::zeros(u_order);
    for j in 0..=(n as usize).min(u_order) {
        let c = binomial(n, j as u32) * sx.powi(j as i32);
        poly_minus.c[j] = if j % 2 == 0 { c } else { -c };
        poly_plus.c[j] = c;
    }
    let lhs = poly_minus.mul(&exp_plus);
    let rhs = poly_plus.mul(&exp_minus);
    let scale: Vec<f64> = (0..=u_order).map(|i| lhs.c[i].abs() + rhs.c[i].abs()).collect();
    Ok(SeriesWithScale { series: lhs.sub(&rhs), scale })
}

/// Same bracket with a plus sign (odd-parity family).
fn bessel_bracket_sum(n: u32, beta: f64, x: f64, u_order: usize) -> Result<SeriesWithScale> {
    let sx = x.sqrt();
    let a = beta / sx;
    let mut exp_plus = Series::zeros(u_order);
    let mut exp_minus = Series::zeros(u_order);
    let mut w = 1.0_f64;
    for j in 0..=u_order {
        exp_plus.c[j] = w;
        exp_minus.c[j] = if j % 2 == 0 { w } else { -w };
        w *= a / (j as f64 + 1.0);
    }
    let mut poly_minus = Series::zeros(u_order);
    let mut poly_plus = Series::zeros(u_order);
    for j in 0..=(n as usize).min(u_order) {
        let c = binomial(n, j as u32) * sx.powi(j as i32);
        poly_minus.c[j] = if j % 2 == 0 { c } else { -c };
        poly_plus.c[j] = c;
    }
    let lhs = poly_minus.mul(&exp_plus);
    let rhs = poly_plus.mul(&exp_minus);
    let scale: Vec<f64> = (0..=u_order).map(|i| lhs.c[i].abs() + rhs.c[i].abs()).collect();
    Ok(SeriesWithScale { series: lhs.add(&rhs), scale })
}

struct SeriesWithScale {
    series: Series,
    scale: Vec<f64>,
}

impl std::ops::Index<usize> for SeriesWithScale {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.series.c[i]
    }
}

impl SeriesWithScale {
    fn order(&self) -> usize {
        self.series.order()
    }
}

/// Indices of parity `dead_parity` must be pure cancellation residue.
fn check_half_powers(f: &SeriesWithScale, dead_parity: usize, context: &'static str) -> Result<()> {
    let mut worst = 0.0_f64;
    for i in (dead_parity..=f.order()).step_by(2) {
        let denom = f.scale[i].max(1e-300);
        let rel = f[i].abs() / denom;
        if f.scale[i] > 0.0 && rel > worst {
            worst = rel;
        }
    }
    if worst > 1e-9 {
        return Err(Error::HalfPowerResidual { context, residual: worst });
    }
    Ok(())
}

/// The normalization constants a_{l,m}(0,β) of the flat-band Bessel family,
/// implemented verbatim from their piecewise definition:
///   m ≤ l < 0:        (-1)^{-m}     β^{-l}   / √((l-m)! (-l-m-1)!)
///   0 ≤ l ≤ -m-1:     (-1)^{-l-m-1} β^{-l-1} / √((l-m)! (-l-m-1)!)
pub fn bessel_norm_const(l: i64, m: i64, beta: f64) -> Result<f64> {
    if beta <= 0.0 {
        return Err(Error::domain("bessel_norm_const", format!("beta = {beta} must be positive")));
    }
    let (sign_exponent, beta_power) = if m <= l && l < 0 {
        (-m, -l)
    } else if 0 <= l && l < -m {
        (-l - m - 1, -l - 1)
    } else {
        return Err(Error::domain(
            "bessel_norm_const",
            format!("(l, m) = ({l}, {m}) outside both branches of a_{{l,m}}"),
        ));
    };
    let sign = if sign_exponent.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let lf1 = specfun::log_factorial((l - m) as u64);
    let lf2 = specfun::log_factorial((-l - m - 1) as u64);
    Ok(sign * (beta_power as f64 * beta.ln() - 0.5 * (lf1 + lf2)).exp())
}

/// The two-index Bessel function B^{(0,β)}_{l,m}(x) recovered as a Taylor
/// coefficient of its generating function times the series prefactor:
/// even: B_{m-k,-m-k-1} = (2m+1)! a_{m-k,-m-k-1} [t^m] G_even,
/// odd:  B_{m-k-1,-m-k-1} = (2m)! a_{m-k-1,-m-k-1} [t^m] G_odd.
pub fn assoc_bessel(k: u32, parity: Parity, m: u32, beta: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::domain("assoc_bessel", format!("x = {x} must be positive")));
    }
    let mm = m as i64;
    let kk = k as i64;
    match parity {
        Parity::Even => {
            let spec = GeneratingFunction::BesselEven { k, beta };
            let ts = extract_taylor(&spec, x, m as usize)?;
            let a = bessel_norm_const(mm - kk, -mm - kk - 1, beta)?;
            Ok(ts.coeffs[m as usize] * specfun::factorial(2 * m as u64 + 1) * a)
        }
        Parity::Odd => {
            let spec = GeneratingFunction::BesselOdd { k, beta };
            let ts = extract_taylor(&spec, x, m as usize)?;
            let a = bessel_norm_const(mm - kk - 1, -mm - kk - 1, beta)?;
            Ok(ts.coeffs[m as usize] * specfun::factorial(2 * m as u64) * a)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn closed_form_base_points() {
        let one = C::new(1.0, 0.0);
        let h = gf_closed(&GeneratingFunction::Hermite, 0.4, C::new(0.0, 0.0)).unwrap();
        assert_eq!(h, one);
        let lm = gf_closed(&GeneratingFunction::LaguerreMinus { m: 2.0 }, 1.0, C::new(0.0, 0.0)).unwrap();
        assert_eq!(lm, one);
        let lg = gf_closed(&GeneratingFunction::LegendreM { m: 1 }, 0.0, C::new(0.5, 0.0)).unwrap();
        assert!(close(lg.re, 1.0 / 1.25_f64.powf(1.5), 1e-14));
        assert!(lg.im.abs() < 1e-15);
        assert!(gf_closed(&GeneratingFunction::LegendreM { m: 1 }, 0.0, C::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn series_base_points() {
        let (s, last) = gf_series(&GeneratingFunction::Hermite, 1.0, C::new(0.0, 0.0), 10).unwrap();
        assert_eq!(s, C::new(1.0, 0.0));
        assert_eq!(last, 0.0);
        let (s, last) = gf_series(&GeneratingFunction::LaguerreZero { m: 3.0 }, 0.5, C::new(0.2, 0.0), 0).unwrap();
        assert_eq!(s, C::new(1.0, 0.0));
        assert_eq!(last, 1.0);
    }

    #[test]
    fn legendre_series_matches_closed() {
        let spec = GeneratingFunction::LegendreM { m: 1 };
        let closed = gf_closed(&spec, 0.0, C::new(0.5, 0.0)).unwrap();
        let (sum, _) = gf_series(&spec, 0.0, C::new(0.5, 0.0), 60).unwrap();
        assert!((closed - sum).norm() < 1e-10);
    }

    #[test]
    fn taylor_matches_hermite_kernels() {
        let ts = extract_taylor(&GeneratingFunction::Hermite, 0.5, 8).unwrap();
        for n in 0..=8usize {
            let expect = specfun::hermite(n as u32, 0.5) / specfun::factorial(n as u64);
            assert!((ts.coeffs[n] - expect).abs() < 1e-12 * expect.abs().max(1.0));
        }
    }

    #[test]
    fn taylor_matches_legendre_kernels() {
        for m in 0..=4u32 {
            for &x in &[-0.9, 0.0, 0.9] {
                let ts = extract_taylor(&GeneratingFunction::LegendreM { m }, x, 10).unwrap();
                for l in 0..=10u32 {
                    let expect = specfun::assoc_legendre(m + l, m, x).unwrap();
                    assert!(
                        (ts.coeffs[l as usize] - expect).abs() < 1e-9 * expect.abs().max(1.0),
                        "m={m} l={l} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn taylor_matches_laguerre_kernels() {
        for &x in &[0.0, 0.7, 3.0] {
            let tp = extract_taylor(&GeneratingFunction::LaguerrePlus { m: 0.5 }, x, 10).unwrap();
            let tm = extract_taylor(&GeneratingFunction::LaguerreMinus { m: 1.5 }, x, 10).unwrap();
            let tz = extract_taylor(&GeneratingFunction::LaguerreZero { m: 3.0 }, x, 10).unwrap();
            for n in 0..=10u32 {
                let lp = specfun::assoc_laguerre(n, 0.5, x) / specfun::gamma(n as f64 + 1.5);
                let lm = specfun::assoc_laguerre(n, 1.5, x);
                let lz = specfun::assoc_laguerre(n, 3.0 - n as f64, x);
                assert!((tp.coeffs[n as usize] - lp).abs() < 1e-11 * lp.abs().max(1.0));
                assert!((tm.coeffs[n as usize] - lm).abs() < 1e-10 * lm.abs().max(1.0));
                assert!((tz.coeffs[n as usize] - lz).abs() < 1e-10 * lz.abs().max(1.0));
            }
        }
    }

    // Hand-derived closed forms for the lowest flat-band Bessel functions,
    // frozen as independent oracles for the extraction path.
    #[test]
    fn bessel_functions_match_frozen_forms() {
        for &beta in &[1.0_f64, 2.0] {
            for &x in &[0.4_f64, 1.0, 2.7] {
                // even k=0: B_{m,-m-1}(x) = β^m x^{-m-1} / √((2m+1)!)
                for m in 0..=6u32 {
                    let expect = beta.powi(m as i32) * x.powi(-(m as i32) - 1)
                        / specfun::factorial(2 * m as u64 + 1).sqrt();
                    let got = assoc_bessel(0, Parity::Even, m, beta, x).unwrap();
                    assert!(close(got, expect, 1e-11), "even k=0 m={m} beta={beta} x={x}: {got} vs {expect}");
                }
                // odd k=0 m=0: B_{-1,-1}(x) = -β/x
                let got = assoc_bessel(0, Parity::Odd, 0, beta, x).unwrap();
                assert!(close(got, -beta / x, 1e-12));
                // odd k=0 m≥1: B_{m-1,-m-1}(x) = β^{m-1} x^{-m-1} (2mx - β) / √((2m)!)
                for m in 1..=6u32 {
                    let expect = beta.powi(m as i32 - 1) * x.powi(-(m as i32) - 1)
                        * (2.0 * m as f64 * x - beta)
                        / specfun::factorial(2 * m as u64).sqrt();
                    let got = assoc_bessel(0, Parity::Odd, m, beta, x).unwrap();
                    assert!(close(got, expect, 1e-11), "odd k=0 m={m}");
                }
                // even k=1 m=0: B_{-1,-2}(x) = (β/√2)(β x^{-2} - 2 x^{-1})
                let expect = beta / 2.0_f64.sqrt() * (beta / (x * x) - 2.0 / x);
                let got = assoc_bessel(1, Parity::Even, 0, beta, x).unwrap();
                assert!(close(got, expect, 1e-12));
            }
        }
    }

    #[test]
    fn bessel_norm_const_branches() {
        // outside both branches
        assert!(bessel_norm_const(3, 1, 1.0).is_err());
        // branch boundaries evaluate
        assert!(bessel_norm_const(-1, -1, 2.0).is_ok());
        assert!(bessel_norm_const(0, -1, 2.0).is_ok());
    }

    #[test]
    fn bessel_series_round_trip() {
        for spec in [
            GeneratingFunction::BesselEven { k: 2, beta: 1.5 },
            GeneratingFunction::BesselOdd { k: 1, beta: 2.0 },
        ] {
            for &x in &[0.5, 1.3] {
                for &t in &[C::new(0.1, 0.0), C::new(0.05, 0.08), C::new(-0.12, 0.02)] {
                    let closed = gf_closed(&spec, x, t).unwrap();
                    let (sum, _) = gf_series(&spec, x, t, 30).unwrap();
                    assert!(
                        (closed - sum).norm() < 1e-10 * closed.norm().max(1.0),
                        "{spec:?} x={x} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn laguerre_plus_limit_at_origin() {
        let spec = GeneratingFunction::LaguerrePlus { m: 1.5 };
        let v = gf_closed(&spec, 0.0, C::new(0.7, 0.0)).unwrap();
        let expect = 0.7_f64.exp() / specfun::gamma(2.5);
        assert!(close(v.re, expect, 1e-13));
        assert!(gf_closed(&spec, 1.0, C::new(0.2, 0.3)).is_err());
    }
}
