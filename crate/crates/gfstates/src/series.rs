//! Truncated real-coefficient power-series arithmetic.
//!
//! Used for Taylor-coefficient extraction from closed forms; finite
//! differencing is never used (catastrophic cancellation past order ~10).

/// A truncated power series Σ c[n] t^n, n = 0..=order.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub c: Vec<f64>,
}

impl Series {
    pub fn zeros(order: usize) -> Self {
        Series { c: vec![0.0; order + 1] }
    }

    pub fn from_coeffs(c: Vec<f64>) -> Self {
        assert!(!c.is_empty());
        Series { c }
    }

    /// The polynomial a0 + a1 t + a2 t², zero-padded to `order`.
    pub fn poly(coeffs: &[f64], order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        for (i, &v) in coeffs.iter().enumerate().take(order + 1) {
            c[i] = v;
        }
        Series { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = vec![0.0; order + 1];
        for (i, &a) in self.c.iter().enumerate().take(order + 1) {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { c: out }
    }

    pub fn scale(&self, s: f64) -> Series {
        Series { c: self.c.iter().map(|v| v * s).collect() }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            c: (0..=order).map(|i| self.c[i] - other.c[i]).collect(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            c: (0..=order).map(|i| self.c[i] + other.c[i]).collect(),
        }
    }

    /// exp of the series. g = exp(p) satisfies g' = p' g, giving
    /// n g_n = Σ_{j=1}^{n} j p_j g_{n-j}.
    pub fn exp(&self) -> Series {
        let order = self.order();
        let mut g = vec![0.0; order + 1];
        g[0] = self.c[0].exp();
        for n in 1..=order {
            let mut acc = 0.0;
            for j in 1..=n {
                acc += j as f64 * self.c[j] * g[n - j];
            }
            g[n] = acc / n as f64;
        }
        Series { c: g }
    }

    /// self^alpha for a series with nonzero constant term. g = p^α
    /// satisfies p g' = α p' g, giving
    /// n p_0 g_n = Σ_{j=1}^{n} ((α+1) j - n) p_j g_{n-j}.
    pub fn powf(&self, alpha: f64) -> Series {
        let p0 = self.c[0];
        assert!(p0 != 0.0, "powf requires a nonzero constant term");
        let order = self.order();
        let mut g = vec![0.0; order + 1];
        g[0] = p0.powf(alpha);
        for n in 1..=order {
            let mut acc = 0.0;
            for j in 1..=n {
                acc += ((alpha + 1.0) * j as f64 - n as f64) * self.c[j] * g[n - j];
            }
            g[n] = acc / (n as f64 * p0);
        }
        Series { c: g }
    }

    /// Evaluate at a complex point by Horner's rule.
    pub fn eval_complex(&self, t: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for &c in self.c.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}
