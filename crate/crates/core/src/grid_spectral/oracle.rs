//! Closed-form Gaussians, used as independent references for grid
//! evolutions, shifts and overlaps.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `g(x) = amplitude * exp(-(x - center)^2 / (2 variance))` with a complex
/// variance parameter of positive real part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gaussian1d {
    pub amplitude: Complex64,
    pub center: f64,
    pub variance: Complex64,
}

impl Gaussian1d {
    /// Unit-norm Gaussian: `(pi sigma^2)^{-1/4} exp(-(x-c)^2 / (2 sigma^2))`.
    pub fn normalized(sigma: f64, center: f64) -> Self {
        let v = sigma * sigma;
        Self {
            amplitude: Complex64::new((PI * v).powf(-0.25), 0.0),
            center,
            variance: Complex64::new(v, 0.0),
        }
    }

    pub fn scaled(self, c: Complex64) -> Self {
        Self { amplitude: self.amplitude * c, ..self }
    }

    pub fn shifted(self, a: f64) -> Self {
        Self { center: self.center + a, ..self }
    }

    pub fn value(&self, x: f64) -> Complex64 {
        let d = x - self.center;
        self.amplitude * (-(d * d) / (2.0 * self.variance)).exp()
    }

    /// Derivative `g'(x)`.
    pub fn derivative(&self, x: f64) -> Complex64 {
        -(x - self.center) / self.variance * self.value(x)
    }

    fn spread(self, dv: Complex64) -> Self {
        let v = self.variance + dv;
        Self { amplitude: self.amplitude * (self.variance / v).sqrt(), center: self.center, variance: v }
    }

    /// Image under the heat multiplier `exp(-xi^2 t)`.
    pub fn heat(&self, t: f64) -> Result<Self> {
        if t < 0.0 {
            return Err(Error::NegativeTime(t));
        }
        Ok(self.spread(Complex64::new(2.0 * t, 0.0)))
    }

    /// Image under the Schrödinger multiplier `exp(-i xi^2 t)`.
    pub fn schrodinger(&self, t: f64) -> Self {
        self.spread(Complex64::new(0.0, 2.0 * t))
    }

    /// `∫ self(x) conj(other(x)) dx` over the real line.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        let p = 1.0 / (2.0 * self.variance);
        let q = 1.0 / (2.0 * other.variance.conj());
        let s = p + q;
        let d = self.center - other.center;
        self.amplitude * other.amplitude.conj() * (Complex64::new(PI, 0.0) / s).sqrt() * (-(p * q) * d * d / s).exp()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.overlap(self).re
    }
}
