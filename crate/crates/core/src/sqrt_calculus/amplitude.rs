use num_complex::Complex64;

/// The squaring map `z -> z|z|` from amplitudes to measure densities.
#[inline]
pub fn eta(z: Complex64) -> Complex64 {
    z * z.norm()
}

/// Inverse of [`eta`]: `w -> w |w|^{-1/2}`, with `zeta(0) = 0`.
#[inline]
pub fn zeta(w: Complex64) -> Complex64 {
    let r = w.norm();
    if r == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        w / r.sqrt()
    }
}

/// A complex scalar in square-root coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Amplitude(pub Complex64);

impl Amplitude {
    pub fn from_density(w: Complex64) -> Self {
        Self(zeta(w))
    }

    /// The measure density `eta(f)` this amplitude stands for.
    pub fn density(self) -> Complex64 {
        eta(self.0)
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

impl From<Complex64> for Amplitude {
    fn from(z: Complex64) -> Self {
        Self(z)
    }
}
