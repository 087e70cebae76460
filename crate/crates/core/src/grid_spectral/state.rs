use num_complex::Complex64;
use rustfft::FftDirection;

use super::fft::fft_nd;
use super::grid::Grid;
use crate::error::{Error, Result};
use crate::sqrt_calculus::eta;
use crate::sum::{exact_sum, exact_sum_complex};

/// Relative tolerance under which a shift counts as a whole number of grid
/// steps and is applied as an exact circular shift.
pub const LATTICE_SNAP: f64 = 1e-9;

/// Samples of a square-root density `f` at the nodes of a periodic grid; it
/// stands for the complex measure `f|f| dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    grid: Grid,
    amp: Vec<Complex64>,
}

impl GridState {
    pub fn new(grid: Grid, amp: Vec<Complex64>) -> Result<Self> {
        if amp.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} samples for a grid of {} nodes",
                amp.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, amp })
    }

    pub fn zeros(grid: Grid) -> Self {
        let n = grid.len();
        Self { grid, amp: vec![Complex64::new(0.0, 0.0); n] }
    }

    /// The zero-dimensional state holding the single amplitude `c`.
    pub fn scalar(c: Complex64) -> Self {
        Self { grid: Grid::scalar(), amp: vec![c] }
    }

    pub fn from_fn<F: FnMut(&[f64]) -> Complex64>(grid: Grid, mut f: F) -> Self {
        let mut amp = vec![Complex64::new(0.0, 0.0); grid.len()];
        grid.for_each_node(|i, x| amp[i] = f(x));
        Self { grid, amp }
    }

    /// Builds a state from its unitary DFT coefficients.
    pub fn from_spectrum(grid: Grid, mut coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::InvalidGrid("spectrum length differs from grid".into()));
        }
        fft_nd(&mut coeffs, &grid.shape(), FftDirection::Inverse);
        Ok(Self { grid, amp: coeffs })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amp
    }

    pub fn into_amps(self) -> Vec<Complex64> {
        self.amp
    }

    pub fn dimension(&self) -> usize {
        self.grid.dimension()
    }

    pub fn len(&self) -> usize {
        self.amp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amp.is_empty()
    }

    /// The amplitude of a zero-dimensional state.
    pub fn as_scalar(&self) -> Option<Complex64> {
        (self.dimension() == 0).then(|| self.amp[0])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.grid.weight() * exact_sum(self.amp.iter().map(|z| z.norm_sqr()))
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Per-cell values `eta(f) w` of the represented measure.
    pub fn measure_values(&self) -> Vec<Complex64> {
        let w = self.grid.weight();
        self.amp.iter().map(|f| eta(*f) * w).collect()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { grid: self.grid.clone(), amp: self.amp.iter().map(|f| f * c).collect() }
    }

    /// `alpha * self + beta * other` on a shared grid.
    pub fn combine(&self, alpha: Complex64, other: &Self, beta: Complex64) -> Result<Self> {
        self.check_grid(other)?;
        let amp = self
            .amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        Ok(Self { grid: self.grid.clone(), amp })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(Complex64::new(1.0, 0.0), other, Complex64::new(-1.0, 0.0))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(Complex64::new(1.0, 0.0), other, Complex64::new(1.0, 0.0))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_grid(other)?;
        Ok(self
            .amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub(crate) fn check_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!("{:?} vs {:?}", self.grid.shape(), other.grid.shape())));
        }
        Ok(())
    }

    /// Tensor product: `(self ⊗ other)(x, y) = self(x) other(y)` on the
    /// concatenated grid.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut amp = Vec::with_capacity(self.len() * other.len());
        for a in &self.amp {
            amp.extend(other.amp.iter().map(|b| a * b));
        }
        Self { grid: self.grid.product(&other.grid), amp }
    }

    /// Unitary DFT coefficients, stored in FFT order on the same grid.
    pub fn dft(&self) -> Self {
        let mut amp = self.amp.clone();
        fft_nd(&mut amp, &self.grid.shape(), FftDirection::Forward);
        Self { grid: self.grid.clone(), amp }
    }

    pub fn idft(&self) -> Self {
        let mut amp = self.amp.clone();
        fft_nd(&mut amp, &self.grid.shape(), FftDirection::Inverse);
        Self { grid: self.grid.clone(), amp }
    }

    /// Applies `m(xi)` in Fourier space.
    pub fn multiply_spectrum<M: FnMut(&[f64]) -> Complex64>(&self, mut m: M) -> Self {
        if self.dimension() == 0 {
            return self.scale(m(&[]));
        }
        let mut amp = self.amp.clone();
        let shape = self.grid.shape();
        fft_nd(&mut amp, &shape, FftDirection::Forward);
        self.grid.for_each_frequency(|i, xi| amp[i] *= m(xi));
        fft_nd(&mut amp, &shape, FftDirection::Inverse);
        Self { grid: self.grid.clone(), amp }
    }

    /// Spectral derivative along `axis` (multiplier `i xi_axis`).
    pub fn derivative(&self, axis: usize) -> Result<Self> {
        self.check_axis(axis)?;
        Ok(self.multiply_spectrum(|xi| Complex64::new(0.0, xi[axis])))
    }

    /// Circular shift by whole grid steps: the result at node `j + steps`
    /// is the input at node `j`, i.e. `f(x - steps h)`.
    pub fn lattice_shift(&self, steps: &[i64]) -> Result<Self> {
        if steps.len() != self.dimension() {
            return Err(Error::DimensionMismatch { left: self.dimension(), right: steps.len() });
        }
        let shape = self.grid.shape();
        let mut amp = vec![Complex64::new(0.0, 0.0); self.len()];
        for (flat, v) in self.amp.iter().enumerate() {
            let idx = self.grid.multi_index(flat);
            let mut target = 0usize;
            for k in 0..shape.len() {
                let n = shape[k] as i64;
                let j = (idx[k] as i64 + steps[k]).rem_euclid(n) as usize;
                target = target * shape[k] + j;
            }
            amp[target] = *v;
        }
        Ok(Self { grid: self.grid.clone(), amp })
    }

    /// `f(x - a)` through the phase multiplier `e^{-i xi . a}`; exact for
    /// band-limited states.
    pub fn spectral_shift(&self, a: &[f64]) -> Result<Self> {
        if a.len() != self.dimension() {
            return Err(Error::DimensionMismatch { left: self.dimension(), right: a.len() });
        }
        Ok(self.multiply_spectrum(|xi| {
            let phase: f64 = xi.iter().zip(a).map(|(x, s)| x * s).sum();
            Complex64::from_polar(1.0, -phase)
        }))
    }

    /// `f(x - a)`: whole-step components go through [`lattice_shift`](Self::lattice_shift),
    /// the remaining ones through a spectral phase.
    pub fn translate(&self, a: &[f64]) -> Result<Self> {
        if a.len() != self.dimension() {
            return Err(Error::DimensionMismatch { left: self.dimension(), right: a.len() });
        }
        if a.iter().any(|x| !x.is_finite()) {
            return Err(Error::NotRepresentable("non-finite shift".into()));
        }
        let mut steps = vec![0i64; a.len()];
        let mut rest = vec![0.0; a.len()];
        for (k, &s) in a.iter().enumerate() {
            match lattice_steps(s, self.grid.axis(k).spacing()) {
                Some(m) => steps[k] = m,
                None => rest[k] = s,
            }
        }
        let mut out = if steps.iter().any(|m| *m != 0) { self.lattice_shift(&steps)? } else { self.clone() };
        if rest.iter().any(|x| *x != 0.0) {
            out = out.spectral_shift(&rest)?;
        }
        Ok(out)
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.dimension() {
            return Err(Error::DimensionMismatch { left: axis + 1, right: self.dimension() });
        }
        Ok(())
    }
}

/// Whole number of steps of size `h` in `s`, if `s` is on the lattice.
pub(crate) fn lattice_steps(s: f64, h: f64) -> Option<i64> {
    let r = s / h;
    let m = r.round();
    ((r - m).abs() <= LATTICE_SNAP * r.abs().max(1.0)).then_some(m as i64)
}

/// `<a, b> = sum f conj(g) w`, summed exactly so the value does not depend on
/// node order.
pub fn grid_inner(a: &GridState, b: &GridState) -> Result<Complex64> {
    a.check_grid(b)?;
    let s = exact_sum_complex(a.amp.iter().zip(&b.amp).map(|(f, g)| f * g.conj()));
    Ok(s * a.grid.weight())
}

pub fn fourier_multiplier<M: FnMut(&[f64]) -> Complex64>(m: M, s: &GridState) -> GridState {
    s.multiply_spectrum(m)
}

pub fn lattice_shift(s: &GridState, steps: &[i64]) -> Result<GridState> {
    s.lattice_shift(steps)
}
