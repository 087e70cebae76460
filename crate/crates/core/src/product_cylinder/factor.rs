//! One-dimensional unit factors of a tail product.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::profile::{bump, bump_derivative, integrate};
use crate::error::{Error, Result};
use crate::grid_spectral::{grid_inner, Axis, Grid, GridState};

/// Grid points per support width `L²` when a bump factor is sampled.
pub const POINTS_PER_SUPPORT: usize = 256;

/// Minimum number of points on a sampling axis.
pub const MIN_SAMPLING_POINTS: usize = 2048;

/// Bump factor `x ↦ L⁻¹ f((x - δ)/L² - τ)` with scale `L`, integer offset `τ`
/// and residual displacement `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BumpFactor {
    pub scale: f64,
    pub offset: i64,
    #[serde(default)]
    pub displacement: f64,
}

impl BumpFactor {
    pub fn new(scale: f64, offset: i64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidMeasure(format!("bump scale must be positive, got {scale}")));
        }
        Ok(Self { scale, offset, displacement: 0.0 })
    }

    /// Support width `L²`.
    pub fn width(&self) -> f64 {
        self.scale * self.scale
    }

    fn local(&self, x: f64) -> f64 {
        (x - self.displacement) / self.width() - self.offset as f64
    }

    pub fn value(&self, x: f64) -> f64 {
        bump(self.local(x)) / self.scale
    }

    pub fn derivative(&self, x: f64) -> f64 {
        bump_derivative(self.local(x)) / (self.scale * self.width())
    }

    /// Open support interval.
    pub fn support(&self) -> (f64, f64) {
        let w = self.width();
        (
            self.displacement + self.offset as f64 * w,
            self.displacement + (self.offset + 1) as f64 * w,
        )
    }
}

/// A unit-norm (or, after differentiation or combination, general) factor of
/// a tail product.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Factor {
    Bump(BumpFactor),
    /// Uniform density on a period cell, `1/√period`; translation invariant
    /// with zero derivative.
    Flat { period: f64 },
    /// Samples on a periodic one-dimensional grid.
    Sampled(#[serde(with = "sampled_serde")] GridState),
}

impl Factor {
    pub fn bump(scale: f64, offset: i64) -> Result<Self> {
        Ok(Self::Bump(BumpFactor::new(scale, offset)?))
    }

    pub fn flat(period: f64) -> Result<Self> {
        if !(period > 0.0 && period.is_finite()) {
            return Err(Error::InvalidMeasure(format!("flat period must be positive, got {period}")));
        }
        Ok(Self::Flat { period })
    }

    pub fn is_flat(&self) -> bool {
        matches!(self, Self::Flat { .. })
    }

    pub fn norm_sqr(&self) -> f64 {
        match self {
            Self::Bump(_) | Self::Flat { .. } => 1.0,
            Self::Sampled(s) => s.norm_sqr(),
        }
    }

    /// Samples of this factor on a one-dimensional axis.
    pub fn sample_on(&self, axis: &Axis) -> Result<GridState> {
        let grid = Grid::new(vec![*axis])?;
        match self {
            Self::Bump(b) => {
                let (lo, hi) = b.support();
                let half = axis.length / 2.0;
                if lo < -half || hi > half {
                    return Err(Error::NotRepresentable(format!(
                        "factor support ({lo}, {hi}) leaves the box of length {}",
                        axis.length
                    )));
                }
                Ok(GridState::from_fn(grid, |x| Complex64::new(b.value(x[0]), 0.0)))
            }
            Self::Flat { period } => {
                if *period != axis.length {
                    return Err(Error::NotRepresentable(format!(
                        "flat factor of period {period} on an axis of length {}",
                        axis.length
                    )));
                }
                let v = Complex64::new(period.sqrt().recip(), 0.0);
                Ok(GridState::from_fn(grid, |_| v))
            }
            Self::Sampled(s) => {
                if s.grid().axis(0) != axis {
                    return Err(Error::GridMismatch("sampled factor lives on another axis".into()));
                }
                Ok(s.clone())
            }
        }
    }

    /// Derivative of the factor as a sampled factor.
    pub fn derivative(&self) -> Result<Factor> {
        match self {
            Self::Bump(b) => {
                let axis = sampling_axis(&[self])?;
                let grid = Grid::new(vec![axis])?;
                Ok(Self::Sampled(GridState::from_fn(grid, |x| Complex64::new(b.derivative(x[0]), 0.0))))
            }
            Self::Flat { period } => {
                let grid = Grid::new(vec![Axis::new(*period, 2)?])?;
                Ok(Self::Sampled(GridState::zeros(grid)))
            }
            Self::Sampled(s) => Ok(Self::Sampled(s.derivative(0)?)),
        }
    }

    /// `x ↦ factor(x - a)`.
    pub fn translate(&self, a: f64) -> Result<Factor> {
        if !a.is_finite() {
            return Err(Error::NotRepresentable("non-finite shift".into()));
        }
        match self {
            Self::Bump(b) => {
                let total = b.displacement + a;
                let w = b.width();
                let steps = (total / w).round();
                let snapped = (total / w - steps).abs() <= crate::grid_spectral::LATTICE_SNAP * steps.abs().max(1.0);
                Ok(Self::Bump(if snapped {
                    BumpFactor { offset: b.offset + steps as i64, displacement: 0.0, ..*b }
                } else {
                    BumpFactor { displacement: total, ..*b }
                }))
            }
            Self::Flat { .. } => Ok(self.clone()),
            Self::Sampled(s) => Ok(Self::Sampled(s.translate(&[a])?)),
        }
    }

    /// `alpha * self + beta * other`, sampled on a common axis.
    pub fn combine(&self, alpha: Complex64, other: &Factor, beta: Complex64) -> Result<Factor> {
        let axis = sampling_axis(&[self, other])?;
        let a = self.sample_on(&axis)?;
        let b = other.sample_on(&axis)?;
        Ok(Self::Sampled(a.combine(alpha, &b, beta)?))
    }

    pub fn scale(&self, c: Complex64) -> Result<Factor> {
        let axis = sampling_axis(&[self])?;
        Ok(Self::Sampled(self.sample_on(&axis)?.scale(c)))
    }
}

/// A periodic axis on which all the given factors can be sampled: the grid
/// of any sampled factor, otherwise a box centred at 0 holding every bump
/// support with [`POINTS_PER_SUPPORT`] points per width.
pub fn sampling_axis(factors: &[&Factor]) -> Result<Axis> {
    let mut axis: Option<&Axis> = None;
    let mut spacing = f64::INFINITY;
    let mut extent: f64 = 0.0;
    let mut period = None;
    for f in factors {
        match f {
            Factor::Sampled(s) => {
                let a = s.grid().axis(0);
                if axis.is_some_and(|b| b != a) {
                    return Err(Error::GridMismatch("sampled factors on different axes".into()));
                }
                axis = Some(a);
            }
            Factor::Bump(b) => {
                spacing = spacing.min(b.width() / POINTS_PER_SUPPORT as f64);
                let (lo, hi) = b.support();
                extent = extent.max(lo.abs()).max(hi.abs());
            }
            Factor::Flat { period: p } => period = Some(*p),
        }
    }
    if let Some(a) = axis {
        return Ok(*a);
    }
    if spacing.is_finite() {
        let needed = (2.0 * extent / spacing).ceil() as usize;
        let n = needed.max(MIN_SAMPLING_POINTS).next_power_of_two();
        return Axis::new(n as f64 * spacing, n);
    }
    match period {
        Some(p) => Axis::new(p, MIN_SAMPLING_POINTS),
        None => Err(Error::InvalidGrid("no factor to size a sampling axis".into())),
    }
}

/// `∫ a(x) conj(b(x)) dx` for two factors.
pub fn factor_inner(a: &Factor, b: &Factor) -> Result<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    match (a, b) {
        (Factor::Bump(p), Factor::Bump(q)) => {
            if p == q {
                return Ok(Complex64::new(1.0, 0.0));
            }
            if p.scale == q.scale && p.displacement == q.displacement {
                return Ok(zero);
            }
            let (lo_p, hi_p) = p.support();
            let (lo_q, hi_q) = q.support();
            let lo = lo_p.max(lo_q);
            let hi = hi_p.min(hi_q);
            if lo >= hi {
                return Ok(zero);
            }
            Ok(Complex64::new(integrate(|x| p.value(x) * q.value(x), lo, hi), 0.0))
        }
        (Factor::Flat { period: p }, Factor::Flat { period: q }) => {
            if p == q {
                Ok(Complex64::new(1.0, 0.0))
            } else {
                Err(Error::IncomparableTails(format!("flat factors of periods {p} and {q}")))
            }
        }
        (Factor::Flat { .. }, _) | (_, Factor::Flat { .. }) => {
            Err(Error::IncomparableTails("flat factor against a localized factor".into()))
        }
        _ => {
            let axis = sampling_axis(&[a, b])?;
            grid_inner(&a.sample_on(&axis)?, &b.sample_on(&axis)?)
        }
    }
}

mod sampled_serde {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::grid_spectral::{Axis, Grid, GridState};

    #[derive(Serialize, Deserialize)]
    struct Samples {
        length: f64,
        points: usize,
        re: Vec<f64>,
        im: Vec<f64>,
    }

    pub fn serialize<S: Serializer>(s: &GridState, ser: S) -> Result<S::Ok, S::Error> {
        let axis = s.grid().axis(0);
        Samples {
            length: axis.length,
            points: axis.points,
            re: s.amps().iter().map(|z| z.re).collect(),
            im: s.amps().iter().map(|z| z.im).collect(),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<GridState, D::Error> {
        use serde::de::Error;
        let s = Samples::deserialize(de)?;
        if s.re.len() != s.im.len() {
            return Err(D::Error::custom("re and im lengths differ"));
        }
        let axis = Axis::new(s.length, s.points).map_err(D::Error::custom)?;
        let grid = Grid::new(vec![axis]).map_err(D::Error::custom)?;
        let amps = s.re.iter().zip(&s.im).map(|(r, i)| Complex64::new(*r, *i)).collect();
        GridState::new(grid, amps).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product_cylinder::profile::BUMP_DERIVATIVE_NORM_SQR;

    #[test]
    fn bump_factors_are_unit_on_their_sampling_axis() {
        for &(l, t) in &[(1.0, 0), (1.0, 1), (2.0, 0), (3.5, 1), (6.0, -3)] {
            let f = Factor::bump(l, t).unwrap();
            let axis = sampling_axis(&[&f]).unwrap();
            let s = f.sample_on(&axis).unwrap();
            assert!((s.norm_sqr() - 1.0).abs() < 1e-12, "L={l} tau={t}");
        }
    }

    #[test]
    fn derivative_norm_scales_as_inverse_fourth_power() {
        for &l in &[1.0, 2.0, 3.0, 5.0] {
            let d = Factor::bump(l, 1).unwrap().derivative().unwrap();
            let expect = BUMP_DERIVATIVE_NORM_SQR / l.powi(4);
            assert!((d.norm_sqr() - expect).abs() < 1e-10 * expect.max(1.0), "L={l}");
        }
        let z = Factor::flat(4.0).unwrap().derivative().unwrap();
        assert_eq!(z.norm_sqr(), 0.0);
    }

    #[test]
    fn overlaps() {
        let a = Factor::bump(1.0, 0).unwrap();
        let b = Factor::bump(1.0, 1).unwrap();
        assert_eq!(factor_inner(&a, &a).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(factor_inner(&a, &b).unwrap(), Complex64::new(0.0, 0.0));

        // partial overlap: quadrature against grid sampling
        let c = a.translate(0.3).unwrap();
        let q = factor_inner(&a, &c).unwrap();
        let axis = sampling_axis(&[&a, &c]).unwrap();
        let g = grid_inner(&a.sample_on(&axis).unwrap(), &c.sample_on(&axis).unwrap()).unwrap();
        assert!((q - g).norm() < 1e-12);
        assert!(q.re > 0.0 && q.re < 1.0);

        // mixed scales
        let d = Factor::bump(1.3, 0).unwrap();
        let q = factor_inner(&a, &d).unwrap();
        let axis = sampling_axis(&[&a, &d]).unwrap();
        let g = grid_inner(&a.sample_on(&axis).unwrap(), &d.sample_on(&axis).unwrap()).unwrap();
        assert!((q - g).norm() < 1e-12);

        let flat = Factor::flat(2.0).unwrap();
        assert_eq!(factor_inner(&flat, &flat).unwrap(), Complex64::new(1.0, 0.0));
        assert!(factor_inner(&flat, &a).is_err());
        assert!(factor_inner(&flat, &Factor::flat(3.0).unwrap()).is_err());
    }

    #[test]
    fn translation_by_width_changes_offset() {
        let a = Factor::bump(2.0, 0).unwrap();
        assert_eq!(a.translate(4.0).unwrap(), Factor::bump(2.0, 1).unwrap());
        assert_eq!(a.translate(-8.0).unwrap(), Factor::bump(2.0, -2).unwrap());
        let moved = a.translate(0.5).unwrap();
        assert_eq!(moved.translate(-0.5).unwrap(), a);
        assert_eq!(Factor::flat(1.0).unwrap().translate(0.3).unwrap(), Factor::flat(1.0).unwrap());
    }

    #[test]
    fn serde_roundtrip() {
        let f = Factor::bump(1.5, 2).unwrap().derivative().unwrap();
        for x in [Factor::bump(1.5, 2).unwrap(), Factor::flat(3.0).unwrap(), f] {
            let s = serde_json::to_string(&x).unwrap();
            let back: Factor = serde_json::from_str(&s).unwrap();
            assert_eq!(back, x);
        }
    }
}
