use std::collections::HashMap;

use num_complex::Complex64;

use super::amplitude::eta;
use crate::error::{Error, Result};
use crate::sum::{exact_sum, exact_sum_complex};

/// Absolute tolerance on per-atom measure values used by [`AtomicState::approx_eq`].
pub const ATOM_TOLERANCE: f64 = 1e-12;

/// Hash key of a point: the bit patterns of its coordinates, with `-0.0`
/// folded onto `+0.0`. Points are never merged approximately.
pub(crate) fn point_key(p: &[f64]) -> Vec<u64> {
    p.iter().map(|x| (x + 0.0).to_bits()).collect()
}

/// A finite positive measure on R^d: distinct atoms with strictly positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseMeasure {
    dimension: usize,
    coords: Vec<f64>,
    weights: Vec<f64>,
}

impl BaseMeasure {
    pub fn new(dimension: usize, points: &[Vec<f64>], weights: &[f64]) -> Result<Self> {
        let coords = points.iter().flatten().copied().collect::<Vec<_>>();
        for p in points {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch { left: dimension, right: p.len() });
            }
        }
        Self::from_flat(dimension, coords, weights.to_vec())
    }

    /// Builds a base from row-major coordinates (`len * dimension` values).
    pub fn from_flat(dimension: usize, coords: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidMeasure("dimension must be positive".into()));
        }
        if coords.len() != weights.len() * dimension {
            return Err(Error::InvalidMeasure(format!(
                "{} coordinates for {} atoms of dimension {dimension}",
                coords.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::InvalidMeasure(format!("weight {w} is not finite and positive")));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidMeasure("non-finite coordinate".into()));
        }
        let mut seen = HashMap::with_capacity(weights.len());
        for (i, p) in coords.chunks(dimension).enumerate() {
            if let Some(j) = seen.insert(point_key(p), i) {
                return Err(Error::InvalidMeasure(format!("atoms {j} and {i} share the point {p:?}")));
            }
        }
        Ok(Self { dimension, coords, weights })
    }

    pub fn empty(dimension: usize) -> Self {
        assert!(dimension > 0, "dimension must be positive");
        Self { dimension, coords: Vec::new(), weights: Vec::new() }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks(self.dimension)
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        exact_sum(self.weights.iter().copied())
    }

    pub fn index_of(&self, p: &[f64]) -> Option<usize> {
        let key = point_key(p);
        self.points().position(|q| point_key(q) == key)
    }

    fn key_index(&self) -> HashMap<Vec<u64>, usize> {
        self.points().enumerate().map(|(i, p)| (point_key(p), i)).collect()
    }
}

/// The complex measure `sum_i eta(amp_i) * weight_i * delta_{point_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicState {
    base: BaseMeasure,
    amps: Vec<Complex64>,
}

impl AtomicState {
    pub fn new(base: BaseMeasure, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != base.len() {
            return Err(Error::InvalidMeasure(format!(
                "{} amplitudes for {} atoms",
                amps.len(),
                base.len()
            )));
        }
        if amps.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidMeasure("non-finite amplitude".into()));
        }
        Ok(Self { base, amps })
    }

    pub fn zero(dimension: usize) -> Self {
        Self { base: BaseMeasure::empty(dimension), amps: Vec::new() }
    }

    pub fn point_mass(point: Vec<f64>, weight: f64, amp: Complex64) -> Result<Self> {
        let dimension = point.len();
        Self::new(BaseMeasure::from_flat(dimension, point, vec![weight])?, vec![amp])
    }

    /// Collects `(point, weight, amplitude)` triples into a state.
    pub fn from_atoms<I>(dimension: usize, atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<f64>, f64, Complex64)>,
    {
        let mut coords = Vec::new();
        let mut weights = Vec::new();
        let mut amps = Vec::new();
        for (p, w, a) in atoms {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch { left: dimension, right: p.len() });
            }
            coords.extend(p);
            weights.push(w);
            amps.push(a);
        }
        Self::new(BaseMeasure::from_flat(dimension, coords, weights)?, amps)
    }

    pub fn base(&self) -> &BaseMeasure {
        &self.base
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    /// Per-atom values of the represented complex measure, `eta(f_i) w_i`.
    pub fn measure_values(&self) -> Vec<Complex64> {
        self.amps
            .iter()
            .zip(self.base.weights())
            .map(|(f, w)| eta(*f) * *w)
            .collect()
    }

    pub fn measure_at(&self, p: &[f64]) -> Complex64 {
        match self.base.index_of(p) {
            Some(i) => eta(self.amps[i]) * self.base.weight(i),
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        exact_sum(self.amps.iter().zip(self.base.weights()).map(|(f, w)| f.norm_sqr() * w))
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Re-expresses the state on a dominating base. Every atom of the current
    /// support must appear in `base`; the represented measure is unchanged.
    pub fn rebase(&self, base: &BaseMeasure) -> Result<Self> {
        if base.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch { left: self.dimension(), right: base.dimension() });
        }
        let index = base.key_index();
        let mut amps = vec![Complex64::new(0.0, 0.0); base.len()];
        for (i, p) in self.base.points().enumerate() {
            let j = *index.get(&point_key(p)).ok_or_else(|| {
                Error::InvalidMeasure(format!("point {p:?} is missing from the dominating base"))
            })?;
            amps[j] = self.amps[i] * (self.base.weight(i) / base.weight(j)).sqrt();
        }
        Self::new(base.clone(), amps)
    }

    /// Equality of represented measures: per-atom values `eta(f) w` agree on
    /// the union of supports (zero off-support) within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.dimension() != other.dimension() {
            return false;
        }
        let mine = self.measure_values();
        let theirs = other.measure_values();
        let index = other.base.key_index();
        let mut matched = vec![false; other.len()];
        for (i, p) in self.base.points().enumerate() {
            let v = match index.get(&point_key(p)) {
                Some(&j) => {
                    matched[j] = true;
                    theirs[j]
                }
                None => Complex64::new(0.0, 0.0),
            };
            if (mine[i] - v).norm() > tol {
                return false;
            }
        }
        theirs
            .iter()
            .zip(&matched)
            .all(|(v, m)| *m || v.norm() <= tol)
    }

    /// Moves every atom through `f`, keeping weights and amplitudes.
    pub fn map_points<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&[f64]) -> Vec<f64>,
    {
        let coords = self.base.points().flat_map(&mut f).collect();
        let base = BaseMeasure::from_flat(self.dimension(), coords, self.base.weights.clone())?;
        Self::new(base, self.amps.clone())
    }
}

/// A common dominating base (unit weights on the union of supports) with both
/// operands' amplitudes on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    pub base: BaseMeasure,
    pub amps_a: Vec<Complex64>,
    pub amps_b: Vec<Complex64>,
}

/// Puts `a` and `b` on a common base. Atoms keep the order of `a`, followed
/// by the atoms of `b` that `a` does not carry. On the unit-weight base the
/// amplitude `f` with weight `w` becomes `zeta(eta(f) w) = f sqrt(w)`.
pub fn refine(a: &AtomicState, b: &AtomicState) -> Result<Refinement> {
    let dim = a.dimension();
    if dim != b.dimension() {
        return Err(Error::DimensionMismatch { left: dim, right: b.dimension() });
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut index = a.base.key_index();
    let mut coords = a.base.coords.clone();
    let mut amps_a: Vec<Complex64> = a
        .amps
        .iter()
        .zip(a.base.weights())
        .map(|(f, w)| f * w.sqrt())
        .collect();
    let mut amps_b = vec![zero; a.len()];
    for (i, p) in b.base.points().enumerate() {
        let g = b.amps[i] * b.base.weight(i).sqrt();
        match index.get(&point_key(p)) {
            Some(&j) => amps_b[j] = g,
            None => {
                index.insert(point_key(p), amps_a.len());
                coords.extend_from_slice(p);
                amps_a.push(zero);
                amps_b.push(g);
            }
        }
    }
    let weights = vec![1.0; amps_a.len()];
    let base = BaseMeasure { dimension: dim, coords, weights };
    Ok(Refinement { base, amps_a, amps_b })
}

/// Sum of complex measures: amplitudes add on a common base.
pub fn add(a: &AtomicState, b: &AtomicState) -> Result<AtomicState> {
    let r = refine(a, b)?;
    let amps = r.amps_a.iter().zip(&r.amps_b).map(|(f, g)| f + g).collect();
    Ok(AtomicState { base: r.base, amps })
}

/// Scalar multiple: the amplitude scales by `c`, the measure by `c|c|`.
pub fn scale(c: Complex64, u: &AtomicState) -> AtomicState {
    AtomicState { base: u.base.clone(), amps: u.amps.iter().map(|f| c * f).collect() }
}

/// The inner-product measure `f_1 conj(f_2) d nu` as per-atom values on the
/// refined base.
#[derive(Debug, Clone, PartialEq)]
pub struct InnerMeasure {
    pub base: BaseMeasure,
    pub values: Vec<Complex64>,
}

impl InnerMeasure {
    pub fn total(&self) -> Complex64 {
        exact_sum_complex(self.values.iter().copied())
    }
}

pub fn inner_measure(a: &AtomicState, b: &AtomicState) -> Result<InnerMeasure> {
    let r = refine(a, b)?;
    let values = r
        .amps_a
        .iter()
        .zip(&r.amps_b)
        .zip(r.base.weights())
        .map(|((f, g), w)| f * g.conj() * *w)
        .collect();
    Ok(InnerMeasure { base: r.base, values })
}

/// `<a, b>`: the total mass of the inner-product measure. Linear in `a`,
/// conjugate-linear in `b`.
pub fn inner(a: &AtomicState, b: &AtomicState) -> Result<Complex64> {
    Ok(inner_measure(a, b)?.total())
}

pub fn total_variation(u: &AtomicState) -> f64 {
    exact_sum(u.amps.iter().zip(u.base.weights()).map(|(f, w)| eta(*f).norm() * w))
}
