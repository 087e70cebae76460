//! Translations `τ_a` of cylinder and atomic states and the directional
//! derivatives they generate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::product_cylinder::{cylinder_inner, linear_combination, zero_like, CylinderState};
use crate::sqrt_calculus::AtomicState;

/// Coordinate direction `e_k`, `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Direction(usize);

impl Direction {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 1 });
        }
        Ok(Self(k))
    }

    pub fn index(&self) -> usize {
        self.0
    }
}

/// A finitely supported shift `a ∈ R^∞`, stored as sorted `(k, a_k)` pairs
/// with nonzero amounts.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ShiftVector {
    entries: Vec<(usize, f64)>,
}

impl ShiftVector {
    pub fn new<I: IntoIterator<Item = (usize, f64)>>(entries: I) -> Result<Self> {
        let mut v = Self::default();
        for (k, a) in entries {
            Direction::new(k)?;
            if !a.is_finite() {
                return Err(Error::NotRepresentable(format!("shift amount {a} along x_{k}")));
            }
            v = v.add_entry(k, a);
        }
        Ok(v)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `h e_k`.
    pub fn along(k: Direction, h: f64) -> Result<Self> {
        Self::new([(k.index(), h)])
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn amount(&self, k: usize) -> f64 {
        self.entries.iter().find(|(j, _)| *j == k).map_or(0.0, |(_, a)| *a)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|(k, a)| (*k, -a)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        other.entries.iter().fold(self.clone(), |v, (k, a)| v.add_entry(*k, *a))
    }

    fn add_entry(mut self, k: usize, a: f64) -> Self {
        match self.entries.binary_search_by_key(&k, |(j, _)| *j) {
            Ok(i) => {
                self.entries[i].1 += a;
                if self.entries[i].1 == 0.0 {
                    self.entries.remove(i);
                }
            }
            Err(i) if a != 0.0 => self.entries.insert(i, (k, a)),
            Err(_) => {}
        }
        self
    }
}

/// `τ_a u`: the measure moved by `+a`. Head coordinates shift on the grid
/// (circularly for whole steps, spectrally otherwise); tail factors move
/// their support.
pub fn translate(a: &ShiftVector, u: &CylinderState) -> Result<CylinderState> {
    let n = u.head_dimension();
    let mut out = u.clone();
    let head_shift: Vec<f64> = (1..=n).map(|k| a.amount(k)).collect();
    if head_shift.iter().any(|s| *s != 0.0) {
        out = out.with_head(u.head().translate(&head_shift)?);
    }
    for &(k, s) in a.entries().iter().filter(|(k, _)| *k > n) {
        let p = k - n;
        let f = out.tail().factor(p).translate(s)?;
        out = out.with_tail(out.tail().with_factor(p, f));
    }
    Ok(out)
}

/// Moves every atom by `+a`.
pub fn translate_atomic(a: &[f64], u: &AtomicState) -> Result<AtomicState> {
    if a.len() != u.dimension() {
        return Err(Error::DimensionMismatch { left: u.dimension(), right: a.len() });
    }
    u.map_points(|p| p.iter().zip(a).map(|(x, s)| x + s).collect())
}

/// `(τ_{h e_k} u - u) / h`.
pub fn difference_quotient(k: Direction, h: f64, u: &CylinderState) -> Result<CylinderState> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::NotRepresentable(format!("step {h} must be positive")));
    }
    let moved = translate(&ShiftVector::along(k, h)?, u)?;
    linear_combination(Complex64::new(1.0 / h, 0.0), &moved, Complex64::new(-1.0 / h, 0.0), u)
}

/// `∂u/∂x_k`, the negative of the limit of difference quotients: the
/// amplitude derivative along `x_k`.
pub fn derivative(k: Direction, u: &CylinderState) -> Result<CylinderState> {
    let n = u.head_dimension();
    if k.index() <= n {
        return Ok(u.with_head(u.head().derivative(k.index() - 1)?));
    }
    let p = k.index() - n;
    let f = u.tail().factor(p);
    if f.is_flat() {
        return Ok(zero_like(u));
    }
    Ok(u.with_tail(u.tail().with_factor(p, f.derivative()?)))
}

/// `(⟨i ∂_k u, v⟩, ⟨u, i ∂_k v⟩)`.
pub fn symmetry_check(k: Direction, u: &CylinderState, v: &CylinderState) -> Result<(Complex64, Complex64)> {
    let i = Complex64::new(0.0, 1.0);
    let lhs = cylinder_inner(&derivative(k, u)?.scale(i), v)?;
    let rhs = cylinder_inner(u, &derivative(k, v)?.scale(i))?;
    Ok((lhs, rhs))
}

/// `‖τ_{h e_k} u - u‖` for each step `h`.
pub fn strong_continuity_check(k: Direction, u: &CylinderState, hs: &[f64]) -> Result<Vec<f64>> {
    hs.iter()
        .map(|&h| translate(&ShiftVector::along(k, h)?, u)?.distance(u))
        .collect()
}

#[cfg(test)]
mod tests;
