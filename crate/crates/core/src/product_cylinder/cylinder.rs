//! Cylinder states `f ⊗ T`: a grid head on the first `N` coordinates and a
//! tail product on the rest.

use num_complex::Complex64;

use super::factor::{sampling_axis, Factor};
use super::tail::{tail_inner, TailOverlap, TailProduct};
use crate::error::{Error, Result};
use crate::grid_spectral::{grid_inner, Axis, GridState};
use crate::sum::exact_sum_complex;

#[derive(Debug, Clone, PartialEq)]
pub struct CylinderState {
    head: GridState,
    tail: TailProduct,
}

impl CylinderState {
    pub fn new(head: GridState, tail: TailProduct) -> Self {
        Self { head, tail }
    }

    /// `1 ⊗ T`: no head coordinates.
    pub fn pure_tail(tail: TailProduct) -> Self {
        Self { head: GridState::scalar(Complex64::new(1.0, 0.0)), tail }
    }

    pub fn head(&self) -> &GridState {
        &self.head
    }

    pub fn tail(&self) -> &TailProduct {
        &self.tail
    }

    pub fn head_dimension(&self) -> usize {
        self.head.dimension()
    }

    pub fn with_head(&self, head: GridState) -> Self {
        Self { head, tail: self.tail.clone() }
    }

    pub fn with_tail(&self, tail: TailProduct) -> Self {
        Self { head: self.head.clone(), tail }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.with_head(self.head.scale(c))
    }

    /// Whether the tail is flat, so every operator acts on the head alone.
    pub fn is_head_only(&self) -> bool {
        self.tail.is_flat()
    }

    /// Moves the first `axes.len()` tail factors into the head, sampled on
    /// the given axes.
    pub fn absorb(&self, axes: &[Axis]) -> Result<Self> {
        if axes.is_empty() {
            return Ok(self.clone());
        }
        if !self.tail.evolution().is_identity() && !self.tail.is_flat() {
            return Err(Error::NotRepresentable("cannot sample factors of an evolved tail".into()));
        }
        let mut head = self.head.clone();
        let mut tail = self.tail.clone();
        for axis in axes {
            let (f, rest) = tail.pop_front();
            head = head.kronecker(&f.sample_on(axis)?);
            tail = rest;
        }
        Ok(Self { head, tail })
    }

    /// Absorbs `count` tail factors, each on its own sampling axis.
    pub fn absorb_on_sampling_axes(&self, count: usize) -> Result<Self> {
        let axes = (1..=count)
            .map(|p| sampling_axis(&[&self.tail.factor(p)]))
            .collect::<Result<Vec<_>>>()?;
        self.absorb(&axes)
    }

    pub fn norm_sqr(&self) -> Result<f64> {
        Ok(cylinder_inner(self, self)?.re)
    }

    pub fn norm(&self) -> Result<f64> {
        Ok(self.norm_sqr()?.sqrt())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        linear_combination(Complex64::new(1.0, 0.0), self, Complex64::new(-1.0, 0.0), other)
    }

    /// `‖self - other‖`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        self.sub(other)?.norm()
    }

    /// Equality after re-splitting to a common head: tails must describe
    /// the same product and heads agree to `tol` in every sample.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> Result<bool> {
        let (a, b) = align(self, other)?;
        if !tails_match(&a.tail, &b.tail) || a.head.grid() != b.head.grid() {
            return Ok(false);
        }
        Ok(a.head.max_abs_diff(&b.head)? <= tol)
    }
}

fn tails_match(a: &TailProduct, b: &TailProduct) -> bool {
    if a.is_flat() && b.is_flat() {
        a.with_evolution(Default::default()).same_as(&b.with_evolution(Default::default()))
    } else {
        a.same_as(b)
    }
}

/// Re-splits the state with the shorter head by absorbing tail factors onto
/// the other head's remaining axes.
pub fn align(u: &CylinderState, v: &CylinderState) -> Result<(CylinderState, CylinderState)> {
    let (m, n) = (u.head_dimension(), v.head_dimension());
    if m < n {
        Ok((u.absorb(&v.head.grid().axes()[m..])?, v.clone()))
    } else if n < m {
        Ok((u.clone(), v.absorb(&u.head.grid().axes()[n..])?))
    } else {
        Ok((u.clone(), v.clone()))
    }
}

/// `f ⊗ u`: `f` occupies the first coordinates, `u` is shifted behind it.
pub fn tensor(f: &GridState, u: &CylinderState) -> CylinderState {
    CylinderState { head: f.kronecker(&u.head), tail: u.tail.clone() }
}

/// Head inner product and tail overlap after aligning the splits.
pub fn cylinder_inner_parts(u: &CylinderState, v: &CylinderState) -> Result<(Complex64, TailOverlap)> {
    let (a, b) = align(u, v)?;
    let tail = tail_inner(&a.tail, &b.tail)?;
    if tail == TailOverlap::Exact(Complex64::new(0.0, 0.0)) {
        return Ok((Complex64::new(0.0, 0.0), tail));
    }
    Ok((grid_inner(&a.head, &b.head)?, tail))
}

/// `⟨u, v⟩ = ⟨head_u, head_v⟩ ∏_n ⟨u_n, v_n⟩`.
pub fn cylinder_inner(u: &CylinderState, v: &CylinderState) -> Result<Complex64> {
    match cylinder_inner_parts(u, v)? {
        (h, TailOverlap::Exact(t)) => Ok(h * t),
        (_, TailOverlap::HeatContracted { .. }) => Err(Error::UnresolvedTailScalar),
    }
}

/// `alpha u + beta v` when the result is again a cylinder state: equal
/// tails, or tails that differ in a single factor under equal (or scalar)
/// heads.
pub fn linear_combination(alpha: Complex64, u: &CylinderState, beta: Complex64, v: &CylinderState) -> Result<CylinderState> {
    let (a, b) = align(u, v)?;
    if tails_match(&a.tail, &b.tail) {
        return Ok(CylinderState { head: a.head.combine(alpha, &b.head, beta)?, tail: a.tail });
    }
    let p = a.tail.single_difference(&b.tail).ok_or_else(|| {
        Error::NotRepresentable("tails differ in more than one factor".into())
    })?;
    let (fa, fb) = (a.tail.factor(p), b.tail.factor(p));
    if a.head == b.head {
        let f = fa.combine(alpha, &fb, beta)?;
        return Ok(CylinderState { head: a.head.clone(), tail: a.tail.with_factor(p, f) });
    }
    if let (Some(ha), Some(hb)) = (a.head.as_scalar(), b.head.as_scalar()) {
        let f = fa.combine(alpha * ha, &fb, beta * hb)?;
        return Ok(CylinderState::pure_tail(a.tail.with_factor(p, f)));
    }
    Err(Error::NotRepresentable("heads and tails both differ".into()))
}

/// `f ⋄_N v`: for `v = g ⊗ w` split after `dim f` coordinates, `⟨g, f⟩ w`.
pub fn contract_head(f: &GridState, v: &CylinderState) -> Result<CylinderState> {
    let n = f.dimension();
    if v.head_dimension() < n {
        return Err(Error::DimensionMismatch { left: n, right: v.head_dimension() });
    }
    let (lead, rest) = v.head.grid().split(n)?;
    if &lead != f.grid() {
        return Err(Error::GridMismatch("contraction grid differs from the leading head axes".into()));
    }
    let ny = rest.len();
    let w = f.grid().weight();
    let vs = v.head.amps();
    let fs = f.amps();
    let out = (0..ny)
        .map(|y| exact_sum_complex(fs.iter().enumerate().map(|(x, fx)| fx.conj() * vs[x * ny + y])) * w)
        .collect();
    Ok(CylinderState { head: GridState::new(rest, out)?, tail: v.tail.clone() })
}

/// `u ⋄_∞ v`: for `v = g ⊗ w` with `w` matching `u` after its head,
/// `g(x) = Σ_y v(x, y) conj(u(y))` times `⟨tail_v, tail_u⟩`.
pub fn contract_tail(u: &CylinderState, v: &CylinderState) -> Result<GridState> {
    let m = u.head_dimension();
    if v.head_dimension() < m {
        return Err(Error::DimensionMismatch { left: m, right: v.head_dimension() });
    }
    let (lead, rest) = v.head.grid().split(v.head_dimension() - m)?;
    if &rest != u.head.grid() {
        return Err(Error::GridMismatch("contraction grid differs from the trailing head axes".into()));
    }
    let t = match tail_inner(&v.tail, &u.tail)? {
        TailOverlap::Exact(t) => t,
        TailOverlap::HeatContracted { .. } => return Err(Error::UnresolvedTailScalar),
    };
    let ny = rest.len();
    let w = rest.weight();
    let vs = v.head.amps();
    let us = u.head.amps();
    let out = (0..lead.len())
        .map(|x| exact_sum_complex(us.iter().enumerate().map(|(y, uy)| vs[x * ny + y] * uy.conj())) * w * t)
        .collect();
    GridState::new(lead, out)
}

/// Zero state with the same split and tail.
pub fn zero_like(u: &CylinderState) -> CylinderState {
    u.with_head(GridState::zeros(u.head.grid().clone()))
}

/// One-dimensional grid state from a factor on its sampling axis.
pub fn factor_state(f: &Factor) -> Result<GridState> {
    let axis = sampling_axis(&[f])?;
    f.sample_on(&axis)
}
