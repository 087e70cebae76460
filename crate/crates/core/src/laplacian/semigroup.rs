use gauss_quad::GaussLegendre;
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid_spectral::GridState;
use crate::product_cylinder::{cylinder_inner_parts, CylinderState, Evolution, TailOverlap};
use crate::sum::exact_sum;

/// Which semigroup: `e^{tΔ}` or `e^{itΔ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Heat,
    Schrodinger,
}

fn require_head_only(u: &CylinderState) -> Result<()> {
    if u.is_head_only() {
        Ok(())
    } else {
        Err(Error::NotHeadOnly("the tail has factors with nonzero derivatives".into()))
    }
}

fn xi_sqr(xi: &[f64]) -> f64 {
    xi.iter().map(|x| x * x).sum()
}

/// `(1 - Δ)⁻¹ u` for a state whose tail is flat.
pub fn resolvent(u: &CylinderState) -> Result<CylinderState> {
    require_head_only(u)?;
    Ok(u.with_head(u.head().multiply_spectrum(|xi| Complex64::new(1.0 / (1.0 + xi_sqr(xi)), 0.0))))
}

/// `Δu` for a state whose tail is flat: the multiplier `-|ξ|²` on the head.
pub fn laplacian(u: &CylinderState) -> Result<CylinderState> {
    require_head_only(u)?;
    Ok(u.with_head(u.head().multiply_spectrum(|xi| Complex64::new(-xi_sqr(xi), 0.0))))
}

/// `e^{itΔ} u`: the head is evolved exactly, the tail carries the time.
pub fn evolve_schrodinger(t: f64, u: &CylinderState) -> Result<CylinderState> {
    if !t.is_finite() {
        return Err(Error::NotRepresentable(format!("time {t}")));
    }
    let head = if t == 0.0 {
        u.head().clone()
    } else {
        u.head().multiply_spectrum(|xi| Complex64::from_polar(1.0, -xi_sqr(xi) * t))
    };
    let e = u.tail().evolution();
    let tail = u.tail().with_evolution(Evolution { schrodinger: e.schrodinger + t, ..e });
    Ok(CylinderState::new(head, tail))
}

/// `e^{tΔ} u` for `t ≥ 0`.
pub fn evolve_heat(t: f64, u: &CylinderState) -> Result<CylinderState> {
    if t.is_nan() || t < 0.0 || !t.is_finite() {
        return Err(Error::NegativeTime(t));
    }
    let head = if t == 0.0 {
        u.head().clone()
    } else {
        u.head().multiply_spectrum(|xi| Complex64::new((-xi_sqr(xi) * t).exp(), 0.0))
    };
    let e = u.tail().evolution();
    let tail = u.tail().with_evolution(Evolution { heat: e.heat + t, ..e });
    Ok(CylinderState::new(head, tail))
}

pub fn evolve(mode: Mode, t: f64, u: &CylinderState) -> Result<CylinderState> {
    match mode {
        Mode::Heat => evolve_heat(t, u),
        Mode::Schrodinger => evolve_schrodinger(t, u),
    }
}

/// `∫_0^∞ e^{-t} e^{tΔ} u dt` by Gauss–Legendre quadrature in `s = ln t`
/// over `[-25, 4]`.
pub fn laplace_resolvent_oracle(u: &CylinderState, nodes: usize) -> Result<CylinderState> {
    require_head_only(u)?;
    let rule = GaussLegendre::new(nodes).map_err(|e| Error::InvalidGrid(e.to_string()))?;
    let (a, b) = (-25.0f64, 4.0f64);
    let mut acc = GridState::zeros(u.head().grid().clone());
    for &(x, w) in rule.as_node_weight_pairs() {
        let s = 0.5 * (b - a) * x + 0.5 * (a + b);
        let t = s.exp();
        let weight = 0.5 * (b - a) * w * t * (-t).exp();
        let e = evolve_heat(t, u)?;
        acc = acc.combine(Complex64::new(1.0, 0.0), e.head(), Complex64::new(weight, 0.0))?;
    }
    Ok(u.with_head(acc))
}

/// Variance parameter `v` of a centred Gaussian head `A exp(-x²/(2v))`,
/// measured as `2 ∫x²|g|² / ∫|g|²`.
pub fn gaussian_variance_parameter(g: &GridState) -> Result<f64> {
    if g.dimension() != 1 {
        return Err(Error::DimensionMismatch { left: 1, right: g.dimension() });
    }
    let xs = g.grid().axis(0).coords();
    let mass = exact_sum(g.amps().iter().map(|z| z.norm_sqr()));
    let second = exact_sum(g.amps().iter().zip(&xs).map(|(z, x)| x * x * z.norm_sqr()));
    Ok(2.0 * second / mass)
}

/// States sharing one tail, evolved to a common time, with their Gram
/// matrix. Under heat flow the Gram matrix is known only up to the common
/// factor `‖e^{tΔ} T‖²` of the tail, recorded in `tail_scalar_time`.
#[derive(Debug, Clone)]
pub struct EvolvedFamily {
    pub time: f64,
    pub mode: Mode,
    pub states: Vec<CylinderState>,
    pub gram: DMatrix<Complex64>,
    pub tail_scalar_time: Option<f64>,
}

impl EvolvedFamily {
    pub fn new(mode: Mode, t: f64, family: &[CylinderState]) -> Result<Self> {
        let states = family.iter().map(|u| evolve(mode, t, u)).collect::<Result<Vec<_>>>()?;
        let n = states.len();
        let mut gram = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
        let mut tail_scalar_time = None;
        for i in 0..n {
            for j in 0..n {
                let (h, tail) = cylinder_inner_parts(&states[i], &states[j])?;
                gram[(i, j)] = match tail {
                    TailOverlap::Exact(c) => h * c,
                    TailOverlap::HeatContracted { time } => {
                        tail_scalar_time = Some(time);
                        h
                    }
                };
            }
        }
        Ok(Self { time: t, mode, states, gram, tail_scalar_time })
    }

    /// Largest entry of `G - G*`.
    pub fn hermitian_defect(&self) -> f64 {
        let g = &self.gram;
        let mut worst: f64 = 0.0;
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                worst = worst.max((g[(i, j)] - g[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Smallest eigenvalue of the Hermitian part.
    pub fn min_eigenvalue(&self) -> f64 {
        let h = (&self.gram + self.gram.adjoint()) * Complex64::new(0.5, 0.0);
        h.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn is_hermitian_psd(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol && self.min_eigenvalue() >= -tol
    }
}
