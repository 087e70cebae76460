use nalgebra::DMatrix;
use num_complex::Complex64;

use super::semigroup::{evolve, laplacian, EvolvedFamily, Mode};
use crate::error::{Error, Result};
use crate::grid_spectral::{grid_inner, GridState};
use crate::product_cylinder::{contract_head, contract_tail, tensor, CylinderState};
use crate::translation::{derivative, translate, Direction, ShiftVector};

/// `max |head difference|` between evolving `g1 ⊗ g2 ⊗ u0` jointly and
/// evolving each piece separately.
pub fn head_split_residual(mode: Mode, t: f64, g1: &GridState, g2: &GridState, u0: &CylinderState) -> Result<f64> {
    let joint = evolve(mode, t, &tensor(g1, &tensor(g2, u0)))?;
    let e1 = evolve(mode, t, &CylinderState::pure_tail(u0.tail().clone()))?;
    let h1 = evolve(mode, t, &e1.with_head(g1.clone()))?.head().clone();
    let h2 = evolve(mode, t, &e1.with_head(g2.clone()))?.head().clone();
    let rest = evolve(mode, t, u0)?;
    let split = tensor(&h1, &tensor(&h2, &rest));
    if !split.tail().same_as(joint.tail()) {
        return Err(Error::IncomparableTails("evolved tails differ".into()));
    }
    joint.head().max_abs_diff(split.head())
}

/// `‖(e^{tA} u - u)/t - A u‖` for each `t`, with `A = Δ` (heat) or `iΔ`.
pub fn taylor_residuals(mode: Mode, u: &CylinderState, ts: &[f64]) -> Result<Vec<f64>> {
    let lap = laplacian(u)?;
    let gen = match mode {
        Mode::Heat => lap.head().clone(),
        Mode::Schrodinger => lap.head().scale(Complex64::new(0.0, 1.0)),
    };
    ts.iter()
        .map(|&t| {
            let e = evolve(mode, t, u)?;
            let q = e.head().combine(Complex64::new(1.0 / t, 0.0), u.head(), Complex64::new(-1.0 / t, 0.0))?;
            Ok(q.sub(&gen)?.norm())
        })
        .collect()
}

/// Head-evolved Gram matrix against the Gram matrix of the same family
/// evolved jointly with the first tail factor on a two-axis grid.
#[derive(Debug, Clone)]
pub struct GramCheck {
    pub predicted: DMatrix<Complex64>,
    pub measured: DMatrix<Complex64>,
    /// Least-squares `λ` in `measured ≈ λ predicted`.
    pub scale: Complex64,
    /// `max |measured - λ predicted| / max |measured|`.
    pub proportionality_residual: f64,
    /// `max |measured - predicted|`.
    pub equality_residual: f64,
    pub hermitian_psd: bool,
}

pub fn gram_factorization(mode: Mode, t: f64, heads: &[GridState], u0: &CylinderState) -> Result<GramCheck> {
    if u0.head_dimension() != 0 {
        return Err(Error::DimensionMismatch { left: 0, right: u0.head_dimension() });
    }
    let n = heads.len();
    let tail_state = CylinderState::pure_tail(u0.tail().clone());
    let evolved_heads = heads
        .iter()
        .map(|f| Ok(evolve(mode, t, &tail_state.with_head(f.clone()))?.head().clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut predicted = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for i in 0..n {
        for j in 0..n {
            predicted[(i, j)] = grid_inner(&evolved_heads[i], &evolved_heads[j])?;
        }
    }
    let joint = heads
        .iter()
        .map(|f| tensor(f, u0).absorb_on_sampling_axes(1))
        .collect::<Result<Vec<_>>>()?;
    let family = EvolvedFamily::new(mode, t, &joint)?;
    let measured = family.gram.clone();
    let num: Complex64 = predicted.iter().zip(measured.iter()).map(|(p, m)| p.conj() * m).sum();
    let den: f64 = predicted.iter().map(|p| p.norm_sqr()).sum();
    let scale = if den > 0.0 { num / den } else { Complex64::new(0.0, 0.0) };
    let peak = measured.iter().map(|m| m.norm()).fold(0.0, f64::max);
    let prop = predicted
        .iter()
        .zip(measured.iter())
        .map(|(p, m)| (m - scale * p).norm())
        .fold(0.0, f64::max);
    let equality_residual = predicted.iter().zip(measured.iter()).map(|(p, m)| (m - p).norm()).fold(0.0, f64::max);
    Ok(GramCheck {
        predicted,
        measured,
        scale,
        proportionality_residual: if peak > 0.0 { prop / peak } else { prop },
        equality_residual,
        hermitian_psd: family.is_hermitian_psd(1e-10 * peak.max(1.0)),
    })
}

/// `‖Δ(τ_a u) - τ_a(Δu)‖`.
pub fn translation_invariance_check(a: &ShiftVector, u: &CylinderState) -> Result<f64> {
    let lhs = laplacian(&translate(a, u)?)?;
    let rhs = translate(a, &laplacian(u)?)?;
    lhs.distance(&rhs)
}

/// Largest of `‖∂_k(f ⋄_N v) - f ⋄_N ∂_{N+k} v‖` and
/// `‖∂_k(w ⋄_∞ v) - w ⋄_∞ ∂_k v‖` with `w = f ⋄_N v`.
pub fn contraction_derivative_check(k: Direction, f: &GridState, v: &CylinderState) -> Result<f64> {
    let n = f.dimension();
    let shifted = Direction::new(n + k.index())?;
    let w = contract_head(f, v)?;
    let lhs = derivative(k, &w)?;
    let rhs = contract_head(f, &derivative(shifted, v)?)?;
    let head = lhs.distance(&rhs)?;
    if k.index() > n {
        return Ok(head);
    }
    let lhs = contract_tail(&w, v)?.derivative(k.index() - 1)?;
    let rhs = contract_tail(&w, &derivative(k, v)?)?;
    Ok(head.max(lhs.sub(&rhs)?.norm()))
}
