//! Seeded random inputs shared by the scenarios.

use cmcalc::grid_spectral::{Grid, GridState};
use cmcalc::product_cylinder::{CylinderState, Factor, ScaleLaw, TailProduct, TailRule};
use cmcalc::sqrt_calculus::AtomicState;
use cmcalc::{Complex64, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn complex(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    c(rng.gen_range(-radius..radius), rng.gen_range(-radius..radius))
}

/// Up to `max_atoms` atoms on the integer lattice `{-m..m}^d`, so independent
/// draws share support points.
pub fn atomic(rng: &mut ChaCha8Rng, dimension: usize, max_atoms: usize, m: i64) -> Result<AtomicState> {
    let n = rng.gen_range(1..=max_atoms).min((2 * m as usize + 1).pow(dimension as u32));
    let mut points: Vec<Vec<f64>> = Vec::with_capacity(n);
    while points.len() < n {
        let p: Vec<f64> = (0..dimension).map(|_| rng.gen_range(-m..=m) as f64).collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let atoms: Vec<_> = points.into_iter().map(|p| (p, rng.gen_range(0.1..2.0), complex(rng, 1.0))).collect();
    AtomicState::from_atoms(dimension, atoms)
}

/// Random Fourier coefficients on `|k| <= kmax` per axis, scaled to unit norm.
pub fn band_limited(rng: &mut ChaCha8Rng, grid: &Grid, kmax: i64) -> Result<GridState> {
    let mut coeffs = vec![c(0.0, 0.0); grid.len()];
    for (i, v) in coeffs.iter_mut().enumerate() {
        let idx = grid.multi_index(i);
        if idx.iter().enumerate().all(|(k, j)| grid.axis(k).wavenumber(*j).abs() <= kmax) {
            *v = complex(rng, 1.0);
        }
    }
    let s = GridState::from_spectrum(grid.clone(), coeffs)?;
    let n = s.norm();
    Ok(s.scale(c(1.0 / n, 0.0)))
}

pub fn harmonic_law() -> ScaleLaw {
    ScaleLaw::Power { coefficient: 1.0, exponent: 1.0 }
}

/// One explicit bump factor of scale `first` followed by the rule
/// `L_n = n`.
pub fn bump_tail(first: f64) -> Result<TailProduct> {
    TailProduct::new(vec![Factor::bump(first, 0)?], TailRule::Bump { law: harmonic_law(), offset: 1 })
}

pub fn head_only(head: GridState) -> Result<CylinderState> {
    Ok(CylinderState::new(head, TailProduct::flat(1.0)?))
}

pub fn max_of<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    // NaN propagates
    xs.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}
