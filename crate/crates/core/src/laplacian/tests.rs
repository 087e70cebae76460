use super::h1::h1_inner_states;
use super::*;
use crate::grid_spectral::oracle::Gaussian1d;
use crate::grid_spectral::{grid_inner, Grid, GridState};
use crate::product_cylinder::{
    build_family, cylinder_inner, tensor, BinaryAddress, CylinderState, Factor, ScaleLaw, TailProduct, TailRule,
};
use crate::translation::{Direction, ShiftVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn band_limited(rng: &mut ChaCha8Rng, grid: &Grid, kmax: i64) -> GridState {
    let mut coeffs = vec![c(0.0, 0.0); grid.len()];
    for (i, v) in coeffs.iter_mut().enumerate() {
        let idx = grid.multi_index(i);
        if idx.iter().enumerate().all(|(k, j)| grid.axis(k).wavenumber(*j).abs() <= kmax) {
            *v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    GridState::from_spectrum(grid.clone(), coeffs).unwrap()
}

fn head_only(head: GridState) -> CylinderState {
    CylinderState::new(head, TailProduct::flat(1.0).unwrap())
}

fn bump_tail() -> TailProduct {
    TailProduct::new(
        vec![Factor::bump(2.0, 0).unwrap()],
        TailRule::Bump { law: ScaleLaw::Power { coefficient: 1.0, exponent: 1.0 }, offset: 1 },
    )
    .unwrap()
}

#[test]
fn resolvent_and_laplacian_on_plane_waves() {
    let g = Grid::cube(2, 2.0 * PI, 16).unwrap();
    let wave = GridState::from_fn(g.clone(), |x| Complex64::from_polar(1.0, 3.0 * x[0] - 2.0 * x[1]));
    let u = head_only(wave.clone());
    let r = resolvent(&u).unwrap();
    assert!(r.head().max_abs_diff(&wave.scale(c(1.0 / 14.0, 0.0))).unwrap() < 1e-13);
    let l = laplacian(&u).unwrap();
    assert!(l.head().max_abs_diff(&wave.scale(c(-13.0, 0.0))).unwrap() < 1e-11);
    let constant = head_only(GridState::from_fn(g, |_| c(2.0, 0.0)));
    assert!(laplacian(&constant).unwrap().head().norm() < 1e-12);
    assert!(resolvent(&CylinderState::pure_tail(bump_tail())).is_err());
}

#[test]
fn resolvent_weak_identity_and_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = Grid::cube(2, 6.0, 32).unwrap();
    let f = head_only(band_limited(&mut rng, &g, 6));
    let u = resolvent(&f).unwrap();
    for _ in 0..5 {
        let phi = head_only(band_limited(&mut rng, &g, 6));
        let lhs = h1_inner_states(&u, &phi).unwrap();
        let rhs = cylinder_inner(&f, &phi).unwrap();
        assert!((lhs - rhs).norm() < 1e-8);
    }
    let h1 = H1Profile::new(u.clone()).unwrap().norm_sqr().unwrap().sqrt();
    assert!(h1 <= f.norm().unwrap() + 1e-10);
    // definition of the Laplacian through the resolvent
    let back = resolvent(&u.sub(&laplacian(&u).unwrap()).unwrap()).unwrap();
    assert!(back.distance(&u).unwrap() < 1e-8);
    // the Laplace transform of the heat semigroup
    let oracle = laplace_resolvent_oracle(&f, 64).unwrap();
    assert!(oracle.distance(&u).unwrap() < 1e-6);
}

#[test]
fn laplacian_form_is_sum_of_derivative_norms() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = Grid::cube(2, 5.0, 32).unwrap();
    for _ in 0..5 {
        let u = head_only(band_limited(&mut rng, &g, 8));
        let form = -cylinder_inner(&laplacian(&u).unwrap(), &u).unwrap();
        let sum: f64 = (1..=2)
            .map(|k| crate::translation::derivative(Direction::new(k).unwrap(), &u).unwrap().norm_sqr().unwrap())
            .sum();
        assert!((form - c(sum, 0.0)).norm() < 1e-10 * sum.max(1.0));
        assert!(form.re >= -1e-12);
    }
}

#[test]
fn semigroups_on_gaussians() {
    let g = Grid::cube(1, 40.0, 512).unwrap();
    let f = Gaussian1d::normalized(1.0, 0.0);
    let u = head_only(GridState::from_fn(g.clone(), |x| f.value(x[0])));
    for &t in &[0.1, 0.5, 1.0] {
        let h = evolve_heat(t, &u).unwrap();
        let exact = f.heat(t).unwrap();
        let reference = GridState::from_fn(g.clone(), |x| exact.value(x[0]));
        assert!(h.head().max_abs_diff(&reference).unwrap() < 1e-8);
        assert!((gaussian_variance_parameter(h.head()).unwrap() - (1.0 + 2.0 * t)).abs() < 1e-8);
        assert!(h.norm().unwrap() < 1.0);
        let s = evolve_schrodinger(t, &u).unwrap();
        assert!((s.norm().unwrap() - u.norm().unwrap()).abs() < 1e-12);
    }
    assert_eq!(evolve_heat(0.0, &u).unwrap().head(), u.head());
    assert!(evolve_heat(-0.1, &u).is_err());
}

#[test]
fn semigroup_law_and_monotone_heat_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = Grid::cube(1, 8.0, 64).unwrap();
    let u = CylinderState::new(band_limited(&mut rng, &g, 12), bump_tail());
    for mode in [Mode::Heat, Mode::Schrodinger] {
        let two = evolve(mode, 0.3, &evolve(mode, 0.2, &u).unwrap()).unwrap();
        let one = evolve(mode, 0.5, &u).unwrap();
        assert!(two.head().max_abs_diff(one.head()).unwrap() < 1e-12);
        assert!(two.tail().same_as(one.tail()));
    }
    let flat = head_only(u.head().clone());
    let mut prev = flat.norm().unwrap();
    for j in 1..=50 {
        let n = evolve_heat(0.02 * j as f64, &flat).unwrap().norm().unwrap();
        assert!(n <= prev + 1e-12);
        prev = n;
    }
}

#[test]
fn factorization_checks() {
    let g = Grid::cube(1, 20.0, 128).unwrap();
    let heads: Vec<GridState> = (0..4)
        .map(|j| {
            let q = Gaussian1d::normalized(0.8 + 0.1 * j as f64, -2.0 + j as f64).scaled(Complex64::from_polar(1.0, j as f64));
            GridState::from_fn(g.clone(), move |x| q.value(x[0]))
        })
        .collect();
    let u0 = build_family(&BinaryAddress::new(vec![true, false], false), ScaleLaw::Power { coefficient: 1.0, exponent: 1.0 }).unwrap();
    for &t in &[0.1, 0.5] {
        let s = gram_factorization(Mode::Schrodinger, t, &heads, &u0).unwrap();
        assert!(s.equality_residual < 1e-8, "{}", s.equality_residual);
        assert!(s.hermitian_psd);
        let h = gram_factorization(Mode::Heat, t, &heads, &u0).unwrap();
        assert!(h.proportionality_residual < 1e-8, "{}", h.proportionality_residual);
        assert!(h.scale.re > 0.0 && h.scale.re < 1.0);
    }
    let one = GridState::scalar(c(1.0, 0.0));
    for mode in [Mode::Heat, Mode::Schrodinger] {
        assert!(head_split_residual(mode, 0.4, &heads[0], &heads[1], &u0).unwrap() < 1e-10);
        assert_eq!(head_split_residual(mode, 0.4, &heads[0], &one, &u0).unwrap(), 0.0);
    }
}

#[test]
fn taylor_rate_at_time_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let g = Grid::cube(1, 2.0 * PI, 32).unwrap();
    let u = head_only(band_limited(&mut rng, &g, 4));
    for mode in [Mode::Heat, Mode::Schrodinger] {
        let ts: Vec<f64> = (0..5).map(|j| 1e-3 / f64::from(1 << j)).collect();
        let r = taylor_residuals(mode, &u, &ts).unwrap();
        for w in r.windows(2) {
            assert!((w[1] / w[0] - 0.5).abs() < 0.05, "{r:?}");
        }
    }
}

#[test]
fn laplacian_commutes_with_translations() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = Grid::cube(2, 4.0, 32).unwrap();
    let h = g.axis(0).spacing();
    let u = head_only(band_limited(&mut rng, &g, 6));
    assert_eq!(translation_invariance_check(&ShiftVector::zero(), &u).unwrap(), 0.0);
    let lattice = ShiftVector::new([(1, 3.0 * h), (2, -h)]).unwrap();
    assert!(translation_invariance_check(&lattice, &u).unwrap() < 1e-12);
    let spectral = ShiftVector::new([(1, 0.123), (2, 0.77), (4, 0.5)]).unwrap();
    assert!(translation_invariance_check(&spectral, &u).unwrap() < 1e-10);
}

#[test]
fn contraction_commutes_with_derivative() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let gf = Grid::cube(1, 6.0, 32).unwrap();
    let gw = Grid::cube(1, 4.0, 16).unwrap();
    let f = band_limited(&mut rng, &gf, 6);
    let v = CylinderState::new(band_limited(&mut rng, &gf.product(&gw), 6), bump_tail());
    for k in 1..=3 {
        let r = contraction_derivative_check(Direction::new(k).unwrap(), &f, &v).unwrap();
        assert!(r < 1e-10, "k={k}: {r}");
    }
    let g = f.scale(c(1.0 / f.norm(), 0.0));
    let w = CylinderState::new(band_limited(&mut rng, &gw, 6), bump_tail());
    let r = contraction_derivative_check(Direction::new(1).unwrap(), &g, &tensor(&g, &w)).unwrap();
    assert!(r < 1e-10);
    let _ = grid_inner;
}
