use super::*;
use crate::grid_spectral::{grid_inner, Grid, GridState};
use crate::product_cylinder::{
    build_family, family_derivative_norm_sqr, tensor, BinaryAddress, Factor, ScaleLaw, TailProduct, TailRule,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const LINEAR: ScaleLaw = ScaleLaw::Power { coefficient: 1.0, exponent: 1.0 };

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn dir(k: usize) -> Direction {
    Direction::new(k).unwrap()
}

fn bump_tail() -> TailProduct {
    TailProduct::new(vec![Factor::bump(1.0, 1).unwrap()], TailRule::Bump { law: LINEAR, offset: 0 }).unwrap()
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

fn plane_wave(grid: &Grid, k: &[f64]) -> GridState {
    let xi: Vec<f64> = k.iter().zip(grid.axes()).map(|(m, a)| 2.0 * PI * m / a.length).collect();
    GridState::from_fn(grid.clone(), move |x| {
        Complex64::from_polar(1.0, x.iter().zip(&xi).map(|(a, b)| a * b).sum())
    })
}

#[test]
fn shift_vectors_merge_entries() {
    let a = ShiftVector::new([(3, 1.0), (1, 2.0), (3, -1.0)]).unwrap();
    assert_eq!(a.entries(), &[(1, 2.0)]);
    assert!(ShiftVector::new([(0, 1.0)]).is_err());
    assert!(ShiftVector::new([(1, f64::INFINITY)]).is_err());
    assert!(a.add(&a.neg()).is_zero());
}

#[test]
fn zero_shift_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = Grid::cube(2, 4.0, 16).unwrap();
    let u = CylinderState::new(band_limited(&mut rng, &g, 4), bump_tail());
    assert_eq!(translate(&ShiftVector::zero(), &u).unwrap(), u);
}

#[test]
fn lattice_group_law_and_unitarity_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = Grid::cube(2, 4.0, 16).unwrap();
    let h = g.axis(0).spacing();
    let u = CylinderState::new(band_limited(&mut rng, &g, 4), bump_tail());
    let v = CylinderState::new(band_limited(&mut rng, &g, 4), bump_tail());
    let a = ShiftVector::new([(1, 3.0 * h), (2, -5.0 * h), (3, 1.0), (4, 8.0)]).unwrap();
    let b = ShiftVector::new([(1, -7.0 * h), (3, 2.0), (5, -25.0)]).unwrap();
    let back = translate(&a, &translate(&a.neg(), &u).unwrap()).unwrap();
    assert_eq!(back.head(), u.head());
    assert!(back.tail().same_as(u.tail()));
    let ab = translate(&a, &translate(&b, &u).unwrap()).unwrap();
    let sum = translate(&a.add(&b), &u).unwrap();
    assert_eq!(ab.head(), sum.head());
    assert!(ab.tail().same_as(sum.tail()));
    let (tu, tv) = (translate(&a, &u).unwrap(), translate(&a, &v).unwrap());
    assert_eq!(tu.norm_sqr().unwrap(), u.norm_sqr().unwrap());
    assert_eq!(cylinder_inner(&tu, &tv).unwrap(), cylinder_inner(&u, &v).unwrap());
}

#[test]
fn spectral_shifts_are_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = Grid::cube(1, 5.0, 32).unwrap();
    for _ in 0..20 {
        let u = CylinderState::new(band_limited(&mut rng, &g, 10), bump_tail());
        let v = CylinderState::new(band_limited(&mut rng, &g, 10), bump_tail());
        let a = ShiftVector::new([(1, rng.gen_range(-3.0..3.0))]).unwrap();
        let (tu, tv) = (translate(&a, &u).unwrap(), translate(&a, &v).unwrap());
        assert!((tu.norm().unwrap() - u.norm().unwrap()).abs() < 1e-12);
        assert!((cylinder_inner(&tu, &tv).unwrap() - cylinder_inner(&u, &v).unwrap()).norm() < 1e-12);
        let back = translate(&a.neg(), &tu).unwrap();
        assert!(back.head().max_abs_diff(u.head()).unwrap() < 1e-12);
    }
}

#[test]
fn atomic_translation() {
    let u = AtomicState::from_atoms(2, [(vec![0.0, 1.0], 2.0, c(1.0, -1.0)), (vec![1.0, 1.0], 0.5, c(0.0, 2.0))]).unwrap();
    let v = AtomicState::from_atoms(2, [(vec![1.0, 1.0], 1.0, c(0.5, 0.5))]).unwrap();
    assert_eq!(translate_atomic(&[0.0, 0.0], &u).unwrap(), u);
    let a = [0.25, -3.0];
    let tu = translate_atomic(&a, &u).unwrap();
    let tv = translate_atomic(&a, &v).unwrap();
    assert_eq!(crate::sqrt_calculus::inner(&tu, &tv).unwrap(), crate::sqrt_calculus::inner(&u, &v).unwrap());
    let far = translate_atomic(&[10.0, 0.0], &v).unwrap();
    assert_eq!(crate::sqrt_calculus::inner(&u, &far).unwrap(), c(0.0, 0.0));
    assert!(translate_atomic(&[1.0], &u).is_err());
}

#[test]
fn difference_quotient_of_constant_head_vanishes() {
    let g = Grid::cube(1, 4.0, 16).unwrap();
    let u = CylinderState::new(GridState::from_fn(g, |_| c(0.5, 0.0)), bump_tail());
    let q = difference_quotient(dir(1), 0.013, &u).unwrap();
    assert!(q.norm().unwrap() < 1e-12);
}

#[test]
fn difference_quotient_converges_at_first_order() {
    let g = Grid::cube(1, 2.0 * PI, 32).unwrap();
    let head = plane_wave(&g, &[3.0]);
    let u = CylinderState::new(head, bump_tail());
    for k in [dir(1), dir(2), dir(4)] {
        let d = derivative(k, &u).unwrap();
        let residual = |h: f64| {
            let q = difference_quotient(k, h, &u).unwrap();
            linear_combination(c(1.0, 0.0), &q, c(1.0, 0.0), &d).unwrap().norm().unwrap()
        };
        let mut prev = residual(0.02);
        for level in 1..6 {
            let r = residual(0.02 / f64::from(1 << level));
            let ratio = r / prev;
            assert!((0.45..=0.55).contains(&ratio), "direction {} level {level}: ratio {ratio}", k.index());
            prev = r;
        }
    }
}

#[test]
fn derivative_examples() {
    let g = Grid::cube(2, 4.0, 16).unwrap();
    let u = CylinderState::new(plane_wave(&g, &[2.0, -1.0]), bump_tail());
    let d = derivative(dir(2), &u).unwrap();
    let xi = -2.0 * PI / 4.0;
    assert!(d.head().max_abs_diff(&u.head().scale(c(0.0, xi))).unwrap() < 1e-12);
    assert_eq!(d.tail(), u.tail());

    // family states: derivative norms along explicit and rule coordinates
    let w = build_family(&BinaryAddress::new(vec![true, false, true], false), LINEAR).unwrap();
    for n in 1..=6 {
        let dn = derivative(dir(n), &w).unwrap();
        let expect = family_derivative_norm_sqr(LINEAR, n);
        assert!((dn.norm_sqr().unwrap() - expect).abs() < 1e-10 * expect.max(1.0), "n={n}");
    }

    // flat tail coordinate
    let flat = CylinderState::new(plane_wave(&g, &[1.0, 0.0]), TailProduct::flat(3.0).unwrap());
    assert_eq!(derivative(dir(5), &flat).unwrap().norm().unwrap(), 0.0);
}

#[test]
fn derivative_passes_through_tensor() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let gf = Grid::cube(1, 3.0, 16).unwrap();
    let gh = Grid::cube(1, 5.0, 32).unwrap();
    let f = band_limited(&mut rng, &gf, 5);
    let u = CylinderState::new(band_limited(&mut rng, &gh, 8), bump_tail());
    for k in 1..=3 {
        let lhs = derivative(dir(k + 1), &tensor(&f, &u)).unwrap();
        let rhs = tensor(&f, &derivative(dir(k), &u).unwrap());
        assert!(lhs.approx_eq(&rhs, 1e-10).unwrap(), "k={k}");
    }
}

#[test]
fn derivative_commutes_with_translation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = Grid::cube(1, 4.0, 32).unwrap();
    let u = CylinderState::new(band_limited(&mut rng, &g, 8), bump_tail());
    let a = ShiftVector::new([(1, 0.37), (2, 1.0), (3, 0.2)]).unwrap();
    for k in 1..=3 {
        let lhs = derivative(dir(k), &translate(&a, &u).unwrap()).unwrap();
        let rhs = translate(&a, &derivative(dir(k), &u).unwrap()).unwrap();
        let d = lhs.distance(&rhs).unwrap();
        assert!(d < 1e-10, "k={k} {d:e}");
    }
}

#[test]
fn generator_is_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let g = Grid::cube(2, 6.0, 32).unwrap();
    for _ in 0..10 {
        let u = CylinderState::new(band_limited(&mut rng, &g, 6), bump_tail());
        let v = CylinderState::new(band_limited(&mut rng, &g, 6), bump_tail());
        for k in 1..=2 {
            let (lhs, rhs) = symmetry_check(dir(k), &u, &v).unwrap();
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }
    // plane waves: both sides equal xi <u, v>
    let u = CylinderState::new(plane_wave(&g, &[2.0, 1.0]), bump_tail());
    let (lhs, rhs) = symmetry_check(dir(1), &u, &u).unwrap();
    let expect = -(2.0 * PI * 2.0 / 6.0) * u.norm_sqr().unwrap();
    assert!((lhs - c(expect, 0.0)).norm() < 1e-10 && (rhs - c(expect, 0.0)).norm() < 1e-10);
    // real bump factor: i<f', f> is real and both sides agree
    let w = CylinderState::pure_tail(bump_tail());
    let (lhs, rhs) = symmetry_check(dir(1), &w, &w).unwrap();
    assert!((lhs - rhs).norm() < 1e-10);
    assert!(lhs.im.abs() < 1e-12);
}

#[test]
fn strong_continuity() {
    let g = Grid::cube(1, 2.0 * PI, 32).unwrap();
    let u = CylinderState::new(plane_wave(&g, &[1.0]), bump_tail());
    let hs: Vec<f64> = (0..6).map(|j| 0.01 / f64::from(1 << j)).collect();
    let norms = strong_continuity_check(dir(1), &u, &hs).unwrap();
    for w in norms.windows(2) {
        assert!((w[1] / w[0] - 0.5).abs() < 1e-3);
    }
    let dn = derivative(dir(1), &u).unwrap().norm().unwrap();
    for (h, n) in hs.iter().zip(&norms) {
        assert!(*n <= dn * h * (1.0 + 1e-12));
    }
    let constant = CylinderState::new(GridState::from_fn(g.clone(), |_| c(1.0, 0.0)), bump_tail());
    assert!(strong_continuity_check(dir(1), &constant, &hs).unwrap().iter().all(|n| *n < 1e-12));

    // one offset step along a tail coordinate moves the factor off itself
    let w = CylinderState::pure_tail(bump_tail());
    let jump = strong_continuity_check(dir(1), &w, &[1.0]).unwrap();
    assert!((jump[0] - 2f64.sqrt()).abs() < 1e-12);
    let _ = grid_inner;
}
