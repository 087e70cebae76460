use std::f64::consts::PI;

use cmcalc::grid_spectral::oracle::Gaussian1d;
use cmcalc::grid_spectral::{Grid, GridState};
use cmcalc::laplacian::{evolve, laplacian, power_tail_sum, resolvent, Mode};
use cmcalc::product_cylinder::{build_family, BinaryAddress, CylinderState, ScaleLaw, TailProduct};
use cmcalc::{Complex64, Error};

fn head_only(head: GridState) -> CylinderState {
    CylinderState::new(head, TailProduct::flat(1.0).unwrap())
}

fn plane_wave(m: i64) -> (CylinderState, f64) {
    let length = 8.0;
    let grid = Grid::cube(1, length, 64).unwrap();
    let xi = 2.0 * PI * m as f64 / length;
    (head_only(GridState::from_fn(grid, |x| Complex64::from_polar(1.0, xi * x[0]))), xi)
}

#[test]
fn plane_waves_are_eigenfunctions() {
    let (u, xi) = plane_wave(3);
    let lu = laplacian(&u).unwrap();
    assert!(lu.head().max_abs_diff(&u.head().scale(Complex64::new(-xi * xi, 0.0))).unwrap() < 1e-10);
    let ru = resolvent(&u).unwrap();
    assert!(ru.head().max_abs_diff(&u.head().scale(Complex64::new(1.0 / (1.0 + xi * xi), 0.0))).unwrap() < 1e-12);
}

#[test]
fn evolutions_match_gaussian_oracles() {
    let grid = Grid::cube(1, 40.0, 512).unwrap();
    let g = Gaussian1d::normalized(1.0, 0.0);
    let u = head_only(GridState::from_fn(grid.clone(), |x| g.value(x[0])));
    for t in [0.1, 0.5, 1.0] {
        let heat = evolve(Mode::Heat, t, &u).unwrap();
        let exact = GridState::from_fn(grid.clone(), |x| g.heat(t).unwrap().value(x[0]));
        assert!(heat.head().max_abs_diff(&exact).unwrap() < 1e-8);
        assert!((heat.norm_sqr().unwrap() - g.heat(t).unwrap().norm_sqr()).abs() < 1e-10);

        let schr = evolve(Mode::Schrodinger, t, &u).unwrap();
        let exact = GridState::from_fn(grid.clone(), |x| g.schrodinger(t).value(x[0]));
        assert!(schr.head().max_abs_diff(&exact).unwrap() < 1e-8);
        assert!((schr.norm().unwrap() - u.norm().unwrap()).abs() < 1e-12);
    }
}

#[test]
fn composition_and_inverse() {
    let (u, _) = plane_wave(2);
    let u = head_only(u.head().add(plane_wave(-5).0.head()).unwrap());
    for mode in [Mode::Heat, Mode::Schrodinger] {
        let two = evolve(mode, 0.2, &evolve(mode, 0.3, &u).unwrap()).unwrap();
        let once = evolve(mode, 0.5, &u).unwrap();
        assert!(two.head().max_abs_diff(once.head()).unwrap() < 1e-12);
    }
    let back = evolve(Mode::Schrodinger, -0.4, &evolve(Mode::Schrodinger, 0.4, &u).unwrap()).unwrap();
    assert!(back.head().max_abs_diff(u.head()).unwrap() < 1e-12);
    assert!(matches!(evolve(Mode::Heat, -0.1, &u), Err(Error::NegativeTime(_))));
}

#[test]
fn operators_need_flat_tails() {
    let u = build_family(&BinaryAddress::new(vec![true], false), ScaleLaw::Power { coefficient: 1.0, exponent: 1.0 }).unwrap();
    assert!(matches!(resolvent(&u), Err(Error::NotHeadOnly(_))));
    assert!(matches!(laplacian(&u), Err(Error::NotHeadOnly(_))));
}

#[test]
fn power_tail_bounds_bracket_zeta_four() {
    let zeta4 = PI.powi(4) / 90.0;
    let s = power_tail_sum(4.0, 1, 64).unwrap();
    assert!(s.lower <= zeta4 && zeta4 <= s.upper);
    assert!((s.estimate - zeta4).abs() < 1e-12);
    assert!(power_tail_sum(1.0, 1, 10).is_err());
}
