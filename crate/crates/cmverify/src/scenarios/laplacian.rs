//! Scenarios on the resolvent and the Laplacian of head-only states.

use cmcalc::grid_spectral::{Grid, GridState};
use cmcalc::laplacian::{h1_inner, laplace_resolvent_oracle, laplacian, resolvent, translation_invariance_check, H1Profile};
use cmcalc::product_cylinder::{cylinder_inner, CylinderState};
use cmcalc::translation::{derivative, Direction, ShiftVector};
use cmcalc::{Complex64, Result};
use rand::Rng;

use crate::params::{ParamDefault::*, ParamSpec, Params};
use crate::registry::Ctx;
use crate::report::Check;
use crate::sample::{band_limited, bump_tail, c, head_only, max_of};

/// Largest `|xi|^2` on the grid.
fn max_frequency_sqr(grid: &Grid) -> f64 {
    grid.axes().iter().map(|a| a.frequencies().iter().map(|x| x * x).fold(0.0, f64::max)).sum()
}

pub const RESOLVENT: &[ParamSpec] = &[
    ParamSpec { key: "tests", default: Int(20), doc: "random test states for the weak identity" },
    ParamSpec { key: "points", default: Int(32), doc: "grid points per axis (two axes)" },
    ParamSpec { key: "kmax", default: Int(6), doc: "largest wavenumber in the random spectra" },
    ParamSpec { key: "nodes", default: Int(64), doc: "quadrature nodes of the Laplace-transform oracle" },
    ParamSpec { key: "weak_tolerance", default: Float(1e-8), doc: "admissible weak-identity residual" },
    ParamSpec { key: "bound_tolerance", default: Float(1e-10), doc: "slack on ||R f||_H1 <= ||f||" },
    ParamSpec { key: "oracle_tolerance", default: Float(1e-6), doc: "admissible gap to the quadrature oracle" },
];

pub fn resolvent_checks(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let grid = Grid::cube(2, 6.0, p.usize("points"))?;
    let kmax = p.usize("kmax") as i64;
    let f = head_only(band_limited(&mut ctx.rng, &grid, kmax)?.scale(c(1.7, 0.0)))?;
    let u = resolvent(&f)?;
    let profile = H1Profile::new(u.clone())?;
    let mut weak = 0.0f64;
    for _ in 0..p.usize("tests") {
        let phi = head_only(band_limited(&mut ctx.rng, &grid, kmax)?)?;
        let lhs = h1_inner(&profile, &H1Profile::new(phi.clone())?)?;
        weak = max_of([weak, (lhs - cylinder_inner(&f, &phi)?).norm()]);
    }
    ctx.check(Check::residual("weak identity <Rf, phi>_H1 = <f, phi>", weak, p.f64("weak_tolerance")));
    ctx.check(Check::at_most("||Rf||_H1 <= ||f||", profile.norm_sqr()?.sqrt(), f.norm()?, p.f64("bound_tolerance")));
    let oracle = laplace_resolvent_oracle(&f, p.usize("nodes"))?;
    ctx.check(Check::residual("Laplace transform of the heat semigroup", oracle.distance(&u)?, p.f64("oracle_tolerance")));

    // injectivity: the multiplier never drops below 1/(1 + max |xi|^2)
    let floor = 1.0 / (1.0 + max_frequency_sqr(&grid));
    let mut deficit = 0.0f64;
    for _ in 0..p.usize("tests") {
        let g = head_only(band_limited(&mut ctx.rng, &grid, grid.axis(0).points as i64 / 2)?)?;
        deficit = max_of([deficit, g.norm()? * floor - resolvent(&g)?.norm()?]);
    }
    ctx.check(Check::at_most("||Rf|| >= ||f|| / (1 + max |xi|^2)", deficit, 0.0, 1e-15));
    let w = GridState::from_fn(grid, |x| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 6.0 * (x[0] - 2.0 * x[1])));
    let plane = head_only(w.clone())?;
    let xi2 = 5.0 * (2.0 * std::f64::consts::PI / 6.0f64).powi(2);
    let gap = resolvent(&plane)?.head().max_abs_diff(&w.scale(c(1.0 / (1.0 + xi2), 0.0)))?;
    ctx.check(Check::residual("plane wave: Rf = f / (1 + |xi|^2)", gap, 1e-12));
    let tail_state = CylinderState::pure_tail(bump_tail(1.0)?);
    ctx.check(Check::holds("states with active tails are rejected", resolvent(&tail_state).is_err()));
    Ok(())
}

pub const FORM: &[ParamSpec] = &[
    ParamSpec { key: "trials", default: Int(20), doc: "random band-limited states" },
    ParamSpec { key: "points", default: Int(32), doc: "grid points per axis (two axes)" },
    ParamSpec { key: "kmax", default: Int(8), doc: "largest wavenumber in the random spectra" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "admissible relative residual of the form identity" },
];

pub fn laplacian_form(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let grid = Grid::cube(2, 5.0, p.usize("points"))?;
    let (mut form_gap, mut least, mut back_gap) = (0.0f64, f64::INFINITY, 0.0f64);
    for _ in 0..p.usize("trials") {
        let u = head_only(band_limited(&mut ctx.rng, &grid, p.usize("kmax") as i64)?)?;
        let lap = laplacian(&u)?;
        let form = -cylinder_inner(&lap, &u)?;
        let sum: f64 = (1..=2)
            .map(|k| derivative(Direction::new(k)?, &u)?.norm_sqr())
            .sum::<Result<f64>>()?;
        form_gap = max_of([form_gap, (form - c(sum, 0.0)).norm() / sum.max(1.0)]);
        least = least.min(form.re);
        back_gap = max_of([back_gap, resolvent(&u.sub(&lap)?)?.distance(&u)?]);
    }
    ctx.check(Check::residual("<-Lu, u> = sum_k ||d_k u||^2 (relative)", form_gap, tol));
    ctx.check(Check::at_most("-<-Lu, u> (non-negativity)", -least, 0.0, 1e-12));
    ctx.check(Check::residual("R(u - Lu) = u", back_gap, 1e-8));
    let wave = GridState::from_fn(grid.clone(), |x| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0 * (3.0 * x[0] + x[1])));
    let xi2 = 10.0 * (2.0 * std::f64::consts::PI / 5.0f64).powi(2);
    let gap = laplacian(&head_only(wave.clone())?)?.head().max_abs_diff(&wave.scale(c(-xi2, 0.0)))?;
    ctx.check(Check::residual("plane wave: Lu = -|xi|^2 u (relative)", gap / xi2, tol));
    let constant = laplacian(&head_only(GridState::from_fn(grid, |_| c(2.0, 0.0)))?)?.norm()?;
    ctx.check(Check::residual("constants are annihilated", constant, 1e-12));
    Ok(())
}

pub const INVARIANCE: &[ParamSpec] = &[
    ParamSpec { key: "trials", default: Int(100), doc: "random (a, u) pairs, half lattice and half spectral shifts" },
    ParamSpec { key: "points", default: Int(32), doc: "grid points per axis (two axes)" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "admissible ||L(tau_a u) - tau_a(Lu)||" },
];

pub fn translation_invariance(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let grid = Grid::cube(2, 4.0, p.usize("points"))?;
    let h = grid.axis(0).spacing();
    let (mut lattice, mut spectral) = (0.0f64, 0.0f64);
    for trial in 0..p.usize("trials") {
        let u = head_only(band_limited(&mut ctx.rng, &grid, 6)?)?;
        if trial % 2 == 0 {
            let a = ShiftVector::new([
                (1, ctx.rng.gen_range(-20i64..20) as f64 * h),
                (2, ctx.rng.gen_range(-20i64..20) as f64 * h),
            ])?;
            lattice = max_of([lattice, translation_invariance_check(&a, &u)?]);
        } else {
            let a = ShiftVector::new([
                (1, ctx.rng.gen_range(-2.0..2.0)),
                (2, ctx.rng.gen_range(-2.0..2.0)),
                (3, ctx.rng.gen_range(-1.0..1.0)),
            ])?;
            spectral = max_of([spectral, translation_invariance_check(&a, &u)?]);
        }
    }
    ctx.check(Check::residual("lattice shifts", lattice, p.f64("tolerance")));
    ctx.check(Check::residual("spectral shifts", spectral, p.f64("tolerance")));
    Ok(())
}
