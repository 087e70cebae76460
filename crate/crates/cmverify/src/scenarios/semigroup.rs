//! Scenarios on the heat and Schrodinger semigroups.

use cmcalc::grid_spectral::oracle::Gaussian1d;
use cmcalc::grid_spectral::{Grid, GridState};
use cmcalc::laplacian::{
    evolve, gaussian_variance_parameter, gram_factorization, head_split_residual, taylor_residuals, Mode,
};
use cmcalc::product_cylinder::{build_family, BinaryAddress, CylinderState};
use cmcalc::sum::exact_sum;
use cmcalc::{Complex64, Result};
use rand::Rng;

use crate::params::{ParamDefault::*, ParamSpec, Params};
use crate::registry::Ctx;
use crate::report::Check;
use crate::sample::{band_limited, bump_tail, c, harmonic_law, head_only, max_of};

const FACTORIZATION: &[ParamSpec] = &[
    ParamSpec { key: "members", default: Int(8), doc: "family size sharing one tail" },
    ParamSpec { key: "points", default: Int(512), doc: "head grid points" },
    ParamSpec { key: "length", default: Float(40.0), doc: "head box length" },
    ParamSpec { key: "times", default: List(&[0.1, 0.5, 1.0]), doc: "evolution times" },
    ParamSpec { key: "tolerance", default: Float(1e-6), doc: "admissible Gram residual" },
    ParamSpec { key: "oracle_tolerance", default: Float(1e-8), doc: "admissible gap to closed-form Gaussians" },
];

pub const SCHRODINGER: &[ParamSpec] = FACTORIZATION;
pub const HEAT: &[ParamSpec] = FACTORIZATION;

/// Gaussian heads of varying width, centre and phase, plus their closed
/// forms.
fn gaussian_heads(p: &Params, ctx: &mut Ctx) -> Result<(Grid, Vec<Gaussian1d>, Vec<GridState>)> {
    let grid = Grid::cube(1, p.f64("length"), p.usize("points"))?;
    let n = p.usize("members");
    let closed: Vec<Gaussian1d> = (0..n)
        .map(|_| {
            let sigma = ctx.rng.gen_range(0.7..1.3);
            let centre = ctx.rng.gen_range(-4.0..4.0);
            let phase = ctx.rng.gen_range(0.0..std::f64::consts::TAU);
            Gaussian1d::normalized(sigma, centre).scaled(Complex64::from_polar(1.0, phase))
        })
        .collect();
    let heads = closed.iter().map(|g| GridState::from_fn(grid.clone(), |x| g.value(x[0]))).collect();
    Ok((grid, closed, heads))
}

fn shared_tail() -> Result<CylinderState> {
    build_family(&BinaryAddress::new(vec![true, false], false), harmonic_law())
}

fn oracle_gap(grid: &Grid, evolved: &GridState, exact: &Gaussian1d) -> Result<f64> {
    evolved.max_abs_diff(&GridState::from_fn(grid.clone(), |x| exact.value(x[0])))
}

fn split_and_taylor(mode: Mode, ctx: &mut Ctx, heads: &[GridState], u0: &CylinderState) -> Result<()> {
    let one = GridState::scalar(c(1.0, 0.0));
    let split = head_split_residual(mode, 0.4, &heads[0], &heads[1], u0)?;
    ctx.check(Check::residual("g1 (x) g2 (x) u evolves factorwise", split, 1e-10));
    let trivial = head_split_residual(mode, 0.4, &heads[0], &one, u0)?;
    ctx.check(Check::residual("empty second head splits exactly", trivial, 0.0));
    let coarse = Grid::cube(1, 2.0 * std::f64::consts::PI, 32)?;
    let u = head_only(band_limited(&mut ctx.rng, &coarse, 4)?)?;
    let ts: Vec<f64> = (0..5).map(|j| 1e-3 / f64::from(1u32 << j)).collect();
    let r = taylor_residuals(mode, &u, &ts)?;
    for (w, t) in r.windows(2).zip(&ts[1..]) {
        ctx.check(Check::within(format!("Taylor residual ratio at t = {t:e}"), w[1] / w[0], 0.45, 0.55));
    }
    Ok(())
}

pub fn schrodinger_factorization(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let (grid, closed, heads) = gaussian_heads(p, ctx)?;
    let u0 = shared_tail()?;
    for &t in p.list("times") {
        let g = gram_factorization(Mode::Schrodinger, t, &heads, &u0)?;
        ctx.check(Check::residual(format!("t = {t}: joint Gram equals head-evolved Gram"), g.equality_residual, p.f64("tolerance")));
        ctx.check(Check::holds(format!("t = {t}: Gram is Hermitian PSD"), g.hermitian_psd));
        let drift = (0..heads.len()).map(|i| (g.measured[(i, i)].re - heads[i].norm_sqr()).abs());
        ctx.check(Check::residual(format!("t = {t}: norms preserved"), max_of(drift), 1e-12));
        let mut gap = 0.0f64;
        for (head, exact) in heads.iter().zip(&closed) {
            let e = evolve(Mode::Schrodinger, t, &head_only(head.clone())?)?;
            gap = max_of([gap, oracle_gap(&grid, e.head(), &exact.schrodinger(t))?]);
        }
        ctx.check(Check::residual(format!("t = {t}: heads match closed-form Gaussians"), gap, p.f64("oracle_tolerance")));
    }
    split_and_taylor(Mode::Schrodinger, ctx, &heads, &u0)
}

pub fn heat_factorization(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let (grid, closed, heads) = gaussian_heads(p, ctx)?;
    let u0 = shared_tail()?;
    let centred = head_only(GridState::from_fn(grid.clone(), |x| Gaussian1d::normalized(1.0, 0.0).value(x[0])))?;
    for &t in p.list("times") {
        let g = gram_factorization(Mode::Heat, t, &heads, &u0)?;
        ctx.check(Check::residual(format!("t = {t}: joint Gram proportional to head-evolved Gram"), g.proportionality_residual, p.f64("tolerance")));
        ctx.check(Check::real(format!("t = {t}: proportionality factor is real"), g.scale.im, 0.0, p.f64("tolerance")));
        ctx.check(Check::within(format!("t = {t}: proportionality factor in (0, 1]"), g.scale.re, f64::MIN_POSITIVE, 1.0));
        ctx.check(Check::holds(format!("t = {t}: Gram is Hermitian PSD"), g.hermitian_psd));
        ctx.point("tail contraction factor", t, g.scale.re);
        let v = gaussian_variance_parameter(evolve(Mode::Heat, t, &centred)?.head())?;
        ctx.check(Check::real(format!("t = {t}: Gaussian variance sigma^2 + 2t"), v, 1.0 + 2.0 * t, p.f64("oracle_tolerance")));
        let mut gap = 0.0f64;
        for (head, exact) in heads.iter().zip(&closed) {
            let e = evolve(Mode::Heat, t, &head_only(head.clone())?)?;
            gap = max_of([gap, oracle_gap(&grid, e.head(), &exact.heat(t)?)?]);
        }
        ctx.check(Check::residual(format!("t = {t}: heads match closed-form Gaussians"), gap, p.f64("oracle_tolerance")));
    }
    split_and_taylor(Mode::Heat, ctx, &heads, &u0)
}

pub const CONTRACTION: &[ParamSpec] = &[
    ParamSpec { key: "samples", default: Int(50), doc: "evolution times sampled on (0, t_max]" },
    ParamSpec { key: "t_max", default: Float(1.0), doc: "largest evolution time" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "admissible norm increase or drift" },
];

pub fn heat_contraction(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let grid = Grid::cube(1, 8.0, 64)?;
    let u = head_only(band_limited(&mut ctx.rng, &grid, 12)?)?;
    let spectrum = u.head().dft();
    let freqs = grid.axis(0).frequencies();
    let norm0 = u.norm()?;
    let (mut prev, mut increase, mut drift, mut closed_gap) = (norm0, 0.0f64, 0.0f64, 0.0f64);
    ctx.point("heat", 0.0, norm0);
    ctx.point("schrodinger", 0.0, norm0);
    let n = p.usize("samples");
    for j in 1..=n {
        let t = p.f64("t_max") * j as f64 / n as f64;
        let h = evolve(Mode::Heat, t, &u)?.norm()?;
        let s = evolve(Mode::Schrodinger, t, &u)?.norm()?;
        // Parseval: ‖e^{tΔ}u‖² = Σ |û(ξ)|² e^{-2|ξ|² t}
        let exact = exact_sum(spectrum.amps().iter().zip(&freqs).map(|(z, xi)| z.norm_sqr() * (-2.0 * xi * xi * t).exp()));
        closed_gap = max_of([closed_gap, (h * h - exact * grid.weight()).abs()]);
        increase = max_of([increase, h - prev]);
        drift = max_of([drift, (s - norm0).abs()]);
        prev = h;
        ctx.point("heat", t, h);
        ctx.point("schrodinger", t, s);
    }
    ctx.check(Check::at_most("largest heat-norm increase between samples", increase, 0.0, tol));
    ctx.check(Check::residual("Schrodinger norm drift", drift, tol));
    ctx.check(Check::residual("heat norm against the Parseval closed form", closed_gap, tol));
    Ok(())
}

pub const LAWS: &[ParamSpec] = &[
    ParamSpec { key: "trials", default: Int(20), doc: "random (t1, t2) pairs per mode" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "admissible composition residual" },
];

pub fn semigroup_laws(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let grid = Grid::cube(1, 8.0, 64)?;
    let u = CylinderState::new(band_limited(&mut ctx.rng, &grid, 12)?, bump_tail(1.0)?);
    for (mode, label) in [(Mode::Heat, "heat"), (Mode::Schrodinger, "Schrodinger")] {
        let (mut worst, mut tails) = (0.0f64, true);
        for _ in 0..p.usize("trials") {
            let (t1, t2) = (ctx.rng.gen_range(0.0..1.0), ctx.rng.gen_range(0.0..1.0));
            let two = evolve(mode, t1, &evolve(mode, t2, &u)?)?;
            let one = evolve(mode, t1 + t2, &u)?;
            worst = max_of([worst, two.head().max_abs_diff(one.head())?]);
            tails &= two.tail().same_as(one.tail());
        }
        ctx.check(Check::residual(format!("{label}: e(t1) e(t2) = e(t1 + t2)"), worst, tol));
        ctx.check(Check::holds(format!("{label}: composed tails carry t1 + t2"), tails));
        ctx.check(Check::holds(format!("{label}: e(0) is the identity"), evolve(mode, 0.0, &u)?.head() == u.head()));
    }
    let t = ctx.rng.gen_range(0.1..1.0);
    let back = evolve(Mode::Schrodinger, -t, &evolve(Mode::Schrodinger, t, &u)?)?;
    ctx.check(Check::residual("Schrodinger: e(-t) e(t) = 1", back.head().max_abs_diff(u.head())?, tol));
    ctx.check(Check::holds("heat rejects negative times", evolve(Mode::Heat, -t, &u).is_err()));
    Ok(())
}
