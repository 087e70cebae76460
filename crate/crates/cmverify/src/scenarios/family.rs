//! Scenarios on infinite products: the orthonormal family, the Sobolev form
//! and head/tail contractions.

use std::f64::consts::PI;

use cmcalc::grid_spectral::oracle::Gaussian1d;
use cmcalc::grid_spectral::{grid_inner, Grid, GridState};
use cmcalc::laplacian::{contraction_derivative_check, h1_inner, H1Profile};
use cmcalc::product_cylinder::profile::BUMP_DERIVATIVE_NORM_SQR;
use cmcalc::product_cylinder::{
    build_family, contract_head, contract_tail, cylinder_inner, tensor, zero_like, BinaryAddress, CylinderState,
    Factor, ScaleLaw,
};
use cmcalc::translation::{derivative, Direction};
use cmcalc::{Complex64, Result};
use rand::Rng;

use crate::params::{ParamDefault::*, ParamSpec, Params};
use crate::registry::Ctx;
use crate::report::Check;
use crate::sample::{band_limited, bump_tail, c, harmonic_law, head_only, max_of};

/// `Σ_{n>=1} n^-4`.
const ZETA_FOUR: f64 = PI * PI * PI * PI / 90.0;

pub const FAMILY: &[ParamSpec] = &[
    ParamSpec { key: "depth", default: Int(6), doc: "address bits; the family has 2^depth members" },
    ParamSpec { key: "coordinates", default: Int(8), doc: "tail coordinates whose derivative norms are checked" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "admissible residual for norms" },
];

/// Family `u_tau` with `L_n = n`: Gram matrix, derivative norms and the
/// certified sum `Σ_k ‖∂_k u‖² = ‖f'‖² ζ(4)`.
pub fn orthonormal_family(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let law = harmonic_law();
    let states = BinaryAddress::all(p.usize("depth"))
        .iter()
        .map(|a| build_family(a, law))
        .collect::<Result<Vec<_>>>()?;
    let (mut off, mut diag) = (0.0f64, 0.0f64);
    for (i, u) in states.iter().enumerate() {
        for (j, v) in states.iter().enumerate() {
            let g = cylinder_inner(u, v)?;
            if i == j {
                diag = max_of([diag, (g - c(1.0, 0.0)).norm()]);
            } else {
                off = max_of([off, g.norm()]);
            }
        }
    }
    ctx.check(Check::residual(format!("{} x {} Gram: off-diagonal entries", states.len(), states.len()), off, 0.0));
    ctx.check(Check::residual("Gram diagonal equals 1", diag, tol));

    let mut norm_gap = 0.0f64;
    for u in &states {
        for n in 1..=p.usize("coordinates") {
            let d = derivative(Direction::new(n)?, u)?.norm_sqr()?;
            norm_gap = max_of([norm_gap, (d - BUMP_DERIVATIVE_NORM_SQR / (n as f64).powi(4)).abs()]);
        }
    }
    ctx.check(Check::residual("||d_n u||^2 = ||f'||^2 / L_n^4", norm_gap, tol));

    let sum = BUMP_DERIVATIVE_NORM_SQR * ZETA_FOUR;
    let (mut bracket, mut width) = (true, 0.0f64);
    let mut h1_gap = 0.0f64;
    for u in states.iter().step_by(7) {
        let prof = H1Profile::new(u.clone())?;
        let (lo, hi) = prof.derivative_sum_bounds();
        bracket &= lo <= sum + tol && sum <= hi + tol;
        width = max_of([width, hi - lo]);
        h1_gap = max_of([h1_gap, (prof.norm_sqr()? - (1.0 + sum)).abs()]);
    }
    ctx.check(Check::holds("certified bounds bracket ||f'||^2 zeta(4)", bracket));
    ctx.check(Check::at_most("certified bracket width relative to the sum", width / sum, 1e-6, 0.0));
    ctx.check(Check::residual("H1 norm equals 1 + ||f'||^2 zeta(4)", h1_gap, tol));
    let divergent = build_family(&BinaryAddress::new(vec![], false), ScaleLaw::Constant { scale: 1.0 });
    ctx.check(Check::holds("constant scale law is rejected", divergent.is_err()));
    Ok(())
}

pub const H1_FORM: &[ParamSpec] = &[
    ParamSpec { key: "sigma", default: Float(1.0), doc: "width of the Gaussian head" },
    ParamSpec { key: "length", default: Float(40.0), doc: "box length of the head grid" },
    ParamSpec { key: "points", default: Int(512), doc: "head grid points" },
    ParamSpec { key: "tolerance", default: Float(1e-8), doc: "admissible residual" },
];

pub fn h1_form(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let sigma = p.f64("sigma");
    let grid = Grid::cube(1, p.f64("length"), p.usize("points"))?;
    let g = Gaussian1d::normalized(sigma, 0.3);
    let head = GridState::from_fn(grid, |x| g.value(x[0]));
    // ∫|g'|² = 1/(2σ²) for a unit Gaussian
    let slope = 1.0 / (2.0 * sigma * sigma);
    let gauss = H1Profile::new(head_only(head.clone())?)?;
    ctx.check(Check::real("Gaussian head: H1 norm^2 = 1 + 1/(2 sigma^2)", gauss.norm_sqr()?, 1.0 + slope, tol));

    let u = build_family(&BinaryAddress::new(vec![true, false, true], false), harmonic_law())?;
    let tail_sum = BUMP_DERIVATIVE_NORM_SQR * ZETA_FOUR;
    let prod = H1Profile::new(tensor(&head, &u))?;
    ctx.check(Check::real("g (x) u_tau: H1 norm^2 = 1 + 1/(2 sigma^2) + ||f'||^2 zeta(4)", prod.norm_sqr()?, 1.0 + slope + tail_sum, tol));

    let v = build_family(&BinaryAddress::new(vec![true, true, true], false), harmonic_law())?;
    let cross = h1_inner(&H1Profile::new(u.clone())?, &H1Profile::new(v)?)?;
    ctx.check(Check::complex("orthogonal family members are H1-orthogonal", cross, c(0.0, 0.0), 0.0));
    let zero = H1Profile::new(zero_like(&tensor(&head, &u)))?.norm_sqr()?;
    ctx.check(Check::real("zero state has H1 norm 0", zero, 0.0, 0.0));
    let hermitian = {
        let a = H1Profile::new(tensor(&head, &u))?;
        let b = H1Profile::new(tensor(&head.scale(c(0.0, 1.0)), &u))?;
        (h1_inner(&a, &b)? - h1_inner(&b, &a)?.conj()).norm()
    };
    ctx.check(Check::residual("H1 form is Hermitian", hermitian, tol));
    Ok(())
}

pub const TENSOR: &[ParamSpec] = &[
    ParamSpec { key: "trials", default: Int(50), doc: "random (f, g, u, v) draws" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "admissible residual" },
];

pub fn tensor_contraction(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let gf = Grid::cube(1, 6.0, 32)?;
    let gw = Grid::cube(1, 4.0, 16)?;
    let tail = bump_tail(1.5)?;
    let mut worst = [0.0f64; 6];
    for _ in 0..p.usize("trials") {
        let f = band_limited(&mut ctx.rng, &gf, 6)?.scale(c(ctx.rng.gen_range(0.5..2.0), 0.0));
        let g = band_limited(&mut ctx.rng, &gf, 6)?;
        let u = CylinderState::new(band_limited(&mut ctx.rng, &gw, 5)?, tail.clone());
        let w = CylinderState::new(band_limited(&mut ctx.rng, &gw, 5)?, tail.clone());
        let v = CylinderState::new(band_limited(&mut ctx.rng, &gf.product(&gw), 6)?, tail.clone());
        let fu = tensor(&f, &u);
        let lhs = cylinder_inner(&fu, &tensor(&g, &w))?;
        let rhs = grid_inner(&f, &g)? * cylinder_inner(&u, &w)?;
        let adj = cylinder_inner(&fu, &v)?;
        let k = ctx.rng.gen_range(1..=3);
        let r = [
            (lhs - rhs).norm(),
            (fu.norm()? - f.norm() * u.norm()?).abs(),
            (adj - cylinder_inner(&u, &contract_head(&f, &v)?)?).norm(),
            (adj - grid_inner(&f, &contract_tail(&u, &v)?)?).norm(),
            (contract_head(&f, &v)?.norm()? - f.norm() * v.norm()?).max(0.0),
            contraction_derivative_check(Direction::new(k)?, &f, &v)?,
        ];
        for (slot, x) in worst.iter_mut().zip(r) {
            *slot = max_of([*slot, x]);
        }
    }
    let names = [
        "<f (x) u, g (x) w> = <f, g><u, w>",
        "||f (x) u|| = ||f|| ||u||",
        "head contraction is adjoint to tensoring",
        "tail contraction is adjoint to tensoring",
        "||f <> v|| <= ||f|| ||v||",
        "contraction commutes with derivatives",
    ];
    for (name, r) in names.into_iter().zip(worst) {
        ctx.check(Check::residual(name, r, tol));
    }

    // disjoint tail supports make tensors orthogonal, exactly
    let f = band_limited(&mut ctx.rng, &gf, 6)?;
    let u = CylinderState::pure_tail(tail.clone());
    let moved = u.with_tail(tail.with_factor(1, Factor::bump(1.5, 1)?));
    let z = cylinder_inner(&tensor(&f, &u), &tensor(&f, &moved))?;
    ctx.check(Check::complex("tails on disjoint supports are orthogonal", z, Complex64::new(0.0, 0.0), 0.0));
    let unit = f.scale(c(1.0 / f.norm(), 0.0));
    let w = CylinderState::new(band_limited(&mut ctx.rng, &gw, 5)?, tail);
    let back = contract_head(&unit, &tensor(&unit, &w))?;
    ctx.check(Check::residual("unit f: f <> (f (x) w) = w", back.distance(&w)?, tol));
    Ok(())
}
