//! Scenarios on translations, their generators and tail derivatives.

use cmcalc::grid_spectral::{Grid, GridState};
use cmcalc::product_cylinder::profile::{BUMP_DERIVATIVE_NORM_SQR, BUMP_MASS};
use cmcalc::product_cylinder::{build_family, cylinder_inner, BinaryAddress, CylinderState, Factor, TailProduct};
use cmcalc::sqrt_calculus::{eta, inner};
use cmcalc::translation::{
    derivative, difference_quotient, strong_continuity_check, symmetry_check, translate, translate_atomic,
    Direction, ShiftVector,
};
use cmcalc::{Error, Result};
use rand::Rng;

use crate::params::{ParamDefault::*, ParamSpec, Params};
use crate::registry::Ctx;
use crate::report::Check;
use crate::sample::{atomic, band_limited, bump_tail, c, harmonic_law, head_only, max_of};

fn dir(k: usize) -> Result<Direction> {
    Direction::new(k)
}

/// Support width `L²` of the bump at tail position `p`.
fn tail_width(tail: &TailProduct, p: usize) -> Result<f64> {
    match tail.factor(p) {
        Factor::Bump(b) => Ok(b.width()),
        other => Err(Error::NotRepresentable(format!("tail position {p} is not a bump: {other:?}"))),
    }
}

pub const UNITARITY: &[ParamSpec] = &[
    ParamSpec { key: "trials", default: Int(100), doc: "random (u, v, a, b) draws per shift kind" },
    ParamSpec { key: "points", default: Int(32), doc: "grid points per head axis" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "admissible residual for spectral shifts" },
];

pub fn translation_unitarity(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let grid = Grid::cube(2, 6.0, p.usize("points"))?;
    let h = grid.axis(0).spacing();
    let tail = bump_tail(2.0)?;
    let widths = [tail_width(&tail, 1)?, tail_width(&tail, 2)?];
    let tol = p.f64("tolerance");
    let mut lattice = [0.0f64; 4];
    let mut spectral = [0.0f64; 4];
    let mut atomic_gap = 0.0f64;
    for _ in 0..p.usize("trials") {
        let u = CylinderState::new(band_limited(&mut ctx.rng, &grid, 6)?, tail.clone());
        let v = CylinderState::new(band_limited(&mut ctx.rng, &grid, 6)?, tail.clone());
        let uv = cylinder_inner(&u, &v)?;
        let mut draw = |spectral_head: bool| -> Result<ShiftVector> {
            let head = |rng: &mut rand_chacha::ChaCha8Rng| {
                if spectral_head {
                    rng.gen_range(-2.0..2.0)
                } else {
                    rng.gen_range(-40i64..40) as f64 * h
                }
            };
            let mut entries = vec![(1, head(&mut ctx.rng)), (2, head(&mut ctx.rng))];
            if !spectral_head {
                entries.push((3, ctx.rng.gen_range(-3i64..=3) as f64 * widths[0]));
                entries.push((4, ctx.rng.gen_range(-3i64..=3) as f64 * widths[1]));
            }
            ShiftVector::new(entries)
        };
        for (spectral_head, worst) in [(false, &mut lattice), (true, &mut spectral)] {
            let a = draw(spectral_head)?;
            let b = draw(spectral_head)?;
            let tu = translate(&a, &u)?;
            let tv = translate(&a, &v)?;
            let composed = translate(&b, &tu)?;
            let direct = translate(&a.add(&b), &u)?;
            let back = translate(&a.neg(), &tu)?;
            let r = [
                (tu.norm()? - u.norm()?).abs(),
                (cylinder_inner(&tu, &tv)? - uv).norm(),
                composed.distance(&direct)?,
                back.distance(&u)?,
            ];
            for (slot, x) in worst.iter_mut().zip(r) {
                *slot = max_of([*slot, x]);
            }
        }
        let x = atomic(&mut ctx.rng, 2, 5, 3)?;
        let y = atomic(&mut ctx.rng, 2, 5, 3)?;
        let s = [ctx.rng.gen_range(-4i64..=4) as f64, ctx.rng.gen_range(-4i64..=4) as f64];
        let moved = inner(&translate_atomic(&s, &x)?, &translate_atomic(&s, &y)?)?;
        atomic_gap = max_of([atomic_gap, (moved - inner(&x, &y)?).norm()]);
    }
    let names = ["norm preserved", "inner product preserved", "group law", "inverse"];
    for (name, r) in names.iter().zip(lattice) {
        ctx.check(Check::residual(format!("lattice shifts: {name}"), r, 0.0));
    }
    for (name, r) in names.iter().zip(spectral) {
        ctx.check(Check::residual(format!("spectral shifts: {name}"), r, tol));
    }
    ctx.check(Check::residual("atomic translations preserve inner products", atomic_gap, 0.0));
    Ok(())
}

pub const SYMMETRY: &[ParamSpec] = &[
    ParamSpec { key: "pairs", default: Int(200), doc: "random band-limited pairs per axis" },
    ParamSpec { key: "max_dimension", default: Int(2), doc: "head dimensions 1..=N are tested" },
    ParamSpec { key: "points", default: Int(256), doc: "grid points per axis" },
    ParamSpec { key: "kmax", default: Int(16), doc: "largest wavenumber in the random spectra" },
    ParamSpec { key: "tail_pairs", default: Int(20), doc: "pairs tested along tail coordinates" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "largest admissible |<i du, v> - <u, i dv>|" },
];

pub fn generator_symmetry(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let kmax = p.usize("kmax") as i64;
    for n in 1..=p.usize("max_dimension") {
        let grid = Grid::cube(n, 2.0 * std::f64::consts::PI, p.usize("points"))?;
        for k in 1..=n {
            let mut worst = 0.0f64;
            for _ in 0..p.usize("pairs") {
                let u = head_only(band_limited(&mut ctx.rng, &grid, kmax)?)?;
                let v = head_only(band_limited(&mut ctx.rng, &grid, kmax)?)?;
                let (lhs, rhs) = symmetry_check(dir(k)?, &u, &v)?;
                worst = max_of([worst, (lhs - rhs).norm()]);
            }
            ctx.check(Check::residual(format!("N = {n}, head axis {k}"), worst, tol));
        }
    }
    // tail coordinates: shared head, shifted tails
    let grid = Grid::cube(1, 4.0, 32)?;
    let tail = bump_tail(1.5)?;
    for k in [2, 3] {
        let mut worst = 0.0f64;
        for _ in 0..p.usize("tail_pairs") {
            let head = band_limited(&mut ctx.rng, &grid, 4)?;
            let u = CylinderState::new(head.clone(), tail.clone());
            let s = ctx.rng.gen_range(-0.3..0.3);
            let v = translate(&ShiftVector::along(dir(k)?, s)?, &u)?.scale(c(0.0, 1.0).powi(ctx.rng.gen_range(0..4)));
            let (lhs, rhs) = symmetry_check(dir(k)?, &u, &v)?;
            worst = max_of([worst, (lhs - rhs).norm()]);
        }
        ctx.check(Check::residual(format!("tail coordinate {k}"), worst, tol));
    }
    Ok(())
}

pub const DIFFERENCE_QUOTIENT: &[ParamSpec] = &[
    ParamSpec { key: "levels", default: Int(6), doc: "number of step halvings" },
    ParamSpec { key: "h0", default: Float(0.02), doc: "coarsest step" },
    ParamSpec { key: "wavenumber", default: Float(3.0), doc: "frequency of the head plane wave" },
    ParamSpec { key: "ratio_min", default: Float(0.45), doc: "smallest admissible residual ratio" },
    ParamSpec { key: "ratio_max", default: Float(0.55), doc: "largest admissible residual ratio" },
];

/// `‖D_h u + ∂u‖` for `h = h0 2^-j`, on a head coordinate, the explicit
/// tail factor and the first rule-generated factor.
pub fn difference_quotient_rate(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let grid = Grid::cube(1, 2.0 * std::f64::consts::PI, 64)?;
    let xi = p.f64("wavenumber");
    let head = GridState::from_fn(grid, |x| cmcalc::Complex64::from_polar(1.0, xi * x[0]));
    let u = CylinderState::new(head, bump_tail(1.0)?);
    for (k, label) in [(1, "head x1"), (2, "tail x2"), (3, "tail x3")] {
        let du = derivative(dir(k)?, &u)?;
        let mut residuals = Vec::new();
        for j in 0..=p.usize("levels") {
            let h = p.f64("h0") / f64::from(1u32 << j);
            let dq = difference_quotient(dir(k)?, h, &u)?;
            let r = cmcalc::product_cylinder::linear_combination(c(1.0, 0.0), &dq, c(1.0, 0.0), &du)?.norm()?;
            ctx.point(label, h, r);
            residuals.push((h, r));
        }
        for w in residuals.windows(2) {
            let ratio = w[1].1 / w[0].1;
            ctx.check(Check::within(format!("{label}: residual ratio at h = {:e}", w[1].0), ratio, p.f64("ratio_min"), p.f64("ratio_max")));
        }
    }
    Ok(())
}

pub const CONTINUITY: &[ParamSpec] = &[
    ParamSpec { key: "steps", default: Int(8), doc: "number of step halvings" },
    ParamSpec { key: "h0", default: Float(0.1), doc: "coarsest step" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "slack on the bound ||tau_h u - u|| <= h ||du||" },
];

pub fn strong_continuity(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let hs: Vec<f64> = (0..=p.usize("steps")).map(|j| p.f64("h0") / f64::from(1u32 << j)).collect();
    let grid = Grid::cube(1, 6.0, 64)?;
    let u = CylinderState::new(band_limited(&mut ctx.rng, &grid, 8)?, bump_tail(1.0)?);
    for (k, label) in [(1, "head"), (2, "tail")] {
        let slope = derivative(dir(k)?, &u)?.norm()?;
        let d = strong_continuity_check(dir(k)?, &u, &hs)?;
        let mut excess = 0.0f64;
        for (h, x) in hs.iter().zip(&d) {
            ctx.point(label, *h, *x);
            excess = max_of([excess, x - h * slope]);
        }
        ctx.check(Check::at_most(format!("{label}: ||tau_h u - u|| <= h ||du||"), excess, 0.0, tol));
        ctx.check(Check::holds(format!("{label}: distances shrink with h"), d.windows(2).all(|w| w[1] < w[0])));
    }
    // a whole-width tail shift moves the factor onto a disjoint support
    let jump = translate(&ShiftVector::along(dir(2)?, tail_width(u.tail(), 1)?)?, &u)?.distance(&u)?;
    ctx.check(Check::real("disjoint tail shift has distance sqrt(2)", jump, std::f64::consts::SQRT_2 * u.norm()?, tol));
    Ok(())
}

pub const TAIL_DERIVATIVE: &[ParamSpec] = &[
    ParamSpec { key: "depth", default: Int(6), doc: "explicit address bits of the family state" },
    ParamSpec { key: "coordinates", default: Int(8), doc: "tail coordinates differentiated" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "largest admissible residual" },
];

/// `C exp(-1/(y(1-y))) (1 - 2y) / (y(1-y))^2`, written out afresh.
fn profile_slope(y: f64) -> f64 {
    if y <= 0.0 || y >= 1.0 {
        return 0.0;
    }
    let q = y * (1.0 - y);
    (-1.0 / q).exp() * (1.0 - 2.0 * y) / (q * q * BUMP_MASS.sqrt())
}

pub fn tail_derivative(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let bits: Vec<bool> = (0..p.usize("depth")).map(|_| ctx.rng.gen()).collect();
    let u = build_family(&BinaryAddress::new(bits, false), harmonic_law())?;
    let coordinates = p.usize("coordinates");
    let (mut sample_gap, mut density_gap, mut norm_gap) = (0.0f64, 0.0f64, 0.0f64);
    let mut untouched = true;
    for n in 1..=coordinates {
        let Factor::Bump(b) = u.tail().factor(n) else {
            return Err(Error::NotRepresentable(format!("tail factor {n} is not a bump")));
        };
        let du = derivative(dir(n)?, &u)?;
        let Factor::Sampled(s) = du.tail().factor(n) else {
            return Err(Error::NotRepresentable(format!("derivative factor {n} is not sampled")));
        };
        let axis = *s.grid().axis(0);
        let l = b.scale;
        let w = axis.spacing();
        for (j, a) in s.amps().iter().enumerate() {
            let x = axis.coord(j);
            let y = (x - b.displacement) / (l * l) - b.offset as f64;
            let exact = profile_slope(y) / (l * l * l);
            sample_gap = max_of([sample_gap, (a - c(exact, 0.0)).norm()]);
            density_gap = max_of([density_gap, (eta(*a) * w - c(exact * exact.abs() * w, 0.0)).norm()]);
        }
        for m in (1..=coordinates + 2).filter(|m| *m != n) {
            untouched &= du.tail().factor(m) == u.tail().factor(m);
        }
        untouched &= du.head() == u.head();
        let expect = BUMP_DERIVATIVE_NORM_SQR / l.powi(4);
        norm_gap = max_of([norm_gap, (du.norm_sqr()? - expect).abs()]);
        ctx.point("derivative norm", n as f64, du.norm_sqr()?);
    }
    ctx.check(Check::residual("factor samples equal L^-3 f'(x/L^2 - tau)", sample_gap, tol));
    ctx.check(Check::residual("factor density equals f'|f'| dx", density_gap, tol));
    ctx.check(Check::holds("other factors and head untouched", untouched));
    ctx.check(Check::residual("||d_n u||^2 against ||f'||^2 / L_n^4", norm_gap, tol));
    Ok(())
}
