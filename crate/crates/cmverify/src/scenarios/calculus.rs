//! Scenarios on atomic measures: the square-root calculus, the Hilbert
//! structure and products.

use cmcalc::product_cylinder::{inner_measure_factorization_residual, product, product_inner_factorization_check};
use cmcalc::sqrt_calculus::{add, eta, inner, refine, scale, zeta, AtomicState, BaseMeasure};
use cmcalc::Result;
use rand::Rng;

use crate::params::{ParamDefault::*, ParamSpec, Params};
use crate::registry::Ctx;
use crate::report::Check;
use crate::sample::{atomic, c, complex, max_of};

fn diff_norm(a: &AtomicState, b: &AtomicState) -> Result<f64> {
    Ok(add(a, &scale(c(-1.0, 0.0), b))?.norm())
}

pub const HILBERT: &[ParamSpec] = &[
    ParamSpec { key: "triples", default: Int(2000), doc: "random (a, b, c) triples" },
    ParamSpec { key: "dimension", default: Int(2), doc: "dimension of atom locations" },
    ParamSpec { key: "max_atoms", default: Int(6), doc: "atoms per state, at most" },
    ParamSpec { key: "lattice", default: Int(3), doc: "atoms sit on {-m..m}^d" },
    ParamSpec { key: "tolerance", default: Float(1e-10), doc: "largest admissible residual" },
];

pub fn hilbert_axioms(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let (d, atoms, m, tol) = (p.usize("dimension"), p.usize("max_atoms"), p.usize("lattice") as i64, p.f64("tolerance"));
    let mut worst = [0.0f64; 8];
    for _ in 0..p.usize("triples") {
        let a = atomic(&mut ctx.rng, d, atoms, m)?;
        let b = atomic(&mut ctx.rng, d, atoms, m)?;
        let w = atomic(&mut ctx.rng, d, atoms, m)?;
        let (al, be) = (complex(&mut ctx.rng, 1.0), complex(&mut ctx.rng, 1.0));
        let combo = add(&scale(al, &a), &scale(be, &b))?;
        let r = [
            (inner(&combo, &w)? - (al * inner(&a, &w)? + be * inner(&b, &w)?)).norm(),
            (inner(&w, &combo)? - (al.conj() * inner(&w, &a)? + be.conj() * inner(&w, &b)?)).norm(),
            (inner(&a, &b)? - inner(&b, &a)?.conj()).norm(),
            (inner(&a, &b)?.norm() - a.norm() * b.norm()).max(0.0),
            (add(&a, &b)?.norm_sqr() + diff_norm(&a, &b)?.powi(2) - 2.0 * a.norm_sqr() - 2.0 * b.norm_sqr()).abs(),
            (inner(&a, &a)?.re - a.norm_sqr()).abs() + inner(&a, &a)?.im.abs() + diff_norm(&a, &a)?,
            diff_norm(&add(&a, &b)?, &add(&b, &a)?)? + diff_norm(&add(&add(&a, &b)?, &w)?, &add(&a, &add(&b, &w)?)?)?,
            diff_norm(&scale(al, &add(&a, &b)?), &add(&scale(al, &a), &scale(al, &b))?)?,
        ];
        for (slot, x) in worst.iter_mut().zip(r) {
            *slot = max_of([*slot, x]);
        }
        if a.norm_sqr() <= 0.0 {
            ctx.check(Check::holds("nonzero state has positive norm", false));
        }
    }
    let names = [
        "linearity in the first slot",
        "conjugate linearity in the second slot",
        "conjugate symmetry",
        "Cauchy-Schwarz excess",
        "parallelogram law",
        "norm consistency and ||a - a|| = 0",
        "commutativity and associativity of addition",
        "distributivity of scalars",
    ];
    for (name, r) in names.into_iter().zip(worst) {
        ctx.check(Check::residual(name, r, tol));
    }
    Ok(())
}

pub const ETA_ZETA: &[ParamSpec] = &[
    ParamSpec { key: "samples", default: Int(1_000_000), doc: "random complex values per direction" },
    ParamSpec { key: "radius", default: Float(10.0), doc: "real and imaginary parts drawn from [-r, r)" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "largest admissible roundtrip error" },
];

pub fn eta_zeta_roundtrip(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let (r, tol) = (p.f64("radius"), p.f64("tolerance"));
    let (mut zz, mut ww, mut modulus) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..p.usize("samples") {
        let z = complex(&mut ctx.rng, r);
        let w = complex(&mut ctx.rng, r);
        zz = max_of([zz, (zeta(eta(z)) - z).norm()]);
        ww = max_of([ww, (eta(zeta(w)) - w).norm()]);
        modulus = max_of([modulus, (eta(z).norm() - z.norm_sqr()).abs() / z.norm_sqr().max(1.0)]);
    }
    ctx.check(Check::residual("max |zeta(eta(z)) - z|", zz, tol));
    ctx.check(Check::residual("max |eta(zeta(w)) - w|", ww, tol));
    ctx.check(Check::residual("max relative | |eta(z)| - |z|^2 |", modulus, tol));
    let zero = c(0.0, 0.0);
    ctx.check(Check::holds("eta(0) = zeta(0) = 0", eta(zero) == zero && zeta(zero) == zero));
    Ok(())
}

pub const REPRESENTATION: &[ParamSpec] = &[
    ParamSpec { key: "pairs", default: Int(500), doc: "random state pairs" },
    ParamSpec { key: "extra_atoms", default: Int(4), doc: "atoms added to the dominating base" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "largest admissible residual" },
];

/// A dominating base: the union of both supports plus extra points, all with
/// random weights.
fn dominating(ctx: &mut Ctx, a: &AtomicState, b: &AtomicState, extra: usize) -> Result<BaseMeasure> {
    let union = refine(a, b)?.base;
    let mut points: Vec<Vec<f64>> = union.points().map(|x| x.to_vec()).collect();
    while points.len() < union.len() + extra {
        let q: Vec<f64> = (0..a.dimension()).map(|_| ctx.rng.gen_range(-5..=5) as f64 + 0.5).collect();
        if !points.contains(&q) {
            points.push(q);
        }
    }
    let weights: Vec<f64> = points.iter().map(|_| ctx.rng.gen_range(0.05..3.0)).collect();
    BaseMeasure::new(a.dimension(), &points, &weights)
}

pub fn representation_independence(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let tol = p.f64("tolerance");
    let (mut inner_gap, mut measure_gap, mut zeta_gap) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..p.usize("pairs") {
        let a = atomic(&mut ctx.rng, 2, 5, 2)?;
        let b = atomic(&mut ctx.rng, 2, 5, 2)?;
        let base = dominating(ctx, &a, &b, p.usize("extra_atoms"))?;
        let (a2, b2) = (a.rebase(&base)?, b.rebase(&base)?);
        inner_gap = max_of([inner_gap, (inner(&a2, &b2)? - inner(&a, &b)?).norm()]);
        inner_gap = max_of([inner_gap, (a2.norm_sqr() - a.norm_sqr()).abs()]);
        measure_gap = max_of([measure_gap, diff_norm(&a2, &a)?, diff_norm(&b2, &b)?]);
        for (moved, orig) in [(&a2, &a), (&b2, &b)] {
            let v = moved.measure_values();
            for (i, x) in moved.base().points().enumerate() {
                measure_gap = max_of([measure_gap, (v[i] - orig.measure_at(x)).norm()]);
            }
        }
        let r = refine(&a, &b)?;
        for (i, f) in a.amps().iter().enumerate() {
            let via_zeta = zeta(eta(*f) * a.base().weight(i));
            zeta_gap = max_of([zeta_gap, (r.amps_a[i] - via_zeta).norm()]);
        }
    }
    ctx.check(Check::residual("inner product independent of the base", inner_gap, tol));
    ctx.check(Check::residual("represented measure independent of the base", measure_gap, tol));
    ctx.check(Check::residual("refined amplitude equals zeta(eta(f) w)", zeta_gap, tol));
    Ok(())
}

pub const CAUCHY: &[ParamSpec] = &[
    ParamSpec { key: "terms", default: Int(40), doc: "length of the explicit sequences" },
    ParamSpec { key: "ratio", default: Float(0.5), doc: "amplitude ratio r of the geometric sequence" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "largest admissible residual" },
];

/// `u_n = sum_{k<=n} r^k delta_k` is Cauchy with
/// `||u_n - u_m||^2 = sum_{k=m+1}^n r^{2k}`; `v_n`, one atom of weight
/// `1 + 2^-n`, converges to the unit atom with `||v_n - v|| = sqrt(1 + 2^-n) - 1`.
pub fn cauchy_completeness(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let (n, r, tol) = (p.usize("terms"), p.f64("ratio"), p.f64("tolerance"));
    let partial = |m: usize| {
        AtomicState::from_atoms(1, (1..=m).map(|k| (vec![k as f64], 1.0, c(r.powi(k as i32), 0.0))))
    };
    let last = partial(n)?;
    let (mut gap, mut limit_gap) = (0.0f64, 0.0f64);
    let r2 = r * r;
    for m in 1..n {
        let um = partial(m)?;
        let d = diff_norm(&last, &um)?;
        let exact = (r2.powi(m as i32 + 1) * (1.0 - r2.powi((n - m) as i32)) / (1.0 - r2)).sqrt();
        gap = max_of([gap, (d - exact).abs()]);
        let tail = r2.powi(m as i32 + 1) / (1.0 - r2);
        limit_gap = max_of([limit_gap, (um.norm_sqr() + tail - r2 / (1.0 - r2)).abs()]);
        ctx.point("geometric", m as f64, d);
    }
    ctx.check(Check::residual("||u_n - u_m|| against the geometric closed form", gap, tol));
    ctx.check(Check::residual("||u_m||^2 + tail mass against the limit norm", limit_gap, tol));

    let v = AtomicState::point_mass(vec![0.0], 1.0, c(1.0, 0.0))?;
    let mut weight_gap = 0.0f64;
    let mut prev = f64::INFINITY;
    let mut monotone = true;
    for k in 1..=n {
        let eps = 0.5f64.powi(k as i32);
        let vk = AtomicState::point_mass(vec![0.0], 1.0 + eps, c(1.0, 0.0))?;
        let d = diff_norm(&vk, &v)?;
        let exact = eps / ((1.0 + eps).sqrt() + 1.0);
        weight_gap = max_of([weight_gap, (d - exact).abs()]);
        monotone &= d < prev;
        prev = d;
        ctx.point("weight", k as f64, d);
    }
    ctx.check(Check::residual("||v_n - v|| against sqrt(1 + 2^-n) - 1", weight_gap, tol));
    ctx.check(Check::holds("distances to the limit decrease", monotone));
    Ok(())
}

pub const PRODUCT: &[ParamSpec] = &[
    ParamSpec { key: "quadruples", default: Int(500), doc: "random (u1, v1, u2, v2) quadruples" },
    ParamSpec { key: "max_atoms", default: Int(4), doc: "atoms per state, at most" },
    ParamSpec { key: "tolerance", default: Float(1e-12), doc: "largest admissible residual" },
];

pub fn product_factorization(p: &Params, ctx: &mut Ctx) -> Result<()> {
    let (k, tol) = (p.usize("max_atoms"), p.f64("tolerance"));
    let mut worst = [0.0f64; 4];
    for _ in 0..p.usize("quadruples") {
        let u1 = atomic(&mut ctx.rng, 1, k, 3)?;
        let v1 = atomic(&mut ctx.rng, 1, k, 3)?;
        let u2 = atomic(&mut ctx.rng, 2, k, 2)?;
        let v2 = atomic(&mut ctx.rng, 2, k, 2)?;
        let (lhs, rhs) = product_inner_factorization_check(&u1, &v1, &u2, &v2)?;
        let left = product(&product(&u1, &u2)?, &v1)?;
        let right = product(&u1, &product(&u2, &v1)?)?;
        let r = [
            (product(&u1, &u2)?.norm() - u1.norm() * u2.norm()).abs(),
            (lhs - rhs).norm(),
            inner_measure_factorization_residual(&u1, &v1, &u2, &v2)?,
            diff_norm(&left, &right)?,
        ];
        for (slot, x) in worst.iter_mut().zip(r) {
            *slot = max_of([*slot, x]);
        }
    }
    let names = [
        "||u1 u2|| = ||u1|| ||u2||",
        "<u1 u2, v1 v2> = <u1, v1><u2, v2>",
        "inner-product measures factor atomwise",
        "products associate",
    ];
    for (name, r) in names.into_iter().zip(worst) {
        ctx.check(Check::residual(name, r, tol));
    }
    Ok(())
}
