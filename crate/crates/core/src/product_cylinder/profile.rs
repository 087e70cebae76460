//! The compactly supported bump profile used by tail factors and the
//! quadrature helpers that go with it.

use std::sync::OnceLock;

use gauss_quad::GaussLegendre;

/// `∫_0^1 exp(-2/(y(1-y))) dy`, the squared L² norm of the unnormalized bump.
pub const BUMP_MASS: f64 = 9.698_664_153_358_823e-5;

/// `‖f′‖²` for the normalized bump `f`.
pub const BUMP_DERIVATIVE_NORM_SQR: f64 = 22.574_716_483_809_81;

fn bump_constant() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| BUMP_MASS.sqrt().recip())
}

/// Normalized bump `f(y) = C exp(-1/(y(1-y)))` on `(0, 1)`, zero elsewhere.
pub fn bump(y: f64) -> f64 {
    if y <= 0.0 || y >= 1.0 {
        return 0.0;
    }
    bump_constant() * (-1.0 / (y * (1.0 - y))).exp()
}

/// `f′(y) = f(y) (1 - 2y) / (y(1-y))^2`.
pub fn bump_derivative(y: f64) -> f64 {
    if y <= 0.0 || y >= 1.0 {
        return 0.0;
    }
    let p = y * (1.0 - y);
    bump(y) * (1.0 - 2.0 * y) / (p * p)
}

const PANELS: usize = 48;
const NODES: usize = 16;

fn legendre() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        GaussLegendre::new(NODES)
            .expect("valid Gauss-Legendre degree")
            .as_node_weight_pairs()
            .to_vec()
    })
}

/// Composite Gauss–Legendre integral of a smooth integrand over `[a, b]`.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let h = (b - a) / PANELS as f64;
    let mut total = crate::sum::ExactSum::new();
    for p in 0..PANELS {
        let mid = a + (p as f64 + 0.5) * h;
        for &(x, w) in legendre() {
            total.add(0.5 * h * w * f(mid + 0.5 * h * x));
        }
    }
    total.value()
}
