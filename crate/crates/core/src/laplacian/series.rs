//! Tails of `Σ n^{-p}` with certified bounds.

use crate::error::{Error, Result};
use crate::sum::ExactSum;

/// `Σ_{n ≥ start} n^{-p}`: an Euler–Maclaurin estimate and integral-test
/// bounds `lower ≤ sum ≤ upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTailSum {
    pub estimate: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Sums `terms` terms directly, then closes the remainder analytically.
pub fn power_tail_sum(p: f64, start: usize, terms: usize) -> Result<PowerTailSum> {
    if p.is_nan() || p <= 1.0 {
        return Err(Error::NonSummable(format!("Σ n^-{p} diverges")));
    }
    if start == 0 {
        return Err(Error::NonSummable("series starts at n = 0".into()));
    }
    let mut partial = ExactSum::new();
    for n in start..start + terms {
        partial.add((n as f64).powf(-p));
    }
    let partial = partial.value();
    let m = (start + terms) as f64;
    let f = m.powf(-p);
    let integral = m.powf(1.0 - p) / (p - 1.0);
    // odd derivatives of f(x) = x^-p at m
    let d1 = -p * m.powf(-p - 1.0);
    let d3 = -p * (p + 1.0) * (p + 2.0) * m.powf(-p - 3.0);
    let d5 = -p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) * m.powf(-p - 5.0);
    let d7 = d5 * (p + 5.0) * (p + 6.0) / (m * m);
    let remainder = integral + 0.5 * f - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0 + d7 / 1_209_600.0;
    Ok(PowerTailSum {
        estimate: partial + remainder,
        lower: partial + integral,
        upper: partial + integral + f,
    })
}
