use num_complex::Complex64;

use super::series::{power_tail_sum, PowerTailSum};
use crate::error::{Error, Result};
use crate::product_cylinder::profile::BUMP_DERIVATIVE_NORM_SQR;
use crate::product_cylinder::{align, cylinder_inner, CylinderState, ScaleLaw, TailProduct, TailRule};
use crate::translation::{derivative, Direction};

/// Directly summed terms before the analytic remainder closes a rule tail.
const RULE_TERMS: usize = 64;

/// A state with its directional derivative norms: explicit values for the
/// head axes and the explicit tail factors, and a summed remainder for the
/// rule-generated factors.
#[derive(Debug, Clone)]
pub struct H1Profile {
    pub state: CylinderState,
    pub derivative_norms: Vec<f64>,
    pub rule_tail: PowerTailSum,
}

impl H1Profile {
    pub fn new(state: CylinderState) -> Result<Self> {
        let explicit = explicit_coordinates(&state, &state);
        let derivative_norms = (1..=explicit)
            .map(|k| derivative(Direction::new(k)?, &state)?.norm_sqr())
            .collect::<Result<Vec<_>>>()?;
        let base = state.norm_sqr()?;
        let rule_tail = rule_part(state.tail(), state.tail(), base, explicit - state.head_dimension())?;
        Ok(Self { state, derivative_norms, rule_tail })
    }

    /// `‖u‖² + Σ_k ‖∂_k u‖²`.
    pub fn norm_sqr(&self) -> Result<f64> {
        Ok(self.state.norm_sqr()? + self.derivative_norms.iter().sum::<f64>() + self.rule_tail.estimate)
    }

    /// Certified bounds on `Σ_k ‖∂_k u‖²`.
    pub fn derivative_sum_bounds(&self) -> (f64, f64) {
        let explicit: f64 = self.derivative_norms.iter().sum();
        (explicit + self.rule_tail.lower, explicit + self.rule_tail.upper)
    }
}

fn explicit_coordinates(u: &CylinderState, v: &CylinderState) -> usize {
    let p = u.tail().canonical().prefix().len().max(v.tail().canonical().prefix().len());
    u.head_dimension() + p
}

/// `base · ‖f′‖² Σ_{p > explicit} L_{p+skip}^{-4}` for identical bump rules.
fn rule_part(a: &TailProduct, b: &TailProduct, base: f64, explicit: usize) -> Result<PowerTailSum> {
    let zero = PowerTailSum { estimate: 0.0, lower: 0.0, upper: 0.0 };
    let (ra, rb) = (a.rule(), b.rule());
    if base == 0.0 {
        return Ok(zero);
    }
    match (ra, rb) {
        (TailRule::Flat { .. }, TailRule::Flat { .. }) => Ok(zero),
        (TailRule::Bump { law, .. }, _) if ra == rb && (a.skip() == b.skip() || matches!(law, ScaleLaw::Constant { .. })) => {
            match *law {
                ScaleLaw::Power { coefficient, exponent } if law.inverse_fourth_summable() => {
                    let start = explicit + 1 + a.skip();
                    let s = power_tail_sum(4.0 * exponent, start, RULE_TERMS)?;
                    let c = base * BUMP_DERIVATIVE_NORM_SQR / coefficient.powi(4);
                    Ok(PowerTailSum { estimate: c * s.estimate, lower: c * s.lower, upper: c * s.upper })
                }
                _ => Err(Error::NonSummable(format!("Σ L_n^-4 diverges for {law:?}"))),
            }
        }
        _ => Ok(zero),
    }
}

/// `⟨u, v⟩ + Σ_k ⟨i∂_k u, i∂_k v⟩`.
pub fn h1_inner(u: &H1Profile, v: &H1Profile) -> Result<Complex64> {
    h1_inner_states(&u.state, &v.state)
}

pub(crate) fn h1_inner_states(u: &CylinderState, v: &CylinderState) -> Result<Complex64> {
    let (a, b) = align(u, v)?;
    let base = cylinder_inner(&a, &b)?;
    let explicit = explicit_coordinates(&a, &b);
    let mut total = base;
    for k in 1..=explicit {
        let d = Direction::new(k)?;
        total += cylinder_inner(&derivative(d, &a)?, &derivative(d, &b)?)?;
    }
    if base != Complex64::new(0.0, 0.0) {
        // rule factors contribute base times the summed derivative overlaps
        let r = rule_part(a.tail(), b.tail(), 1.0, explicit - a.head_dimension())?;
        total += base * r.estimate;
    }
    Ok(total)
}
