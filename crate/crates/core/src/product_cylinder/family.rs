//! The orthonormal family of pure-tail states indexed by binary addresses.

use super::cylinder::CylinderState;
use super::factor::Factor;
use super::profile::BUMP_DERIVATIVE_NORM_SQR;
use super::tail::{ScaleLaw, TailProduct, TailRule};
use crate::error::{Error, Result};

/// An infinite 0/1 sequence: explicit bits followed by a constant bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryAddress {
    pub prefix: Vec<bool>,
    pub eventual: bool,
}

impl BinaryAddress {
    pub fn new(prefix: Vec<bool>, eventual: bool) -> Self {
        Self { prefix, eventual }
    }

    /// Bit `n` (1-based).
    pub fn bit(&self, n: usize) -> bool {
        self.prefix.get(n - 1).copied().unwrap_or(self.eventual)
    }

    /// All `2^depth` addresses with the given prefix length and eventual 0,
    /// in binary counting order (first bit most significant).
    pub fn all(depth: usize) -> Vec<Self> {
        (0..1usize << depth)
            .map(|m| Self::new((0..depth).map(|k| (m >> (depth - 1 - k)) & 1 == 1).collect(), false))
            .collect()
    }
}

/// `u_τ = ∏_n (L_n⁻¹ f(x_n/L_n² - τ(n)))² dx_n` as a pure-tail state.
pub fn build_family(address: &BinaryAddress, law: ScaleLaw) -> Result<CylinderState> {
    if !law.inverse_fourth_summable() {
        return Err(Error::DivergentScaleRule(format!("Σ L_n^-4 diverges for {law:?}")));
    }
    let prefix = (1..=address.prefix.len())
        .map(|n| Factor::bump(law.scale(n), address.bit(n) as i64))
        .collect::<Result<Vec<_>>>()?;
    let tail = TailProduct::new(prefix, TailRule::Bump { law, offset: address.eventual as i64 })?;
    Ok(CylinderState::pure_tail(tail))
}

/// `‖∂u_τ/∂x_n‖² = ‖f′‖² / L_n⁴`.
pub fn family_derivative_norm_sqr(law: ScaleLaw, n: usize) -> f64 {
    BUMP_DERIVATIVE_NORM_SQR / law.scale(n).powi(4)
}
