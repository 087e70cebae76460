//! Check records, reports and data series.

use std::collections::BTreeMap;
use std::path::Path;

use cmcalc::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::params::Value;

/// One side of a check: a real number, a complex number as `[re, im]`, or a
/// closed interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Real(f64),
    Complex([f64; 2]),
    Range { min: f64, max: f64 },
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::Real(x)
    }
}

impl From<Complex64> for Quantity {
    fn from(z: Complex64) -> Self {
        Quantity::Complex([z.re, z.im])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn build(name: impl Into<String>, lhs: Quantity, rhs: Quantity, residual: f64, tolerance: f64) -> Self {
        // NaN residuals fail
        let pass = residual <= tolerance;
        Check { name: name.into(), lhs, rhs, residual, tolerance, pass }
    }

    /// `|lhs - rhs| <= tolerance` for real values.
    pub fn real(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::build(name, lhs.into(), rhs.into(), (lhs - rhs).abs(), tolerance)
    }

    /// `|lhs - rhs| <= tolerance` for complex values.
    pub fn complex(name: impl Into<String>, lhs: Complex64, rhs: Complex64, tolerance: f64) -> Self {
        Self::build(name, lhs.into(), rhs.into(), (lhs - rhs).norm(), tolerance)
    }

    /// A worst-case residual that should vanish.
    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self::real(name, residual, 0.0, tolerance)
    }

    /// `value <= bound + tolerance`; the residual is the excess.
    pub fn at_most(name: impl Into<String>, value: f64, bound: f64, tolerance: f64) -> Self {
        let excess = if value.is_nan() || bound.is_nan() { f64::NAN } else { (value - bound).max(0.0) };
        Self::build(name, value.into(), bound.into(), excess, tolerance)
    }

    /// `min <= value <= max`; the residual is the distance to the interval.
    pub fn within(name: impl Into<String>, value: f64, min: f64, max: f64) -> Self {
        let outside = if value.is_nan() { f64::NAN } else { (min - value).max(value - max).max(0.0) };
        Self::build(name, value.into(), Quantity::Range { min, max }, outside, 0.0)
    }

    /// A yes/no property, recorded as `1` against `1`.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        let lhs = if ok { 1.0 } else { 0.0 };
        Self::build(name, lhs.into(), 1.0.into(), 1.0 - lhs, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub timestamp: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(scenario: &str, seed: u64, parameters: BTreeMap<String, Value>, checks: Vec<Check>, error: Option<String>) -> Self {
        let pass = error.is_none() && !checks.is_empty() && checks.iter().all(|c| c.pass);
        Report {
            scenario: scenario.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            seed,
            parameters,
            checks,
            error,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// The report as JSON with the timestamp blanked, for determinism
    /// comparisons.
    pub fn body(&self) -> String {
        let mut copy = self.clone();
        copy.timestamp.clear();
        serde_json::to_string_pretty(&copy).expect("reports serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub x: f64,
    pub y: f64,
    pub series: String,
}

/// Writes `x,y,series` rows. An empty series is an error and nothing is
/// written.
pub fn write_series_csv(scenario: &str, points: &[SeriesPoint], path: &Path) -> Result<(), VerifyError> {
    if points.is_empty() {
        return Err(VerifyError::NoSeries(scenario.to_string()));
    }
    let mut w = csv::Writer::from_path(path)?;
    for p in points {
        w.serialize(p)?;
    }
    w.flush()?;
    Ok(())
}
