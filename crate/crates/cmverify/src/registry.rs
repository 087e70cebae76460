//! The scenario catalog and the runner.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::error::VerifyError;
use crate::params::{ParamSpec, Params};
use crate::report::{Check, Report, SeriesPoint};
use crate::scenarios;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Subject areas the catalog must cover, in reading order.
pub const AREAS: &[&str] = &[
    "square-root calculus",
    "Hilbert structure",
    "products of measures",
    "translations and derivatives",
    "Sobolev form and resolvent",
    "infinite products",
    "Laplacian on cylinder states",
    "heat and Schrodinger semigroups",
];

/// Mutable state handed to a scenario body.
pub struct Ctx {
    pub rng: ChaCha8Rng,
    checks: Vec<Check>,
    series: Vec<SeriesPoint>,
}

impl Ctx {
    fn new(seed: u64) -> Self {
        Ctx { rng: ChaCha8Rng::seed_from_u64(seed), checks: Vec::new(), series: Vec::new() }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn point(&mut self, series: &str, x: f64, y: f64) {
        self.series.push(SeriesPoint { x, y, series: series.to_string() });
    }
}

pub type Body = fn(&Params, &mut Ctx) -> cmcalc::Result<()>;

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    pub area: &'static str,
    pub params: &'static [ParamSpec],
    /// Whether the scenario records a data series for `emit`.
    pub series: bool,
    pub(crate) body: Body,
}

impl std::fmt::Debug for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scenario").field("id", &self.id).field("area", &self.area).finish()
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub series: Vec<SeriesPoint>,
}

pub fn registry() -> &'static [Scenario] {
    scenarios::ALL
}

pub fn find(id: &str) -> Result<&'static Scenario, VerifyError> {
    registry().iter().find(|s| s.id == id).ok_or_else(|| VerifyError::UnknownScenario(id.to_string()))
}

/// Runs one scenario. Configuration problems are errors; a failing check or
/// an error raised inside the scenario lands in the report.
pub fn run(scenario: &Scenario, config: &Config, seed: Option<u64>) -> Result<Outcome, VerifyError> {
    let params = Params::resolve(scenario.params, config.section(scenario.id), scenario.id)?;
    let seed = seed.or(config.seed).unwrap_or(DEFAULT_SEED);
    let mut ctx = Ctx::new(seed);
    let error = (scenario.body)(&params, &mut ctx).err().map(|e| e.to_string());
    let report = Report::new(scenario.id, seed, params.as_map().clone(), ctx.checks, error);
    Ok(Outcome { report, series: ctx.series })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_is_well_formed() {
        let all = registry();
        assert!(all.len() >= 12);
        let ids: HashSet<_> = all.iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), all.len());
        for s in all {
            assert!(find(s.id).is_ok());
            assert!(!s.description.is_empty());
            assert!(AREAS.contains(&s.area), "{}: {}", s.id, s.area);
            let keys: HashSet<_> = s.params.iter().map(|p| p.key).collect();
            assert_eq!(keys.len(), s.params.len(), "{}", s.id);
            assert!(s.params.iter().all(|p| !p.doc.is_empty()));
        }
        for area in AREAS {
            assert!(all.iter().any(|s| s.area == *area), "no scenario covers {area}");
        }
        assert!(matches!(find("nope"), Err(VerifyError::UnknownScenario(_))));
    }
}
