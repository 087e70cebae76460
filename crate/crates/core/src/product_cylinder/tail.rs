//! Infinite product tails: a finite explicit prefix followed by factors
//! generated from an eventually constant rule.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::factor::{factor_inner, BumpFactor, Factor};
use crate::error::{Error, Result};

/// Version tag of the JSON form of a [`TailProduct`].
pub const TAIL_FORMAT: &str = "cm-tail/1";

/// Scale `L_n` of the `n`-th rule factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum ScaleLaw {
    /// `L_n = coefficient * n^exponent`.
    Power { coefficient: f64, exponent: f64 },
    /// `L_n = scale` for every `n`.
    Constant { scale: f64 },
}

impl ScaleLaw {
    pub fn scale(&self, n: usize) -> f64 {
        match *self {
            Self::Power { coefficient, exponent } => coefficient * (n as f64).powf(exponent),
            Self::Constant { scale } => scale,
        }
    }

    /// Whether `Σ_n L_n^{-4}` converges.
    pub fn inverse_fourth_summable(&self) -> bool {
        match *self {
            Self::Power { exponent, .. } => 4.0 * exponent > 1.0,
            Self::Constant { .. } => false,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Power { coefficient, exponent } => {
                coefficient > 0.0 && coefficient.is_finite() && exponent.is_finite() && exponent >= 0.0
            }
            Self::Constant { scale } => scale > 0.0 && scale.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMeasure(format!("invalid scale law {self:?}")))
        }
    }
}

/// Generator of the factors past the explicit prefix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "profile", rename_all = "kebab-case")]
pub enum TailRule {
    /// Bumps with scale `law(n)` and a fixed offset.
    Bump { law: ScaleLaw, offset: i64 },
    /// Flat factors of a fixed period.
    Flat { period: f64 },
}

impl TailRule {
    /// Factor with rule index `n` (1-based).
    pub fn factor(&self, n: usize) -> Factor {
        match *self {
            Self::Bump { law, offset } => {
                Factor::Bump(BumpFactor { scale: law.scale(n), offset, displacement: 0.0 })
            }
            Self::Flat { period } => Factor::Flat { period },
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Self::Bump { law, .. } => law.validate(),
            Self::Flat { period } => Factor::flat(*period).map(|_| ()),
        }
    }

    /// Whether factors at rule indices `n` and `m` always coincide.
    fn shift_invariant(&self) -> bool {
        matches!(self, Self::Flat { .. } | Self::Bump { law: ScaleLaw::Constant { .. }, .. })
    }
}

/// Accumulated semigroup times applied symbolically to a tail.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Evolution {
    pub heat: f64,
    pub schrodinger: f64,
}

impl Evolution {
    pub fn is_identity(&self) -> bool {
        self.heat == 0.0 && self.schrodinger == 0.0
    }
}

/// `∏_n f_n(x_n)^2 dx_n`: factor `p` (1-based) is `prefix[p-1]` when it
/// exists and otherwise `rule.factor(p + skip)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailProduct {
    prefix: Vec<Factor>,
    rule: TailRule,
    #[serde(default)]
    skip: usize,
    #[serde(default)]
    evolution: Evolution,
}

/// Result of pairing two tails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailOverlap {
    Exact(Complex64),
    /// `‖e^{Δt} T‖²` for a tail `T`: a positive scalar with no closed form.
    HeatContracted { time: f64 },
}

impl TailProduct {
    pub fn new(prefix: Vec<Factor>, rule: TailRule) -> Result<Self> {
        let t = Self { prefix, rule, skip: 0, evolution: Evolution::default() };
        t.validate()?;
        Ok(t)
    }

    /// All factors flat with the given period.
    pub fn flat(period: f64) -> Result<Self> {
        Self::new(Vec::new(), TailRule::Flat { period })
    }

    fn validate(&self) -> Result<()> {
        self.rule.validate()?;
        for f in &self.prefix {
            match f {
                Factor::Bump(b) => {
                    BumpFactor::new(b.scale, b.offset)?;
                    if !b.displacement.is_finite() {
                        return Err(Error::InvalidMeasure("non-finite displacement".into()));
                    }
                }
                Factor::Flat { period } => {
                    Factor::flat(*period)?;
                }
                Factor::Sampled(s) => {
                    if s.dimension() != 1 {
                        return Err(Error::InvalidMeasure("sampled tail factor must be one-dimensional".into()));
                    }
                }
            }
        }
        if !(self.evolution.heat >= 0.0 && self.evolution.heat.is_finite() && self.evolution.schrodinger.is_finite()) {
            return Err(Error::InvalidMeasure("invalid evolution times".into()));
        }
        Ok(())
    }

    pub fn prefix(&self) -> &[Factor] {
        &self.prefix
    }

    pub fn rule(&self) -> &TailRule {
        &self.rule
    }

    /// Rule index of the first tail position minus one.
    pub fn skip(&self) -> usize {
        self.skip
    }

    pub fn evolution(&self) -> Evolution {
        self.evolution
    }

    pub(crate) fn with_evolution(&self, evolution: Evolution) -> Self {
        Self { evolution, ..self.clone() }
    }

    /// Factor at tail position `p` (1-based).
    pub fn factor(&self, p: usize) -> Factor {
        assert!(p >= 1, "tail positions start at 1");
        match self.prefix.get(p - 1) {
            Some(f) => f.clone(),
            None => self.rule.factor(p + self.skip),
        }
    }

    /// Whether every factor is flat, so translations, derivatives and
    /// semigroups act trivially on the tail.
    pub fn is_flat(&self) -> bool {
        matches!(self.rule, TailRule::Flat { .. }) && self.prefix.iter().all(Factor::is_flat)
    }

    /// Same tail with at least `p` explicit factors.
    pub fn materialized(&self, p: usize) -> Self {
        let mut t = self.clone();
        while t.prefix.len() < p {
            let f = t.factor(t.prefix.len() + 1);
            t.prefix.push(f);
        }
        t
    }

    /// Drops trailing prefix factors that the rule would generate anyway.
    pub fn canonical(&self) -> Self {
        let mut t = self.clone();
        while let Some(last) = t.prefix.last() {
            if *last == t.rule.factor(t.prefix.len() + t.skip) {
                t.prefix.pop();
            } else {
                break;
            }
        }
        t
    }

    /// Whether both describe the same product.
    pub fn same_as(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Replaces the factor at position `p`.
    pub fn with_factor(&self, p: usize, f: Factor) -> Self {
        let mut t = self.materialized(p);
        t.prefix[p - 1] = f;
        t.canonical()
    }

    /// Splits off the first factor.
    pub fn pop_front(&self) -> (Factor, Self) {
        let first = self.factor(1);
        let mut t = self.clone();
        if !t.prefix.is_empty() {
            t.prefix.remove(0);
        }
        t.skip += 1;
        (first, t)
    }

    /// Position of the single factor in which the tails differ, if they
    /// differ in exactly one explicit factor and agree everywhere else.
    pub(crate) fn single_difference(&self, other: &Self) -> Option<usize> {
        if self.evolution != other.evolution || self.rule != other.rule || self.skip != other.skip {
            return None;
        }
        let n = self.prefix.len().max(other.prefix.len());
        let mut diff = None;
        for p in 1..=n {
            if self.factor(p) != other.factor(p) {
                if diff.is_some() {
                    return None;
                }
                diff = Some(p);
            }
        }
        diff
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Doc<'a> {
            format: &'static str,
            #[serde(flatten)]
            tail: &'a TailProduct,
        }
        Ok(serde_json::to_string_pretty(&Doc { format: TAIL_FORMAT, tail: self })?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            format: String,
            #[serde(flatten)]
            tail: TailProduct,
        }
        let doc: Doc = serde_json::from_str(s)?;
        if doc.format != TAIL_FORMAT {
            return Err(Error::Parse(format!("unsupported tail format {:?}", doc.format)));
        }
        doc.tail.validate()?;
        Ok(doc.tail)
    }
}

/// `∏_n ⟨a_n, b_n⟩`, evaluated exactly through the rule structure.
pub fn tail_inner(a: &TailProduct, b: &TailProduct) -> Result<TailOverlap> {
    let a = a.canonical();
    let b = b.canonical();
    let flat = a.is_flat() && b.is_flat();
    if !flat {
        if a.evolution != b.evolution {
            return Err(Error::IncomparableTails("tails evolved for different times".into()));
        }
        if a.evolution.heat > 0.0 {
            return if a == b {
                Ok(TailOverlap::HeatContracted { time: a.evolution.heat })
            } else {
                Err(Error::IncomparableTails("distinct heat-evolved tails".into()))
            };
        }
    }
    let zero = Complex64::new(0.0, 0.0);
    let n = a.prefix.len().max(b.prefix.len());
    let mut product = Complex64::new(1.0, 0.0);
    for p in 1..=n {
        let r = factor_inner(&a.factor(p), &b.factor(p))?;
        if r == zero {
            return Ok(TailOverlap::Exact(zero));
        }
        product *= r;
    }
    let same_rule =
        a.rule == b.rule && (a.skip == b.skip || a.rule.shift_invariant());
    if same_rule {
        return Ok(TailOverlap::Exact(product));
    }
    let r = factor_inner(&a.factor(n + 1), &b.factor(n + 1))?;
    if r == zero {
        return Ok(TailOverlap::Exact(zero));
    }
    if a.rule.shift_invariant() && b.rule.shift_invariant() {
        if r.norm() < 1.0 {
            return Ok(TailOverlap::Exact(zero));
        }
        if r == Complex64::new(1.0, 0.0) {
            return Ok(TailOverlap::Exact(product));
        }
    }
    Err(Error::IncomparableTails(format!("no decidable relation between rules {:?} and {:?}", a.rule, b.rule)))
}
