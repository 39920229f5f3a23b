//! Upper bounds `ℓ ≤ 2/j` from a witness curve.
//!
//! If the witness is disjoint from both the seed curve and its `j`-th image,
//! the two are at curve-graph distance at most 2, so `ℓ(f) ≤ 2/j`. A zero
//! witness coordinate is a true zero because twist updates never cancel.

use std::sync::OnceLock;

use serde::Serialize;

use crate::configuration::{validate_penner, FamilyInstance, MulticurveConfiguration};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::twist::{support_names, CompiledWord, IntersectionVector, Support};

pub const DEFAULT_MAX_J: usize = 1000;

/// A way of following the seed curve's support under repeated word
/// application.
pub trait Propagator: Send + Sync {
    fn name(&self) -> &'static str;

    /// Supports after `0, 1, ..` applications of `word` to the seed curve.
    /// Stops after `max` applications, or at the first iterate whose support
    /// contains `stop`, which is included.
    fn trace(
        &self,
        config: &MulticurveConfiguration,
        word: &CompiledWord,
        seed: usize,
        max: usize,
        stop: usize,
    ) -> Vec<Support>;
}

/// Saturating propagation over the Boolean semiring.
pub struct BooleanPropagation;

impl Propagator for BooleanPropagation {
    fn name(&self) -> &'static str {
        "boolean"
    }

    fn trace(
        &self,
        config: &MulticurveConfiguration,
        word: &CompiledWord,
        seed: usize,
        max: usize,
        stop: usize,
    ) -> Vec<Support> {
        let mut s = IntersectionVector::of_curve_index(config, seed).support();
        let mut out = vec![s.clone()];
        for _ in 0..max {
            if s.contains(&stop) {
                break;
            }
            word.apply_support(&mut s);
            out.push(s.clone());
        }
        out
    }
}

/// Arbitrary-precision intersection vectors.
pub struct ExactPropagation;

impl Propagator for ExactPropagation {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn trace(
        &self,
        config: &MulticurveConfiguration,
        word: &CompiledWord,
        seed: usize,
        max: usize,
        stop: usize,
    ) -> Vec<Support> {
        let mut v = IntersectionVector::of_curve_index(config, seed);
        let mut out = vec![v.support()];
        for _ in 0..max {
            if out.last().is_some_and(|s| s.contains(&stop)) {
                break;
            }
            word.apply(&mut v);
            out.push(v.support());
        }
        out
    }
}

pub struct PropagatorRegistry {
    entries: Vec<Box<dyn Propagator>>,
}

impl Default for PropagatorRegistry {
    fn default() -> Self {
        Self {
            entries: vec![Box::new(BooleanPropagation), Box::new(ExactPropagation)],
        }
    }
}

impl PropagatorRegistry {
    pub fn global() -> &'static PropagatorRegistry {
        static REGISTRY: OnceLock<PropagatorRegistry> = OnceLock::new();
        REGISTRY.get_or_init(PropagatorRegistry::default)
    }

    pub fn register(&mut self, p: Box<dyn Propagator>) {
        self.entries.retain(|e| e.name() != p.name());
        self.entries.push(p);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn Propagator> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                kind: "propagation mode",
                name: name.to_string(),
                known: self.names().join(", "),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBoundCertificate {
    pub instance: FamilyInstance,
    pub mode: &'static str,
    /// Largest verified number of word applications with the witness
    /// coordinate still zero.
    pub j: usize,
    pub max_j: usize,
    /// Application count at which the witness was first met, if within
    /// `max_j + 1`.
    pub witness_hit: Option<usize>,
    pub bound: Rational,
    /// Supports of iterates `0..=j`, plus the hitting iterate when known.
    pub trace: Vec<Support>,
}

impl UpperBoundCertificate {
    pub fn trace_names(&self) -> Vec<Vec<String>> {
        self.trace
            .iter()
            .map(|s| support_names(&self.instance.config, s))
            .collect()
    }
}

/// JSON view: `{j, bound, trace}` plus identifying fields.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub kind: &'static str,
    pub mode: &'static str,
    pub seed: String,
    pub witness: String,
    pub j: usize,
    #[serde(with = "rational")]
    pub bound: Rational,
    pub witness_hit: Option<usize>,
    pub trace: Vec<Vec<String>>,
}

impl From<&UpperBoundCertificate> for CertificateJson {
    fn from(c: &UpperBoundCertificate) -> Self {
        Self {
            kind: "upper",
            mode: c.mode,
            seed: c.instance.seed.clone(),
            witness: c.instance.witness.clone(),
            j: c.j,
            bound: c.bound.clone(),
            witness_hit: c.witness_hit,
            trace: c.trace_names(),
        }
    }
}

/// Certifies `ℓ ≤ 2/j` for the instance's word, with `j <= max_j`.
pub fn certify_upper(
    inst: &FamilyInstance,
    max_j: usize,
    propagator: &dyn Propagator,
) -> Result<UpperBoundCertificate> {
    let config = &inst.config;
    validate_penner(config, &inst.word)?.into_result()?;
    let seed = config.curve_index(&inst.seed)?;
    let witness = config.witness_index(&inst.witness)?;
    if config.intersection(seed, witness) != 0 {
        return Err(Error::Precondition(format!(
            "seed `{}` meets witness `{}`",
            inst.seed, inst.witness
        )));
    }
    let word = CompiledWord::new(config, &inst.word)?;
    // One application past max_j tells whether j was capped.
    let trace = propagator.trace(config, &word, seed, max_j + 1, witness);

    #[cfg(debug_assertions)]
    if propagator.name() != ExactPropagation.name() {
        let exact = ExactPropagation.trace(config, &word, seed, max_j + 1, witness);
        debug_assert_eq!(trace, exact, "propagation disagrees with exact arithmetic");
    }

    let witness_hit = trace.iter().position(|s| s.contains(&witness));
    let j = match witness_hit {
        Some(t) => t - 1,
        None => max_j,
    };
    if j == 0 {
        return Err(Error::EmptyCertificate(format!(
            "witness `{}` hit immediately by f({})",
            inst.witness, inst.seed
        )));
    }
    let mut trace = trace;
    trace.truncate(witness_hit.map_or(j + 1, |t| t + 1));
    Ok(UpperBoundCertificate {
        instance: inst.clone(),
        mode: propagator.name(),
        j,
        max_j,
        witness_hit,
        bound: rational::ratio(2, j as i64),
        trace,
    })
}

/// Certificate for `f^m`, with `j' = ⌊j/m⌋` re-verified by propagating the
/// `m`-fold word.
pub fn power_certificate(
    cert: &UpperBoundCertificate,
    m: usize,
    propagator: &dyn Propagator,
) -> Result<UpperBoundCertificate> {
    if m < 1 {
        return Err(Error::Precondition(format!("need m >= 1, got m = {m}")));
    }
    let expected = cert.j / m;
    if expected == 0 {
        return Err(Error::EmptyCertificate(format!(
            "⌊{}/{m}⌋ = 0 applications of the power",
            cert.j
        )));
    }
    let mut inst = cert.instance.clone();
    inst.word = inst.word.power(m);
    inst.claim = None;
    // When the original witness hit is known, look one step further so the
    // power's own hit is re-checked too.
    let max_j = if cert.witness_hit.is_some() {
        expected + 1
    } else {
        expected
    };
    let mut out = certify_upper(&inst, max_j, propagator)?;
    if out.j != expected {
        return Err(Error::Precondition(format!(
            "re-verification of f^{m} found j = {}, expected {expected}",
            out.j
        )));
    }
    out.max_j = expected;
    Ok(out)
}
