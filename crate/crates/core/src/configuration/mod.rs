//! Multicurve configurations, twist words and Penner-validity checking.

mod family;
mod file;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surface::Surface;

pub use family::{purebraid_family, torelli_family};
pub use file::{ConfigFile, CurveEntry, WitnessEntry};

/// Which multicurve a curve belongs to. Class A curves are twisted
/// positively and class B curves negatively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveClass {
    A,
    B,
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveClass::A => "A",
            CurveClass::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub class: CurveClass,
    pub separating: bool,
}

impl Curve {
    pub fn new(name: impl Into<String>, class: CurveClass, separating: bool) -> Self {
        Self {
            name: name.into(),
            class,
            separating,
        }
    }
}

/// A test curve that is never twisted; only its intersections with the
/// configuration curves are recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub intersections: Vec<u64>,
}

/// Curves of both classes with their geometric intersection matrix, plus
/// witness curves.
///
/// Coordinates are numbered curves first, then witnesses; intersection
/// vectors in [`crate::twist`] use the same numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticurveConfiguration {
    surface: Surface,
    curves: Vec<Curve>,
    intersections: Vec<Vec<u64>>,
    witnesses: Vec<Witness>,
    index: HashMap<String, usize>,
}

impl MulticurveConfiguration {
    /// Checks dimensions and name uniqueness only. Symmetry, class
    /// disjointness and the rest are reported by [`validate_penner`].
    pub fn new(
        surface: Surface,
        curves: Vec<Curve>,
        intersections: Vec<Vec<u64>>,
        witnesses: Vec<Witness>,
    ) -> Result<Self> {
        let n = curves.len();
        if n == 0 {
            return Err(Error::Structure("configuration has no curves".into()));
        }
        if intersections.len() != n {
            return Err(Error::Structure(format!(
                "intersection matrix has {} rows for {n} curves",
                intersections.len()
            )));
        }
        for (i, row) in intersections.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structure(format!(
                    "intersection row {i} (`{}`) has {} entries, expected {n}",
                    curves[i].name,
                    row.len()
                )));
            }
        }
        for w in &witnesses {
            if w.intersections.len() != n {
                return Err(Error::Structure(format!(
                    "witness `{}` has {} intersections, expected {n}",
                    w.name,
                    w.intersections.len()
                )));
            }
        }
        let mut index = HashMap::with_capacity(n + witnesses.len());
        let names = curves
            .iter()
            .map(|c| &c.name)
            .chain(witnesses.iter().map(|w| &w.name));
        for (i, name) in names.enumerate() {
            if name.is_empty() {
                return Err(Error::Structure("empty curve name".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Structure(format!("duplicate name `{name}`")));
            }
        }
        Ok(Self {
            surface,
            curves,
            intersections,
            witnesses,
            index,
        })
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn intersections(&self) -> &[Vec<u64>] {
        &self.intersections
    }

    pub fn num_curves(&self) -> usize {
        self.curves.len()
    }

    /// Curves plus witnesses.
    pub fn num_coordinates(&self) -> usize {
        self.curves.len() + self.witnesses.len()
    }

    pub fn coordinate(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn coordinate_name(&self, coord: usize) -> &str {
        match self.curves.get(coord) {
            Some(c) => &c.name,
            None => &self.witnesses[coord - self.curves.len()].name,
        }
    }

    /// Index of a configuration curve; witnesses and unknown names are errors.
    pub fn curve_index(&self, name: &str) -> Result<usize> {
        match self.coordinate(name) {
            Some(i) if i < self.curves.len() => Ok(i),
            Some(_) => Err(Error::Structure(format!(
                "`{name}` is a witness and cannot be twisted"
            ))),
            None => Err(Error::UnknownCurve(name.to_string())),
        }
    }

    pub fn witness_index(&self, name: &str) -> Result<usize> {
        match self.coordinate(name) {
            Some(i) if i >= self.curves.len() => Ok(i),
            Some(_) => Err(Error::Structure(format!(
                "`{name}` is a configuration curve, not a witness"
            ))),
            None => Err(Error::UnknownCurve(name.to_string())),
        }
    }

    /// Geometric intersection of curve `curve` with coordinate `coord`.
    pub fn intersection(&self, curve: usize, coord: usize) -> u64 {
        let n = self.curves.len();
        if coord < n {
            self.intersections[curve][coord]
        } else {
            self.witnesses[coord - n].intersections[curve]
        }
    }

    /// Coordinates (curves and witnesses) met by `curve`, with multiplicity.
    pub fn neighbours(&self, curve: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        (0..self.num_coordinates())
            .map(move |e| (e, self.intersection(curve, e)))
            .filter(|&(_, i)| i > 0)
    }

    /// Resolves a word to curve indices in application order (rightmost first).
    pub fn resolve(&self, word: &TwistWord) -> Result<Vec<usize>> {
        word.application_order()
            .map(|name| self.curve_index(name))
            .collect()
    }
}

/// A product of twists, written left to right and applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistWord {
    pub letters: Vec<String>,
}

impl TwistWord {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Self {
        Self {
            letters: letters.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn application_order(&self) -> impl Iterator<Item = &str> {
        self.letters.iter().rev().map(String::as_str)
    }

    /// `self` composed with itself `m` times.
    pub fn power(&self, m: usize) -> Self {
        Self {
            letters: std::iter::repeat_n(&self.letters, m).flatten().cloned().collect(),
        }
    }

    /// `self` followed by `other`: `other` acts first.
    pub fn compose(&self, other: &TwistWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self { letters }
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters.join(" "))
    }
}

/// What a generated family predicts for its own certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub family: &'static str,
    pub parameter: u32,
    pub j: u64,
    pub bound: Rational,
}

/// A configuration with a word, a seed curve and a witness disjoint from the
/// seed: the input of an upper-bound certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub config: MulticurveConfiguration,
    pub word: TwistWord,
    pub seed: String,
    pub witness: String,
    pub claim: Option<Claim>,
}

impl FamilyInstance {
    pub fn new(
        config: MulticurveConfiguration,
        word: TwistWord,
        seed: impl Into<String>,
        witness: impl Into<String>,
    ) -> Result<Self> {
        let inst = Self {
            config,
            word,
            seed: seed.into(),
            witness: witness.into(),
            claim: None,
        };
        inst.config.resolve(&inst.word)?;
        let seed = inst.config.curve_index(&inst.seed)?;
        let witness = inst.config.witness_index(&inst.witness)?;
        if inst.config.intersection(seed, witness) != 0 {
            return Err(Error::Precondition(format!(
                "seed `{}` meets witness `{}`",
                inst.seed, inst.witness
            )));
        }
        Ok(inst)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    ZeroDiagonal,
    Symmetry,
    ClassDisjointness,
    Connectivity,
    PennerCompleteness,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::ZeroDiagonal => "zero-diagonal",
            CheckKind::Symmetry => "symmetry",
            CheckKind::ClassDisjointness => "class-disjointness",
            CheckKind::Connectivity => "connectivity",
            CheckKind::PennerCompleteness => "penner-completeness",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// Filling of `A ∪ B` is not checkable from intersection numbers alone;
    /// connectivity is the necessary condition that is checked.
    pub filling_assumed: bool,
    /// Set when every check passes: Penner's theorem then makes the word
    /// pseudo-Anosov.
    pub pseudo_anosov: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&Check> {
        self.checks.iter().find(|c| c.kind == kind)
    }

    /// `Ok(())` when every check passes, otherwise a validation error that
    /// names the failed checks.
    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            return Ok(());
        }
        let msg = self
            .failures()
            .map(|c| match &c.detail {
                Some(d) => format!("{} ({d})", c.kind),
                None => c.kind.to_string(),
            })
            .collect::<Vec<_>>()
            .join("; ");
        Err(Error::Validation(msg))
    }
}

fn check(kind: CheckKind, failure: Option<String>) -> Check {
    Check {
        kind,
        passed: failure.is_none(),
        detail: failure,
    }
}

/// Checks that `(c, w)` is an instance of Penner's construction as far as
/// intersection data can tell. Unknown letters are a structural error, not a
/// failed check.
pub fn validate_penner(c: &MulticurveConfiguration, w: &TwistWord) -> Result<ValidationReport> {
    let letters = c.resolve(w)?;
    let n = c.num_curves();
    let m = c.intersections();

    let diag = (0..n)
        .find(|&i| m[i][i] != 0)
        .map(|i| format!("i({0}, {0}) = {1}", c.curves[i].name, m[i][i]));

    let pairs = || (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));

    let asym = pairs().find(|&(i, j)| m[i][j] != m[j][i]).map(|(i, j)| {
        format!(
            "i({}, {}) = {} but i({}, {}) = {}",
            c.curves[i].name, c.curves[j].name, m[i][j], c.curves[j].name, c.curves[i].name, m[j][i]
        )
    });

    let same_class = pairs()
        .find(|&(i, j)| {
            c.curves[i].class == c.curves[j].class && (m[i][j] != 0 || m[j][i] != 0)
        })
        .map(|(i, j)| {
            format!(
                "{} and {} are both class {} but intersect",
                c.curves[i].name, c.curves[j].name, c.curves[i].class
            )
        });

    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && (m[i][j] > 0 || m[j][i] > 0) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    let disconnected = seen.iter().position(|s| !s).map(|i| {
        format!(
            "{} is not connected to {} through intersecting curves",
            c.curves[i].name, c.curves[0].name
        )
    });

    let mut twisted = vec![false; n];
    for &l in &letters {
        twisted[l] = true;
    }
    let missing: Vec<&str> = (0..n)
        .filter(|&i| !twisted[i])
        .map(|i| c.curves[i].name.as_str())
        .collect();
    let incomplete = (!missing.is_empty()).then(|| format!("never twisted: {}", missing.join(", ")));

    let checks = vec![
        check(CheckKind::ZeroDiagonal, diag),
        check(CheckKind::Symmetry, asym),
        check(CheckKind::ClassDisjointness, same_class),
        check(CheckKind::Connectivity, disconnected),
        check(CheckKind::PennerCompleteness, incomplete),
    ];
    let pseudo_anosov = checks.iter().all(|c| c.passed);
    Ok(ValidationReport {
        checks,
        filling_assumed: true,
        pseudo_anosov,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorelliCheck {
    pub is_torelli: bool,
    pub reason: String,
}

/// Whether the instance's word lies in the Torelli group (closed surfaces) or
/// the pure braid group (punctured disks).
pub fn is_torelli(inst: &FamilyInstance) -> Result<TorelliCheck> {
    validate_penner(&inst.config, &inst.word)?.into_result()?;
    let s = inst.config.surface();
    if s.genus == 0 && s.boundary == 1 {
        return Ok(TorelliCheck {
            is_torelli: true,
            reason: "twists fix punctures pointwise".into(),
        });
    }
    let c = &inst.config;
    let offender = inst
        .word
        .application_order()
        .map(|l| &c.curves()[c.curve_index(l).expect("resolved above")])
        .find(|curve| !curve.separating);
    Ok(match offender {
        Some(curve) => TorelliCheck {
            is_torelli: false,
            reason: format!("{} is non-separating", curve.name),
        },
        None => TorelliCheck {
            is_torelli: true,
            reason: "every twisted curve is separating".into(),
        },
    })
}
