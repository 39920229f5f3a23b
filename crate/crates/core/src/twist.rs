//! Exact action of Penner twist words on intersection vectors.
//!
//! Twisting a curve `d` about `c` adds `i(d, c)` copies of `c`, so every
//! coordinate `e` grows by `i(c, e) · i(d, c)`. Under Penner's sign convention
//! these additions never cancel: the update is exact for Penner words and an
//! upper bound in general, so a zero coordinate certifies disjointness.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::configuration::{MulticurveConfiguration, TwistWord};
use crate::error::{Error, Result};

/// Coordinates with a strictly positive entry, in configuration order.
pub type Support = BTreeSet<usize>;

/// Names of the coordinates in `s`, in configuration order.
pub fn support_names(config: &MulticurveConfiguration, s: &Support) -> Vec<String> {
    s.iter().map(|&i| config.coordinate_name(i).to_string()).collect()
}

/// Intersection numbers of one curve with every configuration curve and
/// witness, indexed like [`MulticurveConfiguration::coordinate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionVector {
    entries: Vec<BigUint>,
}

impl IntersectionVector {
    pub fn zero(config: &MulticurveConfiguration) -> Self {
        Self {
            entries: vec![BigUint::zero(); config.num_coordinates()],
        }
    }

    /// The vector of configuration curve `name` itself.
    pub fn of_curve(config: &MulticurveConfiguration, name: &str) -> Result<Self> {
        let c = config.curve_index(name)?;
        Ok(Self::of_curve_index(config, c))
    }

    pub fn of_curve_index(config: &MulticurveConfiguration, curve: usize) -> Self {
        Self {
            entries: (0..config.num_coordinates())
                .map(|e| BigUint::from(config.intersection(curve, e)))
                .collect(),
        }
    }

    pub fn from_entries(config: &MulticurveConfiguration, entries: Vec<BigUint>) -> Result<Self> {
        if entries.len() != config.num_coordinates() {
            return Err(Error::Structure(format!(
                "vector has {} entries, configuration has {} coordinates",
                entries.len(),
                config.num_coordinates()
            )));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn get(&self, config: &MulticurveConfiguration, name: &str) -> Result<&BigUint> {
        config
            .coordinate(name)
            .map(|i| &self.entries[i])
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn support(&self) -> Support {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Entries restricted to configuration curves (witnesses dropped).
    pub fn curve_part(&self, config: &MulticurveConfiguration) -> &[BigUint] {
        &self.entries[..config.num_curves()]
    }

    fn twist(&mut self, letter: &Letter) {
        if self.entries[letter.curve].is_zero() {
            return;
        }
        let weight = self.entries[letter.curve].clone();
        for &(e, i) in &letter.neighbours {
            self.entries[e] += &weight * i;
        }
    }
}

/// Pretty form `name:value` per coordinate.
pub struct Labelled<'a>(pub &'a MulticurveConfiguration, pub &'a IntersectionVector);

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.1.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{x}", self.0.coordinate_name(i))?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Letter {
    curve: usize,
    /// Coordinates met by `curve`, with intersection numbers; never contains
    /// `curve` itself when the diagonal is zero.
    neighbours: Vec<(usize, u64)>,
}

/// A word resolved against a configuration, letters in application order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledWord {
    letters: Vec<Letter>,
    dim: usize,
}

impl CompiledWord {
    pub fn new(config: &MulticurveConfiguration, word: &TwistWord) -> Result<Self> {
        let letters = config
            .resolve(word)?
            .into_iter()
            .map(|curve| Letter {
                curve,
                neighbours: config.neighbours(curve).filter(|&(e, _)| e != curve).collect(),
            })
            .collect();
        Ok(Self {
            letters,
            dim: config.num_coordinates(),
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exact action on `v`.
    pub fn apply(&self, v: &mut IntersectionVector) {
        debug_assert_eq!(v.entries.len(), self.dim);
        for l in &self.letters {
            v.twist(l);
        }
    }

    /// Saturating action on a support set: a twist about a curve in the
    /// support adds every coordinate that curve meets.
    pub fn apply_support(&self, s: &mut Support) {
        for l in &self.letters {
            if s.contains(&l.curve) {
                s.extend(l.neighbours.iter().map(|&(e, _)| e));
            }
        }
    }

    /// Floating-point action restricted to the first `n` coordinates; used
    /// by power iteration, where only curve coordinates matter.
    pub fn apply_f64(&self, x: &mut [f64]) {
        let n = x.len();
        for l in &self.letters {
            let w = x[l.curve];
            if w == 0.0 {
                continue;
            }
            for &(e, i) in l.neighbours.iter().filter(|(e, _)| *e < n) {
                x[e] += w * i as f64;
            }
        }
    }
}

pub fn apply_twist(
    v: &IntersectionVector,
    c: &MulticurveConfiguration,
    curve: &str,
) -> Result<IntersectionVector> {
    apply_word(v, c, &TwistWord::new([curve]))
}

/// Applies `w` to `v`, rightmost letter first.
pub fn apply_word(
    v: &IntersectionVector,
    c: &MulticurveConfiguration,
    w: &TwistWord,
) -> Result<IntersectionVector> {
    if v.entries.len() != c.num_coordinates() {
        return Err(Error::Structure("vector does not match configuration".into()));
    }
    let word = CompiledWord::new(c, w)?;
    let mut out = v.clone();
    word.apply(&mut out);
    Ok(out)
}

pub fn support(v: &IntersectionVector) -> Support {
    v.support()
}

/// Supports of the seed support under `0..=iterations` applications of `w`,
/// computed over the Boolean semiring.
pub fn boolean_propagate(
    seed_support: &Support,
    c: &MulticurveConfiguration,
    w: &TwistWord,
    iterations: usize,
) -> Result<Vec<Support>> {
    if let Some(&bad) = seed_support.iter().find(|&&i| i >= c.num_coordinates()) {
        return Err(Error::Structure(format!("support coordinate {bad} out of range")));
    }
    let word = CompiledWord::new(c, w)?;
    let mut s = seed_support.clone();
    let mut out = Vec::with_capacity(iterations + 1);
    out.push(s.clone());
    for _ in 0..iterations {
        word.apply_support(&mut s);
        out.push(s.clone());
    }
    Ok(out)
}

/// Square nonnegative integer matrix indexed by configuration curves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionMatrix {
    rows: Vec<Vec<BigUint>>,
}

impl TransitionMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut rows = vec![vec![BigUint::zero(); dim]; dim];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = BigUint::one();
        }
        Self { rows }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Structure("matrix is not square".into()));
        }
        Ok(Self {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(BigUint::from).collect())
                .collect(),
        })
    }

    /// Matrix of a single twist: identity plus column `curve` holding
    /// `i(curve, e)` in row `e`.
    pub fn twist(c: &MulticurveConfiguration, curve: &str) -> Result<Self> {
        word_matrix(c, &TwistWord::new([curve]))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim();
        assert_eq!(n, other.dim(), "dimension mismatch");
        let mut rows = vec![vec![BigUint::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, out) in row.iter_mut().enumerate() {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        *out += a * b;
                    }
                }
            }
        }
        Self { rows }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Zero pattern: `true` where the entry is positive.
    pub fn pattern(&self) -> Vec<Vec<bool>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| !x.is_zero()).collect())
            .collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect())
            .collect()
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Product of the letters' twist matrices in application order, so that
/// `word_matrix(c, w) · v = apply_word(v, c, w)` on curve coordinates.
pub fn word_matrix(c: &MulticurveConfiguration, w: &TwistWord) -> Result<TransitionMatrix> {
    let word = CompiledWord::new(c, w)?;
    let n = c.num_curves();
    let mut m = TransitionMatrix::identity(n);
    // Left-multiplying by a twist matrix adds i(c, e) times row c to row e.
    for l in &word.letters {
        let src = m.rows[l.curve].clone();
        for &(e, i) in l.neighbours.iter().filter(|(e, _)| *e < n) {
            for (dst, x) in m.rows[e].iter_mut().zip(&src) {
                if !x.is_zero() {
                    *dst += x * i;
                }
            }
        }
    }
    Ok(m)
}
