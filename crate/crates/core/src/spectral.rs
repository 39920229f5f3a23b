//! Perron–Frobenius analysis of word matrices.

use serde::Serialize;

use crate::configuration::{MulticurveConfiguration, TwistWord};
use crate::error::{Error, Result};
use crate::twist::{word_matrix, CompiledWord, TransitionMatrix};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITERS: usize = 1_000_000;

/// Default cap for exponent searches: four times the dimension.
pub fn default_cap(dim: usize) -> usize {
    4 * dim.max(1)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub dilatation: f64,
    /// `‖Mx − λx‖∞ / ‖x‖∞` at the returned eigenvector estimate.
    pub residual: f64,
    pub iterations: usize,
    pub primitivity_exponent: Option<usize>,
    pub diagonal_exponent: Option<usize>,
}

/// Square Boolean matrix with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BoolMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    fn from_pattern(p: &[Vec<bool>]) -> Self {
        let n = p.len();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for (i, row) in p.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Self { n, words, bits }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    fn mul(&self, other: &Self) -> Self {
        let mut bits = vec![0u64; self.bits.len()];
        for i in 0..self.n {
            let out = &mut bits[i * self.words..(i + 1) * self.words];
            for k in (0..self.n).filter(|&k| self.get(i, k)) {
                for (o, r) in out.iter_mut().zip(other.row(k)) {
                    *o |= r;
                }
            }
        }
        Self { bits, ..*self }
    }

    fn all_positive(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j)))
    }

    fn diagonal_positive(&self) -> bool {
        (0..self.n).any(|i| self.get(i, i))
    }

    /// Least `e` in `1..=cap` whose power satisfies `accept`.
    fn first_power(&self, cap: usize, accept: impl Fn(&Self) -> bool) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut cur = self.clone();
        for e in 1..=cap {
            if accept(&cur) {
                return Some(e);
            }
            if e < cap {
                cur = cur.mul(self);
            }
        }
        None
    }
}

/// Least `e <= cap` with `m^e` entrywise positive, over the Boolean semiring.
pub fn primitivity_exponent(m: &TransitionMatrix, cap: usize) -> Option<usize> {
    BoolMatrix::from_pattern(&m.pattern()).first_power(cap, BoolMatrix::all_positive)
}

/// Least `e <= cap` with a positive diagonal entry in `m^e`.
pub fn diagonal_positive_exponent(m: &TransitionMatrix, cap: usize) -> Option<usize> {
    BoolMatrix::from_pattern(&m.pattern()).first_power(cap, BoolMatrix::diagonal_positive)
}

/// A nonnegative linear map that power iteration can apply.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64]) -> Vec<f64>;
}

pub struct DenseOperator {
    rows: Vec<Vec<f64>>,
}

impl DenseOperator {
    pub fn new(m: &TransitionMatrix) -> Self {
        Self { rows: m.to_f64() }
    }
}

impl LinearOperator for DenseOperator {
    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Applies a word letter by letter on curve coordinates; costs one pass over
/// the intersection lists instead of a dense product.
pub struct WordOperator {
    word: CompiledWord,
    dim: usize,
}

impl WordOperator {
    pub fn new(config: &MulticurveConfiguration, word: &TwistWord) -> Result<Self> {
        Ok(Self {
            word: CompiledWord::new(config, word)?,
            dim: config.num_curves(),
        })
    }
}

impl LinearOperator for WordOperator {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = x.to_vec();
        self.word.apply_f64(&mut y);
        y
    }
}

/// Power iteration from the all-ones vector with sup-norm renormalisation.
/// The caller is responsible for primitivity.
pub fn power_iteration(op: &dyn LinearOperator, tol: f64, max_iters: usize) -> Result<(f64, f64, usize)> {
    let n = op.dim();
    if n == 0 {
        return Err(Error::Precondition("empty matrix".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let mut x = vec![1.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=max_iters {
        let y = op.apply(&x);
        let lambda = y.iter().cloned().fold(0.0, f64::max);
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Precondition(format!("degenerate iterate (norm {lambda})")));
        }
        residual = y
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0, f64::max);
        if residual < tol {
            return Ok((lambda, residual, it));
        }
        x = y.into_iter().map(|v| v / lambda).collect();
    }
    Err(Error::NoConvergence {
        iterations: max_iters,
        residual,
    })
}

/// Dominant eigenvalue of a primitive transition matrix.
pub fn dilatation(m: &TransitionMatrix, tol: f64, max_iters: usize) -> Result<SpectralResult> {
    spectral_result(m, &DenseOperator::new(m), tol, max_iters)
}

/// Dilatation of a word, iterating the word action directly.
pub fn word_dilatation(
    config: &MulticurveConfiguration,
    word: &TwistWord,
    tol: f64,
    max_iters: usize,
) -> Result<SpectralResult> {
    let m = word_matrix(config, word)?;
    spectral_result(&m, &WordOperator::new(config, word)?, tol, max_iters)
}

fn spectral_result(
    m: &TransitionMatrix,
    op: &dyn LinearOperator,
    tol: f64,
    max_iters: usize,
) -> Result<SpectralResult> {
    let cap = default_cap(m.dim());
    let primitivity_exponent = primitivity_exponent(m, cap);
    if primitivity_exponent.is_none() {
        return Err(Error::NotPrimitive { cap });
    }
    let diagonal_exponent = diagonal_positive_exponent(m, cap);
    let (dilatation, residual, iterations) = power_iteration(op, tol, max_iters)?;
    Ok(SpectralResult {
        dilatation,
        residual,
        iterations,
        primitivity_exponent,
        diagonal_exponent,
    })
}
