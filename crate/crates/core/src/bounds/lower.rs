//! Lower bounds `ℓ ≥ 1/w` from the branch-traversal criterion.
//!
//! With `r` real branches and `M^q` (real-branch transition matrix) having a
//! positive diagonal entry, `k = 2qr + 24|χ| - 8n` iterates traverse every
//! branch and `w = k + 6|χ| - 2n`.

use serde::Serialize;

use super::strategy::{GroupKind, GroupRegistry};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::surface::Surface;

/// One case of a pigeonhole argument producing a candidate `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QCase {
    pub label: String,
    pub constant: i64,
    /// The inequality that rules out every region having more attached
    /// branches, evaluated at the surface's parameters.
    pub chain: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QDerivation {
    pub q: i64,
    pub cases: Vec<QCase>,
    /// Label of the case whose constant is `q`.
    pub supplied_by: String,
}

impl QDerivation {
    /// `q` is the largest case constant, so it serves every case.
    pub fn from_cases(cases: Vec<QCase>) -> Result<Self> {
        if let Some(c) = cases.iter().find(|c| !c.holds) {
            return Err(Error::Precondition(format!("{}: {} fails", c.label, c.chain)));
        }
        let best = cases
            .iter()
            .max_by_key(|c| c.constant)
            .ok_or_else(|| Error::Precondition("no cases".into()))?;
        Ok(Self {
            q: best.constant,
            supplied_by: best.label.clone(),
            cases,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundRecord {
    #[serde(rename = "kind")]
    pub group: Option<GroupKind>,
    #[serde(rename = "parameters")]
    pub surface: Surface,
    pub q: i64,
    pub r: i64,
    pub k: i64,
    pub w: i64,
    #[serde(with = "rational")]
    pub bound: Rational,
    /// Constant printed in the literature when it differs from `w`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published_w: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation: Option<QDerivation>,
}

/// Lefschetz number `2 - 2g` of a Torelli element; negative for `g >= 2`,
/// which forces a fixed rectangle and hence `q = 1`.
pub fn lefschetz_torelli(g: u32) -> Result<i64> {
    if g < 2 {
        return Err(Error::Precondition(format!(
            "Lefschetz argument needs g >= 2, got g = {g}"
        )));
    }
    Ok(2 - 2 * i64::from(g))
}

pub fn prop22_bound(s: &Surface, r: i64, q: i64) -> Result<LowerBoundRecord> {
    s.require_complexity()?;
    if r < 1 {
        return Err(Error::Precondition(format!("need r >= 1, got r = {r}")));
    }
    if q < 1 {
        return Err(Error::Precondition(format!("need q >= 1, got q = {q}")));
    }
    let abs_chi = s.euler_characteristic().abs();
    let n = i64::from(s.punctures);
    let k = 2 * q * r + 24 * abs_chi - 8 * n;
    let w = k + 6 * abs_chi - 2 * n;
    if w <= 0 {
        return Err(Error::Precondition(format!("w = {w} is not positive")));
    }
    Ok(LowerBoundRecord {
        group: None,
        surface: *s,
        q,
        r,
        k,
        w,
        bound: rational::reciprocal(w),
        published_w: None,
        derivation: None,
    })
}

pub fn derive_q(group: GroupKind, s: &Surface) -> Result<QDerivation> {
    GroupRegistry::global().get_kind(group).derive_q(s)
}

pub fn lower_bound(group: GroupKind, g: u32, n: u32) -> Result<LowerBoundRecord> {
    GroupRegistry::global().get_kind(group).lower_bound(g, n)
}
