//! Surface arithmetic: Euler characteristic, complexity and the train-track
//! branch budgets consumed by the lower-bound engine.
//!
//! A boundary component is counted exactly like a puncture, so the punctured
//! disk `D_n` is `Surface::disk(n)` = (genus 0, n punctures, 1 boundary) with
//! `χ = 1 - n` and `ξ = n - 2`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surface {
    pub genus: u32,
    pub punctures: u32,
    #[serde(default)]
    pub boundary: u32,
}

/// Upper bounds on the number of real and infinitesimal branches of an
/// invariant train track.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchBudget {
    pub max_real: i64,
    pub max_infinitesimal: i64,
}

impl Surface {
    pub const fn new(genus: u32, punctures: u32, boundary: u32) -> Self {
        Self {
            genus,
            punctures,
            boundary,
        }
    }

    /// Closed surface of genus `g`.
    pub const fn closed(genus: u32) -> Self {
        Self::new(genus, 0, 0)
    }

    /// Disk with `n` punctures.
    pub const fn disk(punctures: u32) -> Self {
        Self::new(0, punctures, 1)
    }

    pub fn is_closed(&self) -> bool {
        self.punctures == 0 && self.boundary == 0
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(self)
    }

    /// `ξ = 3g - 3 + n + b`.
    pub fn complexity(&self) -> i64 {
        3 * i64::from(self.genus) - 3 + i64::from(self.punctures) + i64::from(self.boundary)
    }

    pub fn require_complexity(&self) -> Result<()> {
        let xi = self.complexity();
        if xi < 2 {
            return Err(Error::Complexity {
                surface: *self,
                complexity: xi,
            });
        }
        Ok(())
    }

    pub fn branch_budget(&self) -> Result<BranchBudget> {
        branch_budget(self)
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.genus, self.punctures, self.boundary) {
            (0, n, 1) => write!(f, "D_{n}"),
            (g, 0, 0) => write!(f, "S_{g}"),
            (g, n, 0) => write!(f, "S_{{{g},{n}}}"),
            (g, n, b) => write!(f, "S_{{{g},{n}}} with {b} boundary components"),
        }
    }
}

/// `χ = 2 - 2g - n - b`.
pub fn euler_characteristic(s: &Surface) -> i64 {
    2 - 2 * i64::from(s.genus) - i64::from(s.punctures) - i64::from(s.boundary)
}

/// Real branches: at most `9|χ|` on a closed surface and `3|χ|` otherwise.
/// Infinitesimal branches: at most `24|χ| - 8n` with `n` the puncture count.
pub fn branch_budget(s: &Surface) -> Result<BranchBudget> {
    s.require_complexity()?;
    let abs_chi = euler_characteristic(s).abs();
    let max_real = if s.is_closed() { 9 * abs_chi } else { 3 * abs_chi };
    Ok(BranchBudget {
        max_real,
        max_infinitesimal: 24 * abs_chi - 8 * i64::from(s.punctures),
    })
}
