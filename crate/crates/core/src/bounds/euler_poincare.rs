//! Prong accounting for the singular foliation of a pseudo-Anosov map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prong counts of the foliation's singularities. A 1-pronged puncture sits in
/// a monogon, a 2-pronged one in a bigon; interior singularities have at
/// least three prongs.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SingularityData {
    puncture_prongs: Vec<u32>,
    interior_prongs: Vec<u32>,
}

impl SingularityData {
    pub fn new(puncture_prongs: Vec<u32>, interior_prongs: Vec<u32>) -> Result<Self> {
        if let Some(p) = puncture_prongs.iter().find(|&&p| p < 1) {
            return Err(Error::Precondition(format!(
                "puncture with {p} prongs; need at least 1"
            )));
        }
        if let Some(p) = interior_prongs.iter().find(|&&p| p < 3) {
            return Err(Error::Precondition(format!(
                "interior singularity with {p} prongs; need at least 3"
            )));
        }
        Ok(Self {
            puncture_prongs,
            interior_prongs,
        })
    }

    pub fn puncture_prongs(&self) -> &[u32] {
        &self.puncture_prongs
    }

    pub fn interior_prongs(&self) -> &[u32] {
        &self.interior_prongs
    }

    /// `Σ (2 - P_s)` over punctures and interior singularities.
    pub fn index_sum(&self) -> i64 {
        self.puncture_prongs
            .iter()
            .chain(&self.interior_prongs)
            .map(|&p| 2 - i64::from(p))
            .sum()
    }
}

/// `Σ (2 - P_s) = 2χ` for the closed surface obtained by filling punctures.
pub fn euler_poincare_check(closed_chi: i64, d: &SingularityData) -> bool {
    d.index_sum() == 2 * closed_chi
}
