//! JSON configuration files.
//!
//! ```json
//! {
//!   "surface": {"genus": 0, "punctures": 5, "boundary": 1},
//!   "curves": [{"name": "a1", "class": "A", "separating": true}, ...],
//!   "intersections": [[0, 2, 0, 0], ...],
//!   "witnesses": [{"name": "gamma", "intersections": [0, 0, 0, 2]}],
//!   "word": ["a1", "a2", "a3", "a4"],
//!   "seed": "a1",
//!   "witness": "gamma"
//! }
//! ```
//!
//! `word` is written left to right; its rightmost letter acts first.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Curve, CurveClass, FamilyInstance, MulticurveConfiguration, TwistWord, Witness};
use crate::error::{Error, Result};
use crate::surface::Surface;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub name: String,
    pub class: CurveClass,
    #[serde(default)]
    pub separating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub name: String,
    pub intersections: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub surface: Surface,
    pub curves: Vec<CurveEntry>,
    pub intersections: Vec<Vec<u64>>,
    #[serde(default)]
    pub witnesses: Vec<WitnessEntry>,
    pub word: TwistWord,
    pub seed: String,
    pub witness: String,
}

impl ConfigFile {
    pub fn from_instance(inst: &FamilyInstance) -> Self {
        let c = &inst.config;
        Self {
            surface: c.surface(),
            curves: c
                .curves()
                .iter()
                .map(|k| CurveEntry {
                    name: k.name.clone(),
                    class: k.class,
                    separating: k.separating,
                })
                .collect(),
            intersections: c.intersections().to_vec(),
            witnesses: c
                .witnesses()
                .iter()
                .map(|w| WitnessEntry {
                    name: w.name.clone(),
                    intersections: w.intersections.clone(),
                })
                .collect(),
            word: inst.word.clone(),
            seed: inst.seed.clone(),
            witness: inst.witness.clone(),
        }
    }

    /// Parses and checks the matrix shape and symmetry. `origin` names the
    /// source in diagnostics.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Config {
            path: origin.to_string(),
            message: e.to_string(),
        })?;
        file.check_matrix().map_err(|message| Error::Config {
            path: origin.to_string(),
            message,
        })?;
        Ok(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json()?)?;
        Ok(())
    }

    #[allow(clippy::needless_range_loop)]
    fn check_matrix(&self) -> std::result::Result<(), String> {
        let n = self.curves.len();
        let m = &self.intersections;
        if m.len() != n {
            return Err(format!(
                "field `intersections`: {} rows for {n} curves",
                m.len()
            ));
        }
        if let Some((i, row)) = m.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(format!(
                "field `intersections[{i}]`: {} entries, expected {n}",
                row.len()
            ));
        }
        for i in 0..n {
            for j in i + 1..n {
                if m[i][j] != m[j][i] {
                    return Err(format!(
                        "field `intersections[{j}][{i}]` = {} differs from `intersections[{i}][{j}]` = {}: matrix must be symmetric",
                        m[j][i], m[i][j]
                    ));
                }
            }
        }
        if let Some((k, w)) = self
            .witnesses
            .iter()
            .enumerate()
            .find(|(_, w)| w.intersections.len() != n)
        {
            return Err(format!(
                "field `witnesses[{k}].intersections` (`{}`): {} entries, expected {n}",
                w.name,
                w.intersections.len()
            ));
        }
        Ok(())
    }

    pub fn into_instance(self) -> Result<FamilyInstance> {
        let config = MulticurveConfiguration::new(
            self.surface,
            self.curves
                .into_iter()
                .map(|c| Curve::new(c.name, c.class, c.separating))
                .collect(),
            self.intersections,
            self.witnesses
                .into_iter()
                .map(|w| Witness {
                    name: w.name,
                    intersections: w.intersections,
                })
                .collect(),
        )?;
        FamilyInstance::new(config, self.word, self.seed, self.witness)
    }
}
