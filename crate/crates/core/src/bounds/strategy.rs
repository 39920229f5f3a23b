//! Per-group lower-bound strategies, registered by name.
//!
//! Each strategy knows its surface, how `q` is obtained, and (when one
//! exists) the explicit pseudo-Anosov family used for upper bounds.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::lower::{lefschetz_torelli, prop22_bound, LowerBoundRecord, QCase, QDerivation};
use crate::configuration::{purebraid_family, torelli_family, FamilyInstance};
use crate::error::{Error, Result};
use crate::surface::Surface;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Torelli,
    PureBraid,
    PMod,
}

impl GroupKind {
    pub const ALL: [GroupKind; 3] = [GroupKind::Torelli, GroupKind::PureBraid, GroupKind::PMod];

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Torelli => "torelli",
            GroupKind::PureBraid => "purebraid",
            GroupKind::PMod => "pmod",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownStrategy {
                kind: "group",
                name: s.to_string(),
                known: GroupKind::ALL.map(GroupKind::name).join(", "),
            })
    }
}

pub trait GroupBound: Send + Sync {
    fn kind(&self) -> GroupKind;

    fn name(&self) -> &'static str {
        self.kind().name()
    }

    /// The surface the group acts on, rejecting parameters outside the
    /// group's domain.
    fn surface(&self, genus: u32, punctures: u32) -> Result<Surface>;

    fn derive_q(&self, s: &Surface) -> Result<QDerivation>;

    /// Constant from the literature, reported next to the derived one.
    fn published_w(&self, _s: &Surface) -> Option<i64> {
        None
    }

    fn lower_bound(&self, genus: u32, punctures: u32) -> Result<LowerBoundRecord> {
        let s = self.surface(genus, punctures)?;
        s.require_complexity()?;
        let derivation = self.derive_q(&s)?;
        let budget = s.branch_budget()?;
        let mut rec = prop22_bound(&s, budget.max_real, derivation.q)?;
        rec.group = Some(self.kind());
        rec.published_w = self.published_w(&s);
        rec.derivation = Some(derivation);
        Ok(rec)
    }

    /// Name of the sweep parameter, `g` or `n`, when the group has a family.
    fn parameter_name(&self) -> Option<&'static str> {
        None
    }

    /// `(genus, punctures)` for a sweep parameter.
    fn split_parameter(&self, p: u32) -> (u32, u32);

    /// The explicit upper-bound family at parameter `p`, if the group has one.
    fn family(&self, _p: u32) -> Option<Result<FamilyInstance>> {
        None
    }
}

pub struct Torelli;

impl GroupBound for Torelli {
    fn kind(&self) -> GroupKind {
        GroupKind::Torelli
    }

    fn surface(&self, genus: u32, punctures: u32) -> Result<Surface> {
        if punctures != 0 {
            return Err(Error::Precondition(
                "the Torelli bound is for closed surfaces (punctures = 0)".into(),
            ));
        }
        Ok(Surface::closed(genus))
    }

    fn derive_q(&self, s: &Surface) -> Result<QDerivation> {
        if !s.is_closed() {
            return Err(Error::Precondition(format!("{s} is not closed")));
        }
        let l = lefschetz_torelli(s.genus)?;
        QDerivation::from_cases(vec![QCase {
            label: "negative Lefschetz number forces a fixed rectangle".into(),
            constant: 1,
            chain: format!("L(f) = 2 - 2g = {l} < 0"),
            holds: l < 0,
        }])
    }

    fn parameter_name(&self) -> Option<&'static str> {
        Some("g")
    }

    fn split_parameter(&self, p: u32) -> (u32, u32) {
        (p, 0)
    }

    fn family(&self, p: u32) -> Option<Result<FamilyInstance>> {
        Some(torelli_family(p))
    }
}

pub struct PureBraid;

impl GroupBound for PureBraid {
    fn kind(&self) -> GroupKind {
        GroupKind::PureBraid
    }

    fn surface(&self, genus: u32, punctures: u32) -> Result<Surface> {
        if genus != 0 {
            return Err(Error::Precondition(
                "the pure braid bound is for punctured disks (genus = 0)".into(),
            ));
        }
        Ok(Surface::disk(punctures))
    }

    fn derive_q(&self, s: &Surface) -> Result<QDerivation> {
        if s.genus != 0 || s.boundary != 1 {
            return Err(Error::Precondition(format!("{s} is not a punctured disk")));
        }
        let n = i64::from(s.punctures);
        if n < 4 {
            return Err(Error::Precondition(format!("need n >= 4, got n = {n}")));
        }
        let real = 3 * s.euler_characteristic().abs();
        QDerivation::from_cases(vec![
            QCase {
                label: "case 1 (k2 < n/2): some monogon has at most 23 attached real branches".into(),
                constant: 23,
                chain: format!(
                    "else 12·k1 >= 3n + 24 = {} > {real} = 3|χ(D_n)|",
                    3 * n + 24
                ),
                holds: 3 * n + 24 > real,
            },
            QCase {
                label: "case 2 (k2 >= n/2): some bigon has at most 11 attached real branches".into(),
                constant: 11,
                chain: format!("else 6·k2 >= 3n = {} > {real} = 3|χ(D_n)|", 3 * n),
                holds: 3 * n > real,
            },
        ])
    }

    fn parameter_name(&self) -> Option<&'static str> {
        Some("n")
    }

    fn split_parameter(&self, p: u32) -> (u32, u32) {
        (0, p)
    }

    fn family(&self, p: u32) -> Option<Result<FamilyInstance>> {
        Some(purebraid_family(p))
    }
}

pub struct PMod;

impl PMod {
    fn proviso(genus: u32, punctures: u32) -> Result<()> {
        let threshold = 38 * i64::from(genus) - 38;
        if i64::from(punctures) <= threshold {
            return Err(Error::Proviso {
                genus,
                punctures,
                threshold,
            });
        }
        Ok(())
    }
}

impl GroupBound for PMod {
    fn kind(&self) -> GroupKind {
        GroupKind::PMod
    }

    fn surface(&self, genus: u32, punctures: u32) -> Result<Surface> {
        Self::proviso(genus, punctures)?;
        Ok(Surface::new(genus, punctures, 0))
    }

    fn derive_q(&self, s: &Surface) -> Result<QDerivation> {
        Self::proviso(s.genus, s.punctures)?;
        s.require_complexity()?;
        let (g, n) = (i64::from(s.genus), i64::from(s.punctures));
        let real = 3 * s.euler_characteristic().abs();
        let monogon = 4 * n + 32 - 32 * g;
        QDerivation::from_cases(vec![
            QCase {
                label: "case 1 (k2 < n/2): some monogon has at most 31 attached real branches".into(),
                constant: 31,
                chain: format!(
                    "else 16·k1 >= 4n + 32 - 32g = {monogon} > {real} = 3|χ(S_{{g,n}})|"
                ),
                holds: monogon > real,
            },
            QCase {
                label: "case 2 (k2 >= n/2): some bigon has at most 15 attached real branches".into(),
                constant: 15,
                chain: format!("else 8·k2 >= 4n = {} > {real} = 3|χ(S_{{g,n}})|", 4 * n),
                holds: 4 * n > real,
            },
        ])
    }

    fn published_w(&self, s: &Surface) -> Option<i64> {
        Some(1296 * i64::from(s.genus) + 638 * i64::from(s.punctures) - 1296)
    }

    fn split_parameter(&self, p: u32) -> (u32, u32) {
        (0, p)
    }
}

/// Strategies by name.
pub struct GroupRegistry {
    entries: Vec<Box<dyn GroupBound>>,
}

impl Default for GroupRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Torelli));
        r.register(Box::new(PureBraid));
        r.register(Box::new(PMod));
        r
    }
}

impl GroupRegistry {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn global() -> &'static GroupRegistry {
        static REGISTRY: OnceLock<GroupRegistry> = OnceLock::new();
        REGISTRY.get_or_init(GroupRegistry::default)
    }

    /// Replaces any strategy registered under the same name.
    pub fn register(&mut self, s: Box<dyn GroupBound>) {
        self.entries.retain(|e| e.name() != s.name());
        self.entries.push(s);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn GroupBound> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                kind: "group",
                name: name.to_string(),
                known: self.names().join(", "),
            })
    }

    pub fn get_kind(&self, kind: GroupKind) -> &dyn GroupBound {
        self.get(kind.name())
            .expect("every group kind has a registered strategy")
    }
}
