//! Certified lower and upper bounds on asymptotic translation length.

mod euler_poincare;
mod lower;
mod strategy;
mod upper;

pub use euler_poincare::{euler_poincare_check, SingularityData};
pub use lower::{
    derive_q, lefschetz_torelli, lower_bound, prop22_bound, LowerBoundRecord, QCase, QDerivation,
};
pub use strategy::{GroupBound, GroupKind, GroupRegistry, PMod, PureBraid, Torelli};
pub use upper::{
    certify_upper, power_certificate, BooleanPropagation, CertificateJson, ExactPropagation,
    Propagator, PropagatorRegistry, UpperBoundCertificate, DEFAULT_MAX_J,
};
