//! Certified bounds on the asymptotic translation length of Penner
//! pseudo-Anosov maps on the curve graph.
//!
//! Lower bounds come from train-track branch budgets and a per-group
//! constant `q` ([`bounds::lower_bound`]); upper bounds come from following a
//! seed curve under an explicit twist word until it meets a witness curve
//! ([`bounds::certify_upper`]).

pub mod bounds;
pub mod configuration;
pub mod error;
pub mod rational;
pub mod report;
pub mod spectral;
pub mod surface;
pub mod twist;

pub use error::{Error, Result};
pub use surface::Surface;
