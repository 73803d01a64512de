//! Objective information models and their metrics.
//!
//! An [`InformationModel`] is the sextuple `<o, T_h, f, c, T_m, g>`: noumena
//! `o` with states `f` over occurrence times `T_h`, mapped onto carrier
//! reflections `g` of carriers `c` over reflection times `T_m`. The crate
//! validates such models, restores states through the inverse mapping,
//! splits them into atoms, composes transmission chains, evaluates the
//! eleven information metrics, and provides the classical calculators
//! (entropy, radar range, Nyquist rate, Kalman filtering, search length, ...)
//! and the information-matter-energy-time formulas that go with them.

pub mod atomic;
pub mod batch;
pub mod chain;
pub mod classical;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod metrics;
pub mod model;
pub mod physics;
pub mod time;
pub mod validate;

pub use atomic::{combine, decompose_atomic, AtomicInfo};
pub use chain::compose_chain;
pub use error::{Error, Result};
pub use exec::Execution;
pub use model::{CopyRecord, ElementId, InformationModel, MeasureAssignment, StateEntry, Value};
pub use time::{Gap, Seconds, TimeSet};
pub use validate::{is_restorable, restore, validate, Invariant, Postulate, ValidationReport};
