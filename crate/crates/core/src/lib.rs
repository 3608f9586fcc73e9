//! Time-truncated single acceptance sampling plans for lifetimes that follow
//! the transmuted Rayleigh distribution.
//!
//! * [`trdist`]: the lifetime model.
//! * [`plan`]: plan design, operating characteristic, producer's risk and
//!   the standard design tables.
//! * [`fitting`]: maximum-likelihood fits and goodness of fit for observed
//!   lifetimes.
//! * [`montecarlo`]: simulation check of the analytic acceptance probability.

pub mod error;
pub mod fitting;
pub mod montecarlo;
pub mod plan;
pub mod trdist;

pub use error::{Error, Result};
pub use fitting::{DescriptiveStats, FitResult, LifetimeSample};
pub use montecarlo::SimulationReport;
pub use plan::{DesignQuery, OCPoint, SamplingPlan};
pub use trdist::TRParams;
