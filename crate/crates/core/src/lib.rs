//! Bell-inequality tests at astronomical distances.
//!
//! * [`scenario`]: experiment geometry, presets and the scenario file format.
//! * [`bell`]: quantum and local-hidden-variable correlation models, CHSH.
//! * [`bounds`]: lower bounds on the speed of quantum correlations, gain
//!   factors, proper-time corrections, a-priori scales.
//! * [`sim`]: deterministic, event-timed Monte Carlo under a finite collapse speed.
//! * [`link`]: geometric loss, coincidence rates and sample sizes.
//! * [`discrepancy`]: quoted figures compared with computed ones.
//! * [`report`] and [`cli`]: reports and the command-line front end.

pub mod bell;
pub mod bounds;
pub mod cli;
pub mod constants;
pub mod discrepancy;
pub mod link;
pub mod report;
pub mod scenario;
pub mod sim;
pub mod units;

pub use bell::{chsh_value, lhv_correlation, quantum_correlation, AnalyzerAngle, ChshSettings, CorrelationModel};
pub use bounds::{gain_factor, speed_bound, SpeedBound};
pub use scenario::{load_scenario, preset, Preset, Scenario};
pub use sim::{critical_speed, simulate, sweep_speed, CollapseModel, Departure, Fallback, SimConfig};
