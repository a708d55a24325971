//! Library backing the `holo` command line: run configurations, the
//! bundled experiment presets, parameter sweeps, and the synthetic input
//! fallback. The binary is a thin argument-parsing shell over this crate so
//! tests can drive the same code paths directly.

pub mod config;
pub mod scenario;
pub mod sweep;
pub mod synth;

pub use config::{ApertureShape, CancelKind, ImageSource, RunConfig};
pub use scenario::{run_scenario, Scenario};
pub use sweep::{run_sweep, SweepAxis};
