//! Curve shortening flow by spectral heat steps and uniform-arclength resampling.
//!
//! A closed curve is held as a cyclic polyline. One flow step resamples the
//! polyline to `N` points at equal arclength spacing, then applies one step of
//! the periodic heat semigroup with diffusivity `1/L^2` (`L` the current
//! polygon length) via the discrete Fourier transform. Iterating this drives
//! the curve toward extinction while length and total turning curvature are
//! non-increasing; loop-shedding events show up as sharp drops of the turning
//! total.
//!
//! Modules:
//! - [`geometry`]: polyline model, length, resampling, curvature totals, area,
//!   extremity counting.
//! - [`spectral`]: DFT, heat multiplier, heat step, spectral curvature.
//! - [`shapes`]: generators for the studied initial curves.
//! - [`flow`]: the stepper, trajectory recording, singular-event detection.
//! - [`diagnostics`]: exact-solution oracles (circle law, segment series,
//!   isoperimetric ratio, segment-limit distance).
//! - [`presets`]: named experiment configurations used by the CLI.
//! - [`io`]: CSV/SVG emission for trajectories and snapshots.

pub mod diagnostics;
pub mod flow;
pub mod geometry;
pub mod io;
pub mod presets;
pub mod shapes;
pub mod spectral;

pub use flow::{detect_events, run, self_convergence, step, Diffusivity, FlowConfig, FlowState, Record, SingularEvent, Termination, Trajectory};
pub use geometry::{ClosedPolyline, GeometryError};
pub use shapes::{generate, ShapeKind, ShapeSpec};
