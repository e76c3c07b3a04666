//! Hermite-polynomial one-step time integrators for forced Lagrangian systems.
//!
//! The crate provides two families of implicit one-step methods that advance
//! configuration and velocity together, producing trajectories continuous in
//! both (`C^1` across step boundaries):
//!
//! * **one-step variational** — stationarity of the discrete action built on a
//!   cubic (or higher) Hermite interpolant over a single step, with external
//!   forcing entering through shape-function-weighted force integrals;
//! * **one-step Galerkin** — weighted residuals of the equations of motion
//!   against shifted Legendre test functions over a single step.
//!
//! Two discrete-mechanics baselines (midpoint and quadratic-interior-point
//! variational integrators) are included for comparison, along with the
//! analysis tooling used to study the methods: linear stability of the
//! harmonic-oscillator amplification matrix, symplecticity defect of the step
//! Jacobian, convergence studies against a fine-step reference, and energy
//! error diagnostics.

pub mod analysis;
pub mod basis;
pub mod quadrature;
pub mod solver;
pub mod steppers;
pub mod systems;

pub use solver::{SolveReport, SolverConfig};
pub use steppers::{simulate, HermiteSegment, SimulateConfig, StepperKind, Trajectory};
pub use systems::{AeroParams, State, SystemModel};
