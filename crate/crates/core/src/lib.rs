//! Projected subgradient methods with Polyak-type step sizes for problems
//! with a (relaxed) sharp minimum, together with the test objectives,
//! convergence certificates and a ball-intersection feasibility solver.

// NaN-rejecting parameter checks are written as `!(x > 0.0)` throughout.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod certificates;
pub mod error;
pub mod experiment;
pub mod feasibility;
pub mod geometry;
pub mod linalg;
pub mod oracles;
pub mod reference;
pub mod sampling;
pub mod solvers;

pub use error::{Error, Result};
pub use geometry::{Ball, Capsule};
pub use oracles::{OracleOutput, ProblemSpec, SharpnessInfo, TargetSet};
pub use solvers::{iterate, RunOptions, StepRule, Termination, Trace};
