//! Exact self-stress computations for tensegrity frameworks.
//!
//! Everything is computed over exact rationals: stress spaces, sign-vector
//! signatures of those spaces, projective conditions on point sets, the
//! strata census of small complete graphs, and the surgery checks.

pub mod census;
pub mod conditions;
pub mod error;
pub mod linalg;
pub mod model;
pub mod projective;
pub mod scalar;
pub mod signature;
pub mod stress;
pub mod surgery;

pub use error::{Error, Result};
pub use linalg::{KernelBasis, Matrix, RationalMatrix};
pub use model::{make_framework, Configuration, Edge, Framework, Graph, Load};
pub use projective::{ProjectiveLine, ProjectivePoint};
pub use scalar::{Rational, Scalar};
pub use stress::{Atom, StressAssignment, StressSpace};

/// Planar point with exact coordinates.
pub type Point2 = [Rational; 2];
