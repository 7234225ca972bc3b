//! Exact scalar and small-matrix arithmetic underlying every other module.
//! No floating point anywhere: all values are Gaussian rationals with an
//! optional √2 factor, and every operation is a pure function over immutable
//! values.

mod exact;
mod mat2;
mod phase;
mod scalar;

pub use exact::{kron, kron_list, ExactMat};
pub use mat2::Mat2;
pub use phase::{phase_of, PhaseOctant};
pub use scalar::{frac, rat, GaussianScalar, Rat};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero scalar has no phase")]
    ZeroScalar,
    #[error("phase of {0} is not a multiple of \u{3c0}/4")]
    NonOctantPhase(Box<GaussianScalar>),
    #[error("cannot parse scalar from {0:?}")]
    ScalarParse(String),
}
