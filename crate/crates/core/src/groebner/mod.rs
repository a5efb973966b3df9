//! Buchberger Gröbner bases and the ideal-theoretic decision procedures
//! built on them: membership, radical membership, saturation, elimination,
//! Krull dimension and ideal equality.

mod basis;
mod ideal;
mod order;

use thiserror::Error;

use crate::field::FieldError;
use crate::poly::PolyError;

pub use basis::GroebnerBasis;
pub use ideal::{
    buchberger_reduced, eliminate, ideal_equal, ideal_member, ideal_quotient, krull_dimension, normal_form,
    radical_member, saturate, Ideal,
};
pub use order::{MonomialOrder, OrderKind};

/// Default cap on the number of S-pair reductions per basis computation.
pub const DEFAULT_STEP_LIMIT: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbOptions {
    pub step_limit: usize,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            step_limit: DEFAULT_STEP_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("step limit of {0} S-pair reductions exceeded")]
    StepLimitExceeded(usize),
    #[error("polynomials live in different rings")]
    ContextMismatch,
    #[error("the ideal contains 1")]
    UnitIdeal,
    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
