//! Exact jet schemes of affine varieties.
//!
//! The crate builds level-`n` jet ideals over exact coefficient fields
//! (rationals, prime fields, rational function fields and simple
//! extensions), answers ideal-theoretic questions about them with a
//! Buchberger engine, lifts truncated arcs by Newton iteration, enumerates
//! jets over small prime fields, and packages these into named scenarios.
//!
//! All arithmetic is exact. Algorithms are generic over [`field::Field`];
//! the aliases below fix the common choices.

pub mod field;
pub mod greenberg;
pub mod groebner;
pub mod jet;
pub mod parse;
pub mod poly;
pub mod random;
pub mod report;
pub mod scenario;
pub mod smooth;

use thiserror::Error;

pub use field::{Field, FieldDescriptor, FieldElement, FieldHom, PrimeField, Rationals};
pub use parse::{parse_field, parse_polynomial, parse_variety, ParseError, VarietySpec};
pub use poly::{Polynomial, VariableContext};
pub use report::{render_report, Format, ScenarioReport, Verdict};
pub use scenario::{run_scenario, ScenarioOptions, SCENARIOS};

/// Polynomials over a runtime field tower.
pub type Poly = Polynomial<FieldDescriptor>;
/// Polynomials over the rationals.
pub type RationalPolynomial = Polynomial<Rationals>;
/// Polynomials over a word-sized prime field.
pub type PrimePolynomial = Polynomial<PrimeField>;
pub type Ideal = groebner::Ideal<FieldDescriptor>;
pub type GroebnerBasis = groebner::GroebnerBasis<FieldDescriptor>;
pub type JetIdeal = jet::JetIdeal<FieldDescriptor>;
pub type WedgeIdeal = jet::WedgeIdeal<FieldDescriptor>;
pub type TruncatedArc = jet::TruncatedArc<FieldDescriptor>;
pub type LiftProblem = greenberg::LiftProblem<FieldDescriptor>;
pub type GreenbergScanReport = greenberg::GreenbergScanReport<FieldDescriptor>;
pub type JacobianMatrix = smooth::JacobianMatrix<FieldDescriptor>;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
    #[error(transparent)]
    Groebner(#[from] groebner::GroebnerError),
    #[error(transparent)]
    Jet(#[from] jet::JetError),
    #[error(transparent)]
    Smooth(#[from] smooth::SmoothError),
    #[error(transparent)]
    Greenberg(#[from] greenberg::GreenbergError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Scenario(#[from] scenario::ScenarioError),
}

impl Error {
    /// True for step-limit and enumeration-budget failures.
    pub fn is_limit(&self) -> bool {
        use greenberg::GreenbergError as G;
        use groebner::GroebnerError::StepLimitExceeded;
        use jet::JetError as J;
        use smooth::SmoothError as S;
        matches!(
            self,
            Error::Groebner(StepLimitExceeded(_))
                | Error::Jet(J::Groebner(StepLimitExceeded(_)))
                | Error::Smooth(S::Groebner(StepLimitExceeded(_)))
                | Error::Greenberg(G::BudgetExceeded { .. })
                | Error::Greenberg(G::Jet(J::Groebner(StepLimitExceeded(_))))
        )
    }

    /// True for errors caused by malformed input rather than by a computation.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::Scenario(_) | Error::Greenberg(greenberg::GreenbergError::InvalidProblem(_))
        )
    }
}
