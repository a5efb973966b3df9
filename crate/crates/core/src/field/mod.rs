//! Exact coefficient fields.
//!
//! Every field is a small context object implementing [`Field`]; elements are
//! plain values and all arithmetic goes through the field, so that runtime
//! towers like `Fp(2)(a)[x0]/(x0^2 - a)` and the static fast paths share the
//! same polynomial and Gröbner code.

mod descriptor;
pub(crate) mod display;
mod prime;
mod rational;
pub mod univariate;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use thiserror::Error;

pub use descriptor::{FieldDescriptor, FieldElement, FieldHom, FieldKind, Irreducibility};
pub use display::Shape;
pub use prime::{is_prime, PrimeField};
pub use rational::Rationals;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("inversion of zero")]
    ZeroInversion,
    #[error("element is not invertible: the minimal polynomial of `{0}` is reducible")]
    NonInvertible(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    DescriptorMismatch { expected: String, found: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation requires positive characteristic")]
    WrongCharacteristic,
    #[error("generator name `{0}` is already used in the tower")]
    DuplicateGenerator(String),
    #[error("minimal polynomial must have degree at least 1")]
    ConstantModulus,
    #[error("minimal polynomial is reducible: {0}")]
    Reducible(String),
    #[error("rational function fields over an extension with uncertified minimal polynomial are not supported")]
    UncertifiedBase,
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
}

/// An exact field, passed explicitly to every arithmetic operation.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Element: Clone + fmt::Debug + Eq + Ord + Hash + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn is_zero(&self, a: &Self::Element) -> bool;
    fn is_one(&self, a: &Self::Element) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inv(&self, a: &Self::Element) -> Result<Self::Element, FieldError>;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// 0 or the prime p.
    fn characteristic(&self) -> u64;

    fn from_bigint(&self, n: &BigInt) -> Self::Element;

    fn from_i64(&self, n: i64) -> Self::Element {
        self.from_bigint(&BigInt::from(n))
    }

    /// Tower generators, innermost first.
    fn generator_names(&self) -> Vec<String> {
        Vec::new()
    }

    fn generator(&self, _name: &str) -> Option<Self::Element> {
        None
    }

    /// All elements, for prime fields only.
    fn elements(&self) -> Option<Vec<Self::Element>> {
        None
    }

    fn format_element(&self, a: &Self::Element) -> String;

    /// Sign used only for printing `x - y` instead of `x + (-1)*y`.
    fn is_negative(&self, _a: &Self::Element) -> bool {
        false
    }

    fn shape(&self, a: &Self::Element) -> Shape;

    /// Textual field name in the CLI grammar.
    fn descriptor_text(&self) -> String;
}

/// A ring map between two fields.
pub trait FieldMap<S: Field, T: Field> {
    fn source(&self) -> &S;
    fn target(&self) -> &T;
    fn apply(&self, x: &S::Element) -> Result<T::Element, FieldError>;
}

/// The identity map on a field.
#[derive(Debug, Clone)]
pub struct Identity<F: Field>(pub F);

impl<F: Field> FieldMap<F, F> for Identity<F> {
    fn source(&self) -> &F {
        &self.0
    }

    fn target(&self) -> &F {
        &self.0
    }

    fn apply(&self, x: &F::Element) -> Result<F::Element, FieldError> {
        Ok(x.clone())
    }
}

/// Formats an element so that it can be read back by the parser.
pub struct Display<'a, F: Field>(pub &'a F, pub &'a F::Element);

impl<F: Field> fmt::Display for Display<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format_element(self.1))
    }
}
