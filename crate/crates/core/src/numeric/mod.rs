//! Exact scalar arithmetic and multivariate polynomials.
//!
//! Three scalar domains are supported: the rationals, real or imaginary
//! quadratic fields `Q(sqrt d)`, and cyclotomic fields `Q(zeta_n)` stored as
//! residues modulo the `n`-th cyclotomic polynomial. A computation works in a
//! single domain; rationals embed into every domain, nothing else mixes.

mod cyclotomic;
mod polynomial;
mod quadratic;
mod rational;
mod scalar;
pub(crate) mod univariate;

use std::fmt;

pub use cyclotomic::{cyclo_mul, cyclotomic_polynomial, euler_phi, CyclotomicResidue};
pub use polynomial::{
    poly_identity_check, poly_identity_check_modulo, Monomial, MultivariatePolynomial, RewriteRule,
};
pub use quadratic::{qf_reduce, QuadraticElement};
pub use rational::{int, ratio, Rational};
pub use scalar::{Scalar, ScalarDomain, UnifiedScalars};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericError {
    #[error("malformed quadratic field: sqrt({0}) is not a quadratic irrationality")]
    MalformedField(i64),
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("substitution does not cover variable `{0}`")]
    IncompleteSubstitution(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("rewrite rules did not terminate after {0} steps")]
    RewriteLimit(usize),
}

/// Element of one of the exact scalar fields.
///
/// Binary operations require both operands to live in the same domain and
/// panic otherwise; use [`Scalar`] for checked mixed-input arithmetic.
pub trait FieldElement: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Domain: Clone + PartialEq + fmt::Debug;

    fn domain(&self) -> Self::Domain;
    fn from_rational_in(domain: &Self::Domain, value: Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// The value as a rational number when it lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    fn zero_in(domain: &Self::Domain) -> Self {
        Self::from_rational_in(domain, int(0))
    }

    fn one_in(domain: &Self::Domain) -> Self {
        Self::from_rational_in(domain, int(1))
    }

    fn from_int_in(domain: &Self::Domain, value: i64) -> Self {
        Self::from_rational_in(domain, int(value))
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn divided_by(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }

    fn equals_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q == int(1))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one_in(&self.domain());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        result
    }
}
