//! Exact symbolic computation for Poisson polynomial algebras.
//!
//! The crate provides, over exact rational coefficients:
//!
//! * sparse multivariate and Laurent polynomial arithmetic with a fixed
//!   expression grammar and canonical printing ([`poly`]);
//! * Poisson brackets from potentials, torus log-canonical tables, and
//!   custom bracket tables, with Jacobi verification ([`poisson`]);
//! * quotients by a principal modulus with normal forms and induced
//!   brackets ([`quotient`]);
//! * Buchberger's algorithm, isolated-singularity and Milnor-number tests,
//!   and linear syzygy kernels ([`groebner`], [`singularity`]);
//! * discrete valuations and filtrations: weighted, quotient-graded,
//!   substitution-defined, divisor-adic, and point valuations
//!   ([`valuation`]);
//! * graded automorphism groups of the cubic-and-higher Fermat surfaces as
//!   root-of-unity exponent arithmetic ([`automorphism`]);
//! * a catalog of standard Poisson fields with recorded facts and computed
//!   distinguishing invariants ([`catalog`]).
//!
//! The polynomial layer is generic over a [`Scalar`] coefficient trait; the
//! aliases below fix the exact-rational instantiation used everywhere else.

pub mod automorphism;
pub mod catalog;
pub mod groebner;
pub mod order;
pub mod poisson;
pub mod poly;
pub mod quotient;
pub mod sample;
pub mod scalar;
pub mod singularity;
pub mod valuation;

pub use poly::{jacobian_det, jacobian_det3, MPoly, Mode, Monomial, ParseError, PolyError, Ring};
pub use scalar::Scalar;

/// Exact rational scalar used by the concrete API.
pub type Rational = num::BigRational;

/// Polynomial over exact rationals: the crate's workhorse type.
pub type Poly = poly::MPoly<Rational>;

/// Convenience: the rational number `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Convenience: the rational number `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    rat(n) / rat(d)
}
