//! Exact arithmetic for the accelerated Collatz map.
//!
//! The accelerated map sends a positive integer `x` to `(3x + 1) / 2^m` when
//! `x` is odd, where `m` is the exact power of two dividing `3x + 1`, and to
//! the odd part of `x` when `x` is even. Every value it produces is odd, and
//! the exponent `m` removed at each step is that step's *step size*.
//!
//! The crate provides:
//!
//! - orbit generation and step-size extraction ([`orbit`]), including the
//!   classification of *growth points*: the values that grow under one
//!   application of the map are exactly those congruent to 3 mod 4;
//! - closed-form evaluation of orbit elements from a step-size prefix, over
//!   exact rationals ([`closed_form`]);
//! - constructors for monotone increasing/decreasing runs of any length with
//!   a uniform step size, self-verified by iteration ([`construct`]);
//! - rhythm classes: arithmetic progressions of starts that share the same
//!   step-size sequence ([`rhythm`]);
//! - bounded cycle and divergence probes plus a data-parallel range verifier
//!   ([`probes`]).
//!
//! All values are arbitrary precision; nothing here wraps or rounds. Every
//! iteration is budgeted: the library never loops unboundedly on an orbit
//! whose convergence is unknown.

pub mod closed_form;
pub mod construct;
mod error;
pub mod orbit;
pub mod probes;
pub mod rhythm;

pub use error::Error;

/// Arbitrary-precision non-negative integer; the domain of the map.
pub type Nat = num_bigint::BigUint;

/// Exact rational number, always in lowest terms with positive denominator.
pub type ExactRational = num_rational::BigRational;
