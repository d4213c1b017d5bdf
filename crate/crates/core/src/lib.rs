//! Exact decision procedures for monomial Togliatti systems.
//!
//! An artinian monomial ideal `I` generated in degree `d` in `n + 1`
//! variables is a Togliatti system when multiplication by a general linear
//! form fails to have maximal rank from degree `d - 1` to degree `d`. This
//! crate decides that property three independent ways (the multiplication
//! map, dependence of the generators on a hyperplane, and existence of a
//! degree `d - 1` hypersurface through the lattice points of the inverse
//! system), decides minimality and smoothness of the associated toric
//! variety, and enumerates minimal systems up to permutation of the
//! variables.
//!
//! All arithmetic is exact. Linear algebra is generic over the scalar type
//! ([`exactmat::Matrix`]); the aliases below fix the scalars used on the
//! decision path.

pub mod classify;
pub mod error;
pub mod exactmat;
pub mod lattice;
pub mod lefschetz;
pub mod monomials;
pub mod report;
pub mod toric;

pub use error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Dense matrix of exact rationals.
pub type RationalMatrix = exactmat::Matrix<Rational>;
/// Dense matrix of arbitrary-precision integers.
pub type IntegerMatrix = exactmat::Matrix<Integer>;
/// Dense matrix of machine integers, for lattice data known to be small.
pub type SmallIntMatrix = exactmat::Matrix<i64>;

pub use monomials::{ExponentVector, MonomialIdeal};
