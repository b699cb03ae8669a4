//! Positive charts of smooth projective toric varieties.
//!
//! This crate is the allocation-only core: exact integer and rational
//! linear algebra, lattice polytopes, fans and cones, the chart
//! construction itself, Gröbner bases for ideal checks and the exact
//! algebraic moment map. It has no IO and no floating point; the
//! companion `poschart` crate adds JSON, the example catalog, the
//! numerical scattering solver and the command line.
//!
//! The usual entry points are [`chart::build_from_sections`] and
//! [`chart::build_from_polytope`].

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chart;
pub mod cone;
pub mod error;
pub mod exactla;
pub mod fan;
pub mod groebner;
pub mod moment;
pub mod poly;
pub mod polytope;

pub use error::{Error, Result};
pub use exactla::{IntMatrix, RatMatrix};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;

/// Shorthand for building a [`BigInt`] from a primitive integer.
pub fn int<T: Into<BigInt>>(v: T) -> BigInt {
    v.into()
}

/// Shorthand for an integral [`Rational`].
pub fn rat<T: Into<BigInt>>(v: T) -> Rational {
    Rational::from_integer(v.into())
}

/// Rational `num / den`, reduced.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Rational {
    Rational::new(num.into(), den.into())
}
