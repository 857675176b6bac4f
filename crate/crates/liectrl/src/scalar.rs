//! Scalar abstraction for the exact linear algebra kernel.
//!
//! Every decision in this crate is made over an exact field; there is no
//! floating point in any verdict path. The two instantiations used by the
//! library are [`Rational`] (arbitrary-precision rationals) for the real Lie
//! algebras and [`GaussianRational`] (complex numbers with rational real and
//! imaginary parts) for sl(3, C).

use num::traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field scalar. The bounds are what Gaussian elimination needs:
/// ring ops, exact division, exact equality.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Arbitrary-precision rational number.
pub type Rational = num::BigRational;

/// Complex number with rational real and imaginary parts.
pub type GaussianRational = num::complex::Complex<Rational>;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for small fractions; panics on zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Gaussian rational from integer real and imaginary parts.
pub fn gauss(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(rat(re), rat(im))
}
