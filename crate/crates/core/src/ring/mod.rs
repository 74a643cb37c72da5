//! Exact coefficient arithmetic: rationals, multivariate polynomials over the
//! rationals and rational functions.

mod gcd;
mod polynomial;
mod rational;
mod squarefree;

use num_rational::BigRational;

pub use gcd::poly_gcd;
pub use polynomial::{ArithOp, Monomial, Polynomial};
pub use rational::RationalFunction;
pub use squarefree::{squarefree_decompose, SquarefreeDecomposition};

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Scalar = BigRational;

pub(crate) use gcd::{content_in, gcd_nonzero};

/// Builds a scalar from a small integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Builds the scalar `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(num.into(), den.into())
}
