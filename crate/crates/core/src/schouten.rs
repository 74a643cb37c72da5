//! The odd Laplacian `Δ = Σ_i ∂/∂x_i ∂/∂θ_i`, the Schouten–Nijenhuis bracket
//! it generates, and an independent coordinate check of the Jacobi identity.
//!
//! The bracket is defined by
//!
//! ```text
//! {u, v} = (-1)^p [ Δ(u∧v) - (Δu)∧v - (-1)^p u∧(Δv) ]      (u of grade p)
//! ```
//!
//! Under this definition `{f, X} = X(f)`, `{X, f} = -X(f)` and `{X, Y}` is the
//! negative of the usual commutator of vector fields.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exterior::{Chart, IndexSet, Multivector};
use crate::ring::RationalFunction;

/// `Δu = Σ_i ∂_{x_i}(∂/∂θ_i u)`.
pub fn odd_laplacian(u: &Multivector) -> Multivector {
    let mut out = Multivector::zero(u.chart());
    for i in 0..u.dim() {
        let inner = u.odd_partial_unchecked(i);
        if inner.is_zero() {
            continue;
        }
        out = &out + &inner.coefficient_partial(i).expect("index within chart");
    }
    out
}

/// Grade of a pure-grade multivector; zero is reported as grade 0.
pub(crate) fn require_pure(u: &Multivector) -> Result<usize> {
    if u.is_zero() {
        return Ok(0);
    }
    u.pure_grade().ok_or(Error::NonPureGrade)
}

/// The right-hand side of the generating identity for an arbitrary
/// grade-lowering operator `d`:
/// `(-1)^p [d(u∧v) - d(u)∧v - (-1)^p u∧d(v)]`.
pub fn bracket_generated_by(
    d: impl Fn(&Multivector) -> Multivector,
    u: &Multivector,
    v: &Multivector,
) -> Result<Multivector> {
    let p = require_pure(u)?;
    require_pure(v)?;
    let uv = u.try_wedge(v)?;
    let first = d(&uv);
    let second = d(u).wedge(v);
    let third = u.wedge(&d(v));
    let inner = if p % 2 == 0 {
        &(&first - &second) - &third
    } else {
        &(&first - &second) + &third
    };
    Ok(if p % 2 == 0 { inner } else { -inner })
}

/// Schouten–Nijenhuis bracket of pure-grade multivectors.
pub fn schouten(u: &Multivector, v: &Multivector) -> Result<Multivector> {
    bracket_generated_by(odd_laplacian, u, v)
}

/// `π^{ij}` with full antisymmetry, 0-based indices.
pub(crate) fn bivector_entry(pi: &Multivector, i: usize, j: usize) -> RationalFunction {
    match i.cmp(&j) {
        std::cmp::Ordering::Equal => RationalFunction::zero(pi.dim()),
        std::cmp::Ordering::Less => pi.coefficient(IndexSet::from_indices(&[i, j]).unwrap()),
        std::cmp::Ordering::Greater => -pi.coefficient(IndexSet::from_indices(&[i, j]).unwrap()),
    }
}

/// A trivector component of the Jacobiator that fails to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiWitness {
    /// 0-based indices `i < j < k`.
    pub indices: (usize, usize, usize),
    pub value: RationalFunction,
}

impl fmt::Display for JacobiWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.indices;
        write!(f, "component ({}, {}, {}) = {:?}", i + 1, j + 1, k + 1, self.value)
    }
}

/// Coordinate Jacobi check, independent of [`schouten`]: for all `i<j<k`,
/// `Σ_l (π^{li}∂_lπ^{jk} + π^{lj}∂_lπ^{ki} + π^{lk}∂_lπ^{ij}) = 0`.
///
/// Only the grade-2 part of `pi` is read. Returns the first failing
/// component in lexicographic order.
pub fn jacobi_oracle(pi: &Multivector) -> std::result::Result<(), JacobiWitness> {
    let n = pi.dim();
    let entry = |a, b| bivector_entry(pi, a, b);
    let d_entry = |l, a, b| entry(a, b).partial(l).expect("index within chart");
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut sum = RationalFunction::zero(n);
                for l in 0..n {
                    sum = &sum + &(&entry(l, i) * &d_entry(l, j, k));
                    sum = &sum + &(&entry(l, j) * &d_entry(l, k, i));
                    sum = &sum + &(&entry(l, k) * &d_entry(l, i, j));
                }
                if !sum.is_zero() {
                    return Err(JacobiWitness {
                        indices: (i, j, k),
                        value: sum,
                    });
                }
            }
        }
    }
    Ok(())
}

/// A bivector with polynomial coefficients, optionally known to satisfy the
/// Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonStructure {
    pi: Multivector,
    jacobi_verified: bool,
}

impl PoissonStructure {
    /// Wraps `pi` after running [`jacobi_oracle`].
    pub fn new(pi: Multivector) -> Result<Self> {
        Self::unverified(pi)?.verify()
    }

    /// Wraps `pi` without checking Jacobi. Grade and polynomiality are still
    /// enforced.
    pub fn unverified(pi: Multivector) -> Result<Self> {
        if !pi.is_of_grade(2) {
            return Err(Error::WrongGrade {
                expected: 2,
                found: pi.pure_grade(),
            });
        }
        if !pi.has_polynomial_coefficients() {
            return Err(Error::NonPolynomial);
        }
        Ok(PoissonStructure {
            pi,
            jacobi_verified: false,
        })
    }

    pub fn verify(self) -> Result<Self> {
        jacobi_oracle(&self.pi).map_err(Error::NotPoisson)?;
        Ok(PoissonStructure {
            jacobi_verified: true,
            ..self
        })
    }

    /// Builds `Σ_{i<j} π^{ij} ∂_i∧∂_j` from `(i, j, π^{ij})` entries; `i > j`
    /// entries are stored with the sign flipped.
    pub fn from_entries(
        chart: &Arc<Chart>,
        entries: impl IntoIterator<Item = (usize, usize, RationalFunction)>,
    ) -> Result<Self> {
        let mut pi = Multivector::zero(chart);
        for (i, j, c) in entries {
            if i == j || i >= chart.dim() || j >= chart.dim() {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    dim: chart.dim(),
                });
            }
            let key = IndexSet::from_indices(&[i, j]).unwrap();
            let c = if i < j { c } else { -c };
            pi = &pi + &Multivector::term(chart, key, c);
        }
        Self::new(pi)
    }

    pub fn pi(&self) -> &Multivector {
        &self.pi
    }

    pub fn chart(&self) -> &Arc<Chart> {
        self.pi.chart()
    }

    pub fn dim(&self) -> usize {
        self.pi.dim()
    }

    pub fn is_verified(&self) -> bool {
        self.jacobi_verified
    }

    pub(crate) fn require_verified(&self) -> Result<()> {
        if self.jacobi_verified {
            Ok(())
        } else {
            Err(Error::UnverifiedStructure)
        }
    }

    /// `π^{ij}` (0-based), antisymmetric in `i, j`.
    pub fn entry(&self, i: usize, j: usize) -> RationalFunction {
        bivector_entry(&self.pi, i, j)
    }

    /// `{f, g} = Σ_{i<j} π^{ij}(∂_i f ∂_j g - ∂_j f ∂_i g)`.
    pub fn function_bracket(&self, f: &RationalFunction, g: &RationalFunction) -> Result<RationalFunction> {
        let n = self.dim();
        let mut out = RationalFunction::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let pij = self.entry(i, j);
                if pij.is_zero() {
                    continue;
                }
                let t = &(&f.partial(i)? * &g.partial(j)?) - &(&f.partial(j)? * &g.partial(i)?);
                out = &out + &(&pij * &t);
            }
        }
        Ok(out)
    }
}

/// Whether `xi` preserves the structure: `{ξ, π} = 0`.
pub fn is_poisson_field(xi: &Multivector, pi: &PoissonStructure) -> Result<bool> {
    pi.require_verified()?;
    if !xi.is_of_grade(1) {
        return Err(Error::WrongGrade {
            expected: 1,
            found: xi.pure_grade(),
        });
    }
    Ok(schouten(xi, pi.pi())?.is_zero())
}
