use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors lexicographically (so `x > y` when `x` is the first variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn var(dim: usize, index: usize) -> Self {
        let mut e = vec![0; dim];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees `other.divides(self)`.
    pub(crate) fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub(crate) fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// All monomials in `dim` variables of total degree exactly `degree`,
    /// in graded-lex descending order.
    pub fn all_of_degree(dim: usize, degree: u32) -> Vec<Monomial> {
        fn rec(dim: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == dim {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(dim, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            return out;
        }
        rec(dim, degree, &mut Vec::with_capacity(dim), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Multivariate polynomial with rational coefficients on a chart of fixed
/// dimension. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Scalar::one())
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        Self::monomial(dim, Monomial::one(dim), c)
    }

    /// The coordinate function `x_index` (0-based).
    pub fn var(dim: usize, index: usize) -> Self {
        assert!(index < dim, "variable index {index} out of range");
        Self::monomial(dim, Monomial::var(dim, index), Scalar::one())
    }

    pub fn monomial(dim: usize, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.dim(), dim, "monomial length differs from chart dimension");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { dim, terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "monomial length differs from chart dimension");
            p.add_term(m, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one(self.dim)))
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.dim))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Indices of variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&v| self.terms.keys().any(|m| m.0[v] > 0))
            .collect()
    }

    /// Coefficients of `var^k`, for `k = 0..=degree_in(var)`, as polynomials
    /// not involving `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Polynomial::zero(self.dim); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut stripped = m.clone();
            stripped.0[var] = 0;
            out[k].add_term(stripped, c.clone());
        }
        out
    }

    /// Coefficient of the highest power of `var`.
    pub fn leading_coefficient_in(&self, var: usize) -> Polynomial {
        let deg = self.degree_in(var);
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            if m.0[var] == deg {
                let mut stripped = m.clone();
                stripped.0[var] = 0;
                out.add_term(stripped, c.clone());
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub(crate) fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    /// Checked ring operation; fails on a dimension mismatch.
    pub fn try_arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
        out
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.dim);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `x_var` (0-based).
    pub fn partial(&self, var: usize) -> Result<Polynomial> {
        if var >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: var,
                dim: self.dim,
            });
        }
        Ok(self.partial_unchecked(var))
    }

    pub(crate) fn partial_unchecked(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[var] -= 1;
            out.add_term(d, c * Scalar::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact value at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder. Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading().expect("division by zero polynomial");
        if divisor.is_monomial() {
            let mut q = Polynomial::zero(self.dim);
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                q.terms.insert(m.div(lm), c / lc);
            }
            return Some(q);
        }
        let mut q = Polynomial::zero(self.dim);
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let tm = rm.div(lm);
            let tc = rc / lc;
            r = &r - &divisor.mul_monomial(&tm, &tc);
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Integer content-free form with a positive graded-lex leading
    /// coefficient, together with the scalar `s` such that
    /// `self = s * normalized`.
    pub fn primitive_part(&self) -> (Scalar, Polynomial) {
        if self.is_zero() {
            return (Scalar::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut content = Scalar::new(num_gcd, den_lcm);
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// See [`Polynomial::primitive_part`].
    pub fn normalized(&self) -> Polynomial {
        self.primitive_part().1
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{e}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_arith(rhs, ArithOp::Add).expect("dimension mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_arith(rhs, ArithOp::Sub).expect("dimension mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_arith(rhs, ArithOp::Mul).expect("dimension mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
