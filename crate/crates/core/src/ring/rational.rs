use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::{gcd_nonzero, Polynomial, Scalar};
use crate::error::{Error, Result};

/// Quotient of polynomials, kept reduced with an integer-primitive
/// denominator whose graded-lex leading coefficient is positive. With that
/// normalization equal functions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.dim() != den.dim() {
            return Err(Error::DimensionMismatch {
                left: num.dim(),
                right: den.dim(),
            });
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_poly(Polynomial::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::from_poly(Polynomial::one(dim))
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        Self::from_poly(Polynomial::constant(dim, c))
    }

    pub fn var(dim: usize, index: usize) -> Self {
        Self::from_poly(Polynomial::var(dim, index))
    }

    pub fn from_poly(num: Polynomial) -> Self {
        let den = Polynomial::one(num.dim());
        RationalFunction { num, den }
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        let dim = num.dim();
        if num.is_zero() {
            return Self::zero(dim);
        }
        if let Some(c) = den.constant_value() {
            return Self::from_poly(num.scale(&c.recip()));
        }
        let g = gcd_nonzero(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if let Some(c) = den.constant_value() {
            return Self::from_poly(num.scale(&c.recip()));
        }
        let (s, den) = den.primitive_part();
        RationalFunction {
            num: num.scale(&s.recip()),
            den,
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if self.den == other.den {
            return Ok(Self::normalize(&self.num + &other.num, self.den.clone()));
        }
        // a + c/d with one side polynomial is already reduced
        if self.is_polynomial() {
            return Ok(Self::with_reduced(
                &(&self.num * &other.den) + &other.num,
                other.den.clone(),
            ));
        }
        if other.is_polynomial() {
            return Ok(Self::with_reduced(
                &self.num + &(&other.num * &self.den),
                self.den.clone(),
            ));
        }
        Ok(Self::normalize(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        ))
    }

    fn with_reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.dim());
        }
        RationalFunction { num, den }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.dim()));
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Ok(Self::from_poly(&self.num * &other.num));
        }
        // cross-cancel before multiplying
        let g1 = gcd_nonzero(&self.num, &other.den);
        let g2 = gcd_nonzero(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        if let Some(c) = den.constant_value() {
            return Ok(Self::from_poly(num.scale(&c.recip())));
        }
        let (s, den) = den.primitive_part();
        Ok(RationalFunction {
            num: num.scale(&s.recip()),
            den,
        })
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.try_mul(&other.recip()?)
    }

    /// Quotient rule: `(n' d - n d') / d^2`.
    pub fn partial(&self, var: usize) -> Result<Self> {
        let dn = self.num.partial(var)?;
        if self.is_polynomial() {
            return Ok(Self::from_poly(dn));
        }
        let dd = self.den.partial_unchecked(var);
        Ok(Self::normalize(
            &(&dn * &self.den) - &(&self.num * &dd),
            &self.den * &self.den,
        ))
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.evaluate(point)? / d)
    }

    pub fn pow(&self, exp: u32) -> Self {
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "[{:?}] / [{:?}]", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

/// Panics on division by zero; use [`RationalFunction::try_div`] otherwise.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.try_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn x() -> RationalFunction {
        RationalFunction::var(1, 0)
    }
    fn one() -> RationalFunction {
        RationalFunction::one(1)
    }

    #[test]
    fn reciprocal_cancels() {
        let inv_x = x().recip().unwrap();
        assert_eq!(inv_x.numerator(), &Polynomial::one(1));
        assert_eq!(inv_x.denominator(), &Polynomial::var(1, 0));
        assert!((&inv_x * &x()).is_one());
    }

    #[test]
    fn sum_reduces() {
        let xp1 = &x() + &one();
        let a = &x() / &xp1;
        let b = &one() / &xp1;
        assert!((&a + &b).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            one().try_div(&RationalFunction::zero(1)),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            RationalFunction::new(Polynomial::one(1), Polynomial::zero(1)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn denominator_is_primitive_positive() {
        // (2x) / (-4x^2 - 6) = -x / (2x^2 + 3)
        let num = Polynomial::var(1, 0).scale(&int(2));
        let den = &Polynomial::var(1, 0).pow(2).scale(&int(-4)) - &Polynomial::constant(1, int(6));
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(r.numerator(), &-Polynomial::var(1, 0));
        assert_eq!(
            r.denominator(),
            &(&Polynomial::var(1, 0).pow(2).scale(&int(2)) + &Polynomial::constant(1, int(3)))
        );
    }

    #[test]
    fn quotient_rule_log_derivative() {
        // d/dx (1/x) = -1/x^2
        let d = x().recip().unwrap().partial(0).unwrap();
        assert_eq!(d, -(&x() * &x()).recip().unwrap());
    }
}
