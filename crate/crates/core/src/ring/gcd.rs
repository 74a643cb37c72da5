//! Multivariate gcd over the rationals by recursive primitive pseudo-remainder
//! sequences: split off the content with respect to the highest occurring
//! variable, recurse on contents, and run a primitive PRS on the primitive
//! parts.

use num_traits::One;

use super::{Monomial, Polynomial, Scalar};
use crate::error::{Error, Result};

/// Greatest common divisor, normalized to integer-primitive form with a
/// positive graded-lex leading coefficient.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_nonzero(a, b))
}

/// gcd for inputs that are not both zero.
pub(crate) fn gcd_nonzero(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let dim = a.dim();
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(dim);
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }

    let var = (0..dim)
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("nonconstant polynomial has a variable");
    if a.degree_in(var) == 0 {
        return gcd_nonzero(a, &content_in(b, var));
    }
    if b.degree_in(var) == 0 {
        return gcd_nonzero(&content_in(a, var), b);
    }

    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let content_gcd = gcd_nonzero(&ca, &cb);
    let prim_gcd = primitive_prs(pa, pb, var);
    (&content_gcd * &prim_gcd).normalized()
}

/// Divisors of a monomial are monomials, so the gcd is the componentwise
/// minimum of exponents over all terms.
fn monomial_gcd(m: &Polynomial, p: &Polynomial) -> Polynomial {
    let (lead, _) = m.leading().expect("nonzero");
    let exps = p.terms().fold(lead.clone(), |acc, (k, _)| acc.gcd(k));
    Polynomial::monomial(m.dim(), exps, Scalar::one())
}

/// gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub(crate) fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut acc = Polynomial::zero(p.dim());
    for c in p.coefficients_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_nonzero(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part_in(p: &Polynomial, var: usize) -> Polynomial {
    p.div_exact(&content_in(p, var))
        .expect("content divides")
        .normalized()
}

/// gcd of two polynomials that are primitive with respect to `var` and
/// both involve it.
fn primitive_prs(a: Polynomial, b: Polynomial, var: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_part_in(&b, var);
        }
        if r.degree_in(var) == 0 {
            return Polynomial::one(a.dim());
        }
        a = b;
        b = primitive_part_in(&r, var);
    }
}

/// Pseudo-remainder of `a` by `b` in `var`: repeatedly cancels the leading
/// `var`-power of the remainder after scaling by the leading coefficient of
/// `b`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var);
    let lb = b.leading_coefficient_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.leading_coefficient_in(var);
        let mut e = vec![0; a.dim()];
        e[var] = dr - db;
        let shift = Monomial::from_exponents(e);
        let lr_shift = lr.mul_monomial(&shift, &Scalar::one());
        r = &(&r * &lb) - &(&lr_shift * b);
    }
    r
}
