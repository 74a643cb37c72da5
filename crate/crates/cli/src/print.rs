//! Canonical text for engine values. Output parses back to the same value.
//!
//! Polynomials list terms in descending graded-lex order; multivectors and
//! forms list basis keys by grade, then lexicographically.

use num_traits::{One, Signed};
use pml_core::exterior::Variance;
use pml_core::{Chart, Exterior, IndexSet, Monomial, Polynomial, RationalFunction, Scalar};

/// `3`, `-3`, `1/2`.
pub fn scalar(c: &Scalar) -> String {
    c.to_string()
}

/// Coefficient as a factor: positive integers bare, everything else in
/// parentheses.
fn coefficient(c: &Scalar) -> String {
    if c.is_integer() && c.is_positive() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

fn monomial(m: &Monomial, chart: &Chart) -> String {
    let mut factors = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(chart.name(i).to_string()),
            e => factors.push(format!("{}**{e}", chart.name(i))),
        }
    }
    factors.join("*")
}

fn term(m: &Monomial, c: &Scalar, chart: &Chart) -> String {
    if m.is_one() {
        coefficient(c)
    } else if c.is_one() {
        monomial(m, chart)
    } else {
        format!("{}*{}", coefficient(c), monomial(m, chart))
    }
}

pub fn polynomial(p: &Polynomial, chart: &Chart) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .rev()
        .map(|(m, c)| term(m, c, chart))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn rational(f: &RationalFunction, chart: &Chart) -> String {
    let num = f.numerator();
    let den = f.denominator();
    if den.is_one() {
        return polynomial(num, chart);
    }
    let num_text = if num.num_terms() > 1 {
        format!("({})", polynomial(num, chart))
    } else {
        polynomial(num, chart)
    };
    let bare_den = match den.leading() {
        Some((m, c)) => den.num_terms() == 1 && c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() == 1,
        None => false,
    };
    if bare_den {
        format!("{num_text}/{}", polynomial(den, chart))
    } else {
        format!("{num_text}/({})", polynomial(den, chart))
    }
}

fn key<V: Variance>(k: IndexSet, chart: &Chart) -> String {
    k.iter()
        .map(|i| format!("{}{}", V::PREFIX, chart.name(i)))
        .collect::<Vec<_>>()
        .join("^")
}

/// Multivectors print as `x3*Dx1^Dx2`, forms as `x*dx^dy`.
pub fn exterior<V: Variance>(e: &Exterior<V>) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let chart = e.chart();
    let mut parts = Vec::new();
    for (&k, c) in e.terms() {
        let basis = key::<V>(k, chart);
        if k.is_empty() {
            parts.push(rational(c, chart));
            continue;
        }
        let part = match c.as_polynomial() {
            Some(p) if p.is_one() => basis,
            Some(p) if p.num_terms() == 1 => {
                let (m, a) = p.leading().expect("nonzero");
                format!("{}*{basis}", term(m, a, chart))
            }
            _ => format!("({})*{basis}", rational(c, chart)),
        };
        parts.push(part);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::expr::{parse_form, parse_multivector, parse_rational};
    use pml_core::ring::{frac, int};
    use pml_core::structures::lie_poisson;
    use pml_core::{DifferentialForm, Multivector, StructureConstants};

    fn plane() -> Arc<Chart> {
        Arc::new(Chart::new(["x", "y"]).unwrap())
    }

    #[test]
    fn so3_bivector() {
        let pi = lie_poisson(&StructureConstants::so3()).unwrap();
        assert_eq!(
            exterior(pi.pi()),
            "x3*Dx1^Dx2 + (-1)*x2*Dx1^Dx3 + x1*Dx2^Dx3"
        );
    }

    #[test]
    fn polynomials() {
        let c = plane();
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &(&(&x.pow(2) * &y).scale(&int(-3)) + &y.scale(&frac(1, 2))) + &Polynomial::constant(2, int(-1));
        assert_eq!(polynomial(&p, &c), "(-3)*x**2*y + (1/2)*y + (-1)");
        assert_eq!(polynomial(&Polynomial::zero(2), &c), "0");
        assert_eq!(polynomial(&Polynomial::constant(2, int(4)), &c), "4");
        assert_eq!(polynomial(&(&x + &y), &c), "x + y");
    }

    #[test]
    fn rational_functions() {
        let c = plane();
        let f = parse_rational("1/x", &c).unwrap();
        assert_eq!(rational(&f, &c), "1/x");
        let f = parse_rational("(x + 1)/(x*y)", &c).unwrap();
        assert_eq!(rational(&f, &c), "(x + 1)/(x*y)");
        let f = parse_rational("y/(2*x)", &c).unwrap();
        assert_eq!(rational(&f, &c), "(1/2)*y/x");
        let f = parse_rational("1/(x**2 + 1)", &c).unwrap();
        assert_eq!(rational(&f, &c), "1/(x**2 + 1)");
        let f = parse_rational("-1/x**2", &c).unwrap();
        assert_eq!(rational(&f, &c), "(-1)/x**2");
    }

    #[test]
    fn exterior_values() {
        let c = plane();
        assert_eq!(exterior(&Multivector::unit(&c, 1)), "Dy");
        assert_eq!(exterior(&Multivector::zero(&c)), "0");
        let u = parse_multivector("(x + y)*Dx + 1/x*Dy + x*y + Dx^Dy", &c).unwrap();
        assert_eq!(exterior(&u), "x*y + (x + y)*Dx + (1/x)*Dy + Dx^Dy");
        let w = parse_form("dx^dy - 2*dx", &c).unwrap();
        assert_eq!(exterior(&w), "(-2)*dx + dx^dy");
        assert_eq!(exterior(&DifferentialForm::zero(&c)), "0");
    }

    #[test]
    fn round_trip() {
        let c = plane();
        for text in [
            "x*y + (x + y)*Dx + (1/x)*Dy + Dx^Dy",
            "(-1/3)*x**2/(y + 1)*Dy",
            "x + y + 1",
            "(-1)*Dx",
        ] {
            let u = parse_multivector(text, &c).unwrap();
            assert_eq!(parse_multivector(&exterior(&u), &c).unwrap(), u, "{text}");
        }
    }
}
