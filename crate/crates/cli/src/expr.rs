//! Expressions over a chart.
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := "-" unary | wedge
//! wedge   := power ("^" power)*
//! power   := atom ("**" "-"? integer)?
//! atom    := integer | name | "D" name | "d" name | "(" sum ")"
//! ```
//!
//! `^` is the wedge product and only accepts tangent or cotangent operands;
//! powers are written `**`.

use std::fmt;
use std::sync::Arc;

use pml_core::{Chart, DifferentialForm, Multivector, Polynomial, RationalFunction, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Moves an error reported against a fragment to its place in a file.
    pub fn relocate(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// The value of an expression: a function, a multivector or a form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(RationalFunction),
    Tangent(Multivector),
    Cotangent(DifferentialForm),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "function",
            Value::Tangent(_) => "multivector",
            Value::Cotangent(_) => "form",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    StarStar,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Name(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::StarStar => f.write_str("`**`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Open => f.write_str("`(`"),
            Tok::Close => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' if chars.get(i + 1) == Some(&'*') => {
                i += 1;
                Tok::StarStar
            }
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(chars[start..=i].iter().collect())
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Tok::Name(chars[start..=i].iter().collect())
            }
            other => return Err(ParseError::new(1, col, format!("unexpected character `{other}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    chart: &'a Arc<Chart>,
}

type Parsed = Result<Value, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(1, column, message))
    }

    fn sum(&mut self) -> Parsed {
        let mut acc = self.product()?;
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            let (_, col) = self.bump();
            let rhs = self.product()?;
            acc = self.add(acc, rhs, negate, col)?;
        }
    }

    fn product(&mut self) -> Parsed {
        let mut acc = self.unary()?;
        loop {
            let divide = match self.peek() {
                Tok::Star => false,
                Tok::Slash => true,
                _ => return Ok(acc),
            };
            let (_, col) = self.bump();
            let rhs = self.unary()?;
            acc = if divide {
                self.divide(acc, rhs, col)?
            } else {
                self.multiply(acc, rhs, col)?
            };
        }
    }

    fn unary(&mut self) -> Parsed {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(negate(self.unary()?));
        }
        self.wedge()
    }

    fn wedge(&mut self) -> Parsed {
        let mut acc = self.power()?;
        while *self.peek() == Tok::Caret {
            let (_, col) = self.bump();
            let rhs = self.power()?;
            acc = match (acc, rhs) {
                (Value::Tangent(a), Value::Tangent(b)) => Value::Tangent(a.wedge(&b)),
                (Value::Cotangent(a), Value::Cotangent(b)) => Value::Cotangent(a.wedge(&b)),
                (a, b) => {
                    let hint = if matches!(a, Value::Scalar(_)) || matches!(b, Value::Scalar(_)) {
                        "; use `**` for powers"
                    } else {
                        ""
                    };
                    return self.err(
                        col,
                        format!(
                            "`^` is the wedge product and needs tangent or cotangent operands of one kind, found {} and {}{hint}",
                            a.kind(),
                            b.kind()
                        ),
                    );
                }
            };
        }
        Ok(acc)
    }

    fn power(&mut self) -> Parsed {
        let base_col = self.column();
        let base = self.atom()?;
        if *self.peek() != Tok::StarStar {
            return Ok(base);
        }
        let (_, col) = self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let exp_col = self.column();
        let exp: u32 = match self.bump().0 {
            Tok::Int(digits) => match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.err(exp_col, "exponent too large"),
            },
            other => return self.err(exp_col, format!("expected an integer exponent, found {other}")),
        };
        let Value::Scalar(f) = base else {
            return self.err(base_col, format!("cannot raise a {} to a power", base.kind()));
        };
        if !negative {
            return Ok(Value::Scalar(f.pow(exp)));
        }
        match f.recip() {
            Ok(r) => Ok(Value::Scalar(r.pow(exp))),
            Err(_) => self.err(col, "negative power of zero"),
        }
    }

    fn atom(&mut self) -> Parsed {
        let (tok, col) = self.bump();
        let n = self.chart.dim();
        match tok {
            Tok::Int(digits) => {
                let c: Scalar = digits.parse().expect("digits");
                Ok(Value::Scalar(RationalFunction::constant(n, c)))
            }
            Tok::Name(name) => {
                if let Some(i) = self.chart.index_of(&name) {
                    return Ok(Value::Scalar(RationalFunction::var(n, i)));
                }
                let rest = name.get(1..).unwrap_or("");
                match (name.chars().next(), self.chart.index_of(rest)) {
                    (Some('D'), Some(i)) => Ok(Value::Tangent(Multivector::unit(self.chart, i))),
                    (Some('d'), Some(i)) => Ok(Value::Cotangent(DifferentialForm::unit(self.chart, i))),
                    _ => self.err(col, format!("unknown variable `{name}`")),
                }
            }
            Tok::Open => {
                let inner = self.sum()?;
                let (close, ccol) = self.bump();
                if close != Tok::Close {
                    return self.err(ccol, format!("expected `)`, found {close}"));
                }
                Ok(inner)
            }
            other => self.err(col, format!("expected an operand, found {other}")),
        }
    }

    fn add(&self, a: Value, b: Value, negate_rhs: bool, col: usize) -> Parsed {
        let b = if negate_rhs { negate(b) } else { b };
        Ok(match (a, b) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
            (Value::Tangent(a), Value::Tangent(b)) => Value::Tangent(&a + &b),
            (Value::Cotangent(a), Value::Cotangent(b)) => Value::Cotangent(&a + &b),
            (Value::Scalar(f), Value::Tangent(u)) | (Value::Tangent(u), Value::Scalar(f)) => {
                Value::Tangent(&u + &Multivector::scalar(self.chart, f))
            }
            (Value::Scalar(f), Value::Cotangent(w)) | (Value::Cotangent(w), Value::Scalar(f)) => {
                Value::Cotangent(&w + &DifferentialForm::scalar(self.chart, f))
            }
            _ => return self.err(col, "cannot add a multivector and a form"),
        })
    }

    fn multiply(&self, a: Value, b: Value, col: usize) -> Parsed {
        Ok(match (a, b) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
            (Value::Scalar(f), Value::Tangent(u)) | (Value::Tangent(u), Value::Scalar(f)) => {
                Value::Tangent(u.scale(&f))
            }
            (Value::Scalar(f), Value::Cotangent(w)) | (Value::Cotangent(w), Value::Scalar(f)) => {
                Value::Cotangent(w.scale(&f))
            }
            _ => return self.err(col, "`*` multiplies by functions only; use `^` to wedge"),
        })
    }

    fn divide(&self, a: Value, b: Value, col: usize) -> Parsed {
        let Value::Scalar(d) = b else {
            return self.err(col, format!("cannot divide by a {}", b.kind()));
        };
        let Ok(inv) = d.recip() else {
            return self.err(col, "division by zero");
        };
        Ok(match a {
            Value::Scalar(f) => Value::Scalar(&f * &inv),
            Value::Tangent(u) => Value::Tangent(u.scale(&inv)),
            Value::Cotangent(w) => Value::Cotangent(w.scale(&inv)),
        })
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(f) => Value::Scalar(-f),
        Value::Tangent(u) => Value::Tangent(-u),
        Value::Cotangent(w) => Value::Cotangent(-w),
    }
}

/// Parses a single-line expression. Columns in errors count from 1 and
/// the line is reported as 1.
pub fn parse_expression(text: &str, chart: &Arc<Chart>) -> Result<Value, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, chart };
    let value = p.sum()?;
    match p.peek() {
        Tok::End => Ok(value),
        other => p.err(p.column(), format!("unexpected {other}")),
    }
}

pub fn parse_rational(text: &str, chart: &Arc<Chart>) -> Result<RationalFunction, ParseError> {
    match parse_expression(text, chart)? {
        Value::Scalar(f) => Ok(f),
        other => Err(ParseError::new(1, 1, format!("expected a function, found a {}", other.kind()))),
    }
}

pub fn parse_polynomial(text: &str, chart: &Arc<Chart>) -> Result<Polynomial, ParseError> {
    let f = parse_rational(text, chart)?;
    f.as_polynomial()
        .cloned()
        .ok_or_else(|| ParseError::new(1, 1, "expected a polynomial"))
}

/// Functions are accepted as grade-0 multivectors.
pub fn parse_multivector(text: &str, chart: &Arc<Chart>) -> Result<Multivector, ParseError> {
    match parse_expression(text, chart)? {
        Value::Tangent(u) => Ok(u),
        Value::Scalar(f) => Ok(Multivector::scalar(chart, f)),
        Value::Cotangent(_) => Err(ParseError::new(1, 1, "expected a multivector, found a form")),
    }
}

/// Functions are accepted as 0-forms.
pub fn parse_form(text: &str, chart: &Arc<Chart>) -> Result<DifferentialForm, ParseError> {
    match parse_expression(text, chart)? {
        Value::Cotangent(w) => Ok(w),
        Value::Scalar(f) => Ok(DifferentialForm::scalar(chart, f)),
        Value::Tangent(_) => Err(ParseError::new(1, 1, "expected a form, found a multivector")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pml_core::IndexSet;

    fn xyz() -> Arc<Chart> {
        Arc::new(Chart::new(["x", "y", "z"]).unwrap())
    }

    fn key(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix).unwrap()
    }

    #[test]
    fn precedence() {
        let c = xyz();
        let x = RationalFunction::var(3, 0);
        let u = parse_multivector("x*Dx^Dy", &c).unwrap();
        assert_eq!(u, Multivector::basis(&c, key(&[0, 1])).scale(&x));
        let u = parse_multivector("Dy^Dx", &c).unwrap();
        assert_eq!(u, -Multivector::basis(&c, key(&[0, 1])));
        let u = parse_multivector("x**2*Dx", &c).unwrap();
        assert_eq!(u, Multivector::unit(&c, 0).scale(&x.pow(2)));
        let u = parse_multivector("-Dx^Dy + 3*Dy^Dz", &c).unwrap();
        assert_eq!(
            u,
            &-Multivector::basis(&c, key(&[0, 1]))
                + &Multivector::basis(&c, key(&[1, 2])).scale(&RationalFunction::constant(3, pml_core::ring::int(3)))
        );
        assert_eq!(parse_rational("-x**2", &c).unwrap(), -x.pow(2));
        assert_eq!(parse_rational("2 - 3 - 4", &c).unwrap(), RationalFunction::constant(3, pml_core::ring::int(-5)));
        assert_eq!(parse_rational("x**-1", &c).unwrap(), x.recip().unwrap());
        assert_eq!(parse_rational("x/y/z", &c).unwrap(), parse_rational("x/(y*z)", &c).unwrap());
    }

    #[test]
    fn errors_are_positioned() {
        let c = xyz();
        let e = parse_expression("x + w", &c).unwrap_err();
        assert_eq!((e.column, e.message.as_str()), (5, "unknown variable `w`"));
        let e = parse_expression("x^2", &c).unwrap_err();
        assert_eq!(e.column, 2);
        assert!(e.message.contains("**"));
        let e = parse_expression("Dx*Dy", &c).unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_expression("Dx^dy", &c).unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_expression("(x + y", &c).unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_expression("x / (y - y)", &c).unwrap_err();
        assert_eq!(e.message, "division by zero");
        assert!(parse_expression("x $ y", &c).is_err());
        assert!(parse_expression("x y", &c).is_err());
        assert!(parse_expression("Dx + dx", &c).is_err());
        assert!(parse_polynomial("1/x", &c).is_err());
    }
}
