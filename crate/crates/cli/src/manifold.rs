//! The `.pml` manifold file.
//!
//! ```text
//! # comment
//! dim = 2
//! vars = x, y
//! bracket x y = x
//! volume = 1
//! shift = dx
//! ```
//!
//! Unmentioned brackets are zero, the volume defaults to 1 and the shift
//! is optional. Lines may come in any order.

use std::collections::BTreeSet;
use std::sync::Arc;

use pml_core::koszul::VolumeDensity;
use pml_core::{Chart, DifferentialForm, IndexSet, Multivector, Polynomial, RationalFunction};

use crate::expr::{parse_form, parse_polynomial, parse_rational, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldFile {
    pub chart: Arc<Chart>,
    pub brackets: Vec<BracketEntry>,
    pub volume: RationalFunction,
    pub shift: Option<DifferentialForm>,
}

impl ManifoldFile {
    /// `Σ π^{ij} ∂_i∧∂_j` over the listed entries.
    pub fn bivector(&self) -> Multivector {
        self.brackets.iter().fold(Multivector::zero(&self.chart), |acc, e| {
            let (lo, hi, sign) = if e.i < e.j { (e.i, e.j, 1) } else { (e.j, e.i, -1) };
            let key = IndexSet::from_indices(&[lo, hi]).expect("distinct");
            let c = RationalFunction::from_poly(e.value.scale(&pml_core::ring::int(sign)));
            &acc + &Multivector::term(&self.chart, key, c)
        })
    }

    pub fn volume_density(&self) -> VolumeDensity {
        let v = VolumeDensity::new(&self.chart, self.volume.clone()).expect("checked nonzero");
        match &self.shift {
            Some(s) => v.with_shift(s.clone()).expect("checked grade"),
            None => v,
        }
    }
}

struct Line<'a> {
    number: usize,
    /// 1-based column where `rest` starts.
    offset: usize,
    rest: &'a str,
}

/// Splits `key ... = value` at the first `=`, returning the left side and
/// the right side with its starting column.
fn split_assignment<'a>(line: &Line<'a>) -> Result<(&'a str, &'a str, usize), ParseError> {
    let Some(eq) = line.rest.find('=') else {
        return Err(ParseError::new(line.number, line.offset, "expected `=`"));
    };
    let lhs = line.rest[..eq].trim();
    let rhs_raw = &line.rest[eq + 1..];
    let lead = rhs_raw.len() - rhs_raw.trim_start().len();
    let col = line.offset + line.rest[..eq + 1 + lead].chars().count();
    let rhs = rhs_raw.trim();
    if rhs.is_empty() {
        return Err(ParseError::new(line.number, col, "missing value after `=`"));
    }
    Ok((lhs, rhs, col))
}

fn at(line: usize, col: usize) -> impl Fn(ParseError) -> ParseError {
    move |e| e.relocate(line, col - 1)
}

pub fn parse_manifold(text: &str) -> Result<ManifoldFile, ParseError> {
    let mut dim: Option<(usize, usize)> = None;
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut deferred: Vec<(&str, Line)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let offset = content.len() - trimmed.len() + 1;
        let word_len = trimmed
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(trimmed.len());
        let word = &trimmed[..word_len];
        let line = Line {
            number,
            offset: offset + word_len,
            rest: &trimmed[word_len..],
        };
        match word {
            "dim" => {
                if dim.is_some() {
                    return Err(ParseError::new(number, offset, "`dim` given twice"));
                }
                let (lhs, rhs, col) = split_assignment(&line)?;
                if !lhs.is_empty() {
                    return Err(ParseError::new(number, line.offset, "expected `dim = <integer>`"));
                }
                let n = rhs
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(number, col, format!("invalid dimension `{rhs}`")))?;
                dim = Some((n, number));
            }
            "vars" => {
                if vars.is_some() {
                    return Err(ParseError::new(number, offset, "`vars` given twice"));
                }
                let (lhs, rhs, col) = split_assignment(&line)?;
                if !lhs.is_empty() {
                    return Err(ParseError::new(number, line.offset, "expected `vars = a, b, ...`"));
                }
                let names: Vec<String> = rhs.split(',').map(|s| s.trim().to_string()).collect();
                vars = Some((names, col));
                deferred.push(("vars", line));
            }
            "bracket" | "volume" | "shift" => deferred.push((word, line)),
            "" => return Err(ParseError::new(number, offset, "expected a keyword")),
            other => {
                return Err(ParseError::new(
                    number,
                    offset,
                    format!("unknown keyword `{other}`"),
                ))
            }
        }
    }

    let Some((names, vars_col)) = vars else {
        return Err(ParseError::new(text.lines().count().max(1), 1, "missing `vars` line"));
    };
    let vars_line = deferred
        .iter()
        .find(|(w, _)| *w == "vars")
        .map(|(_, l)| l.number)
        .unwrap_or(1);
    let chart = Chart::new(names.clone())
        .map_err(|e| ParseError::new(vars_line, vars_col, e.to_string()))?;
    for a in &names {
        for b in &names {
            if *a == format!("D{b}") || *a == format!("d{b}") {
                return Err(ParseError::new(
                    vars_line,
                    vars_col,
                    format!("variable `{a}` clashes with the basis symbol for `{b}`"),
                ));
            }
        }
    }
    if let Some((n, line)) = dim {
        if n != chart.dim() {
            return Err(ParseError::new(
                line,
                1,
                format!("`dim = {n}` but {} variables are declared", chart.dim()),
            ));
        }
    }
    let chart = Arc::new(chart);

    let mut brackets = Vec::new();
    let mut seen = BTreeSet::new();
    let mut volume: Option<RationalFunction> = None;
    let mut shift: Option<DifferentialForm> = None;
    for (word, line) in deferred {
        match word {
            "bracket" => {
                let (lhs, rhs, col) = split_assignment(&line)?;
                let mut it = lhs.split_whitespace();
                let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                    return Err(ParseError::new(
                        line.number,
                        line.offset,
                        "expected `bracket <var> <var> = <polynomial>`",
                    ));
                };
                let index = |name: &str| {
                    chart.index_of(name).ok_or_else(|| {
                        let pos = line.rest.find(name).map_or(0, |p| line.rest[..p].chars().count());
                        ParseError::new(line.number, line.offset + pos, format!("undeclared variable `{name}`"))
                    })
                };
                let (i, j) = (index(a)?, index(b)?);
                if i == j {
                    return Err(ParseError::new(line.number, line.offset, "a bracket needs two distinct variables"));
                }
                if !seen.insert((i.min(j), i.max(j))) {
                    return Err(ParseError::new(
                        line.number,
                        line.offset,
                        format!("duplicate bracket for `{a}`, `{b}`"),
                    ));
                }
                let value = parse_polynomial(rhs, &chart).map_err(at(line.number, col))?;
                brackets.push(BracketEntry { i, j, value });
            }
            "volume" => {
                if volume.is_some() {
                    return Err(ParseError::new(line.number, 1, "`volume` given twice"));
                }
                let (lhs, rhs, col) = split_assignment(&line)?;
                if !lhs.is_empty() {
                    return Err(ParseError::new(line.number, line.offset, "expected `volume = <expression>`"));
                }
                let rho = parse_rational(rhs, &chart).map_err(at(line.number, col))?;
                if rho.is_zero() {
                    return Err(ParseError::new(line.number, col, "the volume density must be nonzero"));
                }
                volume = Some(rho);
            }
            "shift" => {
                if shift.is_some() {
                    return Err(ParseError::new(line.number, 1, "`shift` given twice"));
                }
                let (lhs, rhs, col) = split_assignment(&line)?;
                if !lhs.is_empty() {
                    return Err(ParseError::new(line.number, line.offset, "expected `shift = <1-form>`"));
                }
                let alpha = parse_form(rhs, &chart).map_err(at(line.number, col))?;
                if !alpha.is_zero() && !alpha.is_of_grade(1) {
                    return Err(ParseError::new(line.number, col, "the shift must be a 1-form"));
                }
                shift = Some(alpha);
            }
            _ => {}
        }
    }
    Ok(ManifoldFile {
        volume: volume.unwrap_or_else(|| RationalFunction::one(chart.dim())),
        shift: shift.filter(|s| !s.is_zero()),
        chart,
        brackets,
    })
}

/// Writes a file that parses back to the same structure.
pub fn render_manifold(chart: &Chart, pi: &Multivector, volume: &RationalFunction) -> String {
    let mut out = format!("dim = {}\nvars = {}\n", chart.dim(), chart.names().join(", "));
    for (k, c) in pi.terms() {
        let ix: Vec<usize> = k.iter().collect();
        out.push_str(&format!(
            "bracket {} {} = {}\n",
            chart.name(ix[0]),
            chart.name(ix[1]),
            crate::print::rational(c, chart)
        ));
    }
    out.push_str(&format!("volume = {}\n", crate::print::rational(volume, chart)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let f = parse_manifold("dim = 2\nvars = x, y\nbracket x y = x\nvolume = 1\n").unwrap();
        let key = IndexSet::from_indices(&[0, 1]).unwrap();
        assert_eq!(
            f.bivector(),
            Multivector::term(&f.chart, key, RationalFunction::var(2, 0))
        );
        assert!(f.volume.is_one());
        assert_eq!(f.shift, None);
    }

    #[test]
    fn reversed_pair_and_comments() {
        let f = parse_manifold("# plane\nvars = x, y   # coordinates\nbracket y x = x\n").unwrap();
        let key = IndexSet::from_indices(&[0, 1]).unwrap();
        assert_eq!(
            f.bivector(),
            Multivector::term(&f.chart, key, -RationalFunction::var(2, 0))
        );
    }

    #[test]
    fn errors() {
        let e = parse_manifold("dim = 1\nvars = x\nbracket x y = x\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("undeclared variable `y`"));
        let e = parse_manifold("vars = x, y\nvolume = 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 10));
        let e = parse_manifold("vars = x, y\nbracket x y = x\nbracket y x = 1\n").unwrap_err();
        assert!(e.message.contains("duplicate"));
        let e = parse_manifold("vars = x, y\nbracket x y = x + w\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 19));
        let e = parse_manifold("vars = x, y\nbracket x y = 1/x\n").unwrap_err();
        assert_eq!(e.message, "expected a polynomial");
        let e = parse_manifold("dim = 3\nvars = x, y\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(parse_manifold("vars = x, dx\n").is_err());
        assert!(parse_manifold("vars = x, y\nshift = dx^dy\n").is_err());
        assert!(parse_manifold("vars = x, y\nfoo = 1\n").is_err());
        assert!(parse_manifold("bracket x y = 1\n").is_err());
    }

    #[test]
    fn render_round_trip() {
        let f = parse_manifold("vars = a, b, c\nbracket a b = c\nbracket b c = a - 2*b\nvolume = 1/(a**2 + 1)\n").unwrap();
        let text = render_manifold(&f.chart, &f.bivector(), &f.volume);
        let g = parse_manifold(&text).unwrap();
        assert_eq!(g.bivector(), f.bivector());
        assert_eq!(g.volume, f.volume);
    }
}
