//! Structure-constant files: `dim = n` followed by lines `c k i j = q`
//! meaning `c^k_{ij} = q` with 1-based indices. `c k j i` is filled in by
//! antisymmetry.

use num_traits::Zero;
use pml_core::{Scalar, StructureConstants};

use crate::expr::ParseError;

pub fn parse_constants(text: &str) -> Result<StructureConstants, ParseError> {
    let mut dim: Option<usize> = None;
    let mut entries: Vec<(usize, [usize; 3], Scalar)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;
        let Some((lhs, rhs)) = content.split_once('=') else {
            return Err(ParseError::new(number, col, "expected `=`"));
        };
        let rhs_col = lhs.chars().count() + 2 + (rhs.len() - rhs.trim_start().len());
        let words: Vec<&str> = lhs.split_whitespace().collect();
        match words.as_slice() {
            ["dim"] => {
                if dim.is_some() {
                    return Err(ParseError::new(number, col, "`dim` given twice"));
                }
                let n = rhs.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(|| {
                    ParseError::new(number, rhs_col, format!("invalid dimension `{}`", rhs.trim()))
                })?;
                dim = Some(n);
            }
            ["c", k, i, j] => {
                let mut ix = [0usize; 3];
                for (slot, w) in ix.iter_mut().zip([k, i, j]) {
                    *slot = w.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| {
                        ParseError::new(number, col, format!("invalid index `{w}`"))
                    })? - 1;
                }
                let value: Scalar = rhs.trim().parse().map_err(|_| {
                    ParseError::new(number, rhs_col, format!("invalid rational `{}`", rhs.trim()))
                })?;
                entries.push((number, ix, value));
            }
            _ => {
                return Err(ParseError::new(
                    number,
                    col,
                    "expected `dim = <n>` or `c <k> <i> <j> = <rational>`",
                ))
            }
        }
    }
    let Some(n) = dim else {
        return Err(ParseError::new(1, 1, "missing `dim` line"));
    };
    let mut c = vec![Scalar::zero(); n * n * n];
    let mut set = vec![false; n * n * n];
    let slot = |k: usize, i: usize, j: usize| (k * n + i) * n + j;
    for (line, [k, i, j], v) in entries {
        if k >= n || i >= n || j >= n {
            return Err(ParseError::new(line, 1, format!("index out of range for dim = {n}")));
        }
        if i == j && !v.is_zero() {
            return Err(ParseError::new(line, 1, "c k i i must be zero"));
        }
        for (s, val) in [(slot(k, i, j), v.clone()), (slot(k, j, i), -v)] {
            if set[s] && c[s] != val {
                return Err(ParseError::new(line, 1, "conflicts with an earlier entry"));
            }
            c[s] = val;
            set[s] = true;
        }
    }
    StructureConstants::new(n, c).map_err(|e| ParseError::new(1, 1, e.to_string()))
}
