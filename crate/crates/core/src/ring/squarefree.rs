//! Square-free decomposition over the rationals.
//!
//! Yun's algorithm runs on the primitive part with respect to one occurring
//! variable; the content (free of that variable) is decomposed recursively and
//! parts of equal multiplicity are merged.

use std::collections::BTreeMap;

use super::{content_in, gcd_nonzero, Polynomial, Scalar};
use crate::error::{Error, Result};

/// `unit * prod(part^multiplicity)`, parts pairwise coprime, square-free,
/// normalized, with strictly increasing multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Scalar,
    pub parts: Vec<(Polynomial, u32)>,
}

impl SquarefreeDecomposition {
    /// Multiplies the decomposition back out.
    pub fn expand(&self, dim: usize) -> Polynomial {
        self.parts
            .iter()
            .fold(Polynomial::constant(dim, self.unit.clone()), |acc, (p, m)| {
                &acc * &p.pow(*m)
            })
    }
}

pub fn squarefree_decompose(p: &Polynomial) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut by_multiplicity: BTreeMap<u32, Polynomial> = BTreeMap::new();
    decompose_into(&p.normalized(), &mut by_multiplicity);

    let parts: Vec<(Polynomial, u32)> = by_multiplicity
        .into_iter()
        .map(|(m, q)| (q.normalized(), m))
        .collect();
    let product = parts
        .iter()
        .fold(Polynomial::one(p.dim()), |acc, (q, m)| &acc * &q.pow(*m));
    let unit = p.leading_coefficient() / product.leading_coefficient();
    Ok(SquarefreeDecomposition { unit, parts })
}

fn decompose_into(p: &Polynomial, out: &mut BTreeMap<u32, Polynomial>) {
    if p.is_constant() {
        return;
    }
    let var = *p.variables().last().expect("nonconstant");
    let content = content_in(p, var);
    let primitive = p.div_exact(&content).expect("content divides");
    for (part, m) in yun(&primitive, var) {
        let slot = out
            .entry(m)
            .or_insert_with(|| Polynomial::one(p.dim()));
        *slot = &*slot * &part;
    }
    decompose_into(&content, out);
}

/// Yun's algorithm with respect to `var` for `f` primitive in `var`.
fn yun(f: &Polynomial, var: usize) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    let df = f.partial_unchecked(var);
    let a0 = gcd_nonzero(f, &df);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.partial_unchecked(var);
    let mut i = 1;
    while b.degree_in(var) > 0 {
        let a = gcd_nonzero(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        let c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.partial_unchecked(var);
        i += 1;
    }
    out
}
