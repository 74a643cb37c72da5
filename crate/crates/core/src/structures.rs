//! Example classes of Poisson structures and their analyzers: Lie–Poisson
//! structures on duals of Lie algebras, Casimir solving, the divisor of the
//! top power, and the Liouville identity on symplectic charts.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{Chart, IndexSet, Multivector};
use crate::koszul::VolumeDensity;
use crate::linalg;
use crate::modular::{hamiltonian_field, modular_field};
use crate::ring::{
    int, squarefree_decompose, Monomial, Polynomial, RationalFunction, Scalar,
};
use crate::schouten::{jacobi_oracle, PoissonStructure};

/// `(i, j, [(k, c^k_{ij})])`: one bracket `[e_i, e_j]`.
pub type Bracket<'a> = (usize, usize, &'a [(usize, Scalar)]);

/// Structure constants `c^k_{ij}` of a Lie algebra, `[e_i, e_j] = Σ_k c^k_{ij} e_k`,
/// validated for antisymmetry and Jacobi on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    /// Flattened `c[k][i][j]`.
    c: Vec<Scalar>,
}

impl StructureConstants {
    /// `tensor[(k * n + i) * n + j] = c^k_{ij}`.
    pub fn new(dim: usize, tensor: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidStructureConstants("dimension must be positive".into()));
        }
        if tensor.len() != dim * dim * dim {
            return Err(Error::InvalidStructureConstants(format!(
                "expected {} entries, got {}",
                dim * dim * dim,
                tensor.len()
            )));
        }
        let sc = StructureConstants { dim, c: tensor };
        sc.validate()?;
        Ok(sc)
    }

    /// Builds from brackets `[e_i, e_j] = Σ (k, coefficient)`; the entries for
    /// `[e_j, e_i]` are filled in by antisymmetry. Indices are 0-based.
    pub fn from_brackets(dim: usize, brackets: &[Bracket<'_>]) -> Result<Self> {
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        for &(i, j, terms) in brackets {
            if i >= dim || j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
                return Err(Error::InvalidStructureConstants("index out of range".into()));
            }
            for (k, v) in terms {
                c[(k * dim + i) * dim + j] += v;
                c[(k * dim + j) * dim + i] -= v;
            }
        }
        Self::new(dim, c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c^k_{ij}` (0-based).
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if *self.get(k, i, j) != -self.get(k, j, i).clone() {
                        return Err(Error::InvalidStructureConstants(format!(
                            "c^{}_{{{}{}}} is not antisymmetric",
                            k + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = Scalar::zero();
                        for m in 0..n {
                            s += self.get(m, i, j) * self.get(l, m, k)
                                + self.get(m, j, k) * self.get(l, m, i)
                                + self.get(m, k, i) * self.get(l, m, j);
                        }
                        if !s.is_zero() {
                            return Err(Error::InvalidStructureConstants(format!(
                                "Jacobi fails for (e{}, e{}, e{})",
                                i + 1,
                                j + 1,
                                k + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `λ_k = Σ_j c^j_{jk}`.
    pub fn modular_character(&self) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| (0..self.dim).map(|j| self.get(j, j, k).clone()).sum())
            .collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.modular_character().iter().all(Zero::is_zero)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, vec![Scalar::zero(); dim * dim * dim]).expect("abelian")
    }

    /// `[e1, e2] = e1`.
    pub fn solvable_2d() -> Self {
        Self::from_brackets(2, &[(0, 1, &[(0, int(1))])]).expect("valid")
    }

    /// `[e1, e2] = e3`.
    pub fn heisenberg() -> Self {
        Self::from_brackets(3, &[(0, 1, &[(2, int(1))])]).expect("valid")
    }

    /// `c^k_{ij} = ε_{ijk}`.
    pub fn so3() -> Self {
        Self::from_brackets(
            3,
            &[
                (0, 1, &[(2, int(1))]),
                (1, 2, &[(0, int(1))]),
                (2, 0, &[(1, int(1))]),
            ],
        )
        .expect("valid")
    }

    /// Basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        Self::from_brackets(
            3,
            &[
                (0, 1, &[(1, int(2))]),
                (0, 2, &[(2, int(-2))]),
                (1, 2, &[(0, int(1))]),
            ],
        )
        .expect("valid")
    }

    /// `[e3, e1] = e1`, `[e3, e2] = e2`.
    pub fn book_3d() -> Self {
        Self::from_brackets(3, &[(2, 0, &[(0, int(1))]), (2, 1, &[(1, int(1))])]).expect("valid")
    }

    /// `R^3 ⋊ R`: `[e4, e1] = e1`, `[e4, e2] = e1 + e2`, `[e4, e3] = -2 e3`.
    pub fn solvable_4d() -> Self {
        Self::from_brackets(
            4,
            &[
                (3, 0, &[(0, int(1))]),
                (3, 1, &[(0, int(1)), (1, int(1))]),
                (3, 2, &[(2, int(-2))]),
            ],
        )
        .expect("valid")
    }

    /// Named algebras used by tests and the CLI sweep.
    pub fn library() -> Vec<(&'static str, StructureConstants)> {
        vec![
            ("abelian-3", Self::abelian(3)),
            ("solvable-2", Self::solvable_2d()),
            ("heisenberg", Self::heisenberg()),
            ("so3", Self::so3()),
            ("sl2", Self::sl2()),
            ("book-3", Self::book_3d()),
            ("solvable-4", Self::solvable_4d()),
        ]
    }
}

/// `π^{ij} = Σ_k c^k_{ij} x_k` on the chart `x1, …, xn`.
pub fn lie_poisson(sc: &StructureConstants) -> Result<PoissonStructure> {
    lie_poisson_on(sc, &Arc::new(Chart::indexed(sc.dim())))
}

pub fn lie_poisson_on(sc: &StructureConstants, chart: &Arc<Chart>) -> Result<PoissonStructure> {
    let n = sc.dim();
    if chart.dim() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: chart.dim(),
        });
    }
    let mut pi = Multivector::zero(chart);
    for i in 0..n {
        for j in i + 1..n {
            let linear = Polynomial::from_terms(
                n,
                (0..n).map(|k| (Monomial::var(n, k), sc.get(k, i, j).clone())),
            );
            let key = IndexSet::from_indices(&[i, j]).unwrap();
            pi = &pi + &Multivector::term(chart, key, linear.into());
        }
    }
    jacobi_oracle(&pi).map_err(Error::NotPoisson)?;
    PoissonStructure::new(pi)
}

/// See [`StructureConstants::modular_character`].
pub fn modular_character(sc: &StructureConstants) -> Vec<Scalar> {
    sc.modular_character()
}

/// Basis, modulo constants, of the polynomial Casimirs of degree at most
/// `max_degree`, from the exact nullspace of `Σ_j π^{kj} ∂_j C = 0` over the
/// monomial coefficients of `C`.
pub fn casimir_basis(pi: &PoissonStructure, max_degree: u32) -> Result<Vec<Polynomial>> {
    pi.require_verified()?;
    if max_degree < 1 {
        return Err(Error::InvalidMaxDegree);
    }
    let n = pi.dim();
    // unknowns in ascending graded-lex order
    let unknowns: Vec<Monomial> = (1..=max_degree)
        .flat_map(|d| Monomial::all_of_degree(n, d).into_iter().rev())
        .collect();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    pi.entry(k, j)
                        .as_polynomial()
                        .cloned()
                        .expect("Poisson structures have polynomial coefficients")
                })
                .collect()
        })
        .collect();

    // row key: (k, monomial of the equation)
    let mut rows: std::collections::BTreeMap<(usize, Monomial), Vec<Scalar>> = Default::default();
    for (col, m) in unknowns.iter().enumerate() {
        let mono = Polynomial::monomial(n, m.clone(), Scalar::one());
        let grads: Vec<Polynomial> = (0..n).map(|j| mono.partial_unchecked(j)).collect();
        for (k, row_entries) in entries.iter().enumerate() {
            let mut e = Polynomial::zero(n);
            for (pkj, g) in row_entries.iter().zip(&grads) {
                if !pkj.is_zero() && !g.is_zero() {
                    e = &e + &(pkj * g);
                }
            }
            for (em, c) in e.terms() {
                rows.entry((k, em.clone()))
                    .or_insert_with(|| vec![Scalar::zero(); unknowns.len()])[col] = c.clone();
            }
        }
    }
    let matrix: Vec<Vec<Scalar>> = rows.into_values().collect();
    let basis = linalg::nullspace(&matrix, unknowns.len())
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                n,
                unknowns
                    .iter()
                    .zip(v)
                    .map(|(m, a)| (m.clone(), Scalar::from_integer(a))),
            )
            .normalized()
        })
        .collect();
    Ok(basis)
}

/// The top power `π^{∧n}/n!` on a `2n`-dimensional chart and the
/// square-free decomposition of its density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorReport {
    pub top_polynomial: Polynomial,
    pub unit: Scalar,
    pub parts: Vec<(Polynomial, u32)>,
}

/// Accepts unverified structures; the top power does not use Jacobi.
pub fn top_power(pi: &PoissonStructure) -> Result<DivisorReport> {
    let dim = pi.dim();
    if dim % 2 == 1 {
        return Err(Error::OddDimension(dim));
    }
    let half = dim / 2;
    let mut power = Multivector::scalar(pi.chart(), RationalFunction::one(dim));
    for _ in 0..half {
        power = power.wedge(pi.pi());
    }
    let factorial: Scalar = (1..=half as i64).map(int).product();
    let density = power
        .coefficient(IndexSet::full(dim))
        .scale(&factorial.recip());
    let top = density
        .as_polynomial()
        .cloned()
        .ok_or(Error::NonPolynomial)?;
    if top.is_zero() {
        return Err(Error::DegenerateStructure);
    }
    let sf = squarefree_decompose(&top)?;
    Ok(DivisorReport {
        top_polynomial: top,
        unit: sf.unit,
        parts: sf.parts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiouvilleReport {
    /// Density `1/P` of the Liouville volume, `P` the top-power density.
    pub liouville_density: RationalFunction,
    /// `f = (Liouville density) / ρ`.
    pub f: RationalFunction,
    /// `ε` with `Dπ = ε (1/f) X_f`, if any.
    pub sign: Option<i32>,
}

impl LiouvilleReport {
    pub fn holds(&self) -> bool {
        self.sign.is_some()
    }
}

/// Compares the modular field with `±X_{log f}`, `f` the ratio of the
/// Liouville volume to `ν`.
pub fn liouville_identity(pi: &PoissonStructure, volume: &VolumeDensity) -> Result<LiouvilleReport> {
    if volume.shift().is_some() {
        return Err(Error::ShiftedVolume);
    }
    let report = top_power(pi)?;
    let p = RationalFunction::from_poly(report.top_polynomial);
    let liouville_density = p.recip()?;
    let f = liouville_density.try_div(volume.rho())?;
    let modular = modular_field(pi, volume)?.field;
    let log_field = hamiltonian_field(&f, pi)?.scale(&f.recip()?);
    let sign = if modular == log_field {
        Some(1)
    } else if modular == -&log_field {
        Some(-1)
    } else {
        None
    };
    Ok(LiouvilleReport {
        liouville_density,
        f,
        sign,
    })
}

/// `Σ_{i≤n} ∂_{x_{2i-1}} ∧ ∂_{x_{2i}}` on a chart of dimension
/// `symplectic_dim + casimir_dim`; the trailing coordinates are Casimirs.
pub fn build_product_example(symplectic_dim: usize, casimir_dim: usize) -> Result<PoissonStructure> {
    if symplectic_dim % 2 == 1 {
        return Err(Error::OddDimension(symplectic_dim));
    }
    let n = symplectic_dim + casimir_dim;
    let chart = Arc::new(Chart::indexed(n));
    let pi = (0..symplectic_dim / 2).fold(Multivector::zero(&chart), |acc, i| {
        let key = IndexSet::from_indices(&[2 * i, 2 * i + 1]).unwrap();
        &acc + &Multivector::basis(&chart, key)
    });
    PoissonStructure::new(pi)
}

/// Named non-Lie examples on the plane `(x, y)`.
pub mod examples {
    use super::*;

    fn plane() -> Arc<Chart> {
        Arc::new(Chart::new(["x", "y"]).expect("valid"))
    }

    fn planar(coefficient: Polynomial) -> PoissonStructure {
        let chart = plane();
        let pi = Multivector::term(&chart, IndexSet::full(2), coefficient.into());
        PoissonStructure::new(pi).expect("every planar bivector is Poisson")
    }

    /// `P ∂x∧∂y` on the plane.
    pub fn planar_structure(coefficient: Polynomial) -> PoissonStructure {
        planar(coefficient)
    }

    /// `x ∂x∧∂y`.
    pub fn linear_plane() -> PoissonStructure {
        planar(Polynomial::var(2, 0))
    }

    /// `x y ∂x∧∂y`.
    pub fn quadratic_plane() -> PoissonStructure {
        planar(&Polynomial::var(2, 0) * &Polynomial::var(2, 1))
    }

    /// `∂x∧∂y`.
    pub fn symplectic_plane() -> PoissonStructure {
        planar(Polynomial::one(2))
    }
}
