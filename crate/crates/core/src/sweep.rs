//! Seeded random inputs for property sweeps. The same seed always yields
//! the same sequence.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::{Chart, DifferentialForm, Exterior, IndexSet, Multivector, Variance};
use crate::ring::{int, Monomial, Polynomial, RationalFunction};
use crate::schouten::PoissonStructure;
use crate::structures::{lie_poisson, StructureConstants};

pub struct Sweep {
    rng: ChaCha8Rng,
}

impl Sweep {
    pub fn new(seed: u64) -> Self {
        Sweep {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.random_range(lo..=hi_inclusive)
    }

    /// Polynomial with up to `max_terms` terms of degree `<= max_degree` and
    /// integer coefficients in `[-3, 3]`.
    pub fn polynomial(&mut self, dim: usize, max_degree: u32, max_terms: usize) -> Polynomial {
        let terms = self.rng.random_range(1..=max_terms.max(1));
        let mut p = Polynomial::zero(dim);
        for _ in 0..terms {
            let degree = self.rng.random_range(0..=max_degree);
            let mut e = vec![0u32; dim];
            for _ in 0..degree {
                e[self.rng.random_range(0..dim)] += 1;
            }
            let c = self.rng.random_range(-3i64..=3);
            p = &p + &Polynomial::monomial(dim, Monomial::from_exponents(e), int(c));
        }
        p
    }

    /// Like [`Sweep::polynomial`] but never zero.
    pub fn nonzero_polynomial(&mut self, dim: usize, max_degree: u32, max_terms: usize) -> Polynomial {
        loop {
            let p = self.polynomial(dim, max_degree, max_terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Random element of pure grade `grade` with polynomial coefficients.
    pub fn exterior<V: Variance>(
        &mut self,
        chart: &Arc<Chart>,
        grade: usize,
        max_degree: u32,
    ) -> Exterior<V> {
        let n = chart.dim();
        let keys: Vec<IndexSet> = (0u32..(1 << n))
            .map(|bits| {
                IndexSet::from_indices(
                    &(0..n).filter(|i| bits & (1 << i) != 0).collect::<Vec<_>>(),
                )
                .unwrap()
            })
            .filter(|k| k.len() == grade)
            .collect();
        let mut out = Exterior::zero(chart);
        for key in keys {
            if self.rng.random_bool(0.7) {
                let c = self.polynomial(n, max_degree, 3);
                out = &out + &Exterior::term(chart, key, RationalFunction::from_poly(c));
            }
        }
        out
    }

    pub fn multivector(&mut self, chart: &Arc<Chart>, grade: usize, max_degree: u32) -> Multivector {
        self.exterior(chart, grade, max_degree)
    }

    pub fn one_form(&mut self, chart: &Arc<Chart>, max_degree: u32) -> DifferentialForm {
        self.exterior(chart, 1, max_degree)
    }

    /// Polynomial in the listed variables only.
    fn polynomial_in(&mut self, dim: usize, vars: &[usize], max_degree: u32) -> Polynomial {
        let local = self.polynomial(vars.len(), max_degree, 3);
        let mut out = Polynomial::zero(dim);
        for (m, c) in local.terms() {
            let mut e = vec![0u32; dim];
            for (slot, &v) in vars.iter().enumerate() {
                e[v] = m.exponents()[slot];
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }

    /// A Poisson structure drawn from one of four families: planar
    /// `P ∂1∧∂2`, jacobian `a ε^{ijk} ∂_k C` in dimension 3, split
    /// `P(x1,x2) ∂1∧∂2 + Q(x3,x4) ∂3∧∂4`, and library Lie–Poisson.
    pub fn poisson_structure(&mut self) -> PoissonStructure {
        let family = self.range(0, 3);
        let built = match family {
            0 => {
                let chart = Arc::new(Chart::indexed(2));
                let p = self.nonzero_polynomial(2, 3, 3);
                PoissonStructure::from_entries(&chart, [(0, 1, p.into())])
            }
            1 => {
                let chart = Arc::new(Chart::indexed(3));
                let a = self.nonzero_polynomial(3, 1, 2);
                let c = self.nonzero_polynomial(3, 3, 3);
                let e = |k: usize| RationalFunction::from_poly(&a * &c.partial_unchecked(k));
                PoissonStructure::from_entries(&chart, [(0, 1, e(2)), (1, 2, e(0)), (2, 0, e(1))])
            }
            2 => {
                let chart = Arc::new(Chart::indexed(4));
                let p = self.polynomial_in(4, &[0, 1], 2);
                let q = self.polynomial_in(4, &[2, 3], 2);
                PoissonStructure::from_entries(&chart, [(0, 1, p.into()), (2, 3, q.into())])
            }
            _ => {
                let lib = StructureConstants::library();
                let pick = self.range(0, lib.len() - 1);
                lie_poisson(&lib[pick].1)
            }
        };
        built.expect("every family satisfies Jacobi")
    }
}
