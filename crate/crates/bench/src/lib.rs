//! Inputs shared by the benchmarks.

use std::sync::Arc;

use pml_core::structures::lie_poisson;
use pml_core::sweep::Sweep;
use pml_core::{Chart, Multivector, Polynomial, PoissonStructure, StructureConstants};

/// `(a c, b c)` with a common factor `c`, all in `dim` variables.
pub fn gcd_pair(dim: usize, degree: u32, seed: u64) -> (Polynomial, Polynomial) {
    let mut s = Sweep::new(seed);
    let a = s.nonzero_polynomial(dim, degree, 4);
    let b = s.nonzero_polynomial(dim, degree, 4);
    let c = s.nonzero_polynomial(dim, degree, 4);
    (&a * &c, &b * &c)
}

/// Random bivectors on a chart of dimension `dim`.
pub fn bivector_pair(dim: usize, seed: u64) -> (Multivector, Multivector) {
    let chart = Arc::new(Chart::indexed(dim));
    let mut s = Sweep::new(seed);
    (s.multivector(&chart, 2, 2), s.multivector(&chart, 2, 2))
}

pub fn so3() -> PoissonStructure {
    lie_poisson(&StructureConstants::so3()).expect("so3 is Poisson")
}

pub fn solvable_4d() -> PoissonStructure {
    lie_poisson(&StructureConstants::solvable_4d()).expect("valid")
}
