//! Exact symbolic engine for polynomial Poisson structures on affine charts.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: exact rationals, multivariate polynomials, rational functions,
//!   gcd and square-free decomposition.
//! * [`exterior`]: multivectors and differential forms over rational-function
//!   coefficients, with wedge, odd derivatives, contraction, `d` and the
//!   volume star map.
//! * [`schouten`]: the odd Laplacian, the Schouten–Nijenhuis bracket it
//!   generates, and an independent Jacobi checker.
//! * [`koszul`]: volume densities and the Koszul operators they induce.
//! * [`modular`]: hamiltonian fields, the modular vector field and the
//!   identities it satisfies.
//! * [`structures`]: Lie–Poisson structures, Casimir solving, divisors of the
//!   top power and the Liouville identity.
//! * [`sweep`]: seeded random generators for property sweeps.

pub mod error;
pub mod exterior;
pub mod koszul;
pub mod linalg;
pub mod modular;
pub mod ring;
pub mod schouten;
pub mod structures;
pub mod sweep;

pub use error::{Error, Result};
pub use exterior::{
    contract_form, exterior_derivative, Chart, DifferentialForm, Exterior, IndexSet, Multivector,
};
pub use koszul::{KoszulOperator, VolumeDensity};
pub use modular::ModularResult;
pub use ring::{
    poly_gcd, squarefree_decompose, ArithOp, Monomial, Polynomial, RationalFunction, Scalar,
    SquarefreeDecomposition,
};
pub use schouten::{jacobi_oracle, odd_laplacian, schouten, JacobiWitness, PoissonStructure};
pub use structures::{DivisorReport, LiouvilleReport, StructureConstants};
