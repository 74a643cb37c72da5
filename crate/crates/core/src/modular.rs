//! Hamiltonian vector fields and the modular vector field.
//!
//! Sign ledger. With `D = Δ + i(dρ/ρ)` and hamiltonian fields taken as
//! `X_H = Σ_k (Σ_j π^{kj} ∂_j H) ∂_k` (so `X_H(g) = {g, H}`):
//!
//! * `x ∂x∧∂y` with `dx∧dy` has modular field `+∂y`;
//! * `(v·f) ν = L_{X_f} ν` holds with no sign;
//! * a Lie–Poisson structure has the constant modular field
//!   `λ_k = Σ_j c^j_{jk}`;
//! * rescaling the volume by `g` adds `i(dg/g)π = -X_{log g}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{contract_form, Multivector};
use crate::koszul::{log_derivative, KoszulOperator, VolumeDensity};
use crate::ring::{Polynomial, RationalFunction, Scalar};
use crate::schouten::{schouten, PoissonStructure};

/// A representative `Dπ` of the modular class for one volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularResult {
    pub field: Multivector,
    pub volume_used: VolumeDensity,
    /// Set once `{field, π} = 0` has been checked exactly.
    pub is_poisson_checked: bool,
}

/// `X_H = Σ_k (Σ_j π^{kj} ∂_j H) ∂_k`.
pub fn hamiltonian_field(h: &RationalFunction, pi: &PoissonStructure) -> Result<Multivector> {
    let n = pi.dim();
    if h.dim() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: h.dim(),
        });
    }
    let grads: Vec<RationalFunction> = (0..n).map(|j| h.partial(j)).collect::<Result<_>>()?;
    let mut out = Multivector::zero(pi.chart());
    for k in 0..n {
        let mut comp = RationalFunction::zero(n);
        for (j, g) in grads.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            comp = &comp + &(&pi.entry(k, j) * g);
        }
        out = &out + &Multivector::unit(pi.chart(), k).scale(&comp);
    }
    Ok(out)
}

/// `Dπ` for the Koszul operator of a flat volume.
pub fn modular_field(pi: &PoissonStructure, volume: &VolumeDensity) -> Result<ModularResult> {
    pi.require_verified()?;
    if **volume.chart() != **pi.chart() {
        return Err(Error::ChartMismatch);
    }
    if !volume.is_flat() {
        return Err(Error::NonFlatConnection);
    }
    let d = KoszulOperator::from_volume(volume)?;
    let field = d.apply(pi.pi())?;
    let is_poisson_checked = schouten(&field, pi.pi())?.is_zero();
    Ok(ModularResult {
        field,
        volume_used: volume.clone(),
        is_poisson_checked,
    })
}

/// Directional derivative `X(f) = Σ_k X^k ∂_k f`.
pub fn directional_derivative(x: &Multivector, f: &RationalFunction) -> Result<RationalFunction> {
    let mut out = RationalFunction::zero(x.dim());
    for k in 0..x.dim() {
        let c = x.component(k);
        if !c.is_zero() {
            out = &out + &(&c * &f.partial(k)?);
        }
    }
    Ok(out)
}

/// Divergence with respect to `ν = ρ dx`: `L_X ν = div_ν(X) ν`,
/// `div_ν(X) = (1/ρ) Σ_k ∂_k(ρ X^k)`.
pub fn volume_divergence(x: &Multivector, volume: &VolumeDensity) -> Result<RationalFunction> {
    let rho = volume.rho();
    let mut sum = RationalFunction::zero(x.dim());
    for k in 0..x.dim() {
        let c = x.component(k);
        if !c.is_zero() {
            sum = &sum + &(rho * &c).partial(k)?;
        }
    }
    sum.try_div(rho)
}

/// Checks `(v·f) ν = L_{X_f} ν` with the right side computed as a plain
/// divergence, independently of the Koszul operator.
pub fn verify_divergence_identity(pi: &PoissonStructure, volume: &VolumeDensity, f: &Polynomial) -> Result<bool> {
    if volume.shift().is_some() {
        return Err(Error::ShiftedVolume);
    }
    let f = RationalFunction::from_poly(f.clone());
    let v = modular_field(pi, volume)?.field;
    let lhs = directional_derivative(&v, &f)?;
    let rhs = volume_divergence(&hamiltonian_field(&f, pi)?, volume)?;
    Ok(lhs == rhs)
}

/// Rescaling the volume by `g` changes the modular field by exactly
/// `i(dg/g) π`.
pub fn volume_change_law(
    pi: &PoissonStructure,
    volume: &VolumeDensity,
    g: &RationalFunction,
) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroDensity);
    }
    let before = modular_field(pi, volume)?.field;
    let after = modular_field(pi, &volume.rescaled(g)?)?.field;
    let expected = contract_form(&log_derivative(pi.chart(), g)?, pi.pi())?;
    Ok(&after - &before == expected)
}

/// Whether `c` Poisson-commutes with everything (`X_c = 0`).
pub fn casimir_check(c: &Polynomial, pi: &PoissonStructure) -> Result<bool> {
    pi.require_verified()?;
    Ok(hamiltonian_field(&RationalFunction::from_poly(c.clone()), pi)?.is_zero())
}

/// Value of `X_H` at the origin for a structure vanishing there. Always the
/// zero vector; a nonzero constant modular field is therefore never
/// hamiltonian near the origin.
pub fn origin_obstruction(pi: &PoissonStructure, h: &Polynomial) -> Result<Vec<Scalar>> {
    let n = pi.dim();
    let origin = vec![Scalar::zero(); n];
    for (_, c) in pi.pi().terms() {
        if !c.evaluate(&origin)?.is_zero() {
            return Err(Error::NotVanishingAtOrigin);
        }
    }
    let x = hamiltonian_field(&RationalFunction::from_poly(h.clone()), pi)?;
    (0..n).map(|k| x.component(k).evaluate(&origin)).collect()
}

#[cfg(test)]
mod tests;
