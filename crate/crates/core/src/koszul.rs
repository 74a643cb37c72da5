//! Koszul operators induced by volume densities.
//!
//! On a chart a connection on the canonical bundle is a 1-form `α`; the
//! matching Koszul operator is `D = Δ + i(α)`. A density `ρ dx_1∧…∧dx_n`
//! gives `α = dρ/ρ`, and an optional shift adds a further 1-form. A closed
//! shift `c` stands for the multi-valued volume `e^{∫c} ρ dx_1∧…∧dx_n`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exterior::{
    contract_form, exterior_derivative, star, star_inverse, Chart, DifferentialForm, Multivector,
};
use crate::ring::RationalFunction;
use crate::schouten::{bracket_generated_by, odd_laplacian, require_pure, schouten};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeDensity {
    chart: Arc<Chart>,
    rho: RationalFunction,
    shift: Option<DifferentialForm>,
}

impl VolumeDensity {
    pub fn new(chart: &Arc<Chart>, rho: RationalFunction) -> Result<Self> {
        if rho.dim() != chart.dim() {
            return Err(Error::DimensionMismatch {
                left: chart.dim(),
                right: rho.dim(),
            });
        }
        if rho.is_zero() {
            return Err(Error::ZeroDensity);
        }
        Ok(VolumeDensity {
            chart: Arc::clone(chart),
            rho,
            shift: None,
        })
    }

    /// `dx_1∧…∧dx_n`.
    pub fn standard(chart: &Arc<Chart>) -> Self {
        Self::new(chart, RationalFunction::one(chart.dim())).expect("unit density")
    }

    /// Adds a connection shift; a zero shift is dropped.
    pub fn with_shift(self, shift: DifferentialForm) -> Result<Self> {
        if **shift.chart() != *self.chart {
            return Err(Error::ChartMismatch);
        }
        if shift.is_zero() {
            return Ok(VolumeDensity { shift: None, ..self });
        }
        if shift.pure_grade() != Some(1) {
            return Err(Error::WrongGrade {
                expected: 1,
                found: shift.pure_grade(),
            });
        }
        Ok(VolumeDensity {
            shift: Some(shift),
            ..self
        })
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn rho(&self) -> &RationalFunction {
        &self.rho
    }

    pub fn shift(&self) -> Option<&DifferentialForm> {
        self.shift.as_ref()
    }

    /// Same shift, density multiplied by `g`.
    pub fn rescaled(&self, g: &RationalFunction) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroDensity);
        }
        Ok(VolumeDensity {
            rho: self.rho.try_mul(g)?,
            ..self.clone()
        })
    }

    /// `dρ/ρ` is always closed, so flatness only depends on the shift.
    pub fn is_flat(&self) -> bool {
        self.shift
            .as_ref()
            .is_none_or(|s| exterior_derivative(s).is_zero())
    }
}

/// `dρ/ρ = Σ_i (∂_i ρ / ρ) dx_i`.
pub fn log_derivative(chart: &Arc<Chart>, rho: &RationalFunction) -> Result<DifferentialForm> {
    let inv = rho.recip()?;
    let mut out = DifferentialForm::zero(chart);
    for i in 0..chart.dim() {
        let d = rho.partial(i)?;
        if !d.is_zero() {
            out = &out + &DifferentialForm::unit(chart, i).scale(&(&d * &inv));
        }
    }
    Ok(out)
}

/// `D = Δ + i(α_total)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulOperator {
    alpha_total: DifferentialForm,
}

impl KoszulOperator {
    /// The operator of `ν`: `α_total = dρ/ρ + shift`.
    pub fn from_volume(volume: &VolumeDensity) -> Result<Self> {
        let mut alpha = log_derivative(volume.chart(), volume.rho())?;
        if let Some(s) = volume.shift() {
            alpha = &alpha + s;
        }
        Ok(KoszulOperator { alpha_total: alpha })
    }

    /// The operator of an arbitrary connection 1-form.
    pub fn from_connection(alpha: DifferentialForm) -> Result<Self> {
        if !alpha.is_of_grade(1) {
            return Err(Error::WrongGrade {
                expected: 1,
                found: alpha.pure_grade(),
            });
        }
        Ok(KoszulOperator { alpha_total: alpha })
    }

    pub fn chart(&self) -> &Arc<Chart> {
        self.alpha_total.chart()
    }

    pub fn alpha_total(&self) -> &DifferentialForm {
        &self.alpha_total
    }

    /// `dα_total`; the operator squares to contraction with it.
    pub fn curvature(&self) -> DifferentialForm {
        exterior_derivative(&self.alpha_total)
    }

    pub fn is_flat(&self) -> bool {
        self.curvature().is_zero()
    }

    pub fn apply(&self, u: &Multivector) -> Result<Multivector> {
        let shift = contract_form(&self.alpha_total, u)?;
        Ok(&odd_laplacian(u) + &shift)
    }

    /// `D(D(u))`.
    pub fn square(&self, u: &Multivector) -> Result<Multivector> {
        self.apply(&self.apply(u)?)
    }

    /// Connection `∇ + α` gives operator `D + i(α)`.
    pub fn shifted(&self, alpha: &DifferentialForm) -> Result<Self> {
        Self::from_connection(self.alpha_total.try_add(alpha)?)
    }
}

/// Whether `D` reproduces the Schouten bracket of `u` and `v`.
pub fn verify_generates(d: &KoszulOperator, u: &Multivector, v: &Multivector) -> Result<bool> {
    let apply = |w: &Multivector| d.apply(w).expect("chart checked by caller");
    if !u.same_chart(v) || **u.chart() != **d.chart() {
        return Err(Error::ChartMismatch);
    }
    verify_generates_with(apply, u, v)
}

/// [`verify_generates`] for an arbitrary operator, e.g. one that is not a
/// Koszul operator.
pub fn verify_generates_with(
    d: impl Fn(&Multivector) -> Multivector,
    u: &Multivector,
    v: &Multivector,
) -> Result<bool> {
    let expected = schouten(u, v)?;
    let generated = bracket_generated_by(d, u, v)?;
    Ok(expected == generated)
}

/// Sign relating the Koszul operator of a plain volume to the conjugated
/// exterior derivative: `D u = star_sign(p) · ∗⁻¹ d ∗ u` on grade `p`.
///
/// Calibrated in dimension 2 (see the `star_sign_calibration` test) and
/// independent of the dimension.
pub const fn star_sign(grade: usize) -> i32 {
    if grade % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Checks `D_ν u = σ(p) ∗⁻¹ d ∗ u` for the plain volume `ν`.
pub fn star_crosscheck(volume: &VolumeDensity, u: &Multivector) -> Result<bool> {
    if volume.shift().is_some() {
        return Err(Error::ShiftedVolume);
    }
    let p = require_pure(u)?;
    let d = KoszulOperator::from_volume(volume)?;
    let lhs = d.apply(u)?;
    let conj = star_inverse(&exterior_derivative(&star(u, volume)?), volume)?;
    let rhs = if star_sign(p) == 1 { conj } else { -conj };
    Ok(lhs == rhs)
}
