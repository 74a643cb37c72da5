//! The volume star `∧^p Θ → Ω^{n-p}`: contraction of a multivector into the
//! volume form `ρ dx_1∧…∧dx_n`.

use crate::error::{Error, Result};
use crate::koszul::VolumeDensity;

use super::{DifferentialForm, IndexSet, Multivector};

/// Contracts `u` into `ρ dx_1∧…∧dx_n`, taking the indices of each key in
/// ascending order (the smallest index is contracted first).
pub fn star(u: &Multivector, volume: &VolumeDensity) -> Result<DifferentialForm> {
    check(u, volume)?;
    let n = u.dim();
    let mut out = DifferentialForm::zero(u.chart());
    for (key, c) in u.terms() {
        let (form_key, negative) = contract_top(key, n);
        let coeff = c * volume.rho();
        out.add_term(form_key, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

/// Inverse of [`star`] on every grade.
pub fn star_inverse(omega: &DifferentialForm, volume: &VolumeDensity) -> Result<Multivector> {
    if volume.shift().is_some() {
        return Err(Error::ShiftedVolume);
    }
    if **omega.chart() != **volume.chart() {
        return Err(Error::ChartMismatch);
    }
    let n = omega.dim();
    let inv_rho = volume.rho().recip()?;
    let mut out = Multivector::zero(omega.chart());
    for (form_key, c) in omega.terms() {
        let key = form_key.complement(n);
        let (_, negative) = contract_top(&key, n);
        let coeff = c * &inv_rho;
        out.add_term(key, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

fn check(u: &Multivector, volume: &VolumeDensity) -> Result<()> {
    if volume.shift().is_some() {
        return Err(Error::ShiftedVolume);
    }
    if **u.chart() != **volume.chart() {
        return Err(Error::ChartMismatch);
    }
    Ok(())
}

/// `ι_{i_p} ⋯ ι_{i_1} (dx_1∧…∧dx_n)` for `key = {i_1 < … < i_p}`: the
/// remaining form key and whether the result is negated.
fn contract_top(key: &IndexSet, n: usize) -> (IndexSet, bool) {
    let mut form = IndexSet::full(n);
    let mut negative = false;
    for i in key.iter() {
        let (rest, neg) = form.remove(i).expect("index present in top form");
        form = rest;
        negative ^= neg;
    }
    (form, negative)
}
