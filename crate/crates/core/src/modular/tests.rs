use proptest::prelude::*;

use super::*;
use crate::exterior::DifferentialForm;
use crate::ring::int;
use crate::structures::examples::{linear_plane, quadratic_plane, symplectic_plane};
use crate::structures::{lie_poisson, StructureConstants};
use crate::sweep::Sweep;

fn x(n: usize) -> RationalFunction {
    RationalFunction::var(n, 0)
}

fn y(n: usize) -> RationalFunction {
    RationalFunction::var(n, 1)
}

/// `v^k = (1/ρ) Σ_j ∂_j(ρ π^{jk})`, straight from the entries.
fn divergence_oracle(pi: &PoissonStructure, rho: &RationalFunction) -> Multivector {
    let n = pi.dim();
    let mut out = Multivector::zero(pi.chart());
    for k in 0..n {
        let mut c = RationalFunction::zero(n);
        for j in 0..n {
            c = &c + &(rho * &pi.entry(j, k)).partial(j).unwrap();
        }
        out = &out + &Multivector::unit(pi.chart(), k).scale(&c.try_div(rho).unwrap());
    }
    out
}

#[test]
fn hamiltonian_convention() {
    // X_H(g) = {g, H}
    let pi = linear_plane();
    let xh = hamiltonian_field(&x(2), &pi).unwrap();
    assert_eq!(xh, Multivector::unit(pi.chart(), 1).scale(&-x(2)));
    let yh = hamiltonian_field(&y(2), &pi).unwrap();
    assert_eq!(yh, Multivector::unit(pi.chart(), 0).scale(&x(2)));
    let g = &x(2) * &y(2).pow(2);
    assert_eq!(
        directional_derivative(&yh, &g).unwrap(),
        pi.function_bracket(&g, &y(2)).unwrap()
    );
}

#[test]
fn linear_plane_modular_field() {
    let pi = linear_plane();
    let r = modular_field(&pi, &VolumeDensity::standard(pi.chart())).unwrap();
    assert_eq!(r.field, Multivector::unit(pi.chart(), 1));
    assert!(r.is_poisson_checked);
}

#[test]
fn quadratic_plane_modular_field() {
    let pi = quadratic_plane();
    let r = modular_field(&pi, &VolumeDensity::standard(pi.chart())).unwrap();
    let expected = &Multivector::unit(pi.chart(), 0).scale(&-x(2))
        + &Multivector::unit(pi.chart(), 1).scale(&y(2));
    assert_eq!(r.field, divergence_oracle(&pi, &RationalFunction::one(2)));
    assert_eq!(r.field, expected);
}

#[test]
fn symplectic_plane_is_unimodular() {
    let pi = symplectic_plane();
    let r = modular_field(&pi, &VolumeDensity::standard(pi.chart())).unwrap();
    assert!(r.field.is_zero());
}

#[test]
fn divergence_identity_example() {
    let pi = linear_plane();
    let vol = VolumeDensity::standard(pi.chart());
    assert!(verify_divergence_identity(&pi, &vol, &Polynomial::var(2, 1)).unwrap());
    // X_y = x ∂x has divergence 1 = ∂y(y)
    assert_eq!(
        volume_divergence(&hamiltonian_field(&y(2), &pi).unwrap(), &vol).unwrap(),
        RationalFunction::one(2)
    );
}

#[test]
fn volume_change_example() {
    let pi = symplectic_plane();
    let vol = VolumeDensity::standard(pi.chart());
    let after = modular_field(&pi, &vol.rescaled(&x(2)).unwrap()).unwrap().field;
    assert_eq!(
        after,
        Multivector::unit(pi.chart(), 1).scale(&x(2).recip().unwrap())
    );
    assert!(volume_change_law(&pi, &vol, &x(2)).unwrap());
    let constant = RationalFunction::constant(2, int(7));
    let same = modular_field(&pi, &vol.rescaled(&constant).unwrap()).unwrap().field;
    assert!(same.is_zero());
    assert_eq!(
        volume_change_law(&pi, &vol, &RationalFunction::zero(2)),
        Err(Error::ZeroDensity)
    );
}

#[test]
fn rescaling_is_minus_log_hamiltonian() {
    let pi = quadratic_plane();
    let vol = VolumeDensity::standard(pi.chart());
    let g = &RationalFunction::one(2) + &x(2).pow(2);
    let diff = &modular_field(&pi, &vol.rescaled(&g).unwrap()).unwrap().field
        - &modular_field(&pi, &vol).unwrap().field;
    let log_field = hamiltonian_field(&g, &pi).unwrap().scale(&g.recip().unwrap());
    assert_eq!(diff, -log_field);
}

#[test]
fn non_flat_volume_is_rejected() {
    let pi = linear_plane();
    let vol = VolumeDensity::standard(pi.chart())
        .with_shift(DifferentialForm::unit(pi.chart(), 1).scale(&x(2)))
        .unwrap();
    assert_eq!(modular_field(&pi, &vol), Err(Error::NonFlatConnection));
}

#[test]
fn closed_shift_changes_field_by_contraction() {
    let pi = linear_plane();
    let vol = VolumeDensity::standard(pi.chart());
    let shift = DifferentialForm::unit(pi.chart(), 0);
    let shifted = vol.clone().with_shift(shift.clone()).unwrap();
    let diff = &modular_field(&pi, &shifted).unwrap().field - &modular_field(&pi, &vol).unwrap().field;
    assert_eq!(diff, contract_form(&shift, pi.pi()).unwrap());
    assert_eq!(verify_divergence_identity(&pi, &shifted, &Polynomial::var(2, 0)), Err(Error::ShiftedVolume));
}

#[test]
fn unverified_structure_is_refused() {
    let pi = PoissonStructure::unverified(linear_plane().pi().clone()).unwrap();
    assert_eq!(
        modular_field(&pi, &VolumeDensity::standard(pi.chart())),
        Err(Error::UnverifiedStructure)
    );
}

#[test]
fn casimir_examples() {
    let so3 = lie_poisson(&StructureConstants::so3()).unwrap();
    let sq = (0..3).fold(Polynomial::zero(3), |acc, i| &acc + &Polynomial::var(3, i).pow(2));
    assert!(casimir_check(&sq, &so3).unwrap());
    assert!(!casimir_check(&Polynomial::var(3, 0), &so3).unwrap());
    assert!(!casimir_check(&Polynomial::var(2, 0), &symplectic_plane()).unwrap());
    assert!(casimir_check(&Polynomial::constant(2, int(3)), &symplectic_plane()).unwrap());
}

#[test]
fn origin_obstruction_examples() {
    let pi = linear_plane();
    let h = &Polynomial::var(2, 0) * &Polynomial::var(2, 1);
    assert_eq!(origin_obstruction(&pi, &h).unwrap(), vec![Scalar::zero(); 2]);
    // the modular field ∂y is nonzero at the origin
    let v = modular_field(&pi, &VolumeDensity::standard(pi.chart())).unwrap().field;
    assert_eq!(v.component(1).evaluate(&[int(0), int(0)]).unwrap(), int(1));
    assert_eq!(
        origin_obstruction(&symplectic_plane(), &h),
        Err(Error::NotVanishingAtOrigin)
    );
}

#[test]
fn lie_poisson_modular_field_is_character() {
    let sc = StructureConstants::solvable_2d();
    let pi = lie_poisson(&sc).unwrap();
    let v = modular_field(&pi, &VolumeDensity::standard(pi.chart())).unwrap().field;
    let expected = (0..2).fold(Multivector::zero(pi.chart()), |acc, k| {
        &acc + &Multivector::unit(pi.chart(), k)
            .scale(&RationalFunction::constant(2, sc.modular_character()[k].clone()))
    });
    assert_eq!(v, expected);
    assert_eq!(v, Multivector::unit(pi.chart(), 1));
}

fn density(which: usize, n: usize) -> RationalFunction {
    match which {
        0 => RationalFunction::one(n),
        1 => &RationalFunction::one(n) + &x(n).pow(2),
        _ => RationalFunction::constant(n, int(3)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modular_field_matches_divergence_oracle(seed in any::<u64>(), which in 0usize..3) {
        let pi = Sweep::new(seed).poisson_structure();
        let rho = density(which, pi.dim());
        let r = modular_field(&pi, &VolumeDensity::new(pi.chart(), rho.clone()).unwrap()).unwrap();
        prop_assert_eq!(&r.field, &divergence_oracle(&pi, &rho));
        prop_assert!(r.is_poisson_checked);
    }

    #[test]
    fn divergence_identity_sweep(seed in any::<u64>(), which in 0usize..3) {
        let mut s = Sweep::new(seed);
        let pi = s.poisson_structure();
        let vol = VolumeDensity::new(pi.chart(), density(which, pi.dim())).unwrap();
        let f = s.polynomial(pi.dim(), 3, 3);
        prop_assert!(verify_divergence_identity(&pi, &vol, &f).unwrap());
    }

    #[test]
    fn volume_change_sweep(seed in any::<u64>()) {
        let mut s = Sweep::new(seed);
        let pi = s.poisson_structure();
        let g = s.nonzero_polynomial(pi.dim(), 2, 3);
        let vol = VolumeDensity::standard(pi.chart());
        prop_assert!(volume_change_law(&pi, &vol, &g.into()).unwrap());
    }

    #[test]
    fn casimirs_form_a_subalgebra(seed in any::<u64>()) {
        let sc = StructureConstants::so3();
        let pi = lie_poisson(&sc).unwrap();
        let mut s = Sweep::new(seed);
        let sq = (0..3).fold(Polynomial::zero(3), |acc, i| &acc + &Polynomial::var(3, i).pow(2));
        let a = s.polynomial(1, 2, 3);
        let b = s.polynomial(1, 2, 3);
        let compose = |p: &Polynomial| {
            p.terms().fold(Polynomial::zero(3), |acc, (m, c)| {
                &acc + &sq.pow(m.exponents()[0]).scale(c)
            })
        };
        let (ca, cb) = (compose(&a), compose(&b));
        prop_assert!(casimir_check(&(&ca + &cb), &pi).unwrap());
        prop_assert!(casimir_check(&(&ca * &cb), &pi).unwrap());
    }
}
