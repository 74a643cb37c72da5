use num_traits::{One, Zero};
use pml_core::ring::{frac, int};
use pml_core::sweep::Sweep;
use pml_core::{poly_gcd, squarefree_decompose, Polynomial, RationalFunction, Scalar};
use proptest::prelude::*;

fn point(s: &mut Sweep, n: usize) -> Vec<Scalar> {
    (0..n)
        .map(|_| frac(s.range(0, 12) as i64 - 6, s.range(1, 4) as i64))
        .collect()
}

fn same_up_to_unit(a: &Polynomial, b: &Polynomial) -> bool {
    a.normalized() == b.normalized()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sweep::new(seed);
        let (a, b, c) = (s.polynomial(n, 3, 4), s.polynomial(n, 3, 4), s.polynomial(n, 3, 4));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        let x = point(&mut s, n);
        let lhs = (&a * &b).evaluate(&x).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&x).unwrap() * b.evaluate(&x).unwrap());
    }

    #[test]
    fn partials_commute_and_obey_leibniz(seed in any::<u64>(), n in 2usize..=3) {
        let mut s = Sweep::new(seed);
        let (a, b) = (s.polynomial(n, 4, 4), s.polynomial(n, 4, 4));
        let ij = a.partial(0).unwrap().partial(1).unwrap();
        let ji = a.partial(1).unwrap().partial(0).unwrap();
        prop_assert_eq!(ij, ji);
        let lhs = (&a * &b).partial(0).unwrap();
        let rhs = &(&a.partial(0).unwrap() * &b) + &(&a * &b.partial(0).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_and_is_maximal(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sweep::new(seed);
        let a = s.nonzero_polynomial(n, 2, 3);
        let b = s.nonzero_polynomial(n, 2, 3);
        let c = s.nonzero_polynomial(n, 2, 3);
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.normalized()).is_some());
        let expected = &poly_gcd(&a, &b).unwrap() * &c;
        prop_assert!(same_up_to_unit(&g, &expected));
        prop_assert_eq!(&g, &g.normalized());
    }

    #[test]
    fn squarefree_parts_reexpand(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = Sweep::new(seed);
        let a = s.nonzero_polynomial(n, 2, 3);
        let b = s.nonzero_polynomial(n, 1, 2);
        let p = &(&a * &b.pow(2)) * &Polynomial::var(n, 0);
        let sf = squarefree_decompose(&p).unwrap();
        prop_assert_eq!(sf.expand(n), p);
        let mults: Vec<u32> = sf.parts.iter().map(|(_, m)| *m).collect();
        prop_assert!(mults.windows(2).all(|w| w[0] < w[1]));
        for (i, (pi, _)) in sf.parts.iter().enumerate() {
            prop_assert!(!pi.is_constant());
            for (pj, _) in &sf.parts[i + 1..] {
                prop_assert!(poly_gcd(pi, pj).unwrap().is_one());
            }
        }
    }

    #[test]
    fn rational_normalization(seed in any::<u64>(), n in 1usize..=2) {
        let mut s = Sweep::new(seed);
        let a = s.polynomial(n, 2, 3);
        let b = s.nonzero_polynomial(n, 2, 3);
        let c = s.nonzero_polynomial(n, 2, 3);
        let r = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let scaled = RationalFunction::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&r, &scaled);
        let again = RationalFunction::new(r.numerator().clone(), r.denominator().clone()).unwrap();
        prop_assert_eq!(&r, &again);
        prop_assert!(poly_gcd(r.numerator(), r.denominator()).map(|g| g.is_one()).unwrap_or(true));
        if !r.is_zero() {
            prop_assert!((&r * &r.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_arithmetic_matches_evaluation(seed in any::<u64>(), n in 1usize..=2) {
        let mut s = Sweep::new(seed);
        let p = RationalFunction::new(s.polynomial(n, 2, 3), s.nonzero_polynomial(n, 2, 3)).unwrap();
        let q = RationalFunction::new(s.polynomial(n, 2, 3), s.nonzero_polynomial(n, 2, 3)).unwrap();
        let x = point(&mut s, n);
        let (Ok(pv), Ok(qv)) = (p.evaluate(&x), q.evaluate(&x)) else {
            return Ok(());
        };
        let sum = (&p + &q).evaluate(&x);
        let prod = (&p * &q).evaluate(&x);
        if let Ok(v) = sum {
            prop_assert_eq!(v, &pv + &qv);
        }
        if let Ok(v) = prod {
            prop_assert_eq!(v, &pv * &qv);
        }
    }
}

#[test]
fn gcd_examples() {
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    let g = poly_gcd(&(&x.pow(2) - &y.pow(2)), &(&x - &y)).unwrap();
    assert_eq!(g, &x - &y);
    assert!(poly_gcd(&Polynomial::zero(2), &Polynomial::zero(2)).is_err());
    let g = poly_gcd(&(&x.pow(2) + &y).scale(&int(-6)), &Polynomial::zero(2)).unwrap();
    assert_eq!(g, &x.pow(2) + &y);
    assert!(Scalar::one() > Scalar::zero());
}
