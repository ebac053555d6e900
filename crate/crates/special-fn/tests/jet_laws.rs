//! Algebraic laws of truncated-series arithmetic on random coefficients.

use num_complex::Complex64 as C64;
use proptest::prelude::*;
use special_fn::{DualC, Jet, Jet2};

const ORDER: usize = 6;

fn jet_strategy() -> impl Strategy<Value = Jet> {
    prop::collection::vec((-0.5f64..0.5, -0.5f64..0.5), ORDER + 1).prop_map(|cs| Jet {
        c: cs
            .into_iter()
            .map(|(re, im)| DualC::of(C64::new(re, im)))
            .collect(),
    })
}

fn unit_jet_strategy() -> impl Strategy<Value = Jet> {
    jet_strategy().prop_map(|mut j| {
        j.c[0] = DualC::of(C64::new(1.0, 0.0)).add(j.c[0].scale(C64::new(0.25, 0.0)));
        j
    })
}

fn diff(a: &Jet, b: &Jet) -> f64 {
    let n = a.order().min(b.order());
    (0..=n)
        .map(|m| (a.c[m].v - b.c[m].v).norm())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplication_is_associative(a in jet_strategy(), b in jet_strategy(), c in jet_strategy()) {
        let left = a.mul(&b).mul(&c);
        let right = a.mul(&b.mul(&c));
        prop_assert!(diff(&left, &right) < 1e-13);
    }

    #[test]
    fn multiplication_is_commutative(a in jet_strategy(), b in jet_strategy()) {
        prop_assert!(diff(&a.mul(&b), &b.mul(&a)) < 1e-13);
    }

    #[test]
    fn multiplication_distributes_over_addition(a in jet_strategy(), b in jet_strategy(), c in jet_strategy()) {
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        prop_assert!(diff(&left, &right) < 1e-13);
    }

    #[test]
    fn division_by_unit_inverts_multiplication(a in jet_strategy(), b in unit_jet_strategy()) {
        let round = a.mul(&b).div(&b);
        prop_assert!(diff(&round, &a) < 1e-12);
    }

    #[test]
    fn variable_shift_round_trips(a in jet_strategy()) {
        let (down, dropped) = a.shift_up(2).shift_down(2);
        prop_assert!(dropped == 0.0);
        for m in 0..=ORDER - 2 {
            prop_assert!((down.c[m].v - a.c[m].v).norm() == 0.0);
        }
    }

    #[test]
    fn exponentials_multiply(are in -1.0f64..1.0, aim in -1.0f64..1.0, bre in -1.0f64..1.0, bim in -1.0f64..1.0) {
        let a = DualC::of(C64::new(are, aim));
        let b = DualC::of(C64::new(bre, bim));
        let prod = Jet::exp_linear(ORDER, a).mul(&Jet::exp_linear(ORDER, b));
        let sum = Jet::exp_linear(ORDER, a.add(b));
        prop_assert!(diff(&prod, &sum) < 1e-13);
    }

    #[test]
    fn two_variable_multiplication_is_associative(a in jet_strategy(), b in jet_strategy(), c in jet_strategy()) {
        let fa = Jet2::from_u(&a, ORDER);
        let fb = Jet2::from_v(&b, ORDER);
        let fc = Jet2::from_sum(&c, ORDER);
        let left = fa.mul(&fb).mul(&fc);
        let right = fa.mul(&fb.mul(&fc));
        let mut worst = 0.0f64;
        for i in 0..=left.order {
            for j in 0..=(left.order - i) {
                worst = worst.max((left.c[i][j].v - right.c[i][j].v).norm());
            }
        }
        prop_assert!(worst < 1e-13);
    }

    #[test]
    fn sum_embedding_is_multiplicative(a in jet_strategy(), b in jet_strategy()) {
        // embedding x -> u+v commutes with products
        let direct = Jet2::from_sum(&a.mul(&b), ORDER);
        let factored = Jet2::from_sum(&a, ORDER).mul(&Jet2::from_sum(&b, ORDER));
        let mut worst = 0.0f64;
        for i in 0..=direct.order {
            for j in 0..=(direct.order - i) {
                worst = worst.max((direct.c[i][j].v - factored.c[i][j].v).norm());
            }
        }
        prop_assert!(worst < 1e-13);
    }
}
