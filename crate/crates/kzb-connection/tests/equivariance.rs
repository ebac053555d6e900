//! Transformation laws of the connection coefficients under the two lattice
//! translations of each marked point and under common translation of all of
//! them, plus the error paths for the laws that need a finite-dimensional
//! realization to even state.

use kzb_connection::*;
use std::str::FromStr;

#[test]
fn integer_translation_leaves_k_invariant() {
    let cfg = KzbConfig::default();
    for (n, kind) in [(2usize, BraidKind::Reduced), (3, BraidKind::Reduced), (3, BraidKind::Full)] {
        let alg = match kind {
            BraidKind::Full => BraidAlgebra::full(n, 4).unwrap(),
            BraidKind::Reduced => BraidAlgebra::reduced(n, 4).unwrap(),
        };
        for seed in 0..4 {
            let p = ConnectionPoint::sample(n, seed);
            let r = equivariance_residual(&p, &alg, &cfg, EquivarianceKind::Shift1).unwrap();
            assert!(r < 1e-10, "n={n} {kind:?} seed={seed}: {r:e}");
        }
    }
}

#[test]
fn tau_translation_conjugates_k() {
    let cfg = KzbConfig::default();
    for n in [2usize, 3] {
        let alg = BraidAlgebra::reduced(n, 4).unwrap();
        for seed in 0..4 {
            let p = ConnectionPoint::sample(n, seed);
            let r = equivariance_residual(&p, &alg, &cfg, EquivarianceKind::ShiftTau).unwrap();
            assert!(r < 1e-9, "n={n} seed={seed}: {r:e}");
        }
    }
    // The law holds in the unreduced algebra too.
    let alg = BraidAlgebra::full(3, 4).unwrap();
    let p = ConnectionPoint::sample(3, 9);
    let r = equivariance_residual(&p, &alg, &cfg, EquivarianceKind::ShiftTau).unwrap();
    assert!(r < 1e-9, "{r:e}");
}

#[test]
fn tau_translation_law_for_delta() {
    let cfg = KzbConfig::default();
    for n in [2usize, 3] {
        let alg = BraidAlgebra::reduced(n, 4).unwrap();
        for seed in 0..4 {
            let p = ConnectionPoint::sample(n, seed);
            let r = equivariance_residual(&p, &alg, &cfg, EquivarianceKind::ShiftDelta).unwrap();
            assert!(r < 1e-9, "n={n} seed={seed}: {r:e}");
        }
    }
}

#[test]
fn delta_tau_law_needs_reduced_relations() {
    let cfg = KzbConfig::default();
    let alg = BraidAlgebra::full(2, 4).unwrap();
    let p = ConnectionPoint::sample(2, 0);
    assert!(matches!(
        equivariance_residual(&p, &alg, &cfg, EquivarianceKind::ShiftDelta),
        Err(KzbError::ReducedOnly(_))
    ));
}

#[test]
fn modular_laws_are_deferred_to_realizations() {
    let cfg = KzbConfig::default();
    let alg = BraidAlgebra::reduced(2, 4).unwrap();
    let p = ConnectionPoint::sample(2, 0);
    for kind in [EquivarianceKind::ModK, EquivarianceKind::ModDelta] {
        assert!(matches!(
            equivariance_residual(&p, &alg, &cfg, kind),
            Err(KzbError::MissingRealization(_))
        ));
    }
}

#[test]
fn kind_names_round_trip() {
    for kind in EquivarianceKind::ALL {
        assert_eq!(EquivarianceKind::from_str(kind.as_str()).unwrap(), kind);
    }
    assert!(EquivarianceKind::from_str("shift_2").is_err());
}
