//! Flatness of the connection d - sum_i K_i dz_i + Delta dtau, checked as
//! numerical residuals on randomly sampled configurations: the mixed
//! z-derivative/commutator identity, the three-index commutation identity
//! behind it, its scalar shadow, and the tau-direction identity.

use kzb_connection::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

#[test]
fn z_flatness_two_strands() {
    let cfg = KzbConfig::default();
    let full = BraidAlgebra::full(2, 4).unwrap();
    let reduced = BraidAlgebra::reduced(2, 4).unwrap();
    for seed in 0..10 {
        let p = ConnectionPoint::sample(2, seed);
        let rf = flatness_residual(&p, &full, &cfg).unwrap();
        let rr = flatness_residual(&p, &reduced, &cfg).unwrap();
        assert!(rf < TOL, "full seed={seed}: {rf:e}");
        assert!(rr < TOL, "reduced seed={seed}: {rr:e}");
    }
}

#[test]
fn z_flatness_three_strands() {
    let cfg = KzbConfig::default();
    let full = BraidAlgebra::full(3, 4).unwrap();
    let reduced = BraidAlgebra::reduced(3, 4).unwrap();
    for seed in 0..10 {
        let p = ConnectionPoint::sample(3, seed);
        let rf = flatness_residual(&p, &full, &cfg).unwrap();
        let rr = flatness_residual(&p, &reduced, &cfg).unwrap();
        assert!(rf < TOL, "full seed={seed}: {rf:e}");
        assert!(rr < TOL, "reduced seed={seed}: {rr:e}");
    }
}

#[test]
fn three_index_commutation_identity() {
    let cfg = KzbConfig::default();
    let alg = BraidAlgebra::full(3, 4).unwrap();
    for seed in 0..10 {
        let p = ConnectionPoint::sample(3, seed);
        let r = cdybe_residual(&p, &alg, 1, 2, 3, &cfg).unwrap();
        assert!(r < TOL, "seed={seed}: {r:e}");
    }
    // The identity is symmetric under relabeling; spot-check another order.
    let p = ConnectionPoint::sample(3, 42);
    let r = cdybe_residual(&p, &alg, 3, 1, 2, &cfg).unwrap();
    assert!(r < TOL, "{r:e}");
}

#[test]
fn three_index_identity_rejects_repeats() {
    let cfg = KzbConfig::default();
    let alg = BraidAlgebra::full(3, 4).unwrap();
    let p = ConnectionPoint::sample(3, 0);
    assert!(matches!(
        cdybe_residual(&p, &alg, 1, 2, 1, &cfg),
        Err(KzbError::DegenerateIndices(_))
    ));
}

#[test]
fn scalar_six_term_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    for _ in 0..12 {
        let tau = C64::new(rng.gen_range(-0.3..0.3), rng.gen_range(0.8..1.4));
        let z = C64::new(rng.gen_range(0.05..0.4), rng.gen_range(0.05..0.3));
        let zp = C64::new(rng.gen_range(-0.4..-0.05), rng.gen_range(0.05..0.3));
        let r = cdybe_scalar_residual(z, zp, tau, 8, 60);
        assert!(r < 1e-10, "z={z} zp={zp} tau={tau}: {r:e}");
    }
}

#[test]
fn tau_flatness_two_and_three_strands() {
    let cfg = KzbConfig::default();
    for n in [2usize, 3] {
        let alg = BraidAlgebra::reduced(n, 4).unwrap();
        for seed in 0..6 {
            let p = ConnectionPoint::sample(n, seed);
            let (r1, r2) = tau_flatness_residual(&p, &alg, &cfg).unwrap();
            assert!(r1 < 1e-8, "n={n} seed={seed} crossed-derivative: {r1:e}");
            assert!(r2 < 1e-8, "n={n} seed={seed} commutator: {r2:e}");
        }
    }
}

#[test]
fn tau_flatness_requires_reduced_relations() {
    let cfg = KzbConfig::default();
    let alg = BraidAlgebra::full(2, 4).unwrap();
    let p = ConnectionPoint::sample(2, 0);
    assert!(matches!(
        tau_flatness_residual(&p, &alg, &cfg),
        Err(KzbError::ReducedOnly(_))
    ));
}

// Truncating the q-expansions harder must make the residuals worse: the
// identities hold only through the theta relations, not term by term.
// (Two strands are excluded: there the z-flatness residual collapses for
// algebraic reasons at any truncation.)
#[test]
fn residuals_decay_as_q_truncation_grows() {
    let tau = C64::new(0.1, 0.6);
    let z = vec![
        C64::new(0.0, 0.0),
        C64::new(0.45, 0.0) + tau * 0.5,
        C64::new(0.2, 0.0) + tau * 0.15,
    ];
    let p = ConnectionPoint::new(z, tau, 0.05).unwrap();
    let alg = BraidAlgebra::reduced(3, 4).unwrap();

    let mut prev_flat = f64::INFINITY;
    let mut prev_tau = f64::INFINITY;
    for q_terms in [1usize, 2, 3, 5, 8] {
        let cfg = KzbConfig { q_terms };
        let flat = flatness_residual(&p, &alg, &cfg).unwrap();
        let (r1, r2) = tau_flatness_residual(&p, &alg, &cfg).unwrap();
        let tau_res = r1.max(r2);
        assert!(flat < prev_flat, "q_terms={q_terms}: {flat:e} !< {prev_flat:e}");
        assert!(tau_res < prev_tau, "q_terms={q_terms}: {tau_res:e} !< {prev_tau:e}");
        prev_flat = flat;
        prev_tau = tau_res;
    }
    assert!(prev_flat < 1e-12, "fully converged by q_terms=8: {prev_flat:e}");
}
