//! The randomized identity suite at its documented tolerances, plus the
//! structural relation between the one-point and two-point combinations.

use num_complex::Complex64 as C64;
use special_fn::identities::l_and_half_h;
use special_fn::{check_scalar_identity, IdentityName, SampleConfig};

#[test]
fn all_identities_pass_at_default_configuration() {
    let cfg = SampleConfig::default();
    for name in IdentityName::ALL {
        let r = check_scalar_identity(name, 20, 99, &cfg);
        assert!(r < 1e-9, "{name}: residual {r:.3e}");
    }
}

#[test]
fn fay_is_tight() {
    let cfg = SampleConfig::default();
    let r = check_scalar_identity(IdentityName::Fay, 20, 31, &cfg);
    assert!(r < 1e-10, "residual {r:.3e}");
}

#[test]
fn h_vanishing_at_order_six() {
    let cfg = SampleConfig { jet_order: 6, ..Default::default() };
    let r = check_scalar_identity(IdentityName::HVanishing, 20, 47, &cfg);
    assert!(r < 1e-9, "residual {r:.3e}");
}

#[test]
fn heat_is_tight() {
    let cfg = SampleConfig::default();
    let r = check_scalar_identity(IdentityName::Heat, 20, 53, &cfg);
    assert!(r < 1e-10, "residual {r:.3e}");
}

#[test]
fn one_point_combination_is_half_the_diagonal_two_point_one() {
    // L(z, u, v) = -H(z, z, u, v)/2 coefficientwise.
    let cfg = SampleConfig::default();
    let tau = C64::new(0.07, 1.03);
    for z in [C64::new(0.31, 0.24), C64::new(-0.26, 0.43)] {
        let (l, half_h) = l_and_half_h(z, tau, &cfg);
        let order = l.order.min(half_h.order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                let d = (l.c[i][j].v - half_h.c[i][j].v).norm();
                assert!(d < 1e-10, "u^{i} v^{j}: differ by {d:.3e}");
            }
        }
    }
}
