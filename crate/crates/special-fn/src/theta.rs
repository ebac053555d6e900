//! The odd Jacobi-style theta function normalized by `theta(0) = 0`,
//! `theta'(0) = 1`, its Dedekind eta companion, and the two-variable
//! Kronecker-style kernels `k` and `g` built from it.
//!
//! Everything is evaluated through the convergent q-product
//!
//! ```text
//! theta(z | tau) = (sin(pi z) / pi) * prod_{s>=1} (1 - q^s u)(1 - q^s / u) / (1 - q^s)^2
//! ```
//!
//! with `u = e^{2 pi i z}`, `q = e^{2 pi i tau}`. Truncating the product at
//! `terms` factors keeps the error below machine precision for `|q| <= 0.5`
//! and `terms >= 60`, and — usefully — preserves both the normalization
//! `theta'(0) = 1` and the oddness of `theta` exactly.
//!
//! Jets in the auxiliary variable `x` represent `x -> f(z + x)`; coefficient
//! scalars are [`DualC`], so a caller that seeds `z` or `tau` gets one exact
//! directional derivative alongside every value. No identity check in this
//! crate uses finite differences.

use crate::dual::DualC;
use crate::jet::Jet;
use crate::{two_pi_i, C64};

const PI: f64 = std::f64::consts::PI;

/// Dedekind eta: `q^{1/24} prod_{n>=1} (1 - q^n)`.
pub fn eta(tau: DualC, terms: usize) -> DualC {
    let q = tau.mul(DualC::of(two_pi_i())).exp();
    let mut prod = tau.mul(DualC::of(two_pi_i() / 24.0)).exp();
    let mut qn = DualC::one();
    for _ in 1..=terms {
        qn = qn.mul(q);
        prod = prod.mul(DualC::one().sub(qn));
    }
    prod
}

/// Jet in `x` of `theta(z + x | tau)` up to `x^order`.
pub fn theta_jet(z: DualC, tau: DualC, order: usize, terms: usize) -> Jet {
    let pi = C64::new(PI, 0.0);

    // (sin pi(z+x))/pi = (sin(pi z) cos(pi x) + cos(pi z) sin(pi x)) / pi
    let sz = z.scale(pi).sin();
    let cz = z.scale(pi).cos();
    let mut cos_x = Jet::zero(order);
    let mut sin_x = Jet::zero(order);
    let mut pow = 1.0f64; // pi^m / m!
    for m in 0..=order {
        if m > 0 {
            pow *= PI / m as f64;
        }
        let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let c = DualC::of_f64(sign * pow);
        if m % 2 == 0 {
            cos_x.c[m] = c;
        } else {
            sin_x.c[m] = c;
        }
    }
    let mut jet = cos_x.scale(sz).add(&sin_x.scale(cz));
    jet = jet.scale(DualC::of_f64(1.0 / PI));

    let q = tau.mul(DualC::of(two_pi_i())).exp();
    let u = z.mul(DualC::of(two_pi_i())).exp();
    let u_inv = u.inv();
    let e_plus = Jet::exp_linear(order, DualC::of(two_pi_i()));
    let e_minus = Jet::exp_linear(order, DualC::of(-two_pi_i()));
    let one = Jet::constant(order, DualC::one());

    let mut qs = DualC::one();
    for _ in 1..=terms {
        qs = qs.mul(q);
        let f1 = one.sub(&e_plus.scale(qs.mul(u)));
        let f2 = one.sub(&e_minus.scale(qs.mul(u_inv)));
        let d = DualC::one().sub(qs);
        let d_inv2 = d.mul(d).inv();
        jet = jet.mul(&f1).mul(&f2).scale(d_inv2);
    }
    jet
}

/// `theta(z | tau)` with its seeded directional derivative.
pub fn theta(z: DualC, tau: DualC, terms: usize) -> DualC {
    theta_jet(z, tau, 0, terms).value()
}

/// `k`-th z-derivative of theta at `z`: `k! *` the `x^k` jet coefficient.
pub fn theta_dz(k: usize, z: DualC, tau: DualC, terms: usize) -> DualC {
    let mut fact = 1.0f64;
    for m in 2..=k {
        fact *= m as f64;
    }
    theta_jet(z, tau, k, terms).c[k].scale(C64::new(fact, 0.0))
}

/// Unit jet `1 + x k(z, x) = theta(z + x) x / (theta(z) theta(x))`.
///
/// Its constant term is exactly 1, which is what makes division-free forms
/// of the classical addition identities possible.
pub fn h_unit_jet(z: DualC, tau: DualC, order: usize, terms: usize) -> Jet {
    let num = theta_jet(z, tau, order, terms);
    let tz = num.value();
    // theta(x)/x is a unit jet: theta(0) = 0 exactly in the product form.
    let (tx_over_x, _r) = theta_jet(DualC::zero(), tau, order + 1, terms).shift_down(1);
    num.div(&tx_over_x.truncate(order)).scale(tz.inv())
}

/// Jet in `x` of `k(z, x | tau) = theta(z + x) / (theta(z) theta(x)) - 1/x`.
pub fn k_jet(z: DualC, tau: DualC, order: usize, terms: usize) -> Jet {
    let h = h_unit_jet(z, tau, order + 1, terms);
    let mut shifted = h;
    shifted.c[0] = shifted.c[0].sub(DualC::one());
    let (k, _r) = shifted.shift_down(1);
    k
}

/// Jet in `x` of `g(z, x | tau) = d/dx k(z, x | tau)`.
pub fn g_jet(z: DualC, tau: DualC, order: usize, terms: usize) -> Jet {
    k_jet(z, tau, order + 1, terms).derivative()
}

/// Jet in `x` of `g(0, x | tau)`: the kernel `k` has a `1/z` pole at `z = 0`
/// but its x-derivative does not, and
///
/// ```text
/// g(0, x) = d/dx ( theta'(x)/theta(x) - 1/x ).
/// ```
pub fn g_jet0(tau: DualC, order: usize, terms: usize) -> Jet {
    let w = order + 4;
    let t = theta_jet(DualC::zero(), tau, w, terms);
    let t_dx = t.derivative(); // order w-1
    // x theta'(x) - theta(x) vanishes to third order (theta is odd with
    // theta'(0) = 1), so dividing by x^2 theta(x)/x is regular.
    let num = t_dx.shift_up(1).sub(&t.truncate(w - 1));
    let (num, _r) = num.shift_down(2); // order w-3
    let (den, _r2) = t.shift_down(1); // theta(x)/x, unit jet, order w-1
    let u = num.div(&den.truncate(w - 3)); // theta'/theta - 1/x, order w-3 = order+1
    u.derivative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> DualC {
        DualC::of(C64::new(re, im))
    }

    #[test]
    fn theta_is_odd_and_normalized() {
        let tau = c(0.13, 1.04);
        let z = c(0.31, 0.22);
        let a = theta(z, tau, 60);
        let b = theta(z.neg(), tau, 60);
        assert!((a.v + b.v).norm() < 1e-14);

        let jet0 = theta_jet(DualC::zero(), tau, 3, 60);
        assert!(jet0.c[0].abs() < 1e-15, "theta(0) = 0");
        assert!((jet0.c[1].v - C64::new(1.0, 0.0)).norm() < 1e-15, "theta'(0) = 1");
        assert!(jet0.c[2].abs() < 1e-15, "even coefficients vanish");
    }

    #[test]
    fn jet_coefficients_are_taylor_coefficients() {
        // theta(z + x) evaluated at a concrete small x vs the jet sum.
        let tau = c(-0.07, 0.93);
        let z = c(0.27, 0.41);
        let x = C64::new(0.05, -0.03);
        let jet = theta_jet(z, tau, 12, 60);
        let mut acc = C64::new(0.0, 0.0);
        let mut xp = C64::new(1.0, 0.0);
        for m in 0..=12 {
            acc += jet.c[m].v * xp;
            xp *= x;
        }
        let direct = theta(z.add(DualC::of(x)), tau, 60);
        assert!((acc - direct.v).norm() < 1e-13);
    }

    #[test]
    fn dual_slot_matches_jet_derivative_in_z() {
        // Seed z: the dt slot of theta(z) must equal the x^1 jet coefficient.
        let tau = c(0.21, 1.11);
        let z = DualC::seed(C64::new(0.37, 0.18));
        let jet = theta_jet(z, tau, 1, 60);
        assert!((jet.c[0].dt - jet.c[1].v).norm() < 1e-13);
    }

    #[test]
    fn k_jet_reproduces_direct_evaluation() {
        let tau = c(0.11, 0.97);
        let z = c(0.33, 0.25);
        let x = C64::new(0.04, 0.02);
        let jet = k_jet(z, tau, 14, 60);
        let mut acc = C64::new(0.0, 0.0);
        let mut xp = C64::new(1.0, 0.0);
        for m in 0..=14 {
            acc += jet.c[m].v * xp;
            xp *= x;
        }
        let tz = theta(z, tau, 60).v;
        let tx = theta(DualC::of(x), tau, 60).v;
        let tzx = theta(z.add(DualC::of(x)), tau, 60).v;
        let direct = tzx / (tz * tx) - C64::new(1.0, 0.0) / x;
        assert!((acc - direct).norm() < 1e-11);
    }

    #[test]
    fn g_at_origin_matches_limit_of_g() {
        // g(0, x) should be the z -> 0 limit of g(z, x); the deviation is
        // linear in z with O(10) slopes on the higher coefficients.
        let tau = c(0.09, 1.02);
        let g0 = g_jet0(tau, 6, 60);
        let z_small = c(1e-6, 5e-7);
        let g_near = g_jet(z_small, tau, 6, 60);
        for m in 0..=6 {
            assert!(
                (g0.c[m].v - g_near.c[m].v).norm() < 1e-4,
                "coefficient {m}: {} vs {}",
                g0.c[m].v,
                g_near.c[m].v
            );
        }
    }
}
