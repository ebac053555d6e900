//! Randomized oracle checks for the scalar/jet identities that every later
//! algebraic construction in this workspace leans on.
//!
//! Each check evaluates its identity at pseudo-random points of the upper
//! half plane and reports the worst absolute residual — either of a single
//! complex number or coefficientwise over a one- or two-variable jet. The
//! sampler is deterministic in the seed, keeps `tau` inside a lens where
//! both `tau` and `-1/tau` have comfortable imaginary part, and rejects
//! sample points whose lattice coordinates come within a configurable tube
//! of the period lattice (where the kernels have poles).

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dual::DualC;
use crate::error::SpecialFnError;
use crate::jet::{Jet, Jet2};
use crate::theta::{eta, g_jet, g_jet0, h_unit_jet, k_jet, theta_jet};
use crate::{two_pi_i, C64};

/// The named scalar identities backing the flatness and modularity proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityName {
    /// Three-term product identity for `theta(z+x)/(theta(z)theta(x))`,
    /// checked in a division-free unit-jet form in two formal variables.
    Fay,
    /// The symmetric sum of `theta'/theta` products against `theta''/theta`
    /// and the logarithmic tau-derivative of eta; scalar in (z, x, tau).
    TripleTheta,
    /// Behaviour of the kernel `k` under tau -> -1/tau, as jets in x.
    KModularity,
    /// Behaviour of `g = k_x` under tau -> -1/tau, as jets in x.
    GModularity,
    /// The two-point, two-variable combination `H(z, z', u, v)` of `k` and
    /// `g` that collapses the horizontal commutator; vanishes identically.
    HVanishing,
    /// `4 pi i theta_tau/theta = theta''/theta - 12 pi i eta_tau/eta`.
    Heat,
    /// The one-point combination `L(z, u, v)` weighting the bracket terms;
    /// vanishes identically (and equals `-H(z, z, u, v)/2`).
    LVanishing,
}

impl IdentityName {
    pub const ALL: [IdentityName; 7] = [
        IdentityName::Fay,
        IdentityName::TripleTheta,
        IdentityName::KModularity,
        IdentityName::GModularity,
        IdentityName::HVanishing,
        IdentityName::Heat,
        IdentityName::LVanishing,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityName::Fay => "fay",
            IdentityName::TripleTheta => "triple_theta",
            IdentityName::KModularity => "k_modularity",
            IdentityName::GModularity => "g_modularity",
            IdentityName::HVanishing => "H_vanishing",
            IdentityName::Heat => "heat",
            IdentityName::LVanishing => "L_vanishing",
        }
    }

    fn stream(&self) -> u64 {
        // fixed per-identity offset so different identities with the same
        // seed draw decorrelated points
        match self {
            IdentityName::Fay => 0x11,
            IdentityName::TripleTheta => 0x22,
            IdentityName::KModularity => 0x33,
            IdentityName::GModularity => 0x44,
            IdentityName::HVanishing => 0x55,
            IdentityName::Heat => 0x66,
            IdentityName::LVanishing => 0x77,
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = SpecialFnError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| SpecialFnError::UnknownIdentity(s.to_string()))
    }
}

/// Sampling and truncation knobs for [`check_scalar_identity`].
#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// Jet truncation order (total degree for two-variable checks).
    pub jet_order: usize,
    /// Number of q-product / q-series factors.
    pub q_terms: usize,
    /// Rejection radius around the period lattice, in lattice coordinates.
    pub tube_radius: f64,
    /// Real part range for tau.
    pub re_tau: (f64, f64),
    /// Imaginary part range for tau (kept near 1 so that -1/tau is equally
    /// well-conditioned).
    pub im_tau: (f64, f64),
    /// Range for each lattice coordinate of sampled points z = a + b tau.
    pub lattice_window: (f64, f64),
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            jet_order: 8,
            q_terms: 60,
            tube_radius: 0.05,
            re_tau: (-0.25, 0.25),
            im_tau: (0.8, 1.2),
            lattice_window: (0.15, 0.85),
        }
    }
}

/// Evaluates the named identity at `samples` pseudo-random points and
/// returns the largest absolute residual seen.
pub fn check_scalar_identity(
    name: IdentityName,
    samples: usize,
    seed: u64,
    cfg: &SampleConfig,
) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ name.stream());
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let r = match name {
            IdentityName::Fay => residual_fay(&mut rng, cfg),
            IdentityName::TripleTheta => residual_triple_theta(&mut rng, cfg),
            IdentityName::KModularity => residual_k_modularity(&mut rng, cfg),
            IdentityName::GModularity => residual_g_modularity(&mut rng, cfg),
            IdentityName::HVanishing => residual_h(&mut rng, cfg),
            IdentityName::Heat => residual_heat(&mut rng, cfg),
            IdentityName::LVanishing => residual_l(&mut rng, cfg),
        };
        worst = worst.max(r);
    }
    worst
}

// ---------------------------------------------------------------- sampling

fn sample_tau(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> C64 {
    C64::new(
        rng.gen_range(cfg.re_tau.0..cfg.re_tau.1),
        rng.gen_range(cfg.im_tau.0..cfg.im_tau.1),
    )
}

fn frac_dist(t: f64) -> f64 {
    let f = t - t.floor();
    f.min(1.0 - f)
}

fn coords_ok(c: (f64, f64), tube: f64) -> bool {
    frac_dist(c.0) >= tube && frac_dist(c.1) >= tube
}

fn draw_coords(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> (f64, f64) {
    for _ in 0..1000 {
        let c = (
            rng.gen_range(cfg.lattice_window.0..cfg.lattice_window.1),
            rng.gen_range(cfg.lattice_window.0..cfg.lattice_window.1),
        );
        if coords_ok(c, cfg.tube_radius) {
            return c;
        }
    }
    unreachable!("lattice window excludes the rejection tube");
}

/// Two points whose difference (sign = -1) or sum (sign = +1) must also
/// stay out of the lattice tube.
fn draw_pair(rng: &mut ChaCha8Rng, cfg: &SampleConfig, sign: f64) -> ((f64, f64), (f64, f64)) {
    for _ in 0..1000 {
        let c1 = draw_coords(rng, cfg);
        let c2 = draw_coords(rng, cfg);
        let comb = (c1.0 + sign * c2.0, c1.1 + sign * c2.1);
        if coords_ok(comb, cfg.tube_radius) {
            return (c1, c2);
        }
    }
    unreachable!("rejection loop exhausted; tube radius too large for window");
}

fn point(c: (f64, f64), tau: C64) -> C64 {
    C64::new(c.0, 0.0) + C64::new(c.1, 0.0) * tau
}

// ------------------------------------------------------------- the checks

fn residual_fay(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let (c1, c2) = draw_pair(rng, cfg, -1.0);
    let z = point(c1, tau);
    let zp = point(c2, tau);
    let n = cfg.jet_order;
    let t = DualC::of(tau);

    // Unit jets 1 + x k(z, x): multiplying the three-term identity by uv(u+v)
    // clears every denominator, so no coefficient is ever divided by a
    // formal variable.
    let hz = h_unit_jet(DualC::of(z), t, n, cfg.q_terms);
    let hzp = h_unit_jet(DualC::of(zp), t, n, cfg.q_terms);
    let hd = h_unit_jet(DualC::of(zp - z), t, n, cfg.q_terms);
    let m1 = DualC::of_f64(-1.0);

    let t1 = Jet2::from_v(&hz.scale_var(m1), n)
        .mul(&Jet2::from_sum(&hzp, n))
        .mul_u()
        .neg();
    let t2 = Jet2::from_u(&hz, n)
        .mul(&Jet2::from_sum(&hd, n))
        .mul_v()
        .neg();
    let p3 = Jet2::from_u(&hzp, n).mul(&Jet2::from_v(&hd, n));
    let t3 = p3.mul_u().add(&p3.mul_v());

    t1.add(&t2).add(&t3).max_abs()
}

fn residual_triple_theta(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let (c1, c2) = draw_pair(rng, cfg, 1.0);
    let z = point(c1, tau);
    let x = point(c2, tau);
    let t = DualC::of(tau);

    let ratios = |w: C64| {
        let j = theta_jet(DualC::of(w), t, 2, cfg.q_terms);
        let th = j.c[0].v;
        (j.c[1].v / th, 2.0 * j.c[2].v / th)
    };
    let (az, bz) = ratios(z);
    let (ax, bx) = ratios(x);
    let (as_, bs) = ratios(z + x);

    let e = eta(DualC::seed(tau), cfg.q_terms);
    let dlog_eta = e.dt / e.v;
    let twelve_pi_i = 6.0 * two_pi_i();

    let f = 2.0 * (az * ax - ax * as_ - az * as_) + bz + bx + bs - twelve_pi_i * dlog_eta;
    f.norm()
}

fn residual_k_modularity(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let c = draw_coords(rng, cfg);
    let z = point(c, tau);
    let n = cfg.jet_order;
    let q = cfg.q_terms;
    let inv_tau = C64::new(1.0, 0.0) / tau;

    // z/tau has lattice coordinates (c.1, -c.0) for the lattice of -1/tau,
    // so it inherits the tube safety of z.
    let lhs = k_jet(DualC::of(z * inv_tau), DualC::of(-inv_tau), n, q)
        .scale(DualC::of(inv_tau));

    let e = Jet::exp_linear(n + 1, DualC::of(two_pi_i() * z));
    let rhs1 = e
        .truncate(n)
        .mul(&k_jet(DualC::of(z), DualC::of(tau), n, q).scale_var(DualC::of(tau)));
    let mut em1 = e;
    em1.c[0] = em1.c[0].sub(DualC::one());
    let (jump, _) = em1.shift_down(1);
    let rhs2 = jump.scale(DualC::of(inv_tau));

    lhs.sub(&rhs1).sub(&rhs2).max_abs()
}

fn residual_g_modularity(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let c = draw_coords(rng, cfg);
    let z = point(c, tau);
    let n = cfg.jet_order;
    let q = cfg.q_terms;
    let inv_tau = C64::new(1.0, 0.0) / tau;
    let w = two_pi_i() * z;

    let lhs = g_jet(DualC::of(z * inv_tau), DualC::of(-inv_tau), n, q)
        .scale(DualC::of(inv_tau * inv_tau));

    let e = Jet::exp_linear(n, DualC::of(w));
    let gz = g_jet(DualC::of(z), DualC::of(tau), n, q).scale_var(DualC::of(tau));
    let kz = k_jet(DualC::of(z), DualC::of(tau), n, q).scale_var(DualC::of(tau));
    let rhs1 = e.mul(&gz);
    let rhs2 = e.mul(&kz).scale(DualC::of(w * inv_tau));

    // The residual boundary terms (1 - e^{wx})/(tau x)^2 + (w/tau^2) e^{wx}/x
    // combine into the regular series sum_{m>=2} w^m (m-1)/m! x^{m-2} / tau^2.
    let mut tail = Jet::zero(n);
    let mut pw = w * w;
    let mut fact = 2.0f64;
    for j in 0..=n {
        if j > 0 {
            pw *= w;
            fact *= (j + 2) as f64;
        }
        tail.c[j] = DualC::of(pw * ((j + 1) as f64) / fact * inv_tau * inv_tau);
    }

    lhs.sub(&rhs1).sub(&rhs2).sub(&tail).max_abs()
}

fn residual_heat(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let c = draw_coords(rng, cfg);
    let z = point(c, tau);

    let ts = DualC::seed(tau);
    let j = theta_jet(DualC::of(z), ts, 2, cfg.q_terms);
    let theta = j.c[0].v;
    let dtau_theta = j.c[0].dt;
    let theta_zz = 2.0 * j.c[2].v;

    let e = eta(ts, cfg.q_terms);
    let dlog_eta = e.dt / e.v;

    let four_pi_i = 2.0 * two_pi_i();
    let twelve_pi_i = 6.0 * two_pi_i();
    let f = four_pi_i * dtau_theta / theta - theta_zz / theta + twelve_pi_i * dlog_eta;
    f.norm()
}

/// The two-point combination from the horizontal commutator computation;
/// identically zero as a jet in (u, v).
fn h_combination(z: C64, zp: C64, tau: C64, cfg: &SampleConfig) -> Jet2 {
    let w = cfg.jet_order + 2;
    let q = cfg.q_terms;
    let t = DualC::of(tau);
    let m1 = DualC::of_f64(-1.0);

    let kz = k_jet(DualC::of(z), t, w, q);
    let kzp = k_jet(DualC::of(zp), t, w, q);
    let gz = g_jet(DualC::of(z), t, w, q);
    let gzp = g_jet(DualC::of(zp), t, w, q);
    // g is regular at first argument 0 (unlike k), and the diagonal z' = z
    // of this combination is meaningful — take the limit kernel there.
    let diagonal = (zp - z).norm() < 1e-12;
    let gd = if diagonal {
        g_jet0(t, w, q) // g(0, .)
    } else {
        g_jet(DualC::of(zp - z), t, w, q) // g(z'-z, .)
    };
    let gd_mu = gd.scale_var(m1); // g(z'-z, -.)
    let g_zmzp = if diagonal {
        g_jet0(t, w, q).scale_var(m1)
    } else {
        g_jet(DualC::of(z - zp), t, w, q).scale_var(m1) // g(z-z', -.)
    };
    let g_nzp = g_jet(DualC::of(-zp), t, w, q).scale_var(m1); // g(-z', -.)
    let g_nz = g_jet(DualC::of(-z), t, w, q).scale_var(m1); // g(-z, -.)
    let k_nz = k_jet(DualC::of(-z), t, w, q).scale_var(m1); // k(-z, -.)
    let k_nzp = k_jet(DualC::of(-zp), t, w, q).scale_var(m1); // k(-z', -.)

    // (k(z,u+v) - k(z,u) - v k_x(z,u)) / v^2
    let a_num = Jet2::from_sum(&kz, w)
        .sub(&Jet2::from_u(&kz, w))
        .sub(&Jet2::from_u(&gz, w).mul_v());
    let (a, _) = a_num.div_v(2);
    // (k(z',u+v) - k(z',v) - u k_x(z',v)) / u^2
    let b_num = Jet2::from_sum(&kzp, w)
        .sub(&Jet2::from_v(&kzp, w))
        .sub(&Jet2::from_v(&gzp, w).mul_u());
    let (b, _) = b_num.div_u(2);
    // (g(z'-z,-u) - g(z'-z,v)) / (u+v)
    let c_num = Jet2::from_u(&gd_mu, w).sub(&Jet2::from_v(&gd, w));
    let (c, _) = c_num.div_sum();

    let d = Jet2::from_v(&g_nzp, w)
        .mul(&Jet2::from_u(&k_nz, w))
        .neg()
        .add(&Jet2::from_u(&g_nz, w).mul(&Jet2::from_v(&k_nzp, w)))
        .sub(&Jet2::from_v(&g_zmzp, w).mul(&Jet2::from_sum(&kz, w)))
        .add(&Jet2::from_u(&gd_mu, w).mul(&Jet2::from_sum(&kzp, w)));

    a.sub(&b).add(&c).add(&d)
}

fn residual_h(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let (c1, c2) = draw_pair(rng, cfg, -1.0);
    h_combination(point(c1, tau), point(c2, tau), tau, cfg).max_abs()
}

/// The one-point combination weighting the self-bracket terms; identically
/// zero as a jet in (u, v).
fn l_combination(z: C64, tau: C64, cfg: &SampleConfig) -> Jet2 {
    let w = cfg.jet_order + 2;
    let q = cfg.q_terms;
    let t = DualC::of(tau);
    let half = DualC::of_f64(0.5);

    let kz = k_jet(DualC::of(z), t, w, q);
    let gz = g_jet(DualC::of(z), t, w, q);
    let g0 = g_jet0(t, w, q);
    // phi(x) = g(0,0) - g(0,x): even power series with zero constant term
    let mut phi = Jet::zero(w);
    for m in 1..=w {
        phi.c[m] = g0.c[m].neg();
    }

    let dphi = Jet2::from_u(&phi, w).sub(&Jet2::from_v(&phi, w));
    let (t1, _) = dphi.div_sum();
    let t1 = t1.scale(half);
    let t2 = Jet2::from_sum(&kz, w).mul(&dphi).scale(half);
    let t3 = Jet2::from_u(&gz, w)
        .mul(&Jet2::from_v(&kz, w))
        .sub(&Jet2::from_u(&kz, w).mul(&Jet2::from_v(&gz, w)))
        .scale(half);

    let a_num = Jet2::from_sum(&kz, w)
        .sub(&Jet2::from_u(&kz, w))
        .sub(&Jet2::from_u(&gz, w).mul_v());
    let (a, _) = a_num.div_v(2);
    let b_num = Jet2::from_sum(&kz, w)
        .sub(&Jet2::from_v(&kz, w))
        .sub(&Jet2::from_v(&gz, w).mul_u());
    let (b, _) = b_num.div_u(2);

    t1.add(&t2).add(&t3).sub(&a.sub(&b).scale(half))
}

fn residual_l(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> f64 {
    let tau = sample_tau(rng, cfg);
    let c = draw_coords(rng, cfg);
    l_combination(point(c, tau), tau, cfg).max_abs()
}

/// Exposed for the cross-check `L(z, u, v) = -H(z, z, u, v)/2`.
pub fn l_and_half_h(z: C64, tau: C64, cfg: &SampleConfig) -> (Jet2, Jet2) {
    let l = l_combination(z, tau, cfg);
    let h = h_combination(z, z, tau, cfg).scale(DualC::of_f64(-0.5));
    (l, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in IdentityName::ALL {
            assert_eq!(n.as_str().parse::<IdentityName>().unwrap(), n);
        }
        assert!("no_such_identity".parse::<IdentityName>().is_err());
    }

    #[test]
    fn same_seed_same_residual() {
        let cfg = SampleConfig { jet_order: 4, q_terms: 40, ..Default::default() };
        let a = check_scalar_identity(IdentityName::Heat, 3, 7, &cfg);
        let b = check_scalar_identity(IdentityName::Heat, 3, 7, &cfg);
        assert_eq!(a, b);
    }
}
