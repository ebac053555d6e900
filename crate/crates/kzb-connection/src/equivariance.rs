use std::str::FromStr;
use std::sync::Arc;

use lie_core::morphism::permutation;
use lie_core::{LieElement, LieMorphism, Scalar};
use special_fn::two_pi_i;

use crate::connection::{
    build_delta, build_k, exp_ad, BraidAlgebra, BraidKind, KzbConfig,
};
use crate::error::KzbError;
use crate::point::{C64, ConnectionPoint};

/// Which lattice/modular transformation law to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivarianceKind {
    /// K_i(z + δ_j) = K_i(z).
    Shift1,
    /// K_i(z + τδ_j) = e^{−2πi ad x_j}(K_i(z)).
    ShiftTau,
    /// Δ(z + τδ_i) = e^{−2πi ad x_i}(Δ(z) − K_i(z)).
    ShiftDelta,
    /// (1/τ)K_i(z/τ|−1/τ) against the conjugated coefficient; needs a
    /// finite-dimensional realization.
    ModK,
    /// (1/τ²)Δ(z/τ|−1/τ) against the conjugated coefficient; needs a
    /// finite-dimensional realization.
    ModDelta,
}

impl EquivarianceKind {
    pub const ALL: [EquivarianceKind; 5] = [
        EquivarianceKind::Shift1,
        EquivarianceKind::ShiftTau,
        EquivarianceKind::ShiftDelta,
        EquivarianceKind::ModK,
        EquivarianceKind::ModDelta,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            EquivarianceKind::Shift1 => "shift_1",
            EquivarianceKind::ShiftTau => "shift_tau",
            EquivarianceKind::ShiftDelta => "shift_Delta",
            EquivarianceKind::ModK => "mod_K",
            EquivarianceKind::ModDelta => "mod_Delta",
        }
    }
}

impl FromStr for EquivarianceKind {
    type Err = KzbError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EquivarianceKind::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == s)
            .ok_or(KzbError::MissingRealization("unknown equivariance kind"))
    }
}

/// Residual of the transformation law selected by `kind`, maximized over all
/// strands involved.
pub fn equivariance_residual(
    point: &ConnectionPoint,
    algebra: &BraidAlgebra,
    cfg: &KzbConfig,
    kind: EquivarianceKind,
) -> Result<f64, KzbError> {
    let n = point.n();
    let minus_2pi_i = -two_pi_i();
    match kind {
        EquivarianceKind::Shift1 => {
            let base = build_k(point, algebra, cfg)?;
            let mut worst = 0.0f64;
            for j in 1..=n {
                let shifted = point.translated(j, C64::new(1.0, 0.0))?;
                let moved = build_k(&shifted, algebra, cfg)?;
                for i in 0..n {
                    worst = worst.max(moved[i].sub(&base[i]).max_coeff());
                }
            }
            Ok(worst)
        }
        EquivarianceKind::ShiftTau => {
            let base = build_k(point, algebra, cfg)?;
            let mut worst = 0.0f64;
            for j in 1..=n {
                let shifted = point.translated(j, point.tau)?;
                let moved = build_k(&shifted, algebra, cfg)?;
                for i in 0..n {
                    let expected = exp_ad(algebra, j, minus_2pi_i, &base[i])?;
                    worst = worst.max(moved[i].sub(&expected).max_coeff());
                }
            }
            Ok(worst)
        }
        EquivarianceKind::ShiftDelta => {
            if algebra.kind != BraidKind::Reduced {
                return Err(KzbError::ReducedOnly("the Δ shift law"));
            }
            let base_k = build_k(point, algebra, cfg)?;
            let delta = build_delta(point, algebra, cfg)?;
            let mut worst = 0.0f64;
            for i in 1..=n {
                let shifted = point.translated(i, point.tau)?;
                let moved = build_delta(&shifted, algebra, cfg)?;

                // The head passes through e^{ad u} unchanged (its bracket with
                // u lands in the algebra part), so the head coefficients must
                // match outright...
                worst = worst.max((moved.lowering_coeff - delta.lowering_coeff).norm());
                for (a, b) in moved.chord_weights.iter().zip(&delta.chord_weights) {
                    worst = worst.max((a.1 - b.1).norm());
                }

                // ...while the algebra part of e^{ad u}(Δ − K_i), u = −2πi x_i,
                // is e^{ad u}(tail − K_i) + Σ_{r≥1} (ad u)^{r−1}(−H(u))/r!
                // with H the head derivation.
                let w = delta.tail.sub(&base_k[i - 1]);
                let mut rhs = exp_ad(algebra, i, minus_2pi_i, &w)?;
                // Head correction terms: t_1 = −H(u) = 2πi·H(x_i), then
                // t_r = [u, t_{r−1}]/r.
                let xi = algebra.x(i);
                let mut cur = delta.head_apply(algebra, &xi)?.scale(&two_pi_i());
                let mut r = 2u32;
                while !cur.is_zero() && r <= algebra.degree() + 2 {
                    rhs = rhs.add(&cur);
                    cur = algebra
                        .quo
                        .bracket(&xi, &cur, false)?
                        .scale(&(minus_2pi_i / r as f64));
                    r += 1;
                }
                worst = worst.max(moved.tail.sub(&rhs).max_coeff());
            }
            Ok(worst)
        }
        EquivarianceKind::ModK => Err(KzbError::MissingRealization("the modular K law")),
        EquivarianceKind::ModDelta => Err(KzbError::MissingRealization("the modular Δ law")),
    }
}

/// Applies the strand relabeling i -> perm[i-1] (1-based) to an element, via
/// the induced algebra automorphism.
pub fn permute_element(
    algebra: &BraidAlgebra,
    perm: &[usize],
    elem: &LieElement<C64>,
) -> Result<LieElement<C64>, KzbError> {
    let rational = permutation("relabel", algebra.quo.clone(), perm)?;
    let images: Vec<LieElement<C64>> = rational
        .images
        .iter()
        .map(|im| im.map_coeffs(<C64 as Scalar>::from_q))
        .collect();
    let complex = LieMorphism::new(
        "relabel",
        Arc::clone(&algebra.quo),
        Arc::clone(&algebra.quo),
        images,
    )?;
    Ok(complex.apply_lie(elem))
}
