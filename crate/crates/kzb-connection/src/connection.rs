use std::sync::Arc;

use lie_core::families::{elliptic_braid, reduced_elliptic_braid, t_name};
use lie_core::{LieElement, QuotientLie};
use special_fn::{even_multipliers, g_jet, k_jet, two_pi_i, DualC};

use crate::error::KzbError;
use crate::point::{C64, ConnectionPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidKind {
    /// t_{1,n}: the x/y/t algebra with Σx_i and Σy_i central.
    Full,
    /// The quotient with Σx_i = Σy_i = 0.
    Reduced,
}

/// A truncated elliptic braid Lie algebra together with its flavor, shared by
/// all connection builders.
pub struct BraidAlgebra {
    pub quo: Arc<QuotientLie>,
    pub kind: BraidKind,
    pub n: usize,
}

impl BraidAlgebra {
    pub fn full(n: usize, degree: u32) -> Result<Self, KzbError> {
        let quo = QuotientLie::new(elliptic_braid(n, degree), degree)?;
        Ok(BraidAlgebra { quo: Arc::new(quo), kind: BraidKind::Full, n })
    }

    pub fn reduced(n: usize, degree: u32) -> Result<Self, KzbError> {
        let quo = QuotientLie::new(reduced_elliptic_braid(n, degree), degree)?;
        Ok(BraidAlgebra { quo: Arc::new(quo), kind: BraidKind::Reduced, n })
    }

    pub fn degree(&self) -> u32 {
        self.quo.max_degree()
    }

    /// Generators are returned in quotient normal form, so that sums built
    /// from them reduce termwise (never through a trailing projection).
    pub fn x(&self, i: usize) -> LieElement<C64> {
        self.quo.nf(&self.quo.gen::<C64>(&format!("x{i}")))
    }

    pub fn y(&self, i: usize) -> LieElement<C64> {
        self.quo.nf(&self.quo.gen::<C64>(&format!("y{i}")))
    }

    pub fn t(&self, i: usize, j: usize) -> LieElement<C64> {
        self.quo.nf(&self.quo.gen::<C64>(&t_name(i, j)))
    }
}

/// Direction in which the builders differentiate (analytically, through the
/// q-series): none, one marked point, or tau. Strand labels are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    None,
    Z(usize),
    Tau,
}

/// Evaluation settings for the q-products behind the connection
/// coefficients.
#[derive(Debug, Clone, Copy)]
pub struct KzbConfig {
    pub q_terms: usize,
}

impl Default for KzbConfig {
    fn default() -> Self {
        KzbConfig { q_terms: 60 }
    }
}

/// The coefficients K_1..K_n of the dz_i-part of the connection, together
/// with their derivative in the seeded direction.
pub struct KByStrand {
    pub value: Vec<LieElement<C64>>,
    pub deriv: Vec<LieElement<C64>>,
}

/// The dtau-coefficient. The derivation head is kept symbolic: the lowering
/// derivation (x_i -> y_i) with weight `lowering_coeff`, and the chord
/// derivation of weight 2m with coefficient `chord_weights[m-1].1`. The Lie
/// tail is (1/2πi) Σ_{i<j} g(z_ij, ad x_i)(t_ij) in normal form.
pub struct DeltaData {
    pub lowering_coeff: C64,
    pub chord_weights: Vec<(u32, C64)>,
    pub tail: LieElement<C64>,
    pub tail_deriv: LieElement<C64>,
}

fn check_strands(point: &ConnectionPoint, algebra: &BraidAlgebra) -> Result<(), KzbError> {
    if point.n() != algebra.n {
        return Err(KzbError::StrandMismatch(point.n(), algebra.n));
    }
    Ok(())
}

fn lex_positive(w: C64) -> bool {
    w.re > 0.0 || (w.re == 0.0 && w.im > 0.0)
}

/// Canonical evaluation data for the unordered pair {i, j}: a representative
/// difference `c` chosen independently of the label order, the sign `s` with
/// z_i - z_j = s*c, and the derivative seed of `c` in the given direction.
/// Routing both K_i- and K_j-contributions (and every permuted relabeling)
/// through the same jet evaluation keeps the stated algebraic identities
/// exact rather than merely accurate to rounding.
fn canonical_pair(point: &ConnectionPoint, i: usize, j: usize, dir: Direction) -> (DualC, f64) {
    let w = point.zij(i, j);
    let seed = match dir {
        Direction::Z(p) => {
            let d = |a: usize| if p == a { 1.0 } else { 0.0 };
            C64::new(d(i) - d(j), 0.0)
        }
        _ => C64::new(0.0, 0.0),
    };
    if lex_positive(w) {
        (DualC { v: w, dt: seed }, 1.0)
    } else {
        (DualC { v: -w, dt: -seed }, -1.0)
    }
}

fn tau_dual(point: &ConnectionPoint, dir: Direction) -> DualC {
    match dir {
        Direction::Tau => DualC::seed(point.tau),
        _ => DualC::of(point.tau),
    }
}

/// (ad x_i)^m (t_ij) for m = 0..=m_max, in normal form.
fn ad_powers(
    algebra: &BraidAlgebra,
    i: usize,
    j: usize,
    m_max: usize,
) -> Result<Vec<LieElement<C64>>, KzbError> {
    let xi = algebra.x(i);
    let mut out = vec![algebra.t(i, j)];
    for _ in 1..=m_max {
        out.push(algebra.quo.bracket(&xi, out.last().unwrap(), false)?);
    }
    Ok(out)
}

/// K_i(z|tau) = -y_i + Σ_{j≠i} k(z_ij, ad x_i)(t_ij) for every strand, with
/// the directional derivative evaluated through the seeded q-series.
pub fn build_k_directional(
    point: &ConnectionPoint,
    algebra: &BraidAlgebra,
    cfg: &KzbConfig,
    dir: Direction,
) -> Result<KByStrand, KzbError> {
    check_strands(point, algebra)?;
    let n = point.n();
    let d = algebra.degree();
    let m_max = d.saturating_sub(2) as usize;
    let tau = tau_dual(point, dir);

    let mut value: Vec<LieElement<C64>> = (1..=n).map(|i| algebra.y(i).scale(&-C64::new(1.0, 0.0))).collect();
    let mut deriv: Vec<LieElement<C64>> = (0..n).map(|_| LieElement::zero()).collect();

    for i in 1..=n {
        for j in (i + 1)..=n {
            let (c, s) = canonical_pair(point, i, j, dir);
            let jet = k_jet(c, tau, m_max, cfg.q_terms);
            let a = ad_powers(algebra, i, j, m_max)?;
            let b = ad_powers(algebra, j, i, m_max)?;
            let mut sign = s; // s^{m+1} at m = 0
            for m in 0..=m_max {
                // k_m(z_ij) = s^{m+1} k_m(c) and k_m(z_ji) = (-s)^{m+1} k_m(c),
                // since k(-z, -x) = -k(z, x).
                let ci = jet.c[m].scale(C64::new(sign, 0.0));
                let cj = jet.c[m].scale(C64::new(if m % 2 == 0 { -sign } else { sign }, 0.0));
                value[i - 1].add_scaled(&a[m], &ci.v);
                deriv[i - 1].add_scaled(&a[m], &ci.dt);
                value[j - 1].add_scaled(&b[m], &cj.v);
                deriv[j - 1].add_scaled(&b[m], &cj.dt);
                sign *= s;
            }
        }
    }
    Ok(KByStrand { value, deriv })
}

pub fn build_k(
    point: &ConnectionPoint,
    algebra: &BraidAlgebra,
    cfg: &KzbConfig,
) -> Result<Vec<LieElement<C64>>, KzbError> {
    Ok(build_k_directional(point, algebra, cfg, Direction::None)?.value)
}

/// The single summand K_ij = k(z_ij, ad x_i)(t_ij), i ≠ j, evaluated with the
/// same canonical-jet convention as `build_k` (so K_ij + K_ji = 0 exactly).
pub fn pair_term(
    point: &ConnectionPoint,
    algebra: &BraidAlgebra,
    i: usize,
    j: usize,
    cfg: &KzbConfig,
) -> Result<LieElement<C64>, KzbError> {
    check_strands(point, algebra)?;
    if i == j {
        return Err(KzbError::DegenerateIndices(vec![i, j]));
    }
    if i == 0 || j == 0 || i > algebra.n || j > algebra.n {
        return Err(KzbError::StrandOutOfRange(i.max(j), algebra.n));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let d = algebra.degree();
    let m_max = d.saturating_sub(2) as usize;
    let (c, s) = canonical_pair(point, lo, hi, Direction::None);
    let s = if i == lo { s } else { -s };
    let jet = k_jet(c, tau_dual(point, Direction::None), m_max, cfg.q_terms);
    let a = ad_powers(algebra, i, j, m_max)?;
    let mut out = LieElement::zero();
    let mut sign = s;
    for (am, cm) in a.iter().zip(jet.c.iter()) {
        out.add_scaled(am, &(cm.v * sign));
        sign *= s;
    }
    Ok(out)
}

/// The dtau-coefficient of the connection:
/// -(1/2πi)Δ_0 - (1/2πi) Σ_{m≥1} a_{2m} E_{2m+2}(tau) δ_{2m}
/// + (1/2πi) Σ_{i<j} g(z_ij, ad x_i)(t_ij),
/// heads symbolic, tail in normal form with its directional derivative.
pub fn build_delta_directional(
    point: &ConnectionPoint,
    algebra: &BraidAlgebra,
    cfg: &KzbConfig,
    dir: Direction,
) -> Result<DeltaData, KzbError> {
    check_strands(point, algebra)?;
    let n = point.n();
    let d = algebra.degree();
    let m_max = d.saturating_sub(2) as usize;
    let tau = tau_dual(point, dir);
    let inv_2pi_i = C64::new(1.0, 0.0) / two_pi_i();

    let head_count = ((d.saturating_sub(1)) / 2) as usize;
    let mults = even_multipliers(tau, head_count, cfg.q_terms);
    let chord_weights: Vec<(u32, C64)> = mults
        .iter()
        .enumerate()
        .map(|(idx, m)| (2 * (idx as u32 + 1), -inv_2pi_i * m.v))
        .collect();

    let mut tail = LieElement::zero();
    let mut tail_deriv = LieElement::zero();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (c, s) = canonical_pair(point, i, j, dir);
            let jet = g_jet(c, tau, m_max, cfg.q_terms);
            let a = ad_powers(algebra, i, j, m_max)?;
            let mut sign = 1.0; // g_m(z_ij) = s^m g_m(c), since g(-z, -x) = g(z, x)
            for (am, jm) in a.iter().zip(jet.c.iter()) {
                let cm = jm.scale(C64::new(sign, 0.0)).scale(inv_2pi_i);
                tail.add_scaled(am, &cm.v);
                tail_deriv.add_scaled(am, &cm.dt);
                sign *= s;
            }
        }
    }
    Ok(DeltaData { lowering_coeff: -inv_2pi_i, chord_weights, tail, tail_deriv })
}

pub fn build_delta(
    point: &ConnectionPoint,
    algebra: &BraidAlgebra,
    cfg: &KzbConfig,
) -> Result<DeltaData, KzbError> {
    build_delta_directional(point, algebra, cfg, Direction::None)
}

/// exp(c · ad x_i) applied to `elem` in the truncated algebra, where the
/// series terminates because ad x raises the degree.
pub fn exp_ad(
    algebra: &BraidAlgebra,
    strand: usize,
    c: C64,
    elem: &LieElement<C64>,
) -> Result<LieElement<C64>, KzbError> {
    let x = algebra.x(strand);
    let mut out = elem.clone();
    let mut cur = elem.clone();
    let mut r = 1u32;
    while !cur.is_zero() && r <= algebra.degree() + 1 {
        cur = algebra.quo.bracket(&x, &cur, false)?;
        cur = cur.scale(&(c / r as f64));
        out = out.add(&cur);
        r += 1;
    }
    Ok(out)
}
