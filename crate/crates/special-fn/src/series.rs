//! Classical q-series and the exact rational constants feeding them:
//! Bernoulli numbers, normalized Eisenstein series, and the even Laurent
//! coefficients that tie the Kronecker kernel at z = 0 to Eisenstein series.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};

use crate::dual::DualC;
use crate::jet::Jet;
use crate::{two_pi_i, C64};

/// First `n + 1` Bernoulli numbers `B_0 ..= B_n` (convention `B_1 = -1/2`),
/// computed exactly from the defining recurrence
/// `sum_{j<=m} C(m+1, j) B_j = 0` for `m >= 1`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // binomials C(m+1, j) for j = 0..m, built incrementally
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        let m1 = BigRational::from_integer(BigInt::from(m + 1));
        b.push(-acc / m1);
    }
    b
}

/// `a_{2n} = -(2n+1) B_{2n+2} (2 pi i)^{2n+2} / (2n+2)!` — the coefficient of
/// `x^{2n}` in the even part of the kernel expansion at `z = 0`.
/// All values are real: `a_0 = pi^2/3`, `a_2 = pi^4/15`, ...
pub fn a2n(n: usize) -> f64 {
    a2n_table(n)[n]
}

/// `a_0 ..= a_{2 n_max}` (even indices only) in one pass.
pub fn a2n_table(n_max: usize) -> Vec<f64> {
    let bern = bernoulli_numbers(2 * n_max + 2);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let k = 2 * n + 2;
        // (2 pi i)^k = (2 pi)^k * (-1)^{k/2}
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let mut pow = 1.0f64;
        let mut fact = 1.0f64;
        for m in 1..=k {
            pow *= 2.0 * std::f64::consts::PI;
            fact *= m as f64;
        }
        let b = bern[k].to_f64().expect("Bernoulli number fits in f64");
        out.push(-((k - 1) as f64) * b * sign * pow / fact);
    }
    out
}

/// Normalized Eisenstein series `E_{2k}(tau)`, `q = e^{2 pi i tau}`:
/// `E_{2k} = 1 - (4k / B_{2k}) sum_{n >= 1} sigma_{2k-1}(n) q^n`.
///
/// The derivative slot of `tau` propagates through `q`.
pub fn eisenstein(two_k: usize, tau: DualC, terms: usize) -> DualC {
    assert!(two_k >= 2 && two_k % 2 == 0, "weight must be even and >= 2");
    let bern = bernoulli_numbers(two_k);
    let b = &bern[two_k];
    // -4k / B_{2k}, exact rational then converted once
    let four_k = BigRational::from_integer(BigInt::from(2 * two_k));
    let coeff = (-four_k / b).to_f64().expect("coefficient fits in f64");

    let q = tau.mul(DualC::of(two_pi_i())).exp();
    let mut qn = DualC::one();
    let mut sum = DualC::zero();
    for n in 1..=terms {
        qn = qn.mul(q);
        let s = sigma(n as u64, (two_k - 1) as u32);
        sum = sum.add(qn.scale(C64::new(s, 0.0)));
    }
    DualC::one().add(sum.scale(C64::new(coeff, 0.0)))
}

/// Divisor power sum `sigma_p(n) = sum_{d | n} d^p` as f64.
fn sigma(n: u64, p: u32) -> f64 {
    let mut s = 0.0f64;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            s += (d as f64).powi(p as i32);
            let e = n / d;
            if e != d {
                s += (e as f64).powi(p as i32);
            }
        }
        d += 1;
    }
    s
}

/// Jet in `x` of `phi(x | tau) = sum_{n >= 1} a_{2n} E_{2n+2}(tau) x^{2n}`,
/// the even series measuring the failure of the kernel `g` to be constant
/// at `z = 0`.
pub fn phi_jet(tau: DualC, order: usize, terms: usize) -> Jet {
    let n_max = order / 2;
    let a = a2n_table(n_max);
    let mut jet = Jet::zero(order);
    for n in 1..=n_max {
        if 2 * n > order {
            break;
        }
        let e = eisenstein(2 * n + 2, tau, terms);
        jet.c[2 * n] = e.scale(C64::new(a[n], 0.0));
    }
    jet
}

/// The multipliers `a_{2n} E_{2n+2}(tau)` for `n = 1 ..= n_max`, indexed from
/// n = 1; these weight the even derivation family in the variation operator.
pub fn even_multipliers(tau: DualC, n_max: usize, terms: usize) -> Vec<DualC> {
    let a = a2n_table(n_max);
    (1..=n_max)
        .map(|n| eisenstein(2 * n + 2, tau, terms).scale(C64::new(a[n], 0.0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        let b = bernoulli_numbers(12);
        let q = |num: i64, den: i64| {
            BigRational::new(BigInt::from(num), BigInt::from(den))
        };
        assert_eq!(b[0], q(1, 1));
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[3], q(0, 1));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
        assert_eq!(b[10], q(5, 66));
        assert_eq!(b[12], q(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_zeta_values() {
        // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!): compare the
        // recurrence output against a direct Dirichlet sum.
        let b = bernoulli_numbers(8);
        for n in 2..=4usize {
            // n = 1 is excluded: the zeta(2) partial sum converges like 1/M,
            // far too slowly for a tight tolerance.
            let k = 2 * n;
            let mut zeta = 0.0f64;
            for m in 1..200_000u64 {
                zeta += 1.0 / (m as f64).powi(k as i32);
            }
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let mut pow = 1.0;
            let mut fact = 1.0;
            for m in 1..=k {
                pow *= 2.0 * std::f64::consts::PI;
                fact *= m as f64;
            }
            let predicted = sign * b[k].to_f64().unwrap() * pow / (2.0 * fact);
            assert!(
                (zeta - predicted).abs() < 1e-12,
                "zeta({k}): {zeta} vs {predicted}"
            );
        }
    }

    #[test]
    fn leading_kernel_coefficients() {
        let pi = std::f64::consts::PI;
        assert!((a2n(0) - pi * pi / 3.0).abs() < 1e-12);
        assert!((a2n(1) - pi.powi(4) / 15.0).abs() < 1e-12);
    }

    #[test]
    fn eisenstein_q_expansion_start() {
        // Small |q| so the leading term dominates: E_4 ≈ 1 + 240 q.
        let tau = DualC::of(C64::new(0.0, 3.0));
        let q = (two_pi_i() * tau.v).exp();
        let e4 = eisenstein(4, tau, 40);
        let approx = C64::new(1.0, 0.0) + 240.0 * q + 2160.0 * q * q;
        assert!((e4.v - approx).norm() < 1e-12 * 240.0 * q.norm() + 1e-14);
    }
}
