use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::KzbError;

pub type C64 = Complex64;

/// A configuration of `n` marked points on the torus C/(Z + tau*Z), kept away
/// from the diagonals: every difference z_i - z_j must stay at least `margin`
/// from the period lattice, measured in lattice coordinates.
#[derive(Debug, Clone)]
pub struct ConnectionPoint {
    pub z: Vec<C64>,
    pub tau: C64,
    pub margin: f64,
}

/// Distance of `w` from the lattice Z + tau*Z, in lattice coordinates
/// (write w = a + b*tau with a, b real; return the Euclidean distance of
/// (a, b) from the nearest integer pair).
pub fn lattice_distance(w: C64, tau: C64) -> f64 {
    let b = w.im / tau.im;
    let a = w.re - b * tau.re;
    let fa = (a - a.round()).abs();
    let fb = (b - b.round()).abs();
    (fa * fa + fb * fb).sqrt()
}

impl ConnectionPoint {
    pub fn new(z: Vec<C64>, tau: C64, margin: f64) -> Result<Self, KzbError> {
        if tau.im <= 0.0 {
            return Err(KzbError::TauNotInUpperHalfPlane(tau.im));
        }
        if z.len() < 2 {
            return Err(KzbError::TooFewPoints(z.len()));
        }
        for i in 0..z.len() {
            for j in (i + 1)..z.len() {
                let dist = lattice_distance(z[i] - z[j], tau);
                if dist < margin {
                    return Err(KzbError::LatticeCollision { i: i + 1, j: j + 1, dist, margin });
                }
            }
        }
        Ok(ConnectionPoint { z, tau, margin })
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// z_i - z_j with 1-based strand labels.
    pub fn zij(&self, i: usize, j: usize) -> C64 {
        self.z[i - 1] - self.z[j - 1]
    }

    /// The point with z_i replaced by z_i + w (1-based), revalidated.
    pub fn translated(&self, i: usize, w: C64) -> Result<Self, KzbError> {
        let mut z = self.z.clone();
        z[i - 1] += w;
        ConnectionPoint::new(z, self.tau, self.margin)
    }

    /// The point with every coordinate shifted by w (never changes validity).
    pub fn translated_all(&self, w: C64) -> Self {
        ConnectionPoint {
            z: self.z.iter().map(|&zi| zi + w).collect(),
            tau: self.tau,
            margin: self.margin,
        }
    }

    /// The relabeled configuration: strand `i` moves to strand `perm[i-1]`
    /// (1-based, matching the strand relabeling morphism of `lie_core`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut z = vec![C64::new(0.0, 0.0); self.z.len()];
        for (i, &target) in perm.iter().enumerate() {
            z[target - 1] = self.z[i];
        }
        ConnectionPoint { z, tau: self.tau, margin: self.margin }
    }

    /// Draws a well-separated random configuration: tau from a compact
    /// upper-half-plane window, marked points z_i = a_i + b_i*tau with
    /// lattice coordinates kept away from each other modulo 1.
    pub fn sample(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tau = C64::new(rng.gen_range(-0.35..0.35), rng.gen_range(0.6..2.0));
        let margin = 0.05;
        'outer: loop {
            let coords: Vec<(f64, f64)> =
                (0..n).map(|_| (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0))).collect();
            for i in 0..n {
                for j in (i + 1)..n {
                    let fa = frac_dist(coords[i].0 - coords[j].0);
                    let fb = frac_dist(coords[i].1 - coords[j].1);
                    if (fa * fa + fb * fb).sqrt() < 2.0 * margin {
                        continue 'outer;
                    }
                }
            }
            let z: Vec<C64> =
                coords.iter().map(|&(a, b)| C64::new(a, 0.0) + tau * C64::new(b, 0.0)).collect();
            return ConnectionPoint::new(z, tau, margin).expect("separated by construction");
        }
    }
}

fn frac_dist(x: f64) -> f64 {
    let f = x - x.round();
    f.abs()
}
