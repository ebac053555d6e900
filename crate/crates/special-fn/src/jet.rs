//! Truncated power series (jets) in one auxiliary variable `x`, or two
//! variables `u, v` (truncated by total degree). Coefficients are [`DualC`]
//! scalars, so jets propagate one analytic directional derivative.
//!
//! Division by the variable(s) is explicit: the caller asserts the vanishing
//! order, and the discarded low coefficients are returned as a residual so
//! identity checks can account for them honestly.

use crate::dual::DualC;
use crate::C64;

/// Jet in one variable: `c[m]` is the coefficient of `x^m`, `m <= order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    pub c: Vec<DualC>,
}

impl Jet {
    pub fn zero(order: usize) -> Self {
        Jet { c: vec![DualC::zero(); order + 1] }
    }

    pub fn constant(order: usize, v: DualC) -> Self {
        let mut j = Jet::zero(order);
        j.c[0] = v;
        j
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> DualC {
        self.c[0]
    }

    pub fn add(&self, o: &Jet) -> Jet {
        assert_eq!(self.c.len(), o.c.len());
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a.add(*b)).collect() }
    }

    pub fn sub(&self, o: &Jet) -> Jet {
        assert_eq!(self.c.len(), o.c.len());
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a.sub(*b)).collect() }
    }

    pub fn neg(&self) -> Jet {
        Jet { c: self.c.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale(&self, s: DualC) -> Jet {
        Jet { c: self.c.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        let order = self.order().min(o.order());
        let mut out = Jet::zero(order);
        for i in 0..=order {
            if self.c[i].abs_full() == 0.0 {
                continue;
            }
            for j in 0..=(order - i) {
                out.c[i + j] = out.c[i + j].add(self.c[i].mul(o.c[j]));
            }
        }
        out
    }

    /// Division by a jet with invertible constant term.
    pub fn div(&self, o: &Jet) -> Jet {
        let order = self.order().min(o.order());
        let inv0 = o.c[0].inv();
        let mut out = Jet::zero(order);
        for m in 0..=order {
            let mut acc = self.c[m];
            for i in 1..=m {
                acc = acc.sub(o.c[i].mul(out.c[m - i]));
            }
            out.c[m] = acc.mul(inv0);
        }
        out
    }

    /// d/dx; the result has one order less.
    pub fn derivative(&self) -> Jet {
        let n = self.order();
        let mut out = Jet::zero(n.saturating_sub(1));
        for m in 1..=n {
            out.c[m - 1] = self.c[m].scale(C64::new(m as f64, 0.0));
        }
        out
    }

    /// Multiplication by x^k (the top k coefficients fall off the truncation).
    pub fn shift_up(&self, k: usize) -> Jet {
        let n = self.order();
        let mut out = Jet::zero(n);
        for m in 0..=n.saturating_sub(k) {
            out.c[m + k] = self.c[m];
        }
        out
    }

    /// Division by x^k: asserts the first k coefficients vanish and returns
    /// their magnitude as a residual. The result keeps the same length
    /// (its top k coefficients are unknown and set to zero — callers must
    /// size the input jets accordingly).
    pub fn shift_down(&self, k: usize) -> (Jet, f64) {
        let n = self.order();
        let mut dropped: f64 = 0.0;
        for m in 0..k.min(n + 1) {
            dropped = dropped.max(self.c[m].abs_full());
        }
        let mut out = Jet::zero(n.saturating_sub(k));
        for m in k..=n {
            out.c[m - k] = self.c[m];
        }
        (out, dropped)
    }

    /// Substitution x -> a·x.
    pub fn scale_var(&self, a: DualC) -> Jet {
        let mut out = self.clone();
        let mut pow = DualC::one();
        for m in 0..=self.order() {
            out.c[m] = self.c[m].mul(pow);
            pow = pow.mul(a);
        }
        out
    }

    /// The jet of e^{a·x}.
    pub fn exp_linear(order: usize, a: DualC) -> Jet {
        let mut out = Jet::zero(order);
        let mut term = DualC::one();
        out.c[0] = term;
        for m in 1..=order {
            term = term.mul(a).scale(C64::new(1.0 / m as f64, 0.0));
            out.c[m] = term;
        }
        out
    }

    pub fn truncate(&self, order: usize) -> Jet {
        Jet { c: self.c[..=order.min(self.order())].to_vec() }
    }

    /// Max coefficient magnitude (values only).
    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(|a| a.abs()).fold(0.0, f64::max)
    }

    /// Max coefficient magnitude including derivative slots.
    pub fn max_abs_full(&self) -> f64 {
        self.c.iter().map(|a| a.abs_full()).fold(0.0, f64::max)
    }
}

/// Jet in two variables `u, v`, truncated by total degree: `c[i][j]` is the
/// coefficient of `u^i v^j`, stored for `i + j <= order`.
#[derive(Clone, Debug)]
pub struct Jet2 {
    pub order: usize,
    pub c: Vec<Vec<DualC>>,
}

impl Jet2 {
    pub fn zero(order: usize) -> Self {
        let c = (0..=order).map(|i| vec![DualC::zero(); order - i + 1]).collect();
        Jet2 { order, c }
    }

    pub fn add(&self, o: &Jet2) -> Jet2 {
        let order = self.order.min(o.order);
        let mut out = Jet2::zero(order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                out.c[i][j] = self.c[i][j].add(o.c[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, o: &Jet2) -> Jet2 {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Jet2 {
        let mut out = self.clone();
        for row in &mut out.c {
            for a in row {
                *a = a.neg();
            }
        }
        out
    }

    pub fn scale(&self, s: DualC) -> Jet2 {
        let mut out = self.clone();
        for row in &mut out.c {
            for a in row {
                *a = a.mul(s);
            }
        }
        out
    }

    pub fn mul(&self, o: &Jet2) -> Jet2 {
        let order = self.order.min(o.order);
        let mut out = Jet2::zero(order);
        for i1 in 0..=order {
            for j1 in 0..=(order - i1) {
                let a = self.c[i1][j1];
                if a.abs_full() == 0.0 {
                    continue;
                }
                for i2 in 0..=(order - i1 - j1) {
                    for j2 in 0..=(order - i1 - j1 - i2) {
                        let t = a.mul(o.c[i2][j2]);
                        out.c[i1 + i2][j1 + j2] = out.c[i1 + i2][j1 + j2].add(t);
                    }
                }
            }
        }
        out
    }

    /// Embeds a one-variable jet via x -> u.
    pub fn from_u(j: &Jet, order: usize) -> Jet2 {
        let mut out = Jet2::zero(order);
        for m in 0..=order.min(j.order()) {
            out.c[m][0] = j.c[m];
        }
        out
    }

    /// Embeds via x -> v.
    pub fn from_v(j: &Jet, order: usize) -> Jet2 {
        let mut out = Jet2::zero(order);
        for m in 0..=order.min(j.order()) {
            out.c[0][m] = j.c[m];
        }
        out
    }

    /// Embeds via x -> u + v (binomial expansion).
    pub fn from_sum(j: &Jet, order: usize) -> Jet2 {
        let mut out = Jet2::zero(order);
        let binom = binomials(order);
        for m in 0..=order.min(j.order()) {
            for i in 0..=m {
                let b = C64::new(binom[m][i] as f64, 0.0);
                out.c[i][m - i] = out.c[i][m - i].add(j.c[m].scale(b));
            }
        }
        out
    }

    /// Multiplication by u.
    pub fn mul_u(&self) -> Jet2 {
        let mut out = Jet2::zero(self.order);
        for i in 0..self.order {
            for j in 0..=(self.order - i - 1) {
                out.c[i + 1][j] = self.c[i][j];
            }
        }
        out
    }

    /// Multiplication by v.
    pub fn mul_v(&self) -> Jet2 {
        let mut out = Jet2::zero(self.order);
        for i in 0..=self.order.saturating_sub(1) {
            for j in 0..(self.order - i) {
                out.c[i][j + 1] = self.c[i][j];
            }
        }
        out
    }

    /// Division by u^k; the dropped coefficients' magnitude is returned.
    pub fn div_u(&self, k: usize) -> (Jet2, f64) {
        let mut dropped: f64 = 0.0;
        for i in 0..k.min(self.order + 1) {
            for j in 0..=(self.order - i) {
                dropped = dropped.max(self.c[i][j].abs_full());
            }
        }
        let order = self.order.saturating_sub(k);
        let mut out = Jet2::zero(order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                out.c[i][j] = self.c[i + k][j];
            }
        }
        (out, dropped)
    }

    /// Division by v^k.
    pub fn div_v(&self, k: usize) -> (Jet2, f64) {
        let (t, dropped) = self.swap_uv().div_u(k);
        (t.swap_uv(), dropped)
    }

    /// Division by (u + v): substitute u = w − v, divide by w, substitute
    /// w = u + v back. The numerator must vanish on u = −v.
    pub fn div_sum(&self) -> (Jet2, f64) {
        let w_form = self.subst(
            DualC::one(),
            DualC::of_f64(-1.0),
            DualC::zero(),
            DualC::one(),
        );
        let (q, dropped) = w_form.div_u(1);
        let back = q.subst(DualC::one(), DualC::one(), DualC::zero(), DualC::one());
        (back, dropped)
    }

    /// Linear substitution (u, v) -> (a·u + b·v, c·u + d·v).
    pub fn subst(&self, a: DualC, b: DualC, c: DualC, d: DualC) -> Jet2 {
        let order = self.order;
        let mut out = Jet2::zero(order);
        // Precompute powers of the two linear forms as Jet2's.
        let mut lin1 = Jet2::zero(order);
        if order >= 1 {
            lin1.c[1][0] = a;
            lin1.c[0][1] = b;
        }
        let mut lin2 = Jet2::zero(order);
        if order >= 1 {
            lin2.c[1][0] = c;
            lin2.c[0][1] = d;
        }
        let mut pow1: Vec<Jet2> = vec![{
            let mut one = Jet2::zero(order);
            one.c[0][0] = DualC::one();
            one
        }];
        for i in 1..=order {
            let next = pow1[i - 1].mul(&lin1);
            pow1.push(next);
        }
        let mut pow2: Vec<Jet2> = vec![pow1[0].clone()];
        for j in 1..=order {
            let next = pow2[j - 1].mul(&lin2);
            pow2.push(next);
        }
        for i in 0..=order {
            for j in 0..=(order - i) {
                let coeff = self.c[i][j];
                if coeff.abs_full() == 0.0 {
                    continue;
                }
                let term = pow1[i].mul(&pow2[j]).scale(coeff);
                out = out.add(&term);
            }
        }
        out
    }

    fn swap_uv(&self) -> Jet2 {
        let mut out = Jet2::zero(self.order);
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                out.c[j][i] = self.c[i][j];
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.c
            .iter()
            .flat_map(|row| row.iter())
            .map(|a| a.abs())
            .fold(0.0, f64::max)
    }
}

fn binomials(n: usize) -> Vec<Vec<u64>> {
    let mut b = vec![vec![0u64; n + 1]; n + 1];
    for (m, row) in b.iter_mut().enumerate() {
        row[0] = 1;
        for i in 1..=m {
            row[i] = 0;
        }
    }
    for m in 1..=n {
        for i in 1..=m {
            b[m][i] = b[m - 1][i - 1] + if i <= m - 1 { b[m - 1][i] } else { 0 };
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(vals: &[f64]) -> Jet {
        Jet { c: vals.iter().map(|&x| DualC::of_f64(x)).collect() }
    }

    #[test]
    fn jet_mul_div_roundtrip() {
        let a = j(&[1.0, 2.0, -0.5, 3.0, 0.25]);
        let b = j(&[2.0, -1.0, 0.75, 0.0, 1.5]);
        let p = a.mul(&b);
        let back = p.div(&b);
        for m in 0..=4 {
            assert!((back.c[m].v - a.c[m].v).norm() < 1e-12);
        }
    }

    #[test]
    fn jet_derivative_of_exp() {
        let a = DualC::of(C64::new(0.3, 0.7));
        let e = Jet::exp_linear(6, a);
        let d = e.derivative();
        let ea = e.truncate(5).scale(a);
        for m in 0..=5 {
            assert!((d.c[m].v - ea.c[m].v).norm() < 1e-13);
        }
    }

    #[test]
    fn jet2_sum_embedding_multiplies() {
        // (u+v)^2 = u^2 + 2uv + v^2 via embedding x^2.
        let mut x2 = Jet::zero(4);
        x2.c[2] = DualC::one();
        let s = Jet2::from_sum(&x2, 4);
        assert!((s.c[2][0].v.re - 1.0).abs() < 1e-14);
        assert!((s.c[1][1].v.re - 2.0).abs() < 1e-14);
        assert!((s.c[0][2].v.re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn jet2_div_sum_exact() {
        // (u+v)·(1 + u + 3v) divided by (u+v).
        let mut f = Jet2::zero(5);
        f.c[0][0] = DualC::one();
        f.c[1][0] = DualC::one();
        f.c[0][1] = DualC::of_f64(3.0);
        let prod = {
            let mut upv = Jet2::zero(5);
            upv.c[1][0] = DualC::one();
            upv.c[0][1] = DualC::one();
            upv.mul(&f)
        };
        let (q, dropped) = prod.div_sum();
        assert!(dropped < 1e-14);
        assert!((q.c[0][0].v.re - 1.0).abs() < 1e-13);
        assert!((q.c[1][0].v.re - 1.0).abs() < 1e-13);
        assert!((q.c[0][1].v.re - 3.0).abs() < 1e-13);
        for i in 0..=q.order {
            for jj in 0..=(q.order - i) {
                if i + jj >= 2 {
                    assert!(q.c[i][jj].abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn dual_chain_rule_through_jets() {
        // d/dt of (t·x)^1 coefficient under scale_var: seed t = 2, coeff of x
        // in scale_var(seed) of x is t, derivative 1.
        let mut x = Jet::zero(3);
        x.c[1] = DualC::one();
        let t = DualC::seed(C64::new(2.0, 0.0));
        let s = x.scale_var(t);
        assert!((s.c[1].v.re - 2.0).abs() < 1e-14);
        assert!((s.c[1].dt.re - 1.0).abs() < 1e-14);
    }
}
