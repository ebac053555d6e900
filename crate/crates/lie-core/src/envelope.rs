//! Degree-truncated universal enveloping algebras.
//!
//! The Poincaré–Birkhoff–Witt basis consists of weakly increasing products of
//! quotient-basis Lie elements; products are normalized by adjacent
//! transposition with bracket corrections. `exp`/`log` connect primitive Lie
//! elements with group-like elements (constant term 1).

use crate::error::LieError;
use crate::free::LieElement;
use crate::quotient::QuotientLie;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A PBW letter: `(degree, position)` in the quotient basis of its degree.
pub type Letter = (u32, u32);
/// A weakly increasing sequence of letters.
pub type Monomial = Vec<Letter>;

/// Element of the truncated envelope: monomial -> coefficient. The empty
/// monomial is the unit.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvElement<S> {
    pub terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> EnvElement<S> {
    pub fn zero() -> Self {
        EnvElement { terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), S::one());
        EnvElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &v.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one().neg());
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = EnvElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn constant_term(&self) -> S {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(S::zero)
    }

    /// Largest coefficient magnitude (0 for the zero element).
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// Magnitude of the difference from the unit, the standard residual for
    /// group identities.
    pub fn distance_from_unit(&self) -> f64 {
        self.sub(&EnvElement::unit()).max_coeff()
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> EnvElement<T> {
        EnvElement {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let w = f(c);
                    if w.is_zero() {
                        None
                    } else {
                        Some((m.clone(), w))
                    }
                })
                .collect(),
        }
    }
}

fn monomial_degree(m: &[Letter]) -> u32 {
    m.iter().map(|&(d, _)| d).sum()
}

/// The truncated envelope of a quotient Lie algebra.
#[derive(Clone)]
pub struct Envelope {
    pub lie: Arc<QuotientLie>,
    pub max_degree: u32,
}

impl Envelope {
    pub fn new(lie: Arc<QuotientLie>, max_degree: u32) -> Self {
        assert!(
            max_degree <= lie.max_degree(),
            "envelope truncation exceeds Lie truncation"
        );
        Envelope { lie, max_degree }
    }

    /// Embeds a Lie element (as primitive part).
    pub fn from_lie<S: Scalar>(&self, elem: &LieElement<S>) -> EnvElement<S> {
        let nf = self.lie.nf(elem);
        let mut out = EnvElement::zero();
        for (&(d, i), c) in &nf.coords {
            if d > self.max_degree {
                continue;
            }
            let pos = self
                .lie
                .basis_position(d, i)
                .expect("normal form is supported on basis coordinates");
            out.add_term(vec![(d, pos)], c);
        }
        out
    }

    /// Extracts the primitive (length-1) part as a Lie element; errors if any
    /// longer monomial has a nonzero coefficient beyond `tol`.
    pub fn to_lie<S: Scalar>(&self, elem: &EnvElement<S>, tol: f64) -> Result<LieElement<S>, LieError> {
        let mut out = LieElement::zero();
        for (m, c) in &elem.terms {
            match m.len() {
                0 => {
                    if c.magnitude() > tol {
                        return Err(LieError::NotPrimitive(0));
                    }
                }
                1 => {
                    let (d, pos) = m[0];
                    let idx = self.lie.basis_indices(d)[pos as usize];
                    out.add_term((d, idx), c);
                }
                len => {
                    if c.magnitude() > tol {
                        return Err(LieError::NotPrimitive(len));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Lie element corresponding to one PBW letter.
    fn letter_lie<S: Scalar>(&self, l: Letter) -> LieElement<S> {
        let (d, pos) = l;
        let idx = self.lie.basis_indices(d)[pos as usize];
        LieElement::single(d, idx, S::one())
    }

    /// Product of two normalized elements.
    pub fn mul<S: Scalar>(&self, a: &EnvElement<S>, b: &EnvElement<S>) -> EnvElement<S> {
        let mut out = EnvElement::zero();
        for (ma, ca) in &a.terms {
            let da = monomial_degree(ma);
            for (mb, cb) in &b.terms {
                if da + monomial_degree(mb) > self.max_degree {
                    continue;
                }
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                let mut word: Monomial = ma.clone();
                word.extend_from_slice(mb);
                self.straighten(word, c, &mut out);
            }
        }
        out
    }

    /// Rewrites an arbitrary product of letters into the PBW basis.
    fn straighten<S: Scalar>(&self, word: Monomial, coeff: S, out: &mut EnvElement<S>) {
        // Find the first descent.
        let descent = word.windows(2).position(|w| w[0] > w[1]);
        match descent {
            None => out.add_term(word, &coeff),
            Some(i) => {
                // word[i] > word[i+1]: swap and add bracket correction.
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                self.straighten(swapped, coeff.clone(), out);
                let br = self
                    .lie
                    .bracket(
                        &self.letter_lie::<S>(word[i]),
                        &self.letter_lie::<S>(word[i + 1]),
                        false,
                    )
                    .expect("non-strict bracket");
                for (&(d, idx), cb) in &br.coords {
                    if d > self.max_degree {
                        continue;
                    }
                    let pos = self.lie.basis_position(d, idx).expect("nf coordinate");
                    let mut shorter: Monomial = Vec::with_capacity(word.len() - 1);
                    shorter.extend_from_slice(&word[..i]);
                    shorter.push((d, pos));
                    shorter.extend_from_slice(&word[i + 2..]);
                    if monomial_degree(&shorter) <= self.max_degree {
                        self.straighten(shorter, coeff.mul(cb), out);
                    }
                }
            }
        }
    }

    /// `exp` of a Lie element (primitive, positive degree).
    pub fn exp<S: Scalar>(&self, prim: &LieElement<S>) -> EnvElement<S> {
        let p = self.from_lie(prim);
        let mut out = EnvElement::unit();
        let mut power = EnvElement::unit();
        let mut factorial: i64 = 1;
        for k in 1..=self.max_degree as i64 {
            power = self.mul(&power, &p);
            if power.is_zero() {
                break;
            }
            factorial *= k;
            let mut term = EnvElement::zero();
            term.add_scaled(&power, &S::from_ratio(1, factorial));
            out = out.add(&term);
        }
        out
    }

    /// `log` of an element with constant term 1; the result is a general
    /// envelope element (use [`Envelope::to_lie`] to assert primitivity).
    pub fn log<S: Scalar>(&self, g: &EnvElement<S>) -> Result<EnvElement<S>, LieError> {
        if !g.constant_term().sub(&S::one()).is_zero() {
            return Err(LieError::NotGroupLike);
        }
        let mut n = g.clone();
        n.add_term(Vec::new(), &S::one().neg());
        let mut out = EnvElement::zero();
        let mut power = EnvElement::unit();
        for k in 1..=self.max_degree as i64 {
            power = self.mul(&power, &n);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out.add_scaled(&power, &S::from_ratio(sign, k));
        }
        Ok(out)
    }

    /// Inverse of an element with invertible constant term.
    pub fn inverse<S: Scalar>(&self, g: &EnvElement<S>) -> Result<EnvElement<S>, LieError> {
        let c0 = g.constant_term();
        if c0.is_zero() {
            return Err(LieError::NotGroupLike);
        }
        let inv_c0 = S::one().div(&c0);
        let mut n = g.scale(&inv_c0);
        n.add_term(Vec::new(), &S::one().neg());
        // (1 + n)^{-1} = sum (-n)^k.
        let mut out = EnvElement::unit();
        let mut power = EnvElement::unit();
        for _ in 1..=self.max_degree {
            power = self.mul(&power, &n);
            if power.is_zero() {
                break;
            }
            let sign_power = power.scale(&S::one().neg());
            power = sign_power;
            out = out.add(&power);
        }
        Ok(out.scale(&inv_c0))
    }

    /// Conjugation `g h g^{-1}`.
    pub fn conjugate<S: Scalar>(&self, g: &EnvElement<S>, h: &EnvElement<S>) -> Result<EnvElement<S>, LieError> {
        let gi = self.inverse(g)?;
        Ok(self.mul(&self.mul(g, h), &gi))
    }

    /// Group commutator `(a, b) = a b a^{-1} b^{-1}`.
    pub fn group_commutator<S: Scalar>(&self, a: &EnvElement<S>, b: &EnvElement<S>) -> Result<EnvElement<S>, LieError> {
        let ai = self.inverse(a)?;
        let bi = self.inverse(b)?;
        Ok(self.mul(&self.mul(&self.mul(a, b), &ai), &bi))
    }

    /// Graded dimension of the PBW basis at each degree (for tests: must
    /// match the symmetric-algebra counting of the Lie dimensions).
    pub fn graded_dims(&self) -> Vec<usize> {
        // Generating series: prod_d (1 - q^d)^{-dim L_d}; extract by dynamic
        // programming over degrees.
        let maxd = self.max_degree as usize;
        let mut coeffs = vec![0usize; maxd + 1];
        coeffs[0] = 1;
        for d in 1..=maxd {
            let ld = self.lie.dim(d as u32);
            for _ in 0..ld {
                // Multiply by 1/(1 - q^d): prefix-sum with stride d.
                for k in d..=maxd {
                    coeffs[k] += coeffs[k - d];
                }
            }
        }
        coeffs
    }
}

/// A group-like element: envelope element with constant term 1 whose log is
/// primitive. Constructed via [`GroupLike::exp`] or checked on wrap.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupLike<S> {
    pub elem: EnvElement<S>,
}

impl<S: Scalar> GroupLike<S> {
    pub fn exp(env: &Envelope, prim: &LieElement<S>) -> Self {
        GroupLike { elem: env.exp(prim) }
    }

    /// Wraps an envelope element, checking group-likeness up to `tol` by
    /// requiring the log to be primitive.
    pub fn wrap(env: &Envelope, elem: EnvElement<S>, tol: f64) -> Result<Self, LieError> {
        let lg = env.log(&elem)?;
        env.to_lie(&lg, tol)?;
        Ok(GroupLike { elem })
    }

    pub fn mul(&self, env: &Envelope, other: &Self) -> Self {
        GroupLike { elem: env.mul(&self.elem, &other.elem) }
    }

    pub fn inverse(&self, env: &Envelope) -> Self {
        GroupLike { elem: env.inverse(&self.elem).expect("group-like is invertible") }
    }

    pub fn log(&self, env: &Envelope, tol: f64) -> Result<LieElement<S>, LieError> {
        env.to_lie(&env.log(&self.elem)?, tol)
    }
}
