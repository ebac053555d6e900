//! Lie algebra morphisms defined on generators: strand cabling and
//! relabeling maps between braid-type algebras, and general substitutions
//! (used to evaluate associator series on given arguments). Each morphism
//! induces an algebra map of truncated envelopes.

use crate::envelope::{EnvElement, Envelope};
use crate::error::LieError;
use crate::free::LieElement;
use crate::lyndon::standard_factorization;
use crate::quotient::QuotientLie;
use crate::scalar::{Scalar, Q};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct LieMorphism<S> {
    pub name: String,
    pub source: Arc<QuotientLie>,
    pub target: Arc<QuotientLie>,
    /// Image of each source generator, as a target element.
    pub images: Vec<LieElement<S>>,
    cache: Mutex<HashMap<(u32, u32), LieElement<S>>>,
}

impl<S: Scalar> LieMorphism<S> {
    pub fn new(
        name: impl Into<String>,
        source: Arc<QuotientLie>,
        target: Arc<QuotientLie>,
        images: Vec<LieElement<S>>,
    ) -> Result<Self, LieError> {
        let n = source.free.alphabet.len();
        if images.len() != n {
            return Err(LieError::BadGenerator(images.len(), n));
        }
        Ok(LieMorphism {
            name: name.into(),
            source,
            target,
            images,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Builds a morphism from `name -> image` pairs (missing generators map
    /// to zero).
    pub fn from_named(
        name: impl Into<String>,
        source: Arc<QuotientLie>,
        target: Arc<QuotientLie>,
        named: &[(&str, LieElement<S>)],
    ) -> Result<Self, LieError> {
        let mut images = vec![LieElement::zero(); source.free.alphabet.len()];
        for (gname, img) in named {
            let idx = source
                .free
                .alphabet
                .index_of(gname)
                .unwrap_or_else(|| panic!("no source generator named {gname:?}"));
            images[idx as usize] = img.clone();
        }
        LieMorphism::new(name, source, target, images)
    }

    /// Image of the source Lyndon basis word `(deg, idx)`, reduced in the
    /// target. Overflowing terms are truncated.
    fn on_basis(&self, deg: u32, idx: u32) -> LieElement<S> {
        if let Some(hit) = self.cache.lock().unwrap().get(&(deg, idx)) {
            return hit.clone();
        }
        let w = self.source.free.word(deg, idx).to_vec();
        let out = if w.len() == 1 {
            self.target.nf(&self.images[w[0] as usize])
        } else {
            let (u, v) = standard_factorization(&w);
            let (du, iu) = self.source.free.index_of(&u).unwrap();
            let (dv, iv) = self.source.free.index_of(&v).unwrap();
            let mu = self.on_basis(du, iu);
            let mv = self.on_basis(dv, iv);
            self.target.bracket(&mu, &mv, false).expect("non-strict bracket")
        };
        self.cache.lock().unwrap().insert((deg, idx), out.clone());
        out
    }

    /// Applies the morphism to a Lie element; the result is in target normal
    /// form, truncated at the target degree bound.
    pub fn apply_lie(&self, elem: &LieElement<S>) -> LieElement<S> {
        let mut out = LieElement::zero();
        for (&(d, i), c) in &elem.coords {
            let img = self.on_basis(d, i);
            for (key, ci) in &img.coords {
                out.add_term(*key, &c.mul(ci));
            }
        }
        self.target.nf(&out)
    }

    /// Verifies that every source relation maps to zero in the target
    /// (restricted to relations whose image degree fits the truncations).
    pub fn check_relations(&self) -> Result<(), LieError> {
        // Maximal degree growth of this morphism: max over generators of
        // (max image degree - generator degree), used to decide which
        // relations can be checked faithfully inside the truncation.
        let mut growth: i64 = 0;
        for (g, img) in self.images.iter().enumerate() {
            let gdeg = self.source.free.alphabet.degrees[g] as i64;
            for &d in &img.degrees() {
                growth = growth.max(d as i64 - gdeg);
            }
        }
        for (rname, r) in &self.source.presentation.relations {
            let Some(&rdeg) = r.degrees().first() else { continue };
            let worst = rdeg as i64 + growth * rdeg as i64;
            if rdeg > self.source.max_degree() || worst > self.target.max_degree() as i64 {
                continue;
            }
            let img = self.apply_lie(&r.map_coeffs(|c| S::from_q(c)));
            if !img.is_zero() {
                return Err(LieError::RelationBroken(format!("{}:{}", self.name, rname)));
            }
        }
        Ok(())
    }

    /// Induced map on envelope elements.
    pub fn apply_env(
        &self,
        src_env: &Envelope,
        tgt_env: &Envelope,
        elem: &EnvElement<S>,
    ) -> EnvElement<S> {
        let mut out = EnvElement::zero();
        for (m, c) in &elem.terms {
            let mut prod = EnvElement::unit();
            for &(d, pos) in m {
                let idx = src_env.lie.basis_indices(d)[pos as usize];
                let img = self.on_basis(d, idx);
                prod = tgt_env.mul(&prod, &tgt_env.from_lie(&img));
                if prod.is_zero() {
                    break;
                }
            }
            out.add_scaled(&prod, c);
        }
        out
    }
}

impl LieMorphism<Q> {
    /// Converts the exact morphism to a numeric one.
    pub fn to_complex(&self) -> LieMorphism<crate::C64> {
        LieMorphism {
            name: self.name.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|e| e.map_coeffs(Scalar::from_q)).collect(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

/// Strand substitution (cabling) map between braid-type algebras whose
/// generators follow the `x_i / y_i / t_ij` (or pure `t_ij`) naming scheme.
///
/// `groups[i]` lists the target strands replacing source strand `i+1`;
/// groups must be pairwise disjoint. Empty groups send the strand's
/// generators to zero. On generators:
/// `x_i -> Σ_{a in groups[i]} x_a`, `y_i -> Σ x_a`,
/// `t_ij -> Σ_{a in groups[i], b in groups[j]} t_ab`.
pub fn cabling(
    name: impl Into<String>,
    source: Arc<QuotientLie>,
    target: Arc<QuotientLie>,
    groups: &[Vec<usize>],
) -> Result<LieMorphism<Q>, LieError> {
    let mut images = vec![LieElement::zero(); source.free.alphabet.len()];
    let tf = &target.free;
    for (gi, gname) in source.free.alphabet.names.iter().enumerate() {
        let img: LieElement<Q> = if let Some(rest) = gname.strip_prefix('x') {
            let i: usize = rest.parse().expect("strand index");
            sum_named(tf, 'x', &groups[i - 1])
        } else if let Some(rest) = gname.strip_prefix('y') {
            let i: usize = rest.parse().expect("strand index");
            sum_named(tf, 'y', &groups[i - 1])
        } else if let Some(rest) = gname.strip_prefix('t') {
            let digits: Vec<usize> =
                rest.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
            let (i, j) = (digits[0], digits[1]);
            let mut s = LieElement::zero();
            for &a in &groups[i - 1] {
                for &b in &groups[j - 1] {
                    s = s.add(&tf.gen_named::<Q>(&crate::families::t_name(a, b)));
                }
            }
            s
        } else {
            panic!("unrecognized generator name {gname:?}");
        };
        images[gi] = img;
    }
    LieMorphism::new(name, source, target, images)
}

fn sum_named(tf: &crate::FreeLie, prefix: char, strands: &[usize]) -> LieElement<Q> {
    let mut s = LieElement::zero();
    for &a in strands {
        s = s.add(&tf.gen_named::<Q>(&format!("{prefix}{a}")));
    }
    s
}

/// Strand relabeling by a permutation (1-based images), as a special cabling.
pub fn permutation(
    name: impl Into<String>,
    algebra: Arc<QuotientLie>,
    perm: &[usize],
) -> Result<LieMorphism<Q>, LieError> {
    let groups: Vec<Vec<usize>> = perm.iter().map(|&a| vec![a]).collect();
    cabling(name, algebra.clone(), algebra, &groups)
}
