//! Quotients of free Lie algebras by homogeneous relations, with canonical
//! normal forms.
//!
//! The relation ideal is computed degree by degree: its degree-`d` component
//! is spanned by the degree-`d` relations together with `[g, v]` where `g`
//! runs over generators and `v` over an echelonized spanning set of the
//! lower-degree components. Exact rational row reduction turns that spanning
//! set into a reduced echelon; quotient coordinates are the non-pivot Lyndon
//! coordinates.

use crate::error::LieError;
use crate::free::{FreeLie, LieElement};
use crate::lyndon::Alphabet;
use crate::scalar::{Scalar, Q};
use std::collections::BTreeMap;

/// A finitely presented graded Lie algebra: alphabet plus named homogeneous
/// relations (elements of the free Lie algebra that are set to zero).
#[derive(Clone)]
pub struct LiePresentation {
    pub name: String,
    pub alphabet: Alphabet,
    pub relations: Vec<(String, LieElement<Q>)>,
}

/// Reduced echelon of one graded component of the relation ideal.
///
/// Each row is `pivot + tail` where the tail is supported on non-pivot
/// (basis) columns strictly larger than the pivot, with pivot coefficient 1.
struct Echelon {
    rows: BTreeMap<u32, Vec<(u32, Q)>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    /// Reduces `v` (sparse, sorted) against the rows; returns the remainder.
    fn reduce(&self, v: &mut BTreeMap<u32, Q>) {
        loop {
            let hit = v
                .iter()
                .find(|(idx, c)| !Scalar::is_zero(*c) && self.rows.contains_key(idx))
                .map(|(idx, c)| (*idx, c.clone()));
            let Some((idx, c)) = hit else { break };
            v.remove(&idx);
            for (j, rc) in &self.rows[&idx] {
                let e = v.entry(*j).or_insert_with(<Q as Scalar>::zero);
                *e = e.sub(&c.mul(rc));
                if Scalar::is_zero(e) {
                    v.remove(j);
                }
            }
        }
        v.retain(|_, c| !Scalar::is_zero(c));
    }

    /// Inserts a reduced nonzero vector as a new row, normalized to pivot 1.
    /// Returns the pivot column.
    fn insert(&mut self, v: BTreeMap<u32, Q>) -> u32 {
        let pivot = *v.keys().next().expect("nonzero row");
        let pc = v[&pivot].clone();
        let tail: Vec<(u32, Q)> =
            v.iter().skip(1).map(|(j, c)| (*j, c.div(&pc))).collect();
        self.rows.insert(pivot, tail);
        pivot
    }

    /// Full back-substitution: every tail entry at another row's pivot column
    /// is eliminated, in decreasing pivot order.
    fn interreduce(&mut self) {
        let pivots: Vec<u32> = self.rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let mut tail: BTreeMap<u32, Q> = self.rows[&p].iter().cloned().collect();
            loop {
                let hit = tail
                    .iter()
                    .find(|(idx, _)| self.rows.contains_key(idx))
                    .map(|(idx, c)| (*idx, c.clone()));
                let Some((idx, c)) = hit else { break };
                tail.remove(&idx);
                for (j, rc) in &self.rows[&idx] {
                    let e = tail.entry(*j).or_insert_with(<Q as Scalar>::zero);
                    *e = e.sub(&c.mul(rc));
                    if Scalar::is_zero(e) {
                        tail.remove(j);
                    }
                }
            }
            self.rows.insert(p, tail.into_iter().collect());
        }
    }
}

/// A graded Lie algebra presented by generators and relations, truncated at a
/// maximal degree, with exact normal forms.
pub struct QuotientLie {
    pub presentation: LiePresentation,
    pub free: FreeLie,
    echelon: Vec<Echelon>,
    /// Quotient basis per degree: ambient Lyndon indices of non-pivot columns.
    basis: Vec<Vec<u32>>,
    /// Ambient index -> dense position in the quotient basis, per degree.
    basis_pos: Vec<BTreeMap<u32, u32>>,
}

impl QuotientLie {
    /// Builds the truncation of the presented algebra up to `max_degree`.
    ///
    /// Errors if a relation is inhomogeneous. Relations of degree beyond the
    /// truncation are vacuous there and are skipped; zero relations are
    /// skipped as well.
    pub fn new(presentation: LiePresentation, max_degree: u32) -> Result<Self, LieError> {
        let free = FreeLie::new(presentation.alphabet.clone(), max_degree);
        for (_, r) in &presentation.relations {
            if r.degrees().len() > 1 {
                return Err(LieError::NotHomogeneous);
            }
        }
        let maxd = max_degree as usize;
        let mut echelon: Vec<Echelon> = (0..=maxd).map(|_| Echelon::new()).collect();
        // frontier[d]: echelon survivors of degree d, as Lie elements, used to
        // seed brackets with generators at higher degree.
        let mut frontier: Vec<Vec<LieElement<Q>>> = vec![Vec::new(); maxd + 1];
        for d in 1..=maxd {
            let mut candidates: Vec<LieElement<Q>> = Vec::new();
            for (_, r) in &presentation.relations {
                if r.degrees() == [d as u32] {
                    candidates.push(r.clone());
                }
            }
            for g in 0..free.alphabet.len() {
                let gd = free.alphabet.degrees[g] as usize;
                if gd >= d {
                    continue;
                }
                for v in &frontier[d - gd] {
                    candidates.push(free.bracket_letter(g, v, true)?);
                }
            }
            for cand in candidates {
                let mut row: BTreeMap<u32, Q> =
                    cand.coords.iter().map(|(&(_, i), c)| (i, c.clone())).collect();
                echelon[d].reduce(&mut row);
                if !row.is_empty() {
                    echelon[d].insert(row.clone());
                    let elem = LieElement {
                        coords: row.into_iter().map(|(i, c)| ((d as u32, i), c)).collect(),
                    };
                    frontier[d].push(elem);
                }
            }
            echelon[d].interreduce();
            // Frontier rows must reflect the final echelon so higher-degree
            // brackets act on a clean spanning set.
            frontier[d] = echelon[d]
                .rows
                .iter()
                .map(|(&p, tail)| {
                    let mut coords = BTreeMap::new();
                    coords.insert((d as u32, p), <Q as Scalar>::one());
                    for (j, c) in tail {
                        coords.insert((d as u32, *j), c.clone());
                    }
                    LieElement { coords }
                })
                .collect();
        }
        let mut basis = vec![Vec::new(); maxd + 1];
        let mut basis_pos = vec![BTreeMap::new(); maxd + 1];
        for d in 1..=maxd {
            for i in 0..free.dim(d as u32) as u32 {
                if !echelon[d].rows.contains_key(&i) {
                    basis_pos[d].insert(i, basis[d].len() as u32);
                    basis[d].push(i);
                }
            }
        }
        Ok(QuotientLie { presentation, free, echelon, basis, basis_pos })
    }

    pub fn max_degree(&self) -> u32 {
        self.free.max_degree
    }

    /// Quotient dimensions for degrees `1..=max_degree`.
    pub fn dims(&self) -> Vec<usize> {
        (1..=self.free.max_degree as usize).map(|d| self.basis[d].len()).collect()
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.basis[degree as usize].len()
    }

    /// Ambient Lyndon indices of the quotient basis at a degree.
    pub fn basis_indices(&self, degree: u32) -> &[u32] {
        &self.basis[degree as usize]
    }

    /// Canonical normal form: the unique representative supported on
    /// non-pivot Lyndon coordinates.
    pub fn nf<S: Scalar>(&self, elem: &LieElement<S>) -> LieElement<S> {
        let mut out = LieElement::zero();
        let mut by_degree: BTreeMap<u32, BTreeMap<u32, S>> = BTreeMap::new();
        for (&(d, i), c) in &elem.coords {
            by_degree.entry(d).or_default().insert(i, c.clone());
        }
        for (d, mut v) in by_degree {
            let ech = &self.echelon[d as usize];
            loop {
                let hit = v
                    .iter()
                    .find(|(idx, c)| !c.is_zero() && ech.rows.contains_key(idx))
                    .map(|(idx, c)| (*idx, c.clone()));
                let Some((idx, c)) = hit else { break };
                v.remove(&idx);
                for (j, rc) in &ech.rows[&idx] {
                    let delta = c.mul(&S::from_q(rc)).neg();
                    let e = v.entry(*j).or_insert_with(S::zero);
                    *e = e.add(&delta);
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            for (i, c) in v {
                out.add_term((d, i), &c);
            }
        }
        out
    }

    /// True iff the element lies in the relation ideal.
    pub fn is_zero_mod_ideal<S: Scalar>(&self, elem: &LieElement<S>) -> bool {
        self.nf(elem).is_zero()
    }

    /// Bracket followed by normal form. `strict` controls overflow handling
    /// exactly as in [`FreeLie::bracket`].
    pub fn bracket<S: Scalar>(
        &self,
        a: &LieElement<S>,
        b: &LieElement<S>,
        strict: bool,
    ) -> Result<LieElement<S>, LieError> {
        Ok(self.nf(&self.free.bracket(a, b, strict)?))
    }

    pub fn gen<S: Scalar>(&self, name: &str) -> LieElement<S> {
        self.free.gen_named(name)
    }

    /// Dense coordinates of (the normal form of) a homogeneous component in
    /// the quotient basis of `degree`.
    pub fn dense_coords<S: Scalar>(&self, elem: &LieElement<S>, degree: u32) -> Vec<S> {
        let nf = self.nf(&elem.component(degree));
        let mut v = vec![S::zero(); self.dim(degree)];
        for (&(d, i), c) in &nf.coords {
            debug_assert_eq!(d, degree);
            v[self.basis_pos[d as usize][&i] as usize] = c.clone();
        }
        v
    }

    /// The `k`-th quotient basis element of a degree, as a Lie element.
    pub fn basis_element<S: Scalar>(&self, degree: u32, k: u32) -> LieElement<S> {
        LieElement::single(degree, self.basis[degree as usize][k as usize], S::one())
    }

    /// Position of an ambient Lyndon coordinate in the quotient basis, if it
    /// is a basis (non-pivot) coordinate.
    pub fn basis_position(&self, degree: u32, ambient_idx: u32) -> Option<u32> {
        self.basis_pos[degree as usize].get(&ambient_idx).copied()
    }

    /// Verifies that all relations reduce to zero (sanity; true by
    /// construction) and that brackets of basis elements close mod the ideal.
    pub fn self_check(&self) -> Result<(), LieError> {
        for (name, r) in &self.presentation.relations {
            if !self.is_zero_mod_ideal(r) {
                return Err(LieError::RelationBroken(name.clone()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    /// Abelian algebra on two letters: everything above degree 1 collapses.
    #[test]
    fn abelian_quotient() {
        let alphabet = Alphabet::new(&[("a", 1), ("b", 1)]);
        let free = FreeLie::new(alphabet.clone(), 4);
        let a: LieElement<Q> = free.gen(0);
        let b: LieElement<Q> = free.gen(1);
        let rel = free.bracket(&a, &b, true).unwrap();
        let pres = LiePresentation {
            name: "abelian2".into(),
            alphabet,
            relations: vec![("ab".into(), rel)],
        };
        let quo = QuotientLie::new(pres, 4).unwrap();
        assert_eq!(quo.dims(), vec![2, 0, 0, 0]);
        let ab = quo.free.bracket(&quo.gen::<Q>("a"), &quo.gen::<Q>("b"), true).unwrap();
        assert!(quo.is_zero_mod_ideal(&ab));
    }

    /// Quotient of the free algebra on a,b,c by [b,c]: degree-2 component
    /// drops exactly one dimension and normal forms are canonical.
    #[test]
    fn single_relation_dims() {
        let alphabet = Alphabet::new(&[("a", 1), ("b", 1), ("c", 1)]);
        let free = FreeLie::new(alphabet.clone(), 3);
        let rel = free.bracket(&free.gen::<Q>(1), &free.gen::<Q>(2), true).unwrap();
        let pres = LiePresentation {
            name: "one-rel".into(),
            alphabet,
            relations: vec![("bc".into(), rel.clone())],
        };
        let quo = QuotientLie::new(pres, 3).unwrap();
        assert_eq!(quo.dim(1), 3);
        assert_eq!(quo.dim(2), 2);
        // Degree 3 of the ideal: [a,[b,c]], [b,[b,c]], [c,[b,c]] are
        // independent; ambient dim is 8.
        assert_eq!(quo.dim(3), 5);
        let r2 = quo.nf(&rel.scale(&q(7)));
        assert!(r2.is_zero());
    }
}
