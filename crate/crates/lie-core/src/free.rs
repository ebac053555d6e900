//! Free Lie algebra on a weighted alphabet with exact bracket arithmetic.
//!
//! Basis elements are bracketed Lyndon words. Brackets are computed through
//! the associative expansion in the tensor algebra: the expansion of the
//! bracketed Lyndon word `w` equals `w` plus lexicographically larger
//! rearrangements of `w`, so a Lie element written as an associative
//! polynomial is rewritten into Lyndon coordinates by repeatedly stripping
//! its smallest word. Expansions of basis elements have integer coefficients
//! and are precomputed.

use crate::error::LieError;
use crate::lyndon::{is_lyndon, lyndon_words_by_degree, standard_factorization, Alphabet};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};

/// Associative polynomial with integer coefficients, keyed by words.
pub type WordPolyZ = BTreeMap<Vec<u8>, i64>;

/// A Lie element in Lyndon coordinates: `(degree, index within degree) -> coefficient`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieElement<S> {
    pub coords: BTreeMap<(u32, u32), S>,
}

impl<S: Scalar> LieElement<S> {
    pub fn zero() -> Self {
        LieElement { coords: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn single(deg: u32, idx: u32, c: S) -> Self {
        let mut coords = BTreeMap::new();
        if !c.is_zero() {
            coords.insert((deg, idx), c);
        }
        LieElement { coords }
    }

    pub fn add_term(&mut self, key: (u32, u32), c: &S) {
        if c.is_zero() {
            return;
        }
        match self.coords.get_mut(&key) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.coords.remove(&key);
                }
            }
            None => {
                self.coords.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement<S>, c: &S) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.coords {
            self.add_term(*k, &v.mul(c));
        }
    }

    pub fn add(&self, other: &LieElement<S>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &LieElement<S>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one().neg());
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = LieElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Largest magnitude over the coordinates (0 for the zero element).
    pub fn max_coeff(&self) -> f64 {
        self.coords.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// Degrees present in the support.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.coords.keys().map(|&(d, _)| d).collect();
        ds.dedup();
        ds
    }

    /// The component of a single degree.
    pub fn component(&self, degree: u32) -> Self {
        LieElement {
            coords: self
                .coords
                .iter()
                .filter(|&(&(d, _), _)| d == degree)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieElement<T> {
        LieElement {
            coords: self
                .coords
                .iter()
                .filter_map(|(k, v)| {
                    let w = f(v);
                    if w.is_zero() {
                        None
                    } else {
                        Some((*k, w))
                    }
                })
                .collect(),
        }
    }
}

/// Free Lie algebra on an alphabet, truncated at `max_degree`.
pub struct FreeLie {
    pub alphabet: Alphabet,
    pub max_degree: u32,
    /// Lyndon words per degree, lexicographically sorted.
    pub words: Vec<Vec<Vec<u8>>>,
    index: HashMap<Vec<u8>, (u32, u32)>,
    /// Integer associative expansion of each basis element, per (degree, index).
    expansions: Vec<Vec<WordPolyZ>>,
    /// `[letter, basis]` brackets in Lyndon coordinates (integer), indexed
    /// `[letter][degree][index]`; empty where the result would overflow the
    /// truncation.
    letter_brackets: Vec<Vec<Vec<Vec<((u32, u32), i64)>>>>,
}

fn mul_words_z(a: &WordPolyZ, b: &WordPolyZ, out: &mut WordPolyZ, sign: i64) {
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            let e = out.entry(w).or_insert(0);
            *e += sign * ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
}

impl FreeLie {
    pub fn new(alphabet: Alphabet, max_degree: u32) -> Self {
        let words = lyndon_words_by_degree(&alphabet, max_degree);
        let mut index = HashMap::new();
        for (d, bucket) in words.iter().enumerate() {
            for (i, w) in bucket.iter().enumerate() {
                index.insert(w.clone(), (d as u32, i as u32));
            }
        }
        // Expansions, in increasing degree so factors are always available.
        let mut expansions: Vec<Vec<WordPolyZ>> = vec![Vec::new(); words.len()];
        for d in 1..words.len() {
            for w in &words[d] {
                let poly = if w.len() == 1 {
                    BTreeMap::from([(w.clone(), 1i64)])
                } else {
                    let (u, v) = standard_factorization(w);
                    let (du, iu) = index[&u];
                    let (dv, iv) = index[&v];
                    let pu = &expansions[du as usize][iu as usize];
                    let pv = &expansions[dv as usize][iv as usize];
                    let mut out = WordPolyZ::new();
                    mul_words_z(pu, pv, &mut out, 1);
                    mul_words_z(pv, pu, &mut out, -1);
                    out
                };
                expansions[d].push(poly);
            }
        }
        let mut free = FreeLie { alphabet, max_degree, words, index, expansions, letter_brackets: Vec::new() };
        // Eager [letter, basis] bracket table: the ideal closure and
        // derivation machinery hit these constantly.
        let nletters = free.alphabet.len();
        let mut table = Vec::with_capacity(nletters);
        for g in 0..nletters {
            let gdeg = free.alphabet.degrees[g];
            let mut per_degree = vec![Vec::new(); free.words.len()];
            for d in 1..free.words.len() {
                if d as u32 + gdeg > max_degree {
                    continue;
                }
                let mut per_idx = Vec::with_capacity(free.words[d].len());
                for i in 0..free.words[d].len() {
                    let lhs = BTreeMap::from([(vec![g as u8], 1i64)]);
                    let mut out = WordPolyZ::new();
                    mul_words_z(&lhs, &free.expansions[d][i], &mut out, 1);
                    mul_words_z(&free.expansions[d][i], &lhs, &mut out, -1);
                    let coords = free
                        .assoc_to_lie_z(out)
                        .expect("bracket of basis elements is a Lie element");
                    per_idx.push(coords);
                }
                per_degree[d] = per_idx;
            }
            table.push(per_degree);
        }
        free.letter_brackets = table;
        free
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.words.get(degree as usize).map_or(0, Vec::len)
    }

    pub fn word(&self, degree: u32, idx: u32) -> &[u8] {
        &self.words[degree as usize][idx as usize]
    }

    pub fn index_of(&self, word: &[u8]) -> Option<(u32, u32)> {
        self.index.get(word).copied()
    }

    pub fn expansion(&self, degree: u32, idx: u32) -> &WordPolyZ {
        &self.expansions[degree as usize][idx as usize]
    }

    /// The generator with the given letter index as a Lie element.
    pub fn gen<S: Scalar>(&self, letter: usize) -> LieElement<S> {
        let d = self.alphabet.degrees[letter];
        let (deg, idx) = self.index[&vec![letter as u8]];
        debug_assert_eq!(d, deg);
        LieElement::single(deg, idx, S::one())
    }

    pub fn gen_named<S: Scalar>(&self, name: &str) -> LieElement<S> {
        let letter = self
            .alphabet
            .index_of(name)
            .unwrap_or_else(|| panic!("no generator named {name:?}"));
        self.gen(letter as usize)
    }

    /// Rewrites an integer associative polynomial into Lyndon coordinates.
    fn assoc_to_lie_z(&self, mut poly: WordPolyZ) -> Result<Vec<((u32, u32), i64)>, LieError> {
        let mut coords = Vec::new();
        while let Some((w, &c)) = poly.iter().next().map(|(w, c)| (w.clone(), c)) {
            if c == 0 {
                poly.remove(&w);
                continue;
            }
            if !is_lyndon(&w) {
                return Err(LieError::NotLieElement(format!("{w:?}")));
            }
            let (d, i) = self.index[&w];
            coords.push(((d, i), c));
            for (v, cv) in self.expansion(d, i) {
                let e = poly.entry(v.clone()).or_insert(0);
                *e -= c * cv;
                if *e == 0 {
                    poly.remove(v);
                }
            }
        }
        coords.sort_unstable_by_key(|&(k, _)| k);
        Ok(coords)
    }

    /// Rewrites an associative polynomial with `S` coefficients into Lyndon
    /// coordinates. Errors if the polynomial is not a Lie element.
    pub fn assoc_to_lie<S: Scalar>(
        &self,
        mut poly: BTreeMap<Vec<u8>, S>,
    ) -> Result<LieElement<S>, LieError> {
        let mut out = LieElement::zero();
        loop {
            let head = poly.iter().find(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = head else { break };
            if !is_lyndon(&w) {
                return Err(LieError::NotLieElement(format!("{w:?}")));
            }
            let (d, i) = self.index[&w];
            out.add_term((d, i), &c);
            for (v, cv) in self.expansion(d, i) {
                let delta = c.mul(&S::from_i64(*cv)).neg();
                match poly.get_mut(v) {
                    Some(e) => {
                        *e = e.add(&delta);
                    }
                    None => {
                        poly.insert(v.clone(), delta);
                    }
                }
            }
            poly.retain(|_, c| !c.is_zero());
        }
        Ok(out)
    }

    /// Associative expansion of a Lie element.
    pub fn lie_to_assoc<S: Scalar>(&self, elem: &LieElement<S>) -> BTreeMap<Vec<u8>, S> {
        let mut out: BTreeMap<Vec<u8>, S> = BTreeMap::new();
        for (&(d, i), c) in &elem.coords {
            for (w, cw) in self.expansion(d, i) {
                let delta = c.mul(&S::from_i64(*cw));
                match out.get_mut(w) {
                    Some(e) => {
                        *e = e.add(&delta);
                    }
                    None => {
                        out.insert(w.clone(), delta);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `[generator, elem]`, using the precomputed table. Terms overflowing the
    /// truncation are an error if `strict`, silently dropped otherwise.
    pub fn bracket_letter<S: Scalar>(
        &self,
        letter: usize,
        elem: &LieElement<S>,
        strict: bool,
    ) -> Result<LieElement<S>, LieError> {
        let gdeg = self.alphabet.degrees[letter];
        let mut out = LieElement::zero();
        for (&(d, i), c) in &elem.coords {
            if d + gdeg > self.max_degree {
                if strict {
                    return Err(LieError::DegreeOverflow(d + gdeg, self.max_degree));
                }
                continue;
            }
            for &(key, cz) in &self.letter_brackets[letter][d as usize][i as usize] {
                out.add_term(key, &c.mul(&S::from_i64(cz)));
            }
        }
        Ok(out)
    }

    /// General bracket `[a, b]`. Terms overflowing the truncation are an error
    /// if `strict`, silently dropped otherwise (the convention used when
    /// evaluating truncated analytic series).
    pub fn bracket<S: Scalar>(
        &self,
        a: &LieElement<S>,
        b: &LieElement<S>,
        strict: bool,
    ) -> Result<LieElement<S>, LieError> {
        let mut out = LieElement::zero();
        // Group coordinates by degree so overflow can be pruned wholesale.
        for (&(da, ia), ca) in &a.coords {
            for (&(db, ib), cb) in &b.coords {
                if da + db > self.max_degree {
                    if strict {
                        return Err(LieError::DegreeOverflow(da + db, self.max_degree));
                    }
                    continue;
                }
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                let coords = self.basis_bracket(da, ia, db, ib);
                for &(key, cz) in coords.iter() {
                    out.add_term(key, &c.mul(&S::from_i64(cz)));
                }
            }
        }
        Ok(out)
    }

    /// `[b_(da,ia), b_(db,ib)]` in integer Lyndon coordinates.
    fn basis_bracket(&self, da: u32, ia: u32, db: u32, ib: u32) -> Vec<((u32, u32), i64)> {
        // Letter brackets are precomputed; larger ones are cheap enough to
        // recompute (callers that need them in bulk cache at their own level).
        if da == 1 || self.word(da, ia).len() == 1 {
            let letter = self.word(da, ia)[0] as usize;
            return self.letter_brackets[letter][db as usize][ib as usize].clone();
        }
        let pa = self.expansion(da, ia);
        let pb = self.expansion(db, ib);
        let mut out = WordPolyZ::new();
        mul_words_z(pa, pb, &mut out, 1);
        mul_words_z(pb, pa, &mut out, -1);
        self.assoc_to_lie_z(out).expect("bracket of basis elements is a Lie element")
    }

    /// Pretty-prints a Lie element using bracketed Lyndon words.
    pub fn format<S: Scalar>(&self, elem: &LieElement<S>) -> String {
        if elem.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&(d, i), c) in &elem.coords {
            parts.push(format!("{c:?}*{}", self.format_word(self.word(d, i))));
        }
        parts.join(" + ")
    }

    fn format_word(&self, w: &[u8]) -> String {
        if w.len() == 1 {
            return self.alphabet.names[w[0] as usize].clone();
        }
        let (u, v) = standard_factorization(w);
        format!("[{},{}]", self.format_word(&u), self.format_word(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    fn free2(maxd: u32) -> FreeLie {
        FreeLie::new(Alphabet::new(&[("a", 1), ("b", 1)]), maxd)
    }

    #[test]
    fn expansion_triangularity() {
        let f = free2(6);
        for d in 1..=6u32 {
            for i in 0..f.dim(d) as u32 {
                let w = f.word(d, i).to_vec();
                let exp = f.expansion(d, i);
                assert_eq!(exp[&w], 1, "leading coefficient of {w:?}");
                assert!(exp.keys().all(|v| v >= &w), "triangularity of {w:?}");
            }
        }
    }

    #[test]
    fn bracket_antisymmetry_and_jacobi() {
        let f = free2(6);
        let a: LieElement<Q> = f.gen(0);
        let b: LieElement<Q> = f.gen(1);
        let ab = f.bracket(&a, &b, true).unwrap();
        let ba = f.bracket(&b, &a, true).unwrap();
        assert_eq!(ab, ba.scale(&q(-1)));
        // [a,[a,b]] and a full Jacobi instance on nested elements.
        let aab = f.bracket(&a, &ab, true).unwrap();
        let x = f.bracket(&a, &f.bracket(&b, &aab, true).unwrap(), true).unwrap();
        let y = f.bracket(&b, &f.bracket(&aab, &a, true).unwrap(), true).unwrap();
        let z = f.bracket(&aab, &f.bracket(&a, &b, true).unwrap(), true).unwrap();
        assert!(x.add(&y).add(&z).is_zero(), "Jacobi identity");
    }

    #[test]
    fn roundtrip_assoc() {
        let f = free2(5);
        let a: LieElement<Q> = f.gen(0);
        let b: LieElement<Q> = f.gen(1);
        let e = f
            .bracket(&a, &f.bracket(&a, &b, true).unwrap(), true)
            .unwrap()
            .add(&b.scale(&q(3)));
        let back = f.assoc_to_lie(f.lie_to_assoc(&e)).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn non_lie_detected() {
        let f = free2(4);
        // a*a is not a Lie element.
        let poly: BTreeMap<Vec<u8>, Q> = BTreeMap::from([(vec![0u8, 0u8], q(1))]);
        assert!(f.assoc_to_lie(poly).is_err());
    }
}
