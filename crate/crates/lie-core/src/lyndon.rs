//! Lyndon words over a weighted alphabet.
//!
//! Letters carry positive integer degrees (weights); the degree of a word is
//! the sum of its letter degrees. Lyndon words of each total degree index the
//! basis of the corresponding graded component of the free Lie algebra, with
//! the bracketing given by the standard (right) factorization.

/// A finite alphabet whose letters carry names and positive degrees.
///
/// Letter order (the order of the `names`/`degrees` vectors) fixes the word
/// order used everywhere downstream, so constructors must list generators in
/// the intended precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    pub names: Vec<String>,
    pub degrees: Vec<u32>,
}

impl Alphabet {
    pub fn new(letters: &[(&str, u32)]) -> Self {
        assert!(letters.len() < u8::MAX as usize, "alphabet too large");
        assert!(letters.iter().all(|&(_, d)| d >= 1), "letter degrees must be positive");
        Alphabet {
            names: letters.iter().map(|&(s, _)| s.to_string()).collect(),
            degrees: letters.iter().map(|&(_, d)| d).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn degree_of_word(&self, w: &[u8]) -> u32 {
        w.iter().map(|&c| self.degrees[c as usize]).sum()
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }
}

/// True iff `w` is a Lyndon word: nonempty and strictly smaller than each of
/// its proper rotations (equivalently: than each of its proper suffixes).
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    for i in 1..w.len() {
        if &w[i..] <= w {
            return false;
        }
    }
    true
}

/// All Lyndon words of weighted degree 1..=max_degree, grouped by degree and
/// sorted lexicographically within each degree.
///
/// Uses Duval's generation by length (lengths are bounded by the degree since
/// letter degrees are >= 1), filtered by weighted degree.
pub fn lyndon_words_by_degree(alphabet: &Alphabet, max_degree: u32) -> Vec<Vec<Vec<u8>>> {
    let k = alphabet.len() as u8;
    let mut by_degree: Vec<Vec<Vec<u8>>> = vec![Vec::new(); (max_degree + 1) as usize];
    if k == 0 || max_degree == 0 {
        return by_degree;
    }
    let max_len = max_degree as usize;
    // Duval's algorithm, generating all Lyndon words of length <= max_len in
    // lexicographic order.
    let mut w: Vec<u8> = vec![0];
    loop {
        let d = alphabet.degree_of_word(&w);
        if d <= max_degree {
            by_degree[d as usize].push(w.clone());
        }
        // Extend periodically to maximum length, then increment.
        let n = w.len();
        let mut t = Vec::with_capacity(max_len);
        while t.len() < max_len {
            t.push(w[t.len() % n]);
        }
        w = t;
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                *w.last_mut().unwrap() = last + 1;
                break;
            }
        }
        if w.is_empty() {
            break;
        }
    }
    // Duval emits in lex order overall; per-degree lists inherit lex order
    // only within equal length. Sort each bucket to get a canonical order.
    for bucket in &mut by_degree {
        bucket.sort();
    }
    by_degree
}

/// Standard (right) factorization of a Lyndon word of length >= 2: `w = uv`
/// where `v` is the longest proper suffix of `w` that is Lyndon. Both factors
/// are Lyndon and the bracketed basis element is `[b_u, b_v]`.
pub fn standard_factorization(w: &[u8]) -> (Vec<u8>, Vec<u8>) {
    assert!(w.len() >= 2, "factorization needs length >= 2");
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return (w[..i].to_vec(), w[i..].to_vec());
        }
    }
    unreachable!("every Lyndon word of length >= 2 has a proper Lyndon suffix");
}

/// Graded dimensions of the free Lie algebra on a weighted alphabet, via the
/// necklace-counting recursion: with `c_d` = number of associative words of
/// degree `d` (power series inverse of 1 - sum_letters q^deg), the Lie
/// dimensions l_d satisfy sum_{e|d} e*l_e = p_d, where p_d are the power sums
/// of the inverse roots of 1 - A(q), computed by the Newton-type recurrence
/// p_d = a_1 p_{d-1} + ... + a_{d-1} p_1 + d*a_d (a_j = letters of degree j).
pub fn witt_dimensions(alphabet: &Alphabet, max_degree: u32) -> Vec<u64> {
    let maxd = max_degree as usize;
    let mut letter_count = vec![0i128; maxd + 1];
    for &d in &alphabet.degrees {
        if (d as usize) <= maxd {
            letter_count[d as usize] += 1;
        }
    }
    let mut p = vec![0i128; maxd + 1];
    for d in 1..=maxd {
        let mut s = d as i128 * letter_count[d];
        for j in 1..d {
            s += letter_count[j] * p[d - j];
        }
        p[d] = s;
    }
    // Möbius inversion of sum_{e|d} e*l_e = p_d.
    let mut l = vec![0u64; maxd + 1];
    for d in 1..=maxd {
        let mut s = p[d];
        for e in 1..d {
            if d % e == 0 {
                s -= e as i128 * l[e] as i128;
            }
        }
        debug_assert!(s >= 0 && s % d as i128 == 0);
        l[d] = (s / d as i128) as u64;
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_recognizer() {
        assert!(is_lyndon(&[0]));
        assert!(is_lyndon(&[0, 1]));
        assert!(!is_lyndon(&[1, 0]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
        assert!(is_lyndon(&[0, 0, 1, 0, 1, 1]));
    }

    #[test]
    fn counts_match_witt() {
        let ab = Alphabet::new(&[("a", 1), ("b", 1)]);
        let words = lyndon_words_by_degree(&ab, 6);
        let dims = witt_dimensions(&ab, 6);
        for d in 1..=6usize {
            assert_eq!(words[d].len() as u64, dims[d], "degree {d}");
        }
        // Classical values for two letters.
        assert_eq!(&dims[1..], &[2, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn weighted_counts_match_witt() {
        let ab = Alphabet::new(&[("x", 1), ("y", 1), ("t", 2)]);
        let words = lyndon_words_by_degree(&ab, 6);
        let dims = witt_dimensions(&ab, 6);
        for d in 1..=6usize {
            assert_eq!(words[d].len() as u64, dims[d], "degree {d}");
        }
    }

    #[test]
    fn factorization_is_lyndon_pair() {
        let ab = Alphabet::new(&[("a", 1), ("b", 1), ("c", 1)]);
        for bucket in lyndon_words_by_degree(&ab, 5) {
            for w in bucket {
                if w.len() >= 2 {
                    let (u, v) = standard_factorization(&w);
                    assert!(is_lyndon(&u) && is_lyndon(&v));
                    assert!(u < v);
                    assert_eq!([u, v].concat(), w);
                }
            }
        }
    }
}
