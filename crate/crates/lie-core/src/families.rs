//! The presented Lie algebras used across the workspace.
//!
//! * `elliptic_braid(n)` — the graded Lie algebra on generators `x_i`, `y_i`
//!   (degree 1) and symmetric `t_ij` (degree 2) whose relations are the
//!   infinitesimal analogues of the elliptic (genus-one) pure braid group
//!   relations on `n` strands. `Σx_i` and `Σy_i` are central in it.
//! * `reduced_elliptic_braid(n)` — the quotient by the central elements
//!   `Σx_i`, `Σy_i` (imposed as degree-1 relations).
//! * `horizontal_chord(n)` — the Lie algebra of horizontal chord diagrams
//!   (infinitesimal pure braid relations only; `t_ij` in degree 1), the home
//!   of associator identities.
//! * `partial_sum_presentation_*` — the two alternative presentations of the
//!   elliptic braid Lie algebra, with the generator change
//!   `a_i = x_i + ... + x_n`, `b_i = y_i + ... + y_n`.
//! * `free_lie(letters)` — a free Lie algebra (empty relation set).

use crate::free::LieElement;
use crate::lyndon::Alphabet;
use crate::quotient::LiePresentation;
use crate::scalar::Q;
use crate::FreeLie;
use crate::Scalar;

/// Generator order: `x1 < y1 < x2 < y2 < ... < xn < yn`, then the chord
/// generators `t12 < t13 < ... < t1n < t23 < ...` (degree 2).
fn xy_t_alphabet(n: usize) -> Alphabet {
    let mut letters: Vec<(String, u32)> = Vec::new();
    for i in 1..=n {
        letters.push((format!("x{i}"), 1));
        letters.push((format!("y{i}"), 1));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            letters.push((format!("t{i}{j}"), 2));
        }
    }
    let refs: Vec<(&str, u32)> = letters.iter().map(|(s, d)| (s.as_str(), *d)).collect();
    Alphabet::new(&refs)
}

/// Name of the symmetric chord generator for an unordered pair.
pub fn t_name(i: usize, j: usize) -> String {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    format!("t{a}{b}")
}

fn bra(f: &FreeLie, a: &LieElement<Q>, b: &LieElement<Q>) -> LieElement<Q> {
    f.bracket(a, b, true).expect("relation bracket within degree bound")
}

/// Relations shared by the elliptic braid presentations on generators
/// `x_i, y_i, t_ij`.
fn elliptic_relations(f: &FreeLie, n: usize) -> Vec<(String, LieElement<Q>)> {
    let x = |i: usize| f.gen_named::<Q>(&format!("x{i}"));
    let y = |i: usize| f.gen_named::<Q>(&format!("y{i}"));
    let t = |i: usize, j: usize| f.gen_named::<Q>(&t_name(i, j));
    let mut rels: Vec<(String, LieElement<Q>)> = Vec::new();
    // Chord relations: [t_ij, t_ik + t_jk] = 0 within each triple,
    // [t_ij, t_kl] = 0 for disjoint pairs.
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                let triple = [(i, j, k), (i, k, j), (j, k, i)];
                for (p, q, r) in triple {
                    rels.push((
                        format!("chord[t{p}{q},t.{r}]"),
                        bra(f, &t(p, q), &t(p, r).add(&t(q, r))),
                    ));
                }
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (i + 1)..=n {
                for l in (k + 1)..=n {
                    if (k, l) > (i, j) && k != i && k != j && l != i && l != j {
                        rels.push((
                            format!("chord[t{i}{j},t{k}{l}]"),
                            bra(f, &t(i, j), &t(k, l)),
                        ));
                    }
                }
            }
        }
    }
    // [x_i, y_j] = t_ij (i != j); [x_i, x_j] = [y_i, y_j] = 0.
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                rels.push((format!("[x{i},y{j}]-t"), bra(f, &x(i), &y(j)).sub(&t(i, j))));
            }
            if i < j {
                rels.push((format!("[x{i},x{j}]"), bra(f, &x(i), &x(j))));
                rels.push((format!("[y{i},y{j}]"), bra(f, &y(i), &y(j))));
            }
        }
    }
    // [x_i, y_i] = -sum_{j != i} t_ij.
    for i in 1..=n {
        let mut s = bra(f, &x(i), &y(i));
        for j in 1..=n {
            if j != i {
                s = s.add(&t(i, j));
            }
        }
        rels.push((format!("[x{i},y{i}]+sum"), s));
    }
    // [x_k, t_ij] = [y_k, t_ij] = 0 for k outside the pair;
    // [x_i + x_j, t_ij] = [y_i + y_j, t_ij] = 0.
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in 1..=n {
                if k != i && k != j {
                    rels.push((format!("[x{k},t{i}{j}]"), bra(f, &x(k), &t(i, j))));
                    rels.push((format!("[y{k},t{i}{j}]"), bra(f, &y(k), &t(i, j))));
                }
            }
            rels.push((format!("[x{i}+x{j},t{i}{j}]"), bra(f, &x(i).add(&x(j)), &t(i, j))));
            rels.push((format!("[y{i}+y{j},t{i}{j}]"), bra(f, &y(i).add(&y(j)), &t(i, j))));
        }
    }
    rels
}

/// Presentation of the elliptic braid Lie algebra on `n` strands.
pub fn elliptic_braid(n: usize, max_degree: u32) -> LiePresentation {
    assert!(n >= 1);
    let alphabet = xy_t_alphabet(n);
    let f = FreeLie::new(alphabet.clone(), max_degree.max(4));
    LiePresentation {
        name: format!("elliptic-braid-{n}"),
        alphabet,
        relations: elliptic_relations(&f, n),
    }
}

/// The reduced algebra: additionally `Σx_i = Σy_i = 0`.
pub fn reduced_elliptic_braid(n: usize, max_degree: u32) -> LiePresentation {
    let mut pres = elliptic_braid(n, max_degree);
    pres.name = format!("reduced-elliptic-braid-{n}");
    let f = FreeLie::new(pres.alphabet.clone(), 2);
    let mut sx = LieElement::zero();
    let mut sy = LieElement::zero();
    for i in 1..=n {
        sx = sx.add(&f.gen_named::<Q>(&format!("x{i}")));
        sy = sy.add(&f.gen_named::<Q>(&format!("y{i}")));
    }
    pres.relations.push(("sum-x".into(), sx));
    pres.relations.push(("sum-y".into(), sy));
    pres
}

/// Horizontal chord diagram Lie algebra on `n` strands: generators `t_ij` of
/// degree 1 with the infinitesimal pure braid relations.
pub fn horizontal_chord(n: usize) -> LiePresentation {
    assert!(n >= 2);
    let mut letters: Vec<(String, u32)> = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            letters.push((t_name(i, j), 1));
        }
    }
    let refs: Vec<(&str, u32)> = letters.iter().map(|(s, d)| (s.as_str(), *d)).collect();
    let alphabet = Alphabet::new(&refs);
    let f = FreeLie::new(alphabet.clone(), 2);
    let t = |i: usize, j: usize| f.gen_named::<Q>(&t_name(i, j));
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for (p, q, r) in [(i, j, k), (i, k, j), (j, k, i)] {
                    rels.push((
                        format!("chord[t{p}{q},t.{r}]"),
                        bra(&f, &t(p, q), &t(p, r).add(&t(q, r))),
                    ));
                }
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (i + 1)..=n {
                for l in (k + 1)..=n {
                    if (k, l) > (i, j) && k != i && k != j && l != i && l != j {
                        rels.push((format!("chord[t{i}{j},t{k}{l}]"), bra(&f, &t(i, j), &t(k, l))));
                    }
                }
            }
        }
    }
    LiePresentation { name: format!("horizontal-chord-{n}"), alphabet, relations: rels }
}

/// Free Lie algebra presentation on named degree-1 letters.
pub fn free_lie(letters: &[&str]) -> LiePresentation {
    let spec: Vec<(&str, u32)> = letters.iter().map(|&s| (s, 1)).collect();
    LiePresentation {
        name: format!("free-{}", letters.join("-")),
        alphabet: Alphabet::new(&spec),
        relations: Vec::new(),
    }
}

/// Alternative presentation on `x_i, y_i` only (chords eliminated):
/// `[x_i,y_j] = [x_j,y_i]`, `[x_i,x_j] = [y_i,y_j] = 0`,
/// `[Σx_j, y_i] = [Σy_j, x_i] = 0`, and
/// `[x_i,[x_j,y_k]] = [y_i,[y_j,x_k]] = 0` for distinct `i,j,k`.
pub fn partial_sum_presentation_a(n: usize) -> LiePresentation {
    let mut letters: Vec<(String, u32)> = Vec::new();
    for i in 1..=n {
        letters.push((format!("x{i}"), 1));
        letters.push((format!("y{i}"), 1));
    }
    let refs: Vec<(&str, u32)> = letters.iter().map(|(s, d)| (s.as_str(), *d)).collect();
    let alphabet = Alphabet::new(&refs);
    let f = FreeLie::new(alphabet.clone(), 3);
    let x = |i: usize| f.gen_named::<Q>(&format!("x{i}"));
    let y = |i: usize| f.gen_named::<Q>(&format!("y{i}"));
    let mut rels = Vec::new();
    let mut sx = LieElement::<Q>::zero();
    let mut sy = LieElement::<Q>::zero();
    for i in 1..=n {
        sx = sx.add(&x(i));
        sy = sy.add(&y(i));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            rels.push((format!("sym[x{i},y{j}]"), bra(&f, &x(i), &y(j)).sub(&bra(&f, &x(j), &y(i)))));
            rels.push((format!("[x{i},x{j}]"), bra(&f, &x(i), &x(j))));
            rels.push((format!("[y{i},y{j}]"), bra(&f, &y(i), &y(j))));
        }
        rels.push((format!("[sumx,y{i}]"), bra(&f, &sx, &y(i))));
        rels.push((format!("[sumy,x{i}]"), bra(&f, &sy, &x(i))));
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i != j && i != k && j != k {
                    rels.push((
                        format!("[x{i},[x{j},y{k}]]"),
                        bra(&f, &x(i), &bra(&f, &x(j), &y(k))),
                    ));
                    rels.push((
                        format!("[y{i},[y{j},x{k}]]"),
                        bra(&f, &y(i), &bra(&f, &y(j), &x(k))),
                    ));
                }
            }
        }
    }
    LiePresentation { name: format!("partial-sum-a-{n}"), alphabet, relations: rels }
}

/// Alternative presentation on partial-sum generators `a_i, b_i`:
/// `[a_i,a_j] = [b_i,b_j] = 0`, `[a_1,b_j] = [b_1,a_j] = 0`,
/// `[a_j,b_k] = [a_k,b_j]`, and `[a_i, c_jk] = [b_i, c_jk] = 0` for
/// `i <= j < k`, where `c_jk = [b_k, a_k - a_j]`.
pub fn partial_sum_presentation_b(n: usize) -> LiePresentation {
    let mut letters: Vec<(String, u32)> = Vec::new();
    for i in 1..=n {
        letters.push((format!("a{i}"), 1));
        letters.push((format!("b{i}"), 1));
    }
    let refs: Vec<(&str, u32)> = letters.iter().map(|(s, d)| (s.as_str(), *d)).collect();
    let alphabet = Alphabet::new(&refs);
    let f = FreeLie::new(alphabet.clone(), 3);
    let a = |i: usize| f.gen_named::<Q>(&format!("a{i}"));
    let b = |i: usize| f.gen_named::<Q>(&format!("b{i}"));
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            rels.push((format!("[a{i},a{j}]"), bra(&f, &a(i), &a(j))));
            rels.push((format!("[b{i},b{j}]"), bra(&f, &b(i), &b(j))));
            rels.push((format!("sym[a{i},b{j}]"), bra(&f, &a(i), &b(j)).sub(&bra(&f, &a(j), &b(i)))));
        }
        rels.push((format!("[a1,b{i}]"), bra(&f, &a(1), &b(i))));
        if i > 1 {
            rels.push((format!("[b1,a{i}]"), bra(&f, &b(1), &a(i))));
        }
    }
    for j in 1..=n {
        for k in (j + 1)..=n {
            let c_jk = bra(&f, &b(k), &a(k).sub(&a(j)));
            for i in 1..=j {
                rels.push((format!("[a{i},c{j}{k}]"), bra(&f, &a(i), &c_jk)));
                rels.push((format!("[b{i},c{j}{k}]"), bra(&f, &b(i), &c_jk)));
            }
        }
    }
    LiePresentation { name: format!("partial-sum-b-{n}"), alphabet, relations: rels }
}

/// Sum `x_{i}` over a strand subset, for cabling maps.
pub fn sum_gens<S: Scalar>(f: &FreeLie, prefix: &str, strands: &[usize]) -> LieElement<S> {
    let mut s = LieElement::zero();
    for &i in strands {
        s = s.add(&f.gen_named::<S>(&format!("{prefix}{i}")));
    }
    s
}
