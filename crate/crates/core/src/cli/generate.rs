//! Seeded generation of test complexes.
//!
//! A random complex is a direct sum of shifted building blocks (Koszul
//! complexes, free modules, split exact pieces `R --u--> R`, two-term maps)
//! whose bases are then scrambled by elementary operations. An elementary
//! change of basis `E` of `F_n` replaces `∂_n` by `∂_n E` and `∂_{n+1}` by
//! `E^{-1} ∂_{n+1}`, so `∂∂ = 0` survives and the homology is unchanged.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::{direct_sum, koszul_complex, shift, FiniteFreeComplex};
use crate::matpoly::MapOfFree;
use crate::polyring::{CoefficientField, Monomial, MonomialOrder, PolyRing, Polynomial, DEFAULT_PRIME};

pub type GenRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

/// Standard variable names `x, y, z, w, ...`.
pub fn variable_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| match NAMES.get(i) {
            Some(n) => n.to_string(),
            None => format!("x{}", i + 1),
        })
        .collect()
}

pub fn standard_ring(vars: usize, field: CoefficientField) -> PolyRing {
    PolyRing::new(field, variable_names(vars), MonomialOrder::GrevLex).expect("distinct names")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub vars: usize,
    pub maxdeg: u32,
    pub maxrank: usize,
    /// Bound on `b - a`.
    pub len: usize,
    /// Only graded blocks and degree-preserving basis changes.
    pub homogeneous: bool,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            vars: 3,
            maxdeg: 2,
            maxrank: 3,
            len: 4,
            homogeneous: false,
        }
    }
}

impl RandomSpec {
    pub fn ring(&self) -> PolyRing {
        standard_ring(self.vars, CoefficientField::Prime(DEFAULT_PRIME))
    }
}

fn random_monomial(rng: &mut GenRng, vars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; vars];
    if vars > 0 {
        for _ in 0..degree {
            exps[rng.gen_range(0..vars)] += 1;
        }
    }
    Monomial::from_exponents(&exps)
}

fn random_coefficient(ring: &PolyRing, rng: &mut GenRng) -> crate::polyring::Scalar {
    let c = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    ring.field().from_i64(c)
}

/// A nonzero polynomial with at most three terms of degree `<= maxdeg`.
pub fn random_polynomial(ring: &PolyRing, rng: &mut GenRng, maxdeg: u32) -> Polynomial {
    loop {
        let terms = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(0..=maxdeg);
                (random_monomial(rng, ring.nvars(), d), random_coefficient(ring, rng))
            })
            .collect();
        let f = ring.from_terms(terms).expect("arity");
        if !f.is_zero() {
            return f;
        }
    }
}

/// A nonzero form of the given degree with at most three terms.
pub fn random_form(ring: &PolyRing, rng: &mut GenRng, degree: u32) -> Polynomial {
    loop {
        let terms = (0..rng.gen_range(1..=3))
            .map(|_| (random_monomial(rng, ring.nvars(), degree), random_coefficient(ring, rng)))
            .collect();
        let f = ring.from_terms(terms).expect("arity");
        if !f.is_zero() {
            return f;
        }
    }
}

/// Between one and three polynomials of degree `<= maxdeg`.
pub fn random_koszul_tuple(ring: &PolyRing, rng: &mut GenRng, maxdeg: u32) -> Vec<Polynomial> {
    let c = rng.gen_range(1..=3);
    (0..c).map(|_| random_polynomial(ring, rng, maxdeg)).collect()
}

fn random_block(ring: &PolyRing, params: &RandomSpec, rng: &mut GenRng) -> FiniteFreeComplex {
    let maxdeg = params.maxdeg.max(1);
    let entry = |rng: &mut GenRng, deg: u32| {
        if rng.gen_bool(0.15) {
            ring.zero()
        } else if params.homogeneous {
            random_form(ring, rng, deg)
        } else {
            random_polynomial(ring, rng, params.maxdeg)
        }
    };
    match rng.gen_range(0..4) {
        0 => FiniteFreeComplex::free_module(ring, 0, 1),
        1 => {
            let u = ring.constant(random_coefficient(ring, rng));
            FiniteFreeComplex::two_term(ring, 0, MapOfFree::from_rows(1, vec![vec![u]]).unwrap()).unwrap()
        }
        2 => {
            let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let deg = rng.gen_range(1..=maxdeg);
            let rows = (0..p).map(|_| (0..q).map(|_| entry(rng, deg)).collect()).collect();
            FiniteFreeComplex::two_term(ring, 0, MapOfFree::from_rows(q, rows).unwrap()).unwrap()
        }
        _ => {
            let c = rng.gen_range(1..=3.min(params.len.max(1)));
            let f: Vec<Polynomial> = (0..c)
                .map(|_| {
                    if params.homogeneous {
                        let d = rng.gen_range(1..=maxdeg);
                        random_form(ring, rng, d)
                    } else {
                        random_polynomial(ring, rng, params.maxdeg)
                    }
                })
                .collect();
            koszul_complex(ring, &f).unwrap()
        }
    }
}

fn fits(c: &FiniteFreeComplex, window: (i64, i64), maxrank: usize) -> bool {
    c.is_empty() || (c.low() >= window.0 && c.high() <= window.1 && c.ranks().iter().all(|&r| r <= maxrank))
}

/// A random complex with ranks `<= maxrank`, entries of degree `<= maxdeg`
/// and `b - a <= len`.
pub fn random_complex(ring: &PolyRing, params: &RandomSpec, rng: &mut GenRng) -> FiniteFreeComplex {
    let low = rng.gen_range(-1..=1);
    let window = (low, low + params.len as i64);
    let mut acc = FiniteFreeComplex::empty(ring);
    let wanted = rng.gen_range(1..=4);
    let mut attempts = 0;
    let mut placed = 0;
    while placed < wanted && attempts < 20 {
        attempts += 1;
        let block = random_block(ring, params, rng);
        let span = block.high() - block.low();
        if span > params.len as i64 {
            continue;
        }
        let at = rng.gen_range(window.0..=window.1 - span);
        let candidate = direct_sum(&acc, &shift(&block, at)).expect("same ring");
        if fits(&candidate, window, params.maxrank) {
            acc = candidate;
            placed += 1;
        }
    }
    if acc.is_empty() {
        acc = FiniteFreeComplex::free_module(ring, low, 1);
    }
    scramble(ring, &acc, params, rng).trimmed()
}

/// Applies random elementary changes of basis, rejecting any that would
/// raise an entry above `params.maxdeg`.
fn scramble(ring: &PolyRing, c: &FiniteFreeComplex, params: &RandomSpec, rng: &mut GenRng) -> FiniteFreeComplex {
    let (low, high) = (c.low(), c.high());
    let ranks = c.ranks().to_vec();
    // maps[i] = ∂_{low + i}, including the zero maps at both ends
    let mut maps: Vec<MapOfFree> = (low..=high + 1).map(|n| c.differential(n).into_owned()).collect();
    let k = ring.field();
    for _ in 0..rng.gen_range(0..=6) {
        let i = rng.gen_range(0..ranks.len());
        let rank = ranks[i];
        if rank == 0 {
            continue;
        }
        let (a, b) = (rng.gen_range(0..rank), rng.gen_range(0..rank));
        let (out_map, in_map) = (maps[i].clone(), maps[i + 1].clone());
        let (new_out, new_in) = match rng.gen_range(0..3) {
            0 if a != b => {
                let perm: Vec<usize> = (0..rank).map(|j| if j == a { b } else if j == b { a } else { j }).collect();
                let rows_out: Vec<usize> = (0..out_map.rows()).collect();
                let cols_in: Vec<usize> = (0..in_map.cols()).collect();
                (out_map.permuted(&rows_out, &perm), in_map.permuted(&perm, &cols_in))
            }
            1 => {
                let u = random_coefficient(ring, rng);
                let inv = k.inv(&u);
                let mut o = out_map.clone();
                for r in 0..o.rows() {
                    o.set(r, a, ring.scale(o.get(r, a), &u));
                }
                let mut n = in_map.clone();
                for col in 0..n.cols() {
                    n.set(a, col, ring.scale(n.get(a, col), &inv));
                }
                (o, n)
            }
            _ if a != b && !params.homogeneous => {
                // col_b += f col_a on ∂_n, row_a -= f row_b on ∂_{n+1}
                let f = if rng.gen_bool(0.5) {
                    ring.constant(random_coefficient(ring, rng))
                } else {
                    random_polynomial(ring, rng, 1)
                };
                let mut o = out_map.clone();
                for r in 0..o.rows() {
                    let v = ring.add(o.get(r, b), &ring.mul(&f, o.get(r, a)));
                    o.set(r, b, v);
                }
                let mut n = in_map.clone();
                for col in 0..n.cols() {
                    let v = ring.sub(n.get(a, col), &ring.mul(&f, n.get(b, col)));
                    n.set(a, col, v);
                }
                (o, n)
            }
            _ => continue,
        };
        let too_big = |m: &MapOfFree| m.max_degree().is_some_and(|d| d > params.maxdeg as u64);
        if too_big(&new_out) || too_big(&new_in) {
            continue;
        }
        maps[i] = new_out;
        maps[i + 1] = new_in;
    }
    let diffs = maps[1..maps.len() - 1].to_vec();
    FiniteFreeComplex::new(ring, low, ranks, diffs).expect("basis changes preserve ∂∂ = 0")
}

/// Shuffles the generators of an ideal; used by permutation-invariance
/// checks.
pub fn shuffled<T: Clone>(items: &[T], rng: &mut GenRng) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}
