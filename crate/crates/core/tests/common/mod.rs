//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use ffdim::cli::generate::{random_complex, random_koszul_tuple, seeded, RandomSpec};
use ffdim::complexes::{koszul_complex, FiniteFreeComplex};
use ffdim::matpoly::MapOfFree;
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing, Polynomial, DEFAULT_PRIME};

pub fn qq(vars: &[&str]) -> PolyRing {
    PolyRing::new(CoefficientField::Rationals, vars.iter().copied(), MonomialOrder::GrevLex).unwrap()
}

pub fn fp(vars: &[&str]) -> PolyRing {
    PolyRing::new(CoefficientField::Prime(DEFAULT_PRIME), vars.iter().copied(), MonomialOrder::GrevLex)
        .unwrap()
}

pub fn polys(r: &PolyRing, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| r.parse(t).unwrap()).collect()
}

pub fn matrix(r: &PolyRing, rows: &[&[&str]]) -> MapOfFree {
    let cols = rows.first().map_or(0, |row| row.len());
    MapOfFree::from_rows(cols, rows.iter().map(|row| polys(r, row)).collect()).unwrap()
}

pub fn koszul(r: &PolyRing, texts: &[&str]) -> FiniteFreeComplex {
    koszul_complex(r, &polys(r, texts)).unwrap()
}

/// Random complexes over F_32003: at most 3 variables, ranks at most 3,
/// entry degree at most 2, `b - a <= 4`.
pub fn random_suite(count: usize, seed: u64) -> Vec<FiniteFreeComplex> {
    let params = RandomSpec::default();
    let ring = params.ring();
    let mut rng = seeded(seed);
    (0..count).map(|_| random_complex(&ring, &params, &mut rng)).collect()
}

pub fn homogeneous_suite(count: usize, seed: u64) -> Vec<FiniteFreeComplex> {
    let params = RandomSpec {
        homogeneous: true,
        ..RandomSpec::default()
    };
    let ring = params.ring();
    let mut rng = seeded(seed);
    (0..count).map(|_| random_complex(&ring, &params, &mut rng)).collect()
}

/// Random Koszul tuples of length at most 3 and degree at most 2.
pub fn koszul_suite(count: usize, seed: u64) -> Vec<(Vec<Polynomial>, FiniteFreeComplex)> {
    let ring = RandomSpec::default().ring();
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let f = random_koszul_tuple(&ring, &mut rng, 2);
            let c = koszul_complex(&ring, &f).unwrap();
            (f, c)
        })
        .collect()
}

/// Leibniz expansion over all permutations, sharing nothing with the
/// library's minor code.
pub fn leibniz_determinant(r: &PolyRing, m: &MapOfFree) -> Polynomial {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = r.zero();
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = r.one();
        for (i, &p) in perm.iter().enumerate() {
            term = r.mul(&term, m.get(i, p));
        }
        total = if inversions % 2 == 0 { r.add(&total, &term) } else { r.sub(&total, &term) };
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Arithmetic in Z/p for the linear-algebra oracles.
pub struct Zp(pub u64);

impl Zp {
    pub fn inv(&self, a: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a % self.0, self.0 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            e >>= 1;
        }
        acc
    }

    /// Basis of the nullspace of a dense `rows x cols` matrix.
    pub fn nullspace(&self, mut a: Vec<Vec<u64>>, cols: usize) -> Vec<Vec<u64>> {
        let p = self.0;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(k) = (row..a.len()).find(|&k| a[k][col] != 0) else { continue };
            a.swap(row, k);
            let inv = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = *x * inv % p;
            }
            for k in 0..a.len() {
                if k != row && a[k][col] != 0 {
                    let f = a[k][col];
                    for c in 0..cols {
                        a[k][c] = (a[k][c] + p - f * a[row][c] % p) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - a[r][free]) % p;
                }
                v
            })
            .collect()
    }
}

pub const KOSZUL_XY_DOC: &str = "\
name koszul_xy
ring Fp(32003)[x, y] order grevlex
degrees 0..2
ranks 1, 2, 1
diff 1:
  [x, y]
diff 2:
  [-y]
  [x]
";

pub const KOSZUL_X_XY_DOC: &str = "\
name koszul_x_xy
ring Fp(32003)[x, y] order grevlex
degrees 0..2
ranks 1, 2, 1
diff 1:
  [x, x*y]
diff 2:
  [-x*y]
  [x]
";
