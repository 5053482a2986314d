//! Matrices over the polynomial ring and their ideals of minors.
//!
//! Minor ideals follow the empty-matrix conventions used throughout the
//! crate: every `s x s` minor with `s <= 0` is `1`, the `0 x 0` matrix has
//! all minors equal to `1`, and for `s >= 1` a matrix with fewer than `s`
//! rows or columns (including an `n x 0` or `0 x n` matrix with `n > 0`) has
//! no nonzero `s x s` minors.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::polyring::{PolyRing, Polynomial};

/// A map `R^source_rank -> R^target_rank`, stored as a row-major
/// `target_rank x source_rank` matrix: column `j` is the image of the `j`-th
/// source basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapOfFree {
    source_rank: usize,
    target_rank: usize,
    entries: Vec<Polynomial>,
}

impl MapOfFree {
    pub fn new(target_rank: usize, source_rank: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != target_rank * source_rank {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {target_rank}x{source_rank} matrix",
                entries.len()
            )));
        }
        Ok(MapOfFree {
            source_rank,
            target_rank,
            entries,
        })
    }

    /// Builds a matrix from rows; `source_rank` is needed for matrices
    /// without rows.
    pub fn from_rows(source_rank: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let target_rank = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != source_rank) {
            return Err(Error::ShapeMismatch(format!(
                "row {} has {} entries, expected {source_rank}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Self::new(target_rank, source_rank, rows.into_iter().flatten().collect())
    }

    pub fn zero(target_rank: usize, source_rank: usize) -> Self {
        MapOfFree {
            source_rank,
            target_rank,
            entries: vec![Polynomial::zero(); target_rank * source_rank],
        }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn rows(&self) -> usize {
        self.target_rank
    }

    pub fn cols(&self) -> usize {
        self.source_rank
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.source_rank + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        self.entries[row * self.source_rank + col] = value;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[Polynomial] {
        &self.entries[row * self.source_rank..(row + 1) * self.source_rank]
    }

    pub fn column(&self, col: usize) -> Vec<Polynomial> {
        (0..self.target_rank).map(|i| self.get(i, col).clone()).collect()
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(target_rank: usize, columns: &[Vec<Polynomial>]) -> Self {
        let mut m = Self::zero(target_rank, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), target_rank, "column length");
            for (i, e) in c.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.source_rank == self.target_rank
    }

    pub fn transpose(&self) -> MapOfFree {
        let mut t = Self::zero(self.source_rank, self.target_rank);
        for i in 0..self.target_rank {
            for j in 0..self.source_rank {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial) -> Polynomial) -> MapOfFree {
        MapOfFree {
            entries: self.entries.iter().map(f).collect(),
            ..*self
        }
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, ring: &PolyRing, other: &MapOfFree) -> Result<MapOfFree> {
        if self.source_rank != other.target_rank {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.target_rank, self.source_rank, other.target_rank, other.source_rank
            )));
        }
        let mut out = Self::zero(self.target_rank, other.source_rank);
        for i in 0..self.target_rank {
            for j in 0..other.source_rank {
                let mut acc = Polynomial::zero();
                for k in 0..self.source_rank {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = ring.add(&acc, &ring.mul(a, b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, ring: &PolyRing, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.source_rank, "vector length");
        (0..self.target_rank)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Polynomial::zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect()
    }

    /// Largest total degree of an entry; `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<u64> {
        self.entries.iter().filter_map(Polynomial::degree).max()
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diagonal(&self, other: &MapOfFree) -> MapOfFree {
        let mut m = Self::zero(
            self.target_rank + other.target_rank,
            self.source_rank + other.source_rank,
        );
        for i in 0..self.target_rank {
            for j in 0..self.source_rank {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.target_rank {
            for j in 0..other.source_rank {
                m.set(self.target_rank + i, self.source_rank + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> MapOfFree {
        let mut m = Self::zero(self.target_rank, self.source_rank);
        for (i, &pi) in row_perm.iter().enumerate() {
            for (j, &pj) in col_perm.iter().enumerate() {
                m.set(i, j, self.get(pi, pj).clone());
            }
        }
        m
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Minors of a fixed set of leading rows, keyed by column bitmask.
type MinorTable = HashMap<u64, Polynomial>;

/// Extends the minor table of rows `rows[..k]` to `rows[..k+1]` by Laplace
/// expansion along the new last row.
fn extend_table(ring: &PolyRing, m: &MapOfFree, prev: &MinorTable, row: usize, k: usize) -> MinorTable {
    let mut next = MinorTable::new();
    for cols in combinations(m.cols(), k + 1) {
        let mask: u64 = cols.iter().fold(0, |acc, c| acc | (1 << c));
        let mut acc = Polynomial::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = m.get(row, c);
            if a.is_zero() {
                continue;
            }
            let sub = if k == 0 {
                ring.one()
            } else {
                match prev.get(&(mask & !(1 << c))) {
                    Some(p) if !p.is_zero() => p.clone(),
                    _ => continue,
                }
            };
            let term = ring.mul(a, &sub);
            acc = if (k + pos) % 2 == 0 {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        next.insert(mask, acc);
    }
    next
}

/// All `s x s` minors for `1 <= s <= min(rows, cols)`, in lexicographic
/// order of (row subset, column subset).
pub fn minors(ring: &PolyRing, m: &MapOfFree, s: usize) -> Vec<Polynomial> {
    assert!(s >= 1 && s <= m.rows().min(m.cols()), "minor size out of range");
    assert!(m.cols() <= 64, "at most 64 columns supported");
    let mut out = Vec::new();
    // depth-first over row subsets so tables for shared row prefixes are reused
    fn rec(
        ring: &PolyRing,
        m: &MapOfFree,
        s: usize,
        next_row: usize,
        depth: usize,
        table: &MinorTable,
        out: &mut Vec<Polynomial>,
    ) {
        for row in next_row..m.rows() {
            if m.rows() - row < s - depth {
                break;
            }
            let t = extend_table(ring, m, table, row, depth);
            if depth + 1 == s {
                let mut keyed: Vec<(Vec<usize>, Polynomial)> = t
                    .into_iter()
                    .map(|(mask, p)| ((0..64).filter(|b| mask >> b & 1 == 1).collect(), p))
                    .collect();
                keyed.sort_by(|a, b| a.0.cmp(&b.0));
                out.extend(keyed.into_iter().map(|(_, p)| p));
            } else {
                rec(ring, m, s, row + 1, depth + 1, &t, out);
            }
        }
    }
    rec(ring, m, s, 0, 0, &MinorTable::new(), &mut out);
    out
}

/// Exact determinant by memoized Laplace expansion; the `0 x 0` matrix has
/// determinant `1`.
pub fn determinant(ring: &PolyRing, m: &MapOfFree) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Ok(ring.one());
    }
    Ok(minors(ring, m, m.rows()).pop().expect("one maximal minor"))
}

/// Fraction-free (Bareiss) elimination. Returns the rank and, for square
/// input, the determinant.
fn bareiss(ring: &PolyRing, m: &MapOfFree) -> (usize, Polynomial) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Polynomial>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut prev = ring.one();
    let mut rank = 0;
    let mut negate = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            negate = !negate;
        }
        let pivot = a[rank][col].clone();
        for i in rank + 1..rows {
            let factor = a[i][col].clone();
            for j in col + 1..cols {
                let num = ring.sub(&ring.mul(&pivot, &a[i][j]), &ring.mul(&factor, &a[rank][j]));
                a[i][j] = ring
                    .div_exact(&num, &prev)
                    .expect("Bareiss quotients are exact");
            }
            a[i][col] = Polynomial::zero();
        }
        prev = pivot;
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        if negate {
            ring.neg(&prev)
        } else {
            prev
        }
    } else {
        Polynomial::zero()
    };
    (rank, det)
}

/// Determinant by fraction-free elimination; suited to single large
/// determinants where minor sharing does not pay off.
pub fn determinant_bareiss(ring: &PolyRing, m: &MapOfFree) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() == 0 {
        return Ok(ring.one());
    }
    Ok(bareiss(ring, m).1)
}

/// Rank over the fraction field of `R`.
pub fn generic_rank(ring: &PolyRing, m: &MapOfFree) -> usize {
    bareiss(ring, m).0
}

/// Monic, deduplicated, nonzero generators.
fn prune_generators(ring: &PolyRing, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = ring.monic(&g);
        if ring.is_unit(&g) {
            return vec![g];
        }
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// `I_s(m)`, the ideal of `s x s` minors, with the empty-matrix conventions.
pub fn minor_ideal(ring: &PolyRing, m: &MapOfFree, s: i64) -> IdealHandle {
    if s <= 0 || (m.rows() == 0 && m.cols() == 0) {
        return IdealHandle::unit(ring);
    }
    let s = s as usize;
    if s > m.rows().min(m.cols()) {
        return IdealHandle::zero(ring);
    }
    IdealHandle::new(ring, prune_generators(ring, minors(ring, m, s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{CoefficientField, MonomialOrder};

    fn ring() -> PolyRing {
        PolyRing::new(CoefficientField::Rationals, ["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    fn mat(r: &PolyRing, cols: usize, rows: &[&[&str]]) -> MapOfFree {
        MapOfFree::from_rows(
            cols,
            rows.iter()
                .map(|row| row.iter().map(|t| r.parse(t).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_examples() {
        let r = ring();
        assert_eq!(determinant(&r, &MapOfFree::zero(0, 0)).unwrap(), r.one());
        assert_eq!(determinant(&r, &MapOfFree::identity(&r, 3)).unwrap(), r.one());
        let m = mat(&r, 2, &[&["x", "y"], &["y", "x"]]);
        assert_eq!(determinant(&r, &m).unwrap(), r.parse("x^2 - y^2").unwrap());
        assert_eq!(determinant_bareiss(&r, &m).unwrap(), r.parse("x^2 - y^2").unwrap());
        assert_eq!(
            determinant(&r, &MapOfFree::zero(1, 2)),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn minor_ideal_conventions() {
        let r = ring();
        let row = mat(&r, 2, &[&["x", "y"]]);
        assert!(minor_ideal(&r, &row, 0).is_unit());
        assert!(minor_ideal(&r, &row, -3).is_unit());
        let i1 = minor_ideal(&r, &row, 1);
        assert_eq!(i1.generators(), &[r.var(0), r.var(1)]);
        assert!(minor_ideal(&r, &row, 2).is_zero());
        assert!(minor_ideal(&r, &MapOfFree::zero(0, 0), 3).is_unit());
        // n x 0 and 0 x n are not the empty matrix
        assert!(minor_ideal(&r, &MapOfFree::zero(2, 0), 1).is_zero());
        assert!(minor_ideal(&r, &MapOfFree::zero(0, 2), 1).is_zero());
        assert!(minor_ideal(&r, &MapOfFree::zero(2, 0), 0).is_unit());
    }

    #[test]
    fn minors_are_deduplicated() {
        let r = ring();
        let m = mat(&r, 3, &[&["x", "2*x", "0"]]);
        assert_eq!(minor_ideal(&r, &m, 1).generators(), &[r.var(0)]);
    }

    #[test]
    fn generic_rank_examples() {
        let r = ring();
        assert_eq!(generic_rank(&r, &MapOfFree::zero(3, 2)), 0);
        assert_eq!(generic_rank(&r, &MapOfFree::identity(&r, 4)), 4);
        assert_eq!(generic_rank(&r, &mat(&r, 2, &[&["x", "y"]])), 1);
        let singular = mat(&r, 2, &[&["x", "y"], &["x^2", "x*y"]]);
        assert_eq!(generic_rank(&r, &singular), 1);
    }

    #[test]
    fn laplace_and_bareiss_agree_on_3x3() {
        let r = ring();
        let m = mat(
            &r,
            3,
            &[&["0", "x", "y + 1"], &["x*y", "0", "2"], &["y", "x - y", "x^2"]],
        );
        assert_eq!(determinant(&r, &m).unwrap(), determinant_bareiss(&r, &m).unwrap());
    }

    #[test]
    fn all_two_by_two_minors() {
        let r = ring();
        let m = mat(&r, 3, &[&["x", "y", "0"], &["0", "x", "y"]]);
        let ms = minors(&r, &m, 2);
        assert_eq!(ms, vec![
            r.parse("x^2").unwrap(),
            r.parse("x*y").unwrap(),
            r.parse("y^2").unwrap()
        ]);
    }
}
