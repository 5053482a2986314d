//! Finite free complexes `0 -> F_b -> ... -> F_a -> 0` and their calculus.

use std::borrow::Cow;
use std::collections::{BTreeMap, VecDeque};
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::matpoly::MapOfFree;
use crate::polyring::{PolyRing, Polynomial};

/// A bounded complex of finite free modules with lower grading.
///
/// `ranks[i]` is the rank of `F_{low + i}` and `diffs[i]` is the
/// differential `∂_{low + i + 1}: F_{low + i + 1} -> F_{low + i}`. Outside
/// `[low, high]` every module is zero. The empty complex has no degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFreeComplex {
    ring: PolyRing,
    low: i64,
    ranks: Vec<usize>,
    diffs: Vec<MapOfFree>,
}

/// Outcome of [`validate_complex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Every differential entry has zero constant term.
    pub minimal: bool,
    /// First entry with a nonzero constant term, as `(degree, row, col)`.
    pub first_unit_entry: Option<(i64, usize, usize)>,
}

fn check_shapes(ranks: &[usize], diffs: &[MapOfFree], low: i64) -> Result<()> {
    let expected = ranks.len().saturating_sub(1);
    if diffs.len() != expected {
        return Err(Error::ShapeMismatch(format!(
            "{} differentials for {} modules",
            diffs.len(),
            ranks.len()
        )));
    }
    for (i, d) in diffs.iter().enumerate() {
        if d.source_rank() != ranks[i + 1] || d.target_rank() != ranks[i] {
            return Err(Error::ShapeMismatch(format!(
                "∂_{} is {}x{}, expected {}x{}",
                low + i as i64 + 1,
                d.target_rank(),
                d.source_rank(),
                ranks[i],
                ranks[i + 1]
            )));
        }
    }
    Ok(())
}

fn check_entries(ring: &PolyRing, diffs: &[MapOfFree]) -> Result<()> {
    diffs
        .iter()
        .flat_map(|d| d.entries())
        .try_for_each(|e| ring.check(e))
}

fn check_compositions(ring: &PolyRing, low: i64, diffs: &[MapOfFree]) -> Result<()> {
    for (i, pair) in diffs.windows(2).enumerate() {
        let product = pair[0].compose(ring, &pair[1])?;
        for r in 0..product.rows() {
            for c in 0..product.cols() {
                if !product.get(r, c).is_zero() {
                    return Err(Error::NonZeroComposition {
                        degree: low + i as i64 + 2,
                        row: r,
                        col: c,
                    });
                }
            }
        }
    }
    Ok(())
}

impl FiniteFreeComplex {
    /// Builds and validates a complex concentrated in degrees
    /// `low ..= low + ranks.len() - 1`.
    pub fn new(ring: &PolyRing, low: i64, ranks: Vec<usize>, diffs: Vec<MapOfFree>) -> Result<Self> {
        check_shapes(&ranks, &diffs, low)?;
        check_entries(ring, &diffs)?;
        check_compositions(ring, low, &diffs)?;
        Ok(FiniteFreeComplex {
            ring: ring.clone(),
            low,
            ranks,
            diffs,
        })
    }

    pub fn empty(ring: &PolyRing) -> Self {
        FiniteFreeComplex {
            ring: ring.clone(),
            low: 0,
            ranks: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// The complex `0 -> R^rank -> 0` in the given degree.
    pub fn free_module(ring: &PolyRing, degree: i64, rank: usize) -> Self {
        FiniteFreeComplex {
            ring: ring.clone(),
            low: degree,
            ranks: vec![rank],
            diffs: Vec::new(),
        }
    }

    /// The two-term complex `0 -> R^cols --m--> R^rows -> 0` with target in
    /// degree `degree`.
    pub fn two_term(ring: &PolyRing, degree: i64, m: MapOfFree) -> Result<Self> {
        Self::new(ring, degree, vec![m.rows(), m.cols()], vec![m])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Lowest degree `a`; meaningless for the empty complex.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest degree `b`; `low - 1` for the empty complex.
    pub fn high(&self) -> i64 {
        self.low + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> RangeInclusive<i64> {
        self.low..=self.high()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of `F_n`; zero outside `[a, b]`.
    pub fn rank(&self, n: i64) -> usize {
        if n < self.low || n > self.high() {
            0
        } else {
            self.ranks[(n - self.low) as usize]
        }
    }

    /// The stored differentials `∂_{a+1}, ..., ∂_b`.
    pub fn differentials(&self) -> &[MapOfFree] {
        &self.diffs
    }

    /// `∂_n: F_n -> F_{n-1}` for any `n`; outside `[a+1, b]` this is the
    /// zero map between the (possibly zero) neighbouring modules.
    pub fn differential(&self, n: i64) -> Cow<'_, MapOfFree> {
        if n > self.low && n <= self.high() {
            Cow::Borrowed(&self.diffs[(n - self.low - 1) as usize])
        } else {
            Cow::Owned(MapOfFree::zero(self.rank(n - 1), self.rank(n)))
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Same complex over the same variables and field with another order.
    pub fn with_order(&self, order: crate::polyring::MonomialOrder) -> Self {
        let ring = self.ring.with_order(order);
        let diffs = self
            .diffs
            .iter()
            .map(|d| d.map_entries(|e| ring.convert(e)))
            .collect();
        FiniteFreeComplex {
            ring,
            low: self.low,
            ranks: self.ranks.clone(),
            diffs,
        }
    }

    /// Drops zero modules at either end.
    pub fn trimmed(&self) -> Self {
        let first = self.ranks.iter().position(|&r| r > 0);
        let Some(first) = first else {
            return Self::empty(&self.ring);
        };
        let last = self.ranks.iter().rposition(|&r| r > 0).expect("nonzero rank");
        FiniteFreeComplex {
            ring: self.ring.clone(),
            low: self.low + first as i64,
            ranks: self.ranks[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }
}

/// Re-checks `∂∂ = 0` and shapes, and reports minimality.
pub fn validate_complex(c: &FiniteFreeComplex) -> Result<ValidationReport> {
    check_shapes(&c.ranks, &c.diffs, c.low)?;
    check_entries(&c.ring, &c.diffs)?;
    check_compositions(&c.ring, c.low, &c.diffs)?;
    let mut first_unit_entry = None;
    'outer: for (i, d) in c.diffs.iter().enumerate() {
        for r in 0..d.rows() {
            for col in 0..d.cols() {
                if d.get(r, col).has_constant_term() {
                    first_unit_entry = Some((c.low + i as i64 + 1, r, col));
                    break 'outer;
                }
            }
        }
    }
    Ok(ValidationReport {
        minimal: first_unit_entry.is_none(),
        first_unit_entry,
    })
}

/// The alternating rank sums `s_n` and expected ranks `r_n` of a complex.
///
/// `s_n = Σ_{i ≤ n} (-1)^{n-i} f_i` and `r_n = Σ_{i ≥ n} (-1)^{i-n} f_i`,
/// so `f_n = s_n + s_{n-1} = r_n + r_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    low: i64,
    ranks: Vec<i64>,
    /// `s_n` for `n ∈ [a-1, b+1]`.
    pub s: BTreeMap<i64, i64>,
    /// `r_n` for `n ∈ [a, b+1]`.
    pub r: BTreeMap<i64, i64>,
}

impl RankProfile {
    fn rank(&self, n: i64) -> i64 {
        if n < self.low || n >= self.low + self.ranks.len() as i64 {
            0
        } else {
            self.ranks[(n - self.low) as usize]
        }
    }

    fn high(&self) -> i64 {
        self.low + self.ranks.len() as i64 - 1
    }

    /// `s_n` for any integer `n`.
    pub fn s(&self, n: i64) -> i64 {
        let top = n.min(self.high());
        let partial: i64 = (self.low..=top)
            .map(|i| if (top - i) % 2 == 0 { self.rank(i) } else { -self.rank(i) })
            .sum();
        if (n - top) % 2 == 0 {
            partial
        } else {
            -partial
        }
    }

    /// `r_n` for any integer `n`.
    pub fn r(&self, n: i64) -> i64 {
        let bottom = n.max(self.low);
        let partial: i64 = (bottom..=self.high())
            .map(|i| if (i - bottom) % 2 == 0 { self.rank(i) } else { -self.rank(i) })
            .sum();
        if (bottom - n) % 2 == 0 {
            partial
        } else {
            -partial
        }
    }
}

pub fn alternating_sums(c: &FiniteFreeComplex) -> RankProfile {
    let mut profile = RankProfile {
        low: c.low,
        ranks: c.ranks.iter().map(|&r| r as i64).collect(),
        s: BTreeMap::new(),
        r: BTreeMap::new(),
    };
    if c.is_empty() {
        return profile;
    }
    let (a, b) = (c.low(), c.high());
    profile.s = (a - 1..=b + 1).map(|n| (n, profile.s(n))).collect();
    profile.r = (a..=b + 1).map(|n| (n, profile.r(n))).collect();
    profile
}

/// `Hom_R(F, R)`: concentrated in `[-b, -a]` with `∂^G_n` the transpose of
/// `∂^F_{1-n}`, without extra signs.
pub fn dual_complex(c: &FiniteFreeComplex) -> FiniteFreeComplex {
    if c.is_empty() {
        return c.clone();
    }
    let ranks: Vec<usize> = c.ranks.iter().rev().copied().collect();
    let diffs: Vec<MapOfFree> = c.diffs.iter().rev().map(MapOfFree::transpose).collect();
    FiniteFreeComplex {
        ring: c.ring.clone(),
        low: -c.high(),
        ranks,
        diffs,
    }
}

/// `Σ^k F`: `(Σ^k F)_n = F_{n-k}`, differentials multiplied by `(-1)^k`.
pub fn shift(c: &FiniteFreeComplex, k: i64) -> FiniteFreeComplex {
    let ring = &c.ring;
    let diffs = if k % 2 == 0 {
        c.diffs.clone()
    } else {
        c.diffs.iter().map(|d| d.map_entries(|e| ring.neg(e))).collect()
    };
    FiniteFreeComplex {
        ring: ring.clone(),
        low: c.low + k,
        ranks: c.ranks.clone(),
        diffs,
    }
}

/// Degreewise block-diagonal sum.
pub fn direct_sum(c: &FiniteFreeComplex, d: &FiniteFreeComplex) -> Result<FiniteFreeComplex> {
    if c.ring != d.ring {
        return Err(Error::RingMismatch);
    }
    if c.is_empty() {
        return Ok(d.clone());
    }
    if d.is_empty() {
        return Ok(c.clone());
    }
    let low = c.low.min(d.low);
    let high = c.high().max(d.high());
    let ranks = (low..=high).map(|n| c.rank(n) + d.rank(n)).collect();
    let diffs = (low + 1..=high)
        .map(|n| c.differential(n).block_diagonal(&d.differential(n)))
        .collect();
    Ok(FiniteFreeComplex {
        ring: c.ring.clone(),
        low,
        ranks,
        diffs,
    })
}

fn subsets_of_size(c: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, c: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..c {
            cur.push(i);
            rec(i + 1, c, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, c, n, &mut Vec::new(), &mut out);
    out
}

/// The Koszul complex on `f_1, ..., f_c` in degrees `[0, c]`.
///
/// Basis elements of `F_n` are the `n`-subsets of `{1..c}` in lexicographic
/// order, and `∂ e_S = Σ_{j ∈ S} (-1)^{pos(j)} f_j e_{S \ j}` where `pos(j)`
/// is the 0-based position of `j` in `S`.
pub fn koszul_complex(ring: &PolyRing, f: &[Polynomial]) -> Result<FiniteFreeComplex> {
    if f.is_empty() {
        return Err(Error::EmptySequence);
    }
    for g in f {
        ring.check(g)?;
    }
    let c = f.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=c).map(|n| subsets_of_size(c, n)).collect();
    let ranks = bases.iter().map(Vec::len).collect();
    let mut diffs = Vec::with_capacity(c);
    for n in 1..=c {
        let (src, tgt) = (&bases[n], &bases[n - 1]);
        let mut m = MapOfFree::zero(tgt.len(), src.len());
        for (col, s) in src.iter().enumerate() {
            for (pos, &j) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|&x| x != j).collect();
                let row = tgt.iter().position(|t| *t == rest).expect("face of a subset");
                let entry = if pos % 2 == 0 { f[j].clone() } else { ring.neg(&f[j]) };
                m.set(row, col, entry);
            }
        }
        diffs.push(m);
    }
    FiniteFreeComplex::new(ring, 0, ranks, diffs)
}

/// Whether the complex admits a grading of its basis elements that makes
/// every differential entry homogeneous of the matching degree.
pub fn is_homogeneous(c: &FiniteFreeComplex) -> bool {
    // nodes: (degree offset index, basis index); edges carry degree differences
    let offsets: Vec<usize> = c
        .ranks
        .iter()
        .scan(0, |acc, &r| {
            let o = *acc;
            *acc += r;
            Some(o)
        })
        .collect();
    let total = c.total_rank();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); total];
    for (i, d) in c.diffs.iter().enumerate() {
        for row in 0..d.rows() {
            for col in 0..d.cols() {
                let e = d.get(row, col);
                if e.is_zero() {
                    continue;
                }
                if !e.is_homogeneous() {
                    return false;
                }
                let deg = e.degree().expect("nonzero") as i64;
                // weight(source) = weight(target) + deg
                let src = offsets[i + 1] + col;
                let tgt = offsets[i] + row;
                adj[tgt].push((src, deg));
                adj[src].push((tgt, -deg));
            }
        }
    }
    let mut weight: Vec<Option<i64>> = vec![None; total];
    for start in 0..total {
        if weight[start].is_some() {
            continue;
        }
        weight[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let wu = weight[u].expect("visited");
            for &(v, delta) in &adj[u] {
                match weight[v] {
                    None => {
                        weight[v] = Some(wu + delta);
                        queue.push_back(v);
                    }
                    Some(wv) if wv != wu + delta => return false,
                    _ => {}
                }
            }
        }
    }
    true
}
