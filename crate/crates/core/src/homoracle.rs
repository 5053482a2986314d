//! Homology of finite free complexes, computed independently of the minor
//! formulas in [`crate::dimform`].
//!
//! Submodules of `R^r` are handled with Gröbner bases for the
//! position-over-term order: positions are compared first (position 0 is the
//! largest), then monomials in the ring's order. Kernels come from the
//! classical augmentation trick: a Gröbner basis of the vectors
//! `(m e_j, e_j)` whose elements lead in the second block is a Gröbner basis
//! of the syzygies of the columns of `m`.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::Serialize;

use crate::complexes::{dual_complex, is_homogeneous, validate_complex, FiniteFreeComplex};
use crate::error::{Error, Result};
use crate::groebner::{Budget, Deadline};
use crate::krull::{try_dim_quotient, ExtendedDim, NegInfinity};
use crate::matpoly::{minor_ideal, MapOfFree};
use crate::polyring::{Monomial, PolyRing, Polynomial, Scalar};

/// An element of a free module `R^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModuleVector {
    pub components: Vec<Polynomial>,
}

impl FreeModuleVector {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FreeModuleVector { components }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ModTerm {
    pos: usize,
    mon: Monomial,
    coef: Scalar,
}

/// Terms strictly descending in position-over-term order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModVec(Vec<ModTerm>);

impl ModVec {
    fn lead(&self) -> Option<&ModTerm> {
        self.0.first()
    }
}

struct Engine<'a> {
    ring: &'a PolyRing,
}

impl<'a> Engine<'a> {
    fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.ring.cmp_monomials(a.1, b.1))
    }

    fn from_components(&self, comps: &[Polynomial]) -> ModVec {
        let mut terms: Vec<ModTerm> = comps
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| ModTerm {
                    pos,
                    mon: m.clone(),
                    coef: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| self.cmp((b.pos, &b.mon), (a.pos, &a.mon)));
        ModVec(terms)
    }

    fn to_components(&self, v: &ModVec, rank: usize, offset: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &v.0 {
            if t.pos >= offset && t.pos < offset + rank {
                buckets[t.pos - offset].push((t.mon.clone(), t.coef.clone()));
            }
        }
        buckets
            .into_iter()
            .map(|b| self.ring.from_terms(b).expect("ring arity"))
            .collect()
    }

    fn monic(&self, v: ModVec) -> ModVec {
        let k = self.ring.field();
        match v.lead() {
            Some(t) if !k.is_one(&t.coef) => {
                let inv = k.inv(&t.coef);
                ModVec(
                    v.0.into_iter()
                        .map(|t| ModTerm {
                            coef: k.mul(&t.coef, &inv),
                            ..t
                        })
                        .collect(),
                )
            }
            _ => v,
        }
    }

    /// `work` ascending, its last term cancelled by `c * m * lead(g)`.
    fn subtract_ascending(&self, mut work: Vec<ModTerm>, g: &ModVec, m: &Monomial, c: &Scalar) -> Vec<ModTerm> {
        let k = self.ring.field();
        work.pop();
        let mut out = Vec::with_capacity(work.len() + g.0.len());
        let mut gi = g.0[1..].iter().rev().map(|t| ModTerm {
            pos: t.pos,
            mon: t.mon.mul(m),
            coef: k.neg(&k.mul(&t.coef, c)),
        });
        let mut wi = work.into_iter();
        let (mut nw, mut ng) = (wi.next(), gi.next());
        loop {
            match (nw.take(), ng.take()) {
                (None, None) => break,
                (Some(w), None) => {
                    out.push(w);
                    nw = wi.next();
                }
                (None, Some(t)) => {
                    out.push(t);
                    ng = gi.next();
                }
                (Some(w), Some(t)) => match self.cmp((w.pos, &w.mon), (t.pos, &t.mon)) {
                    Ordering::Less => {
                        out.push(w);
                        nw = wi.next();
                        ng = Some(t);
                    }
                    Ordering::Greater => {
                        out.push(t);
                        ng = gi.next();
                        nw = Some(w);
                    }
                    Ordering::Equal => {
                        let sum = k.add(&w.coef, &t.coef);
                        if !k.is_zero(&sum) {
                            out.push(ModTerm { coef: sum, ..w });
                        }
                        nw = wi.next();
                        ng = gi.next();
                    }
                },
            }
        }
        out
    }

    fn reducer<'b>(&self, basis: &'b [ModVec], t: &ModTerm) -> Option<&'b ModVec> {
        basis.iter().find(|g| {
            g.lead()
                .is_some_and(|l| l.pos == t.pos && l.mon.divides(&t.mon))
        })
    }

    fn reduce(&self, v: &ModVec, basis: &[ModVec], full: bool) -> ModVec {
        let k = self.ring.field();
        let mut work: Vec<ModTerm> = v.0.iter().rev().cloned().collect();
        let mut rem = Vec::new();
        while let Some(t) = work.last() {
            match self.reducer(basis, t) {
                Some(g) => {
                    let l = g.lead().expect("nonzero");
                    let m = l.mon.quotient_of(&t.mon).expect("divisible");
                    let c = k.div(&t.coef, &l.coef);
                    work = self.subtract_ascending(work, g, &m, &c);
                }
                None if full => rem.push(work.pop().expect("nonempty")),
                None => break,
            }
        }
        // rem is descending, work ascending
        rem.extend(work.into_iter().rev());
        ModVec(rem)
    }

    fn spoly(&self, f: &ModVec, g: &ModVec) -> ModVec {
        let (lf, lg) = (f.lead().unwrap(), g.lead().unwrap());
        let l = lf.mon.lcm(&lg.mon);
        let k = self.ring.field();
        let mf = lf.mon.quotient_of(&l).unwrap();
        let mg = lg.mon.quotient_of(&l).unwrap();
        let scaled = |v: &ModVec, m: &Monomial, c: &Scalar| -> Vec<ModTerm> {
            v.0.iter()
                .map(|t| ModTerm {
                    pos: t.pos,
                    mon: t.mon.mul(m),
                    coef: k.mul(&t.coef, c),
                })
                .collect()
        };
        let a = scaled(f, &mf, &k.inv(&lf.coef));
        let b = scaled(g, &mg, &k.neg(&k.inv(&lg.coef)));
        self.add_sorted(a, b)
    }

    fn add_sorted(&self, a: Vec<ModTerm>, b: Vec<ModTerm>) -> ModVec {
        let k = self.ring.field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut ai, mut bi) = (a.into_iter().peekable(), b.into_iter().peekable());
        loop {
            let ord = match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.cmp((x.pos, &x.mon), (y.pos, &y.mon)),
            };
            match ord {
                Ordering::Greater => out.push(ai.next().unwrap()),
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (x, y) = (ai.next().unwrap(), bi.next().unwrap());
                    let s = k.add(&x.coef, &y.coef);
                    if !k.is_zero(&s) {
                        out.push(ModTerm { coef: s, ..x });
                    }
                }
            }
        }
        ModVec(out)
    }

    fn groebner(&self, gens: Vec<ModVec>, deadline: &Deadline) -> Result<Vec<ModVec>> {
        let mut basis: Vec<ModVec> = Vec::new();
        for g in gens {
            let r = self.reduce(&g, &basis, true);
            if r.lead().is_some() {
                basis.push(self.monic(r));
            }
        }
        struct Pair {
            i: usize,
            j: usize,
            pos: usize,
            lcm: Monomial,
        }
        let mut pairs: Vec<Pair> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let add_pairs = |basis: &[ModVec], j: usize, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>| {
            let lj = basis[j].lead().unwrap();
            for (i, g) in basis[..j].iter().enumerate() {
                let li = g.lead().unwrap();
                if li.pos == lj.pos {
                    pairs.push(Pair {
                        i,
                        j,
                        pos: lj.pos,
                        lcm: li.mon.lcm(&lj.mon),
                    });
                    pending.insert((i, j));
                }
            }
        };
        for j in 0..basis.len() {
            add_pairs(&basis, j, &mut pairs, &mut pending);
        }
        while !pairs.is_empty() {
            deadline.check()?;
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (p, q) = (&pairs[a], &pairs[b]);
                    p.lcm
                        .degree()
                        .cmp(&q.lcm.degree())
                        .then_with(|| self.cmp((p.pos, &p.lcm), (q.pos, &q.lcm)))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                })
                .unwrap();
            let Pair { i, j, pos, lcm } = pairs.swap_remove(best);
            pending.remove(&(i, j));
            let chain = (0..basis.len()).any(|k| {
                let lk = basis[k].lead().unwrap();
                k != i
                    && k != j
                    && lk.pos == pos
                    && lk.mon.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.spoly(&basis[i], &basis[j]);
            let r = self.reduce(&s, &basis, false);
            if r.lead().is_none() {
                continue;
            }
            basis.push(self.monic(r));
            add_pairs(&basis, basis.len() - 1, &mut pairs, &mut pending);
        }
        Ok(self.reduced(basis))
    }

    fn reduced(&self, basis: Vec<ModVec>) -> Vec<ModVec> {
        let lead = |v: &ModVec| {
            let l = v.lead().unwrap();
            (l.pos, l.mon.clone())
        };
        let mut minimal: Vec<ModVec> = Vec::new();
        for (idx, g) in basis.iter().enumerate() {
            let (p, m) = lead(g);
            let redundant = basis.iter().enumerate().any(|(o, h)| {
                let (hp, hm) = lead(h);
                o != idx && hp == p && hm.divides(&m) && (hm != m || o < idx)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut out: Vec<ModVec> = (0..minimal.len())
            .map(|idx| {
                let g = &minimal[idx];
                let others: Vec<ModVec> = minimal
                    .iter()
                    .enumerate()
                    .filter(|(o, _)| *o != idx)
                    .map(|(_, h)| h.clone())
                    .collect();
                let head = g.0[0].clone();
                let tail = self.reduce(&ModVec(g.0[1..].to_vec()), &others, true);
                let mut terms = vec![head];
                terms.extend(tail.0);
                ModVec(terms)
            })
            .collect();
        out.sort_by(|a, b| {
            let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
            self.cmp((lb.pos, &lb.mon), (la.pos, &la.mon))
        });
        out
    }
}

/// A Gröbner basis of a submodule of `R^rank`.
#[derive(Clone, Debug)]
pub struct ModuleGroebnerBasis {
    ring: PolyRing,
    rank: usize,
    elements: Vec<ModVec>,
}

impl ModuleGroebnerBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeModuleVector> {
        let e = Engine { ring: &self.ring };
        self.elements
            .iter()
            .map(|v| FreeModuleVector::new(e.to_components(v, self.rank, 0)))
            .collect()
    }

    /// Remainder of `v` modulo the submodule.
    pub fn reduce(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let e = Engine { ring: &self.ring };
        let r = e.reduce(&e.from_components(v), &self.elements, true);
        e.to_components(&r, self.rank, 0)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.reduce(v).iter().all(Polynomial::is_zero)
    }
}

/// Reduced Gröbner basis (position-over-term) of the submodule of `R^rank`
/// generated by `gens`.
pub fn module_groebner_basis(
    ring: &PolyRing,
    rank: usize,
    gens: &[Vec<Polynomial>],
    budget: Budget,
) -> Result<ModuleGroebnerBasis> {
    let e = Engine { ring };
    let deadline = budget.start();
    let vecs = gens.iter().map(|g| e.from_components(g)).collect();
    Ok(ModuleGroebnerBasis {
        ring: ring.clone(),
        rank,
        elements: e.groebner(vecs, &deadline)?,
    })
}

/// Generators of `ker m` as a submodule of the source module.
pub fn kernel_gens(ring: &PolyRing, m: &MapOfFree) -> Vec<FreeModuleVector> {
    try_kernel_gens(ring, m, Budget::unlimited()).expect("unlimited budget")
}

pub fn try_kernel_gens(ring: &PolyRing, m: &MapOfFree, budget: Budget) -> Result<Vec<FreeModuleVector>> {
    let (q, p) = (m.rows(), m.cols());
    let augmented: Vec<Vec<Polynomial>> = (0..p)
        .map(|j| {
            let mut v = m.column(j);
            v.extend((0..p).map(|i| if i == j { ring.one() } else { ring.zero() }));
            v
        })
        .collect();
    let e = Engine { ring };
    let deadline = budget.start();
    let gb = e.groebner(augmented.iter().map(|v| e.from_components(v)).collect(), &deadline)?;
    Ok(gb
        .iter()
        .filter(|g| g.lead().is_some_and(|l| l.pos >= q))
        .map(|g| FreeModuleVector::new(e.to_components(g, p, q)))
        .collect())
}

/// Expresses each target as a combination of `gens` and returns the
/// syzygies among `gens`.
fn lifts_and_syzygies(
    ring: &PolyRing,
    rank: usize,
    gens: &[Vec<Polynomial>],
    targets: &[Vec<Polynomial>],
    budget: Budget,
) -> Result<(Vec<Vec<Polynomial>>, Vec<Vec<Polynomial>>)> {
    let t = gens.len();
    let e = Engine { ring };
    let augmented: Vec<ModVec> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = g.clone();
            v.extend((0..t).map(|k| if k == i { ring.one() } else { ring.zero() }));
            e.from_components(&v)
        })
        .collect();
    let deadline = budget.start();
    let gb = e.groebner(augmented, &deadline)?;
    let syzygies = gb
        .iter()
        .filter(|g| g.lead().is_some_and(|l| l.pos >= rank))
        .map(|g| e.to_components(g, t, rank))
        .collect();
    let mut lifts = Vec::with_capacity(targets.len());
    for v in targets {
        let mut padded = v.clone();
        padded.resize(rank + t, ring.zero());
        let r = e.reduce(&e.from_components(&padded), &gb, true);
        if r.0.iter().any(|term| term.pos < rank) {
            return Err(Error::Internal("boundary does not lie in the cycles".into()));
        }
        let lift: Vec<Polynomial> = e.to_components(&r, t, rank).iter().map(|p| ring.neg(p)).collect();
        // Σ lift_i gens_i must reproduce v
        let columns: Vec<Vec<Polynomial>> = gens.to_vec();
        let recombined = MapOfFree::from_columns(rank, &columns).apply(ring, &lift);
        if recombined != *v {
            return Err(Error::Internal("lift does not recombine to its target".into()));
        }
        lifts.push(lift);
    }
    Ok((lifts, syzygies))
}

/// A finitely presented module `R^generator_count / im(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relations: MapOfFree,
}

impl Presentation {
    pub fn new(generator_count: usize, relations: MapOfFree) -> Result<Self> {
        if relations.target_rank() != generator_count {
            return Err(Error::ShapeMismatch(format!(
                "relation matrix has {} rows for {generator_count} generators",
                relations.target_rank()
            )));
        }
        Ok(Presentation {
            generator_count,
            relations,
        })
    }

    /// Eliminates generators that a relation with a unit entry expresses in
    /// terms of the others, and drops zero relations. The result presents an
    /// isomorphic module.
    pub fn pruned(&self, ring: &PolyRing) -> Presentation {
        let k = ring.field();
        let mut rows: Vec<Vec<Polynomial>> = (0..self.relations.rows())
            .map(|i| self.relations.row(i).to_vec())
            .collect();
        let mut ncols = self.relations.cols();
        loop {
            let pivot = rows.iter().enumerate().find_map(|(i, row)| {
                row.iter()
                    .position(|e| !e.is_zero() && e.is_constant())
                    .map(|j| (i, j))
            });
            let Some((pi, pj)) = pivot else { break };
            let unit = rows[pi][pj].leading().expect("nonzero").1.clone();
            let inv = k.inv(&unit);
            for col in 0..ncols {
                if col == pj || rows[pi][col].is_zero() {
                    continue;
                }
                let factor = ring.scale(&rows[pi][col], &inv);
                for row in rows.iter_mut() {
                    if !row[pj].is_zero() {
                        row[col] = ring.sub(&row[col], &ring.mul(&factor, &row[pj]));
                    }
                }
            }
            rows.remove(pi);
            for row in rows.iter_mut() {
                row.remove(pj);
            }
            ncols -= 1;
        }
        let keep: Vec<usize> = (0..ncols)
            .filter(|&j| rows.iter().any(|r| !r[j].is_zero()))
            .collect();
        let rows: Vec<Vec<Polynomial>> = rows
            .into_iter()
            .map(|r| keep.iter().map(|&j| r[j].clone()).collect())
            .collect();
        let generator_count = rows.len();
        Presentation {
            generator_count,
            relations: MapOfFree::from_rows(keep.len(), rows).expect("rectangular"),
        }
    }
}

/// `H_n = ker ∂_n / im ∂_{n+1}` presented on the kernel generators.
pub fn homology_presentation(c: &FiniteFreeComplex, n: i64) -> Result<Presentation> {
    homology_presentation_with(c, n, Budget::unlimited())
}

pub fn homology_presentation_with(c: &FiniteFreeComplex, n: i64, budget: Budget) -> Result<Presentation> {
    let ring = c.ring();
    if n < c.low() || n > c.high() {
        return Err(Error::ShapeMismatch(format!(
            "degree {n} outside [{}, {}]",
            c.low(),
            c.high()
        )));
    }
    let rank = c.rank(n);
    let incoming = c.differential(n + 1);
    let boundaries: Vec<Vec<Polynomial>> = (0..incoming.cols()).map(|j| incoming.column(j)).collect();
    if n == c.low() {
        // every element of F_a is a cycle
        return Presentation::new(rank, MapOfFree::from_columns(rank, &boundaries));
    }
    let cycles: Vec<Vec<Polynomial>> = try_kernel_gens(ring, &c.differential(n), budget)?
        .into_iter()
        .map(|v| v.components)
        .collect();
    let t = cycles.len();
    if t == 0 {
        return Presentation::new(0, MapOfFree::zero(0, 0));
    }
    let (lifts, syzygies) = lifts_and_syzygies(ring, rank, &cycles, &boundaries, budget)?;
    let mut columns = lifts;
    columns.extend(syzygies);
    Presentation::new(t, MapOfFree::from_columns(t, &columns))
}

/// `dim M = dim R/Fitt_0(M)`; the zero module has dimension `-inf`.
pub fn dim_module(ring: &PolyRing, p: &Presentation) -> ExtendedDim {
    try_dim_module(ring, p, Budget::unlimited()).expect("unlimited budget")
}

pub fn try_dim_module(ring: &PolyRing, p: &Presentation, budget: Budget) -> Result<ExtendedDim> {
    let p = p.pruned(ring);
    if p.generator_count == 0 {
        return Ok(NegInfinity);
    }
    let fitting = minor_ideal(ring, &p.relations, p.generator_count as i64);
    try_dim_quotient(&fitting, budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDegree {
    pub degree: i64,
    pub presentation: Presentation,
    pub dim: ExtendedDim,
}

/// Homology modules of a complex with their dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub degrees: Vec<HomologyDegree>,
}

impl HomologyTable {
    fn nonzero(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees
            .iter()
            .filter(|h| h.dim != NegInfinity)
            .map(|h| h.degree)
    }

    /// Lowest degree with nonzero homology; `+inf` if there is none.
    pub fn inf(&self) -> ExtendedDim {
        ExtendedDim::inf(self.nonzero().map(ExtendedDim::Finite))
    }

    /// Highest degree with nonzero homology; `-inf` if there is none.
    pub fn sup(&self) -> ExtendedDim {
        ExtendedDim::sup(self.nonzero().map(ExtendedDim::Finite))
    }

    pub fn is_exact(&self) -> bool {
        self.nonzero().next().is_none()
    }

    /// `sup { dim H_n - n }`.
    pub fn dimension(&self) -> ExtendedDim {
        ExtendedDim::sup(self.degrees.iter().map(|h| h.dim - h.degree))
    }

    /// Whether `H_n = 0` for every `n` above the bottom degree `low`.
    pub fn vanishes_above(&self, low: i64) -> bool {
        self.nonzero().all(|n| n <= low)
    }

    /// `proj.dim Hom(F, R) = -inf H(F)`.
    pub fn dual_proj_dim(&self) -> ExtendedDim {
        -self.inf()
    }

    pub fn get(&self, degree: i64) -> Option<&HomologyDegree> {
        self.degrees.iter().find(|h| h.degree == degree)
    }
}

pub fn homology_table(c: &FiniteFreeComplex) -> Result<HomologyTable> {
    homology_table_with(c, Budget::unlimited())
}

pub fn homology_table_with(c: &FiniteFreeComplex, budget: Budget) -> Result<HomologyTable> {
    validate_complex(c)?;
    let ring = c.ring();
    let degrees = c
        .degrees()
        .map(|n| {
            let presentation = homology_presentation_with(c, n, budget)?;
            let dim = try_dim_module(ring, &presentation, budget)?;
            Ok(HomologyDegree {
                degree: n,
                presentation,
                dim,
            })
        })
        .collect::<Result<_>>()?;
    Ok(HomologyTable { degrees })
}

/// `dim_R F = sup { dim H_n(F) - n }`, with the homology it was computed from.
pub fn dim_via_homology(c: &FiniteFreeComplex) -> Result<(ExtendedDim, HomologyTable)> {
    dim_via_homology_with(c, Budget::unlimited())
}

pub fn dim_via_homology_with(c: &FiniteFreeComplex, budget: Budget) -> Result<(ExtendedDim, HomologyTable)> {
    let table = homology_table_with(c, budget)?;
    Ok((table.dimension(), table))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProjDim {
    /// `-inf H(Hom_R(F, R))`.
    pub value: ExtendedDim,
    /// The complex is graded and minimal, so `value` is the projective
    /// dimension of `F` at the irrelevant ideal. Otherwise it is only the
    /// raw homological quantity.
    pub certified: bool,
}

/// `proj.dim F = -inf H(Hom_R(F, R))`.
pub fn proj_dim(c: &FiniteFreeComplex) -> Result<ProjDim> {
    let dual = homology_table(&dual_complex(c))?;
    let minimal = validate_complex(c)?.minimal;
    Ok(ProjDim {
        value: -dual.inf(),
        certified: minimal && is_homogeneous(c),
    })
}
