//! Buchberger's algorithm for polynomial ideals.
//!
//! Pairs are processed by the normal strategy (smallest lcm first) and
//! pruned with Buchberger's coprimality and chain criteria. Every basis
//! element is kept monic; the final basis is minimized and tail-reduced, so
//! it is the unique reduced Gröbner basis of the ideal for the ring's order.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Scalar, Term};

/// Wall-clock limit for a single Gröbner basis computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None }
    }

    pub fn limited(limit: Duration) -> Self {
        Budget { limit: Some(limit) }
    }

    pub fn limit(&self) -> Option<Duration> {
        self.limit
    }

    pub(crate) fn start(&self) -> Deadline {
        Deadline(self.limit.map(|d| Instant::now() + d))
    }
}

pub(crate) struct Deadline(Option<Instant>);

impl Deadline {
    pub(crate) fn check(&self) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() >= t => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    /// Monic elements sorted by descending leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }
}

/// An ideal given by generators, with its reduced basis computed on demand.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl IdealHandle {
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Self {
        IdealHandle {
            ring: ring.clone(),
            generators,
            basis: OnceLock::new(),
        }
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![ring.one()])
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The cached basis, if it has been computed.
    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.basis.get()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.try_groebner_basis(Budget::unlimited())
            .expect("unlimited budget cannot time out")
    }

    pub fn try_groebner_basis(&self, budget: Budget) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.basis.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.generators, budget)?;
        Ok(self.basis.get_or_init(|| gb))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(&self.ring, f, self.groebner_basis().elements()).is_zero()
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &IdealHandle) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_ideal(&self, other: &IdealHandle) -> bool {
        self.is_contained_in(other) && other.is_contained_in(self)
    }

    pub fn is_unit(&self) -> bool {
        if self.generators.iter().any(|g| self.ring.is_unit(g)) {
            return true;
        }
        self.groebner_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }
}

/// Reduced Gröbner basis of `ideal`, cached on the handle.
pub fn reduced_groebner_basis(ideal: &IdealHandle) -> &GroebnerBasis {
    ideal.groebner_basis()
}

/// Leading monomials of a reduced basis: the minimal generators of `in(I)`.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    gb.elements
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect()
}

fn find_reducer<'a>(basis: &'a [Polynomial], m: &Monomial) -> Option<&'a Polynomial> {
    basis
        .iter()
        .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Subtracts `qc * qm * g` from an ascending work list whose last term is
/// cancelled by the leading term of `g`.
fn subtract_ascending(
    ring: &PolyRing,
    work: Vec<Term>,
    g: &Polynomial,
    qm: &Monomial,
    qc: &Scalar,
) -> Vec<Term> {
    let k = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(work.len() + g.len());
    let mut work = work;
    work.pop();
    // g's terms ascending, skipping its leading term
    let mut gi = g.terms()[1..].iter().rev().map(|(m, c)| (m.mul(qm), k.neg(&k.mul(c, qc))));
    let mut wi = work.into_iter();
    let mut next_w = wi.next();
    let mut next_g = gi.next();
    loop {
        match (next_w.take(), next_g.take()) {
            (None, None) => break,
            (Some(w), None) => {
                out.push(w);
                next_w = wi.next();
            }
            (None, Some(t)) => {
                out.push(t);
                next_g = gi.next();
            }
            (Some(w), Some(t)) => match order.cmp(&w.0, &t.0) {
                std::cmp::Ordering::Less => {
                    out.push(w);
                    next_w = wi.next();
                    next_g = Some(t);
                }
                std::cmp::Ordering::Greater => {
                    out.push(t);
                    next_g = gi.next();
                    next_w = Some(w);
                }
                std::cmp::Ordering::Equal => {
                    let c = k.add(&w.1, &t.1);
                    if !k.is_zero(&c) {
                        out.push((w.0, c));
                    }
                    next_w = wi.next();
                    next_g = gi.next();
                }
            },
        }
    }
    out
}

/// Multivariate division remainder of `f` by `basis`: no monomial of the
/// result is divisible by a leading monomial of the basis.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let k = ring.field();
    let mut work: Vec<Term> = f.terms().iter().rev().cloned().collect();
    let mut remainder = Vec::new();
    while let Some((m, c)) = work.last() {
        match find_reducer(basis, m) {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero reducer");
                let qm = gm.quotient_of(m).expect("divisible");
                let qc = k.div(c, gc);
                work = subtract_ascending(ring, work, g, &qm, &qc);
            }
            None => remainder.push(work.pop().expect("nonempty")),
        }
    }
    ring.from_terms(remainder).expect("same arity")
}

/// Reduces only the leading term until it is irreducible.
fn top_reduce(ring: &PolyRing, f: Polynomial, basis: &[Polynomial]) -> Polynomial {
    let k = ring.field();
    let mut work: Vec<Term> = f.terms().iter().rev().cloned().collect();
    while let Some((m, c)) = work.last() {
        match find_reducer(basis, m) {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero reducer");
                let qm = gm.quotient_of(m).expect("divisible");
                let qc = k.div(c, gc);
                work = subtract_ascending(ring, work, g, &qm, &qc);
            }
            None => break,
        }
    }
    work.reverse();
    ring.from_terms(work).expect("same arity")
}

pub fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let k = ring.field();
    let a = ring.mul_term(f, &fm.quotient_of(&l).expect("lcm"), &k.inv(fc));
    let b = ring.mul_term(g, &gm.quotient_of(&l).expect("lcm"), &k.inv(gc));
    ring.sub(&a, &b)
}

/// Certificate check: every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(ring: &PolyRing, basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !normal_form(ring, &s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Interreduces a set of polynomials once: drops zeros and duplicates, then
/// reduces each element against the ones kept before it.
fn interreduce(ring: &PolyRing, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut sorted: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.monic(g))
        .collect();
    sorted.sort_by(|a, b| {
        ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    sorted.dedup();
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in sorted {
        let r = normal_form(ring, &g, &kept);
        if !r.is_zero() {
            kept.push(ring.monic(&r));
        }
    }
    kept
}

fn pick_pair(ring: &PolyRing, pairs: &[Pair]) -> usize {
    (0..pairs.len())
        .min_by(|&a, &b| {
            let (p, q) = (&pairs[a], &pairs[b]);
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| ring.cmp_monomials(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })
        .expect("nonempty pair list")
}

/// Buchberger's algorithm; returns the reduced Gröbner basis.
pub fn buchberger(ring: &PolyRing, generators: &[Polynomial], budget: Budget) -> Result<GroebnerBasis> {
    let deadline = budget.start();
    let unit = |ring: &PolyRing| GroebnerBasis {
        elements: vec![ring.one()],
        order: ring.order(),
        reduced: true,
    };
    let mut basis = interreduce(ring, generators);
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(unit(ring));
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let lcm = basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap());
            pairs.push(Pair { i, j, lcm });
            pending.insert((i, j));
        }
    }
    while !pairs.is_empty() {
        deadline.check()?;
        let Pair { i, j, lcm } = pairs.swap_remove(pick_pair(ring, &pairs));
        pending.remove(&(i, j));
        let (mi, mj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if mi.is_coprime(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = top_reduce(ring, s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = ring.monic(&r);
        if r.is_constant() {
            return Ok(unit(ring));
        }
        let n = basis.len();
        let lm = r.leading_monomial().unwrap().clone();
        basis.push(r);
        for k in 0..n {
            let lcm = basis[k].leading_monomial().unwrap().lcm(&lm);
            pairs.push(Pair { i: k, j: n, lcm });
            pending.insert((k, n));
        }
    }
    Ok(GroebnerBasis {
        elements: reduce_basis(ring, basis),
        order: ring.order(),
        reduced: true,
    })
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis(ring: &PolyRing, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(other, h)| {
            let hm = h.leading_monomial().unwrap();
            other != idx && hm.divides(lm) && (hm != lm || other < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|idx| {
            let g = &minimal[idx];
            let (lm, lc) = g.leading().unwrap();
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(o, _)| *o != idx)
                .map(|(_, h)| h.clone())
                .collect();
            let tail = ring.from_terms(g.terms()[1..].to_vec()).unwrap();
            let head = ring.term(lm.clone(), lc.clone());
            ring.monic(&ring.add(&head, &normal_form(ring, &tail, &others)))
        })
        .collect();
    reduced.sort_by(|a, b| {
        ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    reduced
}
