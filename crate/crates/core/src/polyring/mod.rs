//! Sparse multivariate polynomials over `QQ` or `F_p`.
//!
//! A [`Polynomial`] is a bare term list; it only has meaning relative to a
//! [`PolyRing`], which owns the coefficient field and the monomial order and
//! performs all arithmetic. Terms are kept strictly descending in the ring's
//! order with no zero coefficients, so structural equality is ring equality.

mod field;
mod monomial;
mod parse;

use std::cmp::Ordering;

pub use field::{CoefficientField, Scalar, DEFAULT_PRIME, MAX_MODULUS};
pub use monomial::{monomial_compare, Monomial, MonomialOrder};

use crate::error::{Error, Result};

pub type Term = (Monomial, Scalar);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in strictly descending order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Whether some term is a nonzero constant.
    pub fn has_constant_term(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.is_one())
    }
}

/// `k[x_1, ..., x_v]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: CoefficientField,
    variables: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        field: CoefficientField,
        variables: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let CoefficientField::Prime(p) = field {
            CoefficientField::prime(p as u64)?;
        }
        Ok(PolyRing {
            field,
            variables,
            order,
        })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Number of variables, which is also the Krull dimension of the ring.
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing {
            order,
            ..self.clone()
        }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn from_int(&self, n: i64) -> Polynomial {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(&self, index: usize) -> Polynomial {
        self.term(Monomial::var(self.nvars(), index), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: Scalar) -> Polynomial {
        debug_assert_eq!(m.arity(), self.nvars());
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates
    /// and drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Result<Polynomial> {
        if let Some((m, _)) = terms.iter().find(|(m, _)| m.arity() != self.nvars()) {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: m.arity(),
            });
        }
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
            if let Some((_, lc)) = out.last() {
                if self.field.is_zero(lc) {
                    out.pop();
                }
            }
        }
        Ok(Polynomial { terms: out })
    }

    /// Re-normalizes `f`; the identity on canonical input.
    pub fn normalize(&self, f: &Polynomial) -> Result<Polynomial> {
        self.from_terms(f.terms.clone())
    }

    /// Re-sorts a polynomial produced under a different order of the same
    /// variables and field.
    pub fn convert(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone()).expect("same arity")
    }

    /// Confirms that `f` is in canonical form for this ring.
    pub fn check(&self, f: &Polynomial) -> Result<()> {
        for (m, c) in &f.terms {
            if m.arity() != self.nvars() {
                return Err(Error::ArityMismatch {
                    expected: self.nvars(),
                    found: m.arity(),
                });
            }
            if self.field.is_zero(c) || !self.scalar_kind_matches(c) {
                return Err(Error::RingMismatch);
            }
        }
        let sorted = f
            .terms
            .windows(2)
            .all(|w| self.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater);
        if !sorted {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn scalar_kind_matches(&self, c: &Scalar) -> bool {
        match (self.field, c) {
            (CoefficientField::Rationals, Scalar::Rational(_)) => true,
            (CoefficientField::Prime(p), Scalar::Modular(v)) => *v < p,
            _ => false,
        }
    }

    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Result<(&'a Monomial, &'a Scalar)> {
        f.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    fn merge(&self, f: &Polynomial, g: &Polynomial, negate_g: bool) -> Polynomial {
        let k = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let signed = |c: &Scalar| if negate_g { k.neg(c) } else { c.clone() };
        while i < f.terms.len() && j < g.terms.len() {
            let (fm, fc) = &f.terms[i];
            let (gm, gc) = &g.terms[j];
            match self.order.cmp(fm, gm) {
                Ordering::Greater => {
                    out.push((fm.clone(), fc.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.clone(), signed(gc)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_g { k.sub(fc, gc) } else { k.add(fc, gc) };
                    if !k.is_zero(&c) {
                        out.push((fm.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        out.extend(g.terms[j..].iter().map(|(m, c)| (m.clone(), signed(c))));
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, false)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, true)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial, c: &Scalar) -> Polynomial {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    /// `c * m * f`; multiplying by a term preserves the term order.
    pub fn try_mul_term(&self, f: &Polynomial, m: &Monomial, c: &Scalar) -> Result<Polynomial> {
        if self.field.is_zero(c) {
            return Ok(Polynomial::zero());
        }
        let terms = f
            .terms
            .iter()
            .map(|(fm, fc)| Ok((fm.try_mul(m)?, self.field.mul(fc, c))))
            .collect::<Result<_>>()?;
        Ok(Polynomial { terms })
    }

    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: &Scalar) -> Polynomial {
        self.try_mul_term(f, m, c).expect("exponent overflow")
    }

    pub fn try_mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let (short, long) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for (m, c) in &short.terms {
            acc = self.add(&acc, &self.try_mul_term(long, m, c)?);
        }
        Ok(acc)
    }

    /// Product; panics on exponent overflow (see [`PolyRing::try_mul`]).
    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.try_mul(f, g).expect("exponent overflow")
    }

    /// `f` divided by its leading coefficient.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.terms.first() {
            None => Polynomial::zero(),
            Some((_, c)) if self.field.is_one(c) => f.clone(),
            Some((_, c)) => self.scale(f, &self.field.inv(c)),
        }
    }

    /// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
    pub fn div_exact(&self, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
        let (gm, gc) = g.terms.first()?;
        let ginv = self.field.inv(gc);
        let mut rest = f.clone();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rest.terms.first() {
            let qm = gm.quotient_of(rm)?;
            let qc = self.field.mul(rc, &ginv);
            rest = self.sub(&rest, &self.mul_term(g, &qm, &qc));
            quotient.push((qm, qc));
        }
        Some(Polynomial { terms: quotient })
    }

    pub fn is_unit(&self, f: &Polynomial) -> bool {
        f.len() == 1 && f.terms[0].0.is_one()
    }

    /// Raises every entry to a power by repeated multiplication.
    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, f))
    }
}
