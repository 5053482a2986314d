use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity),
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of the variables that occur (first 64 variables).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial multiplication")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Global monomial orders; variables take precedence in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
}

impl MonomialOrder {
    /// Compares two monomials of equal arity.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // the larger monomial has the smaller exponent in the last
                // variable where they differ
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

/// Checked comparison that rejects monomials of different arity.
pub fn monomial_compare(order: MonomialOrder, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.arity() != m2.arity() {
        return Err(Error::ArityMismatch {
            expected: m1.arity(),
            found: m2.arity(),
        });
    }
    Ok(order.cmp(m1, m2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_first_variable_dominates() {
        // x^2 z vs x y^2 with x > y > z
        assert_eq!(
            monomial_compare(MonomialOrder::Lex, &m(&[2, 0, 1]), &m(&[1, 2, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_breaks_ties_from_the_last_variable() {
        // x y^2 vs x^2 z: same degree, difference (-1, 2, -1) ends negative
        assert_eq!(
            monomial_compare(MonomialOrder::GrevLex, &m(&[1, 2, 0]), &m(&[2, 0, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive_and_arity_checked() {
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            assert_eq!(order.cmp(&m(&[3, 1]), &m(&[3, 1])), Ordering::Equal);
            assert!(matches!(
                monomial_compare(order, &m(&[1]), &m(&[1, 0])),
                Err(Error::ArityMismatch { .. })
            ));
        }
    }

    #[test]
    fn overflow_is_an_error() {
        let big = m(&[u32::MAX, 0]);
        assert_eq!(big.try_mul(&m(&[1, 0])), Err(Error::ExponentOverflow));
    }

    #[test]
    fn division_and_lcm() {
        assert_eq!(m(&[1, 0]).quotient_of(&m(&[2, 3])), Some(m(&[1, 3])));
        assert_eq!(m(&[1, 4]).quotient_of(&m(&[2, 3])), None);
        assert_eq!(m(&[1, 4]).lcm(&m(&[2, 3])), m(&[2, 4]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 5])));
    }
}
