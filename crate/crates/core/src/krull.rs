//! Krull dimension of `R/I` for `R = k[x_1, ..., x_v]`.
//!
//! `dim R/I = dim R/in(I)` for any global monomial order, and the dimension
//! of a monomial quotient is the size of the largest set of variables that
//! contains the support of no minimal generator.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::groebner::{initial_ideal, Budget, IdealHandle};
use crate::polyring::{Monomial, PolyRing};

/// An integer extended by `-inf` and `+inf`.
///
/// Dimensions only ever take the values `NegInfinity` (the zero module or
/// zero ring) and `Finite`; `PosInfinity` shows up for infima over empty
/// sets, grades of unit ideals and codimensions of exact complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedDim {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

pub use ExtendedDim::{Finite, NegInfinity, PosInfinity};

impl ExtendedDim {
    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    /// Supremum of an iterator; `-inf` when empty.
    pub fn sup<I: IntoIterator<Item = ExtendedDim>>(items: I) -> ExtendedDim {
        items.into_iter().fold(NegInfinity, Ord::max)
    }

    /// Infimum of an iterator; `+inf` when empty.
    pub fn inf<I: IntoIterator<Item = ExtendedDim>>(items: I) -> ExtendedDim {
        items.into_iter().fold(PosInfinity, Ord::min)
    }
}

impl Ord for ExtendedDim {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(d: &ExtendedDim) -> (i8, i64) {
            match d {
                NegInfinity => (0, 0),
                Finite(n) => (1, *n),
                PosInfinity => (2, 0),
            }
        }
        rank(self).cmp(&rank(other))
    }
}

impl PartialOrd for ExtendedDim {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<i64> for ExtendedDim {
    type Output = ExtendedDim;

    fn add(self, n: i64) -> ExtendedDim {
        match self {
            Finite(d) => Finite(d + n),
            inf => inf,
        }
    }
}

impl Sub<i64> for ExtendedDim {
    type Output = ExtendedDim;

    fn sub(self, n: i64) -> ExtendedDim {
        self + (-n)
    }
}

impl Neg for ExtendedDim {
    type Output = ExtendedDim;

    fn neg(self) -> ExtendedDim {
        match self {
            NegInfinity => PosInfinity,
            Finite(n) => Finite(-n),
            PosInfinity => NegInfinity,
        }
    }
}

impl From<i64> for ExtendedDim {
    fn from(n: i64) -> Self {
        Finite(n)
    }
}

impl fmt::Display for ExtendedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInfinity => f.write_str("-inf"),
            Finite(n) => write!(f, "{n}"),
            PosInfinity => f.write_str("+inf"),
        }
    }
}

impl Serialize for ExtendedDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Finite(n) => s.serialize_i64(*n),
            NegInfinity => s.serialize_str("-inf"),
            PosInfinity => s.serialize_str("+inf"),
        }
    }
}

/// Dimension of `R / (monomials)` by exhaustive independent-set search.
pub fn dim_monomial_quotient(ring: &PolyRing, monomials: &[Monomial]) -> ExtendedDim {
    let v = ring.nvars();
    assert!(v < 64, "independent-set search supports fewer than 64 variables");
    let supports: Vec<u64> = monomials.iter().map(Monomial::support_mask).collect();
    if supports.contains(&0) {
        return NegInfinity;
    }
    let best = (0u64..1 << v)
        .filter(|set| supports.iter().all(|s| s & !set != 0))
        .map(|set| set.count_ones())
        .max()
        .expect("the empty set is always independent");
    Finite(best as i64)
}

/// `dim R/I`.
pub fn dim_quotient(ideal: &IdealHandle) -> ExtendedDim {
    try_dim_quotient(ideal, Budget::unlimited()).expect("unlimited budget")
}

pub fn try_dim_quotient(ideal: &IdealHandle, budget: Budget) -> Result<ExtendedDim> {
    if ideal.is_zero() {
        return Ok(Finite(ideal.ring().nvars() as i64));
    }
    let gb = ideal.try_groebner_basis(budget)?;
    Ok(dim_monomial_quotient(ideal.ring(), &initial_ideal(gb)))
}

/// `height I = v - dim R/I` for proper ideals; `None` for the unit ideal.
pub fn height(ideal: &IdealHandle) -> Option<usize> {
    try_height(ideal, Budget::unlimited()).expect("unlimited budget")
}

pub fn try_height(ideal: &IdealHandle, budget: Budget) -> Result<Option<usize>> {
    Ok(match try_dim_quotient(ideal, budget)? {
        Finite(d) => Some(ideal.ring().nvars() - d as usize),
        _ => None,
    })
}
