//! Dimensions of finite free complexes read off from their differentials.
//!
//! For `F = 0 -> F_b -> ... -> F_a -> 0` over `R`:
//!
//! ```text
//! dim_R F           = sup_n { dim R/I_{s_n}(∂_{n+1}) - n }
//! dim_R Hom_R(F, R) = sup_n { dim R/I_{r_n}(∂_n) + n }
//! ```
//!
//! where `s_n` and `r_n` are the alternating rank sums of
//! [`crate::complexes::RankProfile`]. Outside `[a-1, b]` (resp. `[a, b+1]`)
//! every term is over the zero ring and never contributes, so only those
//! degrees are evaluated.

use serde::Serialize;

use crate::complexes::{alternating_sums, is_homogeneous, FiniteFreeComplex};
use crate::error::Result;
use crate::groebner::Budget;
use crate::homoracle::HomologyTable;
use crate::krull::{try_dim_quotient, ExtendedDim, Finite, NegInfinity, PosInfinity};
use crate::matpoly::{generic_rank, minor_ideal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Formula {
    /// `dim_R F` from `I_{s_n}(∂_{n+1})`.
    #[serde(rename = "complex")]
    Complex,
    /// `dim_R Hom_R(F, R)` from `I_{r_n}(∂_n)`.
    #[serde(rename = "dual")]
    Dual,
}

/// One term of a supremum formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTerm {
    pub degree: i64,
    /// `s_n` or `r_n`, the size of the minors.
    pub minor_size: i64,
    pub generators: usize,
    pub gb_size: usize,
    /// `dim R/I`.
    pub quotient_dim: ExtendedDim,
    /// `dim R/I ∓ n`.
    pub term: ExtendedDim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub formula: Formula,
    pub per_degree: Vec<DegreeTerm>,
    pub result: ExtendedDim,
}

impl DimReport {
    pub fn term(&self, degree: i64) -> Option<&DegreeTerm> {
        self.per_degree.iter().find(|t| t.degree == degree)
    }
}

fn term_for(
    c: &FiniteFreeComplex,
    degree: i64,
    map_degree: i64,
    minor_size: i64,
    sign: i64,
    budget: Budget,
) -> Result<DegreeTerm> {
    let ring = c.ring();
    let ideal = minor_ideal(ring, &c.differential(map_degree), minor_size);
    let quotient_dim = try_dim_quotient(&ideal, budget)?;
    Ok(DegreeTerm {
        degree,
        minor_size,
        generators: ideal.generators().len(),
        gb_size: ideal.cached_basis().map_or(0, |gb| gb.len()),
        quotient_dim,
        term: quotient_dim + sign * degree,
    })
}

/// Terms of `dim R/I_{s_n}(∂_{n+1}) - n` for `n ∈ [lo, hi]`; the default
/// range is `[a-1, b]`.
pub fn fitting_terms(
    c: &FiniteFreeComplex,
    range: std::ops::RangeInclusive<i64>,
    budget: Budget,
) -> Result<Vec<DegreeTerm>> {
    let profile = alternating_sums(c);
    range
        .map(|n| term_for(c, n, n + 1, profile.s(n), -1, budget))
        .collect()
}

/// Terms of `dim R/I_{r_n}(∂_n) + n` for `n ∈ [lo, hi]`; the default range
/// is `[a, b+1]`.
pub fn dual_fitting_terms(
    c: &FiniteFreeComplex,
    range: std::ops::RangeInclusive<i64>,
    budget: Budget,
) -> Result<Vec<DegreeTerm>> {
    let profile = alternating_sums(c);
    range
        .map(|n| term_for(c, n, n, profile.r(n), 1, budget))
        .collect()
}

fn report(formula: Formula, per_degree: Vec<DegreeTerm>) -> DimReport {
    let result = ExtendedDim::sup(per_degree.iter().map(|t| t.term));
    DimReport {
        formula,
        per_degree,
        result,
    }
}

/// `dim_R F` computed from the ideals of minors of the differentials.
pub fn dim_via_fitting(c: &FiniteFreeComplex) -> Result<DimReport> {
    dim_via_fitting_with(c, Budget::unlimited())
}

pub fn dim_via_fitting_with(c: &FiniteFreeComplex, budget: Budget) -> Result<DimReport> {
    if c.is_empty() {
        return Ok(report(Formula::Complex, Vec::new()));
    }
    let terms = fitting_terms(c, c.low() - 1..=c.high(), budget)?;
    Ok(report(Formula::Complex, terms))
}

/// `dim_R Hom_R(F, R)` evaluated from `F`'s own differentials.
pub fn dim_dual_via_fitting(c: &FiniteFreeComplex) -> Result<DimReport> {
    dim_dual_via_fitting_with(c, Budget::unlimited())
}

pub fn dim_dual_via_fitting_with(c: &FiniteFreeComplex, budget: Budget) -> Result<DimReport> {
    if c.is_empty() {
        return Ok(report(Formula::Dual, Vec::new()));
    }
    let terms = dual_fitting_terms(c, c.low()..=c.high() + 1, budget)?;
    Ok(report(Formula::Dual, terms))
}

/// Codimension in the sense of Bruns and Herzog: `dim R - dim_R Hom_R(F, R)`.
/// Exact complexes yield `+inf`.
pub fn bh_codimension(c: &FiniteFreeComplex) -> Result<ExtendedDim> {
    bh_codimension_with(c, Budget::unlimited())
}

pub fn bh_codimension_with(c: &FiniteFreeComplex, budget: Budget) -> Result<ExtendedDim> {
    let dual = dim_dual_via_fitting_with(c, budget)?;
    Ok(codimension_from(c, dual.result))
}

pub(crate) fn codimension_from(c: &FiniteFreeComplex, dim_dual: ExtendedDim) -> ExtendedDim {
    -dim_dual + c.ring().nvars() as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub dim_dual: ExtendedDim,
    pub ring_dim: i64,
    pub inf_homology: ExtendedDim,
    pub sup_homology: ExtendedDim,
    /// No homology at all; both bounds are vacuous.
    pub exact: bool,
    pub homogeneous: bool,
    /// `dim Hom(F,R) <= dim R + sup H(F)`.
    pub upper_holds: bool,
    /// `dim R + inf H(F) <= dim Hom(F,R)`; only guaranteed for homogeneous
    /// complexes, reported for all.
    pub lower_holds: bool,
}

impl BoundReport {
    /// The bounds that must hold: the upper one always, the lower one on
    /// homogeneous complexes.
    pub fn asserted_bounds_hold(&self) -> bool {
        self.exact || (self.upper_holds && (!self.homogeneous || self.lower_holds))
    }
}

/// Compares `dim_R Hom_R(F, R)` with `dim R + inf H(F)` and `dim R + sup H(F)`.
pub fn check_bounds(c: &FiniteFreeComplex, homology: &HomologyTable) -> Result<BoundReport> {
    check_bounds_with(c, homology, Budget::unlimited())
}

pub fn check_bounds_with(
    c: &FiniteFreeComplex,
    homology: &HomologyTable,
    budget: Budget,
) -> Result<BoundReport> {
    let dim_dual = dim_dual_via_fitting_with(c, budget)?.result;
    Ok(bounds_from(c, dim_dual, homology))
}

pub(crate) fn bounds_from(
    c: &FiniteFreeComplex,
    dim_dual: ExtendedDim,
    homology: &HomologyTable,
) -> BoundReport {
    let v = c.ring().nvars() as i64;
    let (inf, sup) = (homology.inf(), homology.sup());
    let exact = sup == NegInfinity;
    let shifted = |h: ExtendedDim| match h {
        Finite(n) => Finite(v + n),
        other => other,
    };
    BoundReport {
        dim_dual,
        ring_dim: v,
        inf_homology: inf,
        sup_homology: sup,
        exact,
        homogeneous: is_homogeneous(c),
        upper_holds: exact || dim_dual <= shifted(sup),
        lower_holds: exact || shifted(inf) <= dim_dual,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicityCheck {
    pub degree: i64,
    pub expected_rank: i64,
    pub rank: usize,
    /// `grade I_{r_n}(∂_n)`; `+inf` for the unit ideal.
    pub grade: ExtendedDim,
    pub required_grade: i64,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicityCertificate {
    pub acyclic: bool,
    pub checks: Vec<AcyclicityCheck>,
}

/// Buchsbaum–Eisenbud: `F` is exact above degree `a` iff for every
/// `n ∈ [a+1, b]` the rank of `∂_n` is `r_n` and `grade I_{r_n}(∂_n) >= n - a`.
/// Over a polynomial ring the grade of a proper ideal is its height.
pub fn is_acyclic(c: &FiniteFreeComplex) -> Result<AcyclicityCertificate> {
    is_acyclic_with(c, Budget::unlimited())
}

pub fn is_acyclic_with(c: &FiniteFreeComplex, budget: Budget) -> Result<AcyclicityCertificate> {
    let ring = c.ring();
    let profile = alternating_sums(c);
    let mut checks = Vec::new();
    if !c.is_empty() {
        for n in c.low() + 1..=c.high() {
            let d = c.differential(n);
            let expected_rank = profile.r(n);
            let rank = generic_rank(ring, &d);
            let grade = match try_dim_quotient(&minor_ideal(ring, &d, expected_rank), budget)? {
                NegInfinity => PosInfinity,
                Finite(dim) => Finite(ring.nvars() as i64 - dim),
                PosInfinity => unreachable!("dimensions are never +inf"),
            };
            let required_grade = n - c.low();
            let passes = rank as i64 == expected_rank && grade >= Finite(required_grade);
            checks.push(AcyclicityCheck {
                degree: n,
                expected_rank,
                rank,
                grade,
                required_grade,
                passes,
            });
        }
    }
    Ok(AcyclicityCertificate {
        acyclic: checks.iter().all(|ch| ch.passes),
        checks,
    })
}
