//! The JSON report emitted by `ffdim report --json`.

use std::time::Instant;

use serde::Serialize;

use crate::complexes::FiniteFreeComplex;
use crate::dimform::{
    bounds_from, codimension_from, dim_dual_via_fitting_with, dim_via_fitting_with, is_acyclic_with,
    BoundReport, DegreeTerm,
};
use crate::error::Result;
use crate::groebner::Budget;
use crate::homoracle::{dim_via_homology_with, HomologyTable};
use crate::krull::ExtendedDim;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub schema_version: u32,
    pub ring: String,
    pub complex_name: Option<String>,
    pub dim: ExtendedDim,
    pub dim_dual: ExtendedDim,
    pub bh_codim: ExtendedDim,
    pub per_degree_terms: PerDegreeTerms,
    pub homology: Option<Vec<HomologyJson>>,
    pub bounds: Option<BoundReport>,
    pub acyclic: bool,
    pub timings_ms: Timings,
}

#[derive(Clone, Debug, Serialize)]
pub struct PerDegreeTerms {
    pub dim: Vec<DegreeTerm>,
    pub dim_dual: Vec<DegreeTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyJson {
    pub degree: i64,
    pub generators: usize,
    pub relations: usize,
    pub dim: ExtendedDim,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub dim: u64,
    pub dim_dual: u64,
    pub homology: u64,
    pub acyclic: u64,
}

pub fn ring_description(c: &FiniteFreeComplex) -> String {
    let r = c.ring();
    format!("{}[{}] order {}", r.field(), r.variables().join(","), r.order().name())
}

pub fn homology_json(table: &HomologyTable) -> Vec<HomologyJson> {
    table
        .degrees
        .iter()
        .map(|h| HomologyJson {
            degree: h.degree,
            generators: h.presentation.generator_count,
            relations: h.presentation.relations.cols(),
            dim: h.dim,
        })
        .collect()
}

fn timed<T>(slot: &mut u64, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let start = Instant::now();
    let out = f()?;
    *slot = start.elapsed().as_millis() as u64;
    Ok(out)
}

pub fn build_report(
    c: &FiniteFreeComplex,
    name: Option<&str>,
    with_homology: bool,
    budget: Budget,
) -> Result<ReportJson> {
    let mut t = Timings::default();
    let dim = timed(&mut t.dim, || dim_via_fitting_with(c, budget))?;
    let dual = timed(&mut t.dim_dual, || dim_dual_via_fitting_with(c, budget))?;
    let homology = if with_homology {
        Some(timed(&mut t.homology, || dim_via_homology_with(c, budget))?.1)
    } else {
        None
    };
    let acyclic = timed(&mut t.acyclic, || is_acyclic_with(c, budget))?;
    Ok(ReportJson {
        schema_version: SCHEMA_VERSION,
        ring: ring_description(c),
        complex_name: name.map(str::to_string),
        dim: dim.result,
        dim_dual: dual.result,
        bh_codim: codimension_from(c, dual.result),
        bounds: homology.as_ref().map(|h| bounds_from(c, dual.result, h)),
        homology: homology.as_ref().map(homology_json),
        per_degree_terms: PerDegreeTerms {
            dim: dim.per_degree,
            dim_dual: dual.per_degree,
        },
        acyclic: acyclic.acyclic,
        timings_ms: t,
    })
}
