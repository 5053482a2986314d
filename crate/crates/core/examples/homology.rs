//! Presentations and dimensions of the homology modules of a complex.

use ffdim::complexes::koszul_complex;
use ffdim::homoracle::{homology_table, kernel_gens, proj_dim};
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::GrevLex)?;
    let c = koszul_complex(&r, &[r.parse("x*y")?, r.parse("x*z")?])?;
    for k in kernel_gens(&r, &c.differential(1)) {
        let parts: Vec<String> = k.components.iter().map(|p| r.render(p)).collect();
        println!("cycle in F_1: ({})", parts.join(", "));
    }
    let table = homology_table(&c)?;
    for h in &table.degrees {
        println!(
            "H_{}: {} generators, {} relations, dim {}",
            h.degree,
            h.presentation.generator_count,
            h.presentation.relations.cols(),
            h.dim
        );
    }
    println!("inf H = {}, sup H = {}, dim F = {}", table.inf(), table.sup(), table.dimension());
    let pd = proj_dim(&c)?;
    println!("-inf H(Hom(F,R)) = {} (certified projective dimension: {})", pd.value, pd.certified);
    Ok(())
}
