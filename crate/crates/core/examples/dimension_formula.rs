//! dim F from ideals of minors, compared with the homology computation.

use ffdim::complexes::koszul_complex;
use ffdim::dimform::dim_via_fitting;
use ffdim::homoracle::dim_via_homology;
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y"], MonomialOrder::GrevLex)?;
    let c = koszul_complex(&r, &[r.parse("x")?, r.parse("x*y")?])?;
    let report = dim_via_fitting(&c)?;
    println!("{:>3} {:>4} {:>8} {:>5}", "n", "s", "dim R/I", "term");
    for t in &report.per_degree {
        println!("{:>3} {:>4} {:>8} {:>5}", t.degree, t.minor_size, t.quotient_dim.to_string(), t.term.to_string());
    }
    println!("dim F (minors)   = {}", report.result);
    println!("dim F (homology) = {}", dim_via_homology(&c)?.0);
    Ok(())
}
