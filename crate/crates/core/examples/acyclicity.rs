//! Rank and grade conditions deciding exactness of a complex.

use ffdim::complexes::koszul_complex;
use ffdim::dimform::is_acyclic;
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::GrevLex)?;
    for gens in [vec!["x", "y", "z"], vec!["x*y", "x*z"]] {
        let f = gens.iter().map(|g| r.parse(g)).collect::<Result<Vec<_>, _>>()?;
        let cert = is_acyclic(&koszul_complex(&r, &f)?)?;
        println!("Koszul({}): acyclic = {}", gens.join(", "), cert.acyclic);
        for check in &cert.checks {
            println!(
                "  n = {}: rank {} (expected {}), grade {} (required {})",
                check.degree, check.rank, check.expected_rank, check.grade, check.required_grade
            );
        }
    }
    Ok(())
}
