//! Dimension of Hom(F, R) and the codimension v - dim Hom(F, R).

use ffdim::complexes::{dual_complex, koszul_complex};
use ffdim::dimform::{bh_codimension, dim_dual_via_fitting, dim_via_fitting};
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y"], MonomialOrder::GrevLex)?;
    for gens in [["x", "y"], ["x", "x*y"]] {
        let c = koszul_complex(&r, &[r.parse(gens[0])?, r.parse(gens[1])?])?;
        let dual = dim_dual_via_fitting(&c)?.result;
        let direct = dim_via_fitting(&dual_complex(&c))?.result;
        println!(
            "Koszul({}): dim Hom(F,R) = {dual} (recomputed on the dual complex: {direct}), codim = {}",
            gens.join(", "),
            bh_codimension(&c)?
        );
    }
    Ok(())
}
