//! Krull dimension of quotient rings via initial ideals.

use ffdim::groebner::IdealHandle;
use ffdim::krull::{dim_quotient, height};
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z", "w"], MonomialOrder::GrevLex)?;
    for gens in [
        vec![],
        vec!["x*y", "x*z"],
        vec!["x*w - y*z", "x*z - y^2", "y*w - z^2"],
        vec!["x^2 - y", "x^3 - z", "x^4 - w"],
        vec!["x", "x - 1"],
    ] {
        let ideal = IdealHandle::new(&r, gens.iter().map(|g| r.parse(g)).collect::<Result<_, _>>()?);
        println!("dim R/({}) = {}, height {:?}", gens.join(", "), dim_quotient(&ideal), height(&ideal));
    }
    Ok(())
}
