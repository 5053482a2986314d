//! Determinants, ideals of minors and generic rank of a polynomial matrix.

use ffdim::krull::dim_quotient;
use ffdim::matpoly::{determinant, generic_rank, minor_ideal, MapOfFree};
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::GrevLex)?;
    let rows = [["x", "y", "z"], ["y", "z", "x"], ["z", "x", "y"]];
    let m = MapOfFree::from_rows(3, rows.iter().map(|row| row.iter().map(|e| r.parse(e)).collect::<Result<_, _>>()).collect::<Result<_, _>>()?)?;
    println!("det = {}", r.render(&determinant(&r, &m)?));
    println!("generic rank = {}", generic_rank(&r, &m));
    for s in 0..=4 {
        let ideal = minor_ideal(&r, &m, s);
        println!("I_{s}: {} generators, dim R/I_{s} = {}", ideal.generators().len(), dim_quotient(&ideal));
    }
    Ok(())
}
