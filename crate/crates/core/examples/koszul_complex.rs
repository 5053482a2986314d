//! Build a Koszul complex and inspect its ranks, differentials and grading.

use ffdim::cli::render_document;
use ffdim::complexes::{alternating_sums, is_homogeneous, koszul_complex, validate_complex};
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::GrevLex)?;
    let f = vec![r.parse("x*y")?, r.parse("y*z")?, r.parse("x*z")?];
    let c = koszul_complex(&r, &f)?;
    validate_complex(&c)?;
    let sums = alternating_sums(&c);
    for n in c.degrees() {
        println!("F_{n}: rank {}, s_{n} = {}, r_{n} = {}", c.rank(n), sums.s(n), sums.r(n));
    }
    println!("homogeneous: {}", is_homogeneous(&c));
    print!("{}", render_document(&c, Some("koszul_xy_yz_xz")));
    Ok(())
}
