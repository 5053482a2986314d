//! Parse, multiply and render polynomials over QQ and F_p.

use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let qq = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::GrevLex)?;
    let f = qq.parse("x^2 - 1/2*y*z")?;
    let g = qq.parse("x + y")?;
    println!("f     = {}", qq.render(&f));
    println!("f*g   = {}", qq.render(&qq.mul(&f, &g)));
    println!("g^3   = {}", qq.render(&qq.pow(&g, 3)));
    println!("juxtaposed: {}", qq.render(&qq.parse("1/2 x y^3")?));
    println!("monic = {}", qq.render(&qq.monic(&qq.parse("3*x - 6*y")?)));

    let fp = PolyRing::new(CoefficientField::prime(7)?, ["x", "y"], MonomialOrder::Lex)?;
    let h = fp.pow(&fp.parse("x + y")?, 7);
    println!("(x + y)^7 over F_7 = {}", fp.render(&h));
    Ok(())
}
