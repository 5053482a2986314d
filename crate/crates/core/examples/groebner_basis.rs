//! Reduced Groebner bases, normal forms and ideal membership.

use ffdim::groebner::{initial_ideal, normal_form, IdealHandle};
use ffdim::polyring::{CoefficientField, MonomialOrder, PolyRing};

fn main() -> ffdim::Result<()> {
    let r = PolyRing::new(CoefficientField::Rationals, ["x", "y", "z"], MonomialOrder::Lex)?;
    let gens = vec![r.parse("x^2 + y*z - 2")?, r.parse("x*y - z")?, r.parse("y^2 - x*z")?];
    let ideal = IdealHandle::new(&r, gens);
    let gb = ideal.groebner_basis();
    println!("reduced basis ({} elements):", gb.len());
    for g in gb.elements() {
        println!("  {}", r.render(g));
    }
    let lead: Vec<String> = initial_ideal(gb).iter().map(|m| r.render(&r.term(m.clone(), r.field().one()))).collect();
    println!("initial ideal: ({})", lead.join(", "));

    let f = r.parse("x^3*y + z^4")?;
    println!("NF({}) = {}", r.render(&f), r.render(&normal_form(&r, &f, gb.elements())));
    let member = r.mul(&r.parse("x - 3*z")?, &r.parse("x*y - z")?);
    println!("(x - 3z)(xy - z) in ideal: {}", ideal.contains(&member));
    Ok(())
}
