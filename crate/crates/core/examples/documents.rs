//! Read a complex from the text format and write it back.

use ffdim::cli::{parse_input, render_document};
use ffdim::dimform::dim_via_fitting;

const TEXT: &str = "\
name twisted_cubic
ring QQ[x, y, z, w]
degrees 0..2
ranks 1, 3, 2
# syzygies of the 2x2 minors of [[x, y, z], [y, z, w]]
diff 1:
  [y^2 - x*z, y*z - x*w, z^2 - y*w]
diff 2:
  [z, w]
  [-y, -z]
  [x, y]
";

fn main() -> ffdim::Result<()> {
    let c = parse_input(TEXT)?;
    print!("{}", render_document(&c, Some("twisted_cubic")));
    assert_eq!(parse_input(&render_document(&c, None))?, c);
    println!("dim = {}", dim_via_fitting(&c)?.result);
    Ok(())
}
