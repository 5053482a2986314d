//! Generate random complexes and compare both dimension computations.

use ffdim::cli::generate::{random_complex, seeded, RandomSpec};
use ffdim::dimform::dim_via_fitting;
use ffdim::homoracle::dim_via_homology;

fn main() -> ffdim::Result<()> {
    let params = RandomSpec::default();
    let ring = params.ring();
    let mut rng = seeded(2024);
    let mut agree = 0;
    let count = 100;
    for _ in 0..count {
        let c = random_complex(&ring, &params, &mut rng);
        let a = dim_via_fitting(&c)?.result;
        let b = dim_via_homology(&c)?.0;
        if a == b {
            agree += 1;
        } else {
            println!("mismatch: {a} vs {b}");
        }
    }
    println!("{agree}/{count} agree");
    Ok(())
}
