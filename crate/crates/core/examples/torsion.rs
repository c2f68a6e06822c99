//! Singular and Goldie torsion submodules of a few small modules.

use finmod::instance::{parse_spec, Built};
use finmod::torsion::goldie_torsion;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "module regular (ring zmod 4)",
        "module regular (ring zmod 6)",
        "module regular (ring triangular upper 2 (ring zmod 2))",
        "module quotient (module regular (ring triangular upper 2 (ring zmod 2))) gens 2",
        "module zabelian 2 4",
    ] {
        let Built::Module(m) = parse_spec(text)? else { unreachable!() };
        let p = goldie_torsion(&m)?;
        println!("{text}\n  |M| = {}  Z(M) = {:?}  Z2(M) = {:?}", m.order(), p.z, p.z2);
    }
    Ok(())
}
