//! Endomorphism ring of `F2 + F2` over `F2`: its idempotents and the summands they cut out.

use std::sync::Arc;

use finmod::hom::EndRing;
use finmod::module::ModuleTable;
use finmod::ring::RingTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f2 = Arc::new(RingTable::zmod(2)?);
    let m = ModuleTable::direct_sum(&ModuleTable::regular(&f2), &ModuleTable::regular(&f2))?.module;
    let end = EndRing::new(&m)?;
    println!("|End(M)| = {}, von Neumann regular: {}", end.len(), end.is_von_neumann_regular());
    for e in end.idempotents() {
        let f = end.map(e);
        let image: Vec<usize> = {
            let mut v = f.table.clone();
            v.sort();
            v.dedup();
            v
        };
        println!("  idempotent {:?}  image {:?}", f.table, image);
    }
    println!("summands: {}", m.lattice()?.summands(m.order()).len());
    Ok(())
}
