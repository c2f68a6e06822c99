//! Relative Goldie Rickart and relative C2 between small abelian groups.

use finmod::classify::{is_relative_c2, is_relative_goldie_rickart};
use finmod::module::ModuleTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let groups = [vec![2], vec![4], vec![2, 2], vec![3]];
    println!("{:<8} {:<8} {:<6} {:<6}", "M", "N", "N-GR", "N-C2");
    for a in &groups {
        for b in &groups {
            let m = ModuleTable::zabelian(a)?;
            let n = ModuleTable::zabelian(b)?;
            println!(
                "{:<8} {:<8} {:<6} {:<6}",
                format!("{a:?}"),
                format!("{b:?}"),
                is_relative_goldie_rickart(&m, &n)?,
                is_relative_c2(&m, &n)?
            );
        }
    }
    Ok(())
}
