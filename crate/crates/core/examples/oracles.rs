//! Oracle cross-checks over the default catalog.

use finmod::harness::{run_oracles, Caps, Catalog, InstanceFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = Catalog::build(&InstanceFamily::defaults(Caps::default()))?;
    let report = run_oracles(&catalog)?;
    for c in &report.checks {
        let verdict = match &c.disagreement {
            None => "agree".to_string(),
            Some(d) => format!("DISAGREE {d}"),
        };
        println!("{:<30} checked={:<4} skipped={:<3} {verdict}", c.name, c.checked, c.skipped);
    }
    if !report.agrees() {
        std::process::exit(1);
    }
    Ok(())
}
