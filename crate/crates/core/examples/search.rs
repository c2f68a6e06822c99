//! Counterexample search. Takes a target such as `goldie_rickart&!rickart`,
//! `direct-sum` or `ring-asymmetry`.

use finmod::harness::{run_search, Caps, Catalog, InstanceFamily, SuiteConfig, Target};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target: Target = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "rickart&!goldie_rickart".into())
        .parse()?;
    let catalog = Catalog::build(&InstanceFamily::defaults(Caps::default()))?;
    let report = run_search(&target, &catalog, &SuiteConfig::default())?;
    for s in &report.steps {
        println!("{}", serde_json::to_string(s)?);
    }
    println!("{}", serde_json::to_string_pretty(&report.result)?);
    Ok(())
}
