//! Replays every registered theorem over the default catalog.

use std::time::Instant;

use finmod::harness::{has_failure, run_theorems, Caps, Catalog, InstanceFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let catalog = Catalog::build(&InstanceFamily::defaults(Caps::default()))?;
    eprintln!("catalog: {} instances in {:.1?}", catalog.len(), start.elapsed());
    let checks = run_theorems(&catalog);
    for c in &checks {
        println!(
            "{:<8} {:<32} checked={:<6} skipped={:<5} {}",
            format!("{:?}", c.status).to_uppercase(),
            c.id,
            c.checked,
            c.skipped,
            c.note.as_deref().unwrap_or("")
        );
        if let Some(w) = &c.witness {
            println!("         witness {} {}: {}", w.instance, w.spec, w.detail);
        }
    }
    eprintln!("total {:.1?}", start.elapsed());
    if has_failure(&checks) {
        std::process::exit(1);
    }
    Ok(())
}
