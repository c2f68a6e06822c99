//! Generates the default instance families and prints their manifests.

use finmod::harness::{generate_family, Caps, InstanceFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for family in InstanceFamily::defaults(Caps::default()) {
        let (instances, manifest) = generate_family(&family)?;
        println!("{}", serde_json::to_string(&manifest)?);
        for inst in instances.iter().take(6) {
            println!("  {:<14} |M| = {:<3} {}", inst.id, inst.module.order(), inst.expr);
        }
        if instances.len() > 6 {
            println!("  ... {} more", instances.len() - 6);
        }
    }
    Ok(())
}
