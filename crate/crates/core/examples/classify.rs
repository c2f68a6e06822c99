//! Classifies a module given as spec text, `Z4` over the integers by default.
//!
//! ```text
//! cargo run --example classify -- "module regular (ring triangular upper 2 (ring zmod 2))"
//! ```

use finmod::classify::classify;
use finmod::instance::{parse_spec, Built};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "module zabelian 4".into());
    let Built::Module(m) = parse_spec(&text)? else {
        return Err("expected a module spec".into());
    };
    let report = classify(&m)?.with_instance(text);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
