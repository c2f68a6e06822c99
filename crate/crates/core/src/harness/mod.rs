//! Catalog generation, theorem replay, counterexample search and oracle cross-checks.

pub mod catalog;
pub mod checks;
pub mod family;
pub mod oracle;
pub mod registry;
pub mod relative;
pub mod search;

pub use catalog::{Catalog, Entry, FamilyCatalog};
pub use family::{generate_family, Caps, FamilyManifest, Instance, InstanceFamily, Recipe, DEFAULT_FAMILIES};
pub use oracle::{run_oracles, OracleCheck, OracleReport};
pub use registry::{
    has_failure, registry_ids, run_selected, run_theorems, run_theorems_with, Kind, Scope, Status, SuiteConfig,
    TheoremCheck,
};
pub use relative::RelativeSuite;
pub use search::{run_search, search_counterexample, Conjunction, SearchReport, Target};
