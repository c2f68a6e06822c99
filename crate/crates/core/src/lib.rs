//! Finite rings and modules given by operation tables: submodule lattices,
//! endomorphism rings, Goldie torsion, Rickart-type module classes, and a
//! harness that replays module-theoretic statements over generated catalogs.

pub mod bitset;
pub mod error;
pub mod hom;
pub mod iso;
pub mod module;
pub mod ring;
pub mod torsion;
pub mod classify;
pub mod instance;
pub mod harness;
pub mod cli;

pub use bitset::ElemSet;
pub use classify::{classify, classify_analysis, ring_predicates, Analysis, Predicate, PropertyReport, Verdict, Witness};
pub use error::{Error, Result};
pub use hom::{hom_set, EndRing, HomMap, HomSearch};
pub use instance::{parse_spec, Built, InstanceSpec, ModuleExpr, RingExpr};
pub use module::{ModuleTable, Submodule, SubmoduleLattice};
pub use ring::{BaseRing, RingTable, Shape};
pub use torsion::{goldie_torsion, singular_submodule, t_operator, TorsionProfile};
