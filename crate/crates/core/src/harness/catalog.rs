//! Generated families with a cached [`Analysis`] per instance.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::classify::Analysis;
use crate::error::{Error, Result};
use crate::harness::family::{generate_family, FamilyManifest, Instance, InstanceFamily};
use crate::hom::free_module;
use crate::instance::ModuleExpr;
use crate::ring::RingTable;

/// One catalog instance. `analysis` is `None` when a size bound was hit.
#[derive(Debug)]
pub struct Entry {
    pub instance: Instance,
    pub analysis: Option<Analysis>,
    pub skipped: Option<String>,
}

#[derive(Debug)]
pub struct FamilyCatalog {
    pub family: InstanceFamily,
    pub ring: Option<Arc<RingTable>>,
    pub manifest: FamilyManifest,
    pub entries: Vec<Entry>,
    frees: OnceLock<Vec<Free>>,
}

/// A free module `R^rank` over a family's ring.
#[derive(Debug)]
pub struct Free {
    pub rank: usize,
    pub instance: Instance,
    /// `Err` when a size bound was hit.
    pub analysis: Result<Analysis>,
}

/// Largest rank of the free modules built per ring.
pub const MAX_FREE_RANK: usize = 3;

impl FamilyCatalog {
    pub fn build(family: &InstanceFamily) -> Result<Self> {
        let (instances, manifest) = generate_family(family)?;
        let entries = instances
            .into_par_iter()
            .map(|instance| match Analysis::new(&instance.module) {
                Ok(a) => Ok(Entry {
                    instance,
                    analysis: Some(a),
                    skipped: None,
                }),
                Err(e @ Error::Size { .. }) => Ok(Entry {
                    instance,
                    analysis: None,
                    skipped: Some(e.to_string()),
                }),
                Err(e) => Err(e),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyCatalog {
            family: family.clone(),
            ring: family.ring_table()?,
            manifest,
            entries,
            frees: OnceLock::new(),
        })
    }

    /// Free modules of rank `1..=MAX_FREE_RANK` within the family's order cap,
    /// built on first use.
    pub fn frees(&self) -> &[Free] {
        self.frees.get_or_init(|| {
            let (Some(ring), Some(expr)) = (&self.ring, &self.family.ring) else {
                return Vec::new();
            };
            let mut out = Vec::new();
            let mut spec = ModuleExpr::Regular(expr.clone());
            for rank in 1..=MAX_FREE_RANK {
                if rank > 1 {
                    spec = ModuleExpr::Sum(Box::new(spec), Box::new(ModuleExpr::Regular(expr.clone())));
                }
                let order = ring.order().checked_pow(rank as u32).unwrap_or(usize::MAX);
                if order > self.family.caps.max_order {
                    break;
                }
                let module = match free_module(ring, rank) {
                    Ok(m) => m,
                    Err(_) => break,
                };
                let analysis = Analysis::new(&module);
                out.push(Free {
                    rank,
                    instance: Instance {
                        id: format!("{}/free{rank}", self.family.name),
                        expr: spec.clone(),
                        module,
                    },
                    analysis,
                });
            }
            out
        })
    }

    pub fn name(&self) -> &str {
        &self.family.name
    }

    /// Instances with an analysis, in generation order.
    pub fn analysed(&self) -> impl Iterator<Item = (&Instance, &Analysis)> + '_ {
        self.entries
            .iter()
            .filter_map(|e| e.analysis.as_ref().map(|a| (&e.instance, a)))
    }
}

/// The families of a run, in the order given.
#[derive(Debug)]
pub struct Catalog {
    pub families: Vec<FamilyCatalog>,
}

impl Catalog {
    pub fn build(families: &[InstanceFamily]) -> Result<Self> {
        let families = families.iter().map(FamilyCatalog::build).collect::<Result<_>>()?;
        Ok(Catalog { families })
    }

    pub fn family(&self, name: &str) -> Option<&FamilyCatalog> {
        self.families.iter().find(|f| f.name() == name)
    }

    /// Every entry with its family, in catalog order.
    pub fn entries(&self) -> impl Iterator<Item = (&FamilyCatalog, &Entry)> + '_ {
        self.families.iter().flat_map(|f| f.entries.iter().map(move |e| (f, e)))
    }

    pub fn len(&self) -> usize {
        self.families.iter().map(|f| f.entries.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn manifests(&self) -> Vec<&FamilyManifest> {
        self.families.iter().map(|f| &f.manifest).collect()
    }
}
