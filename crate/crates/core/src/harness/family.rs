//! Deterministic instance-family generation.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classify::iso_invariant;
use crate::error::{Error, Result};
use crate::hom::{find_isomorphism, HomSearch, DEFAULT_HOM_BOUND};
use crate::instance::{Bounds, ModuleExpr, RingExpr};
use crate::module::{ModuleTable, Submodule};
use crate::ring::{RingTable, Shape};

/// Size caps applied during generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub max_order: usize,
    pub max_end: usize,
    pub max_instances: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 64,
            max_end: 4096,
            max_instances: 500,
        }
    }
}

/// How modules are produced from the base ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Recipe {
    /// Cyclic modules `R/I`, one per right ideal.
    pub cyclics: bool,
    /// Direct sums of up to this many cyclics (or integer invariants).
    pub max_summands: usize,
    /// Also every submodule and quotient of the modules above.
    pub closure: bool,
    /// Cyclic orders for the integer backend.
    pub invariants: Vec<usize>,
}

impl Default for Recipe {
    fn default() -> Self {
        Recipe::standard()
    }
}

impl Recipe {
    pub fn empty() -> Self {
        Recipe {
            cyclics: false,
            max_summands: 0,
            closure: false,
            invariants: Vec::new(),
        }
    }

    pub fn standard() -> Self {
        Recipe {
            cyclics: true,
            max_summands: 3,
            closure: true,
            invariants: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFamily {
    pub name: String,
    /// `None` is the integer backend.
    pub ring: Option<RingExpr>,
    pub recipe: Recipe,
    pub caps: Caps,
}

/// Names of the default catalogs.
pub const DEFAULT_FAMILIES: [&str; 8] = ["zmod4", "zmod8", "zmod6", "f2", "t2f2", "m2f2", "z2xz4", "zabelian"];

/// Further named families, available on request.
pub const EXTRA_FAMILIES: [&str; 4] = ["t2f2-lower", "f3", "zmod9", "t2z4"];

fn zmod(n: usize) -> RingExpr {
    RingExpr::Zmod(n)
}

impl InstanceFamily {
    pub fn new(name: impl Into<String>, ring: Option<RingExpr>, recipe: Recipe, caps: Caps) -> Self {
        InstanceFamily {
            name: name.into(),
            ring,
            recipe,
            caps,
        }
    }

    /// A family from [`DEFAULT_FAMILIES`] or [`EXTRA_FAMILIES`] with the standard recipe.
    pub fn named(name: &str, caps: Caps) -> Result<Self> {
        let ring = match name {
            "zmod4" => Some(zmod(4)),
            "zmod8" => Some(zmod(8)),
            "zmod6" => Some(zmod(6)),
            "zmod9" => Some(zmod(9)),
            "f2" => Some(zmod(2)),
            "f3" => Some(zmod(3)),
            "t2f2" => Some(RingExpr::Triangular(Shape::Upper, 2, Box::new(zmod(2)))),
            "t2f2-lower" => Some(RingExpr::Triangular(Shape::Lower, 2, Box::new(zmod(2)))),
            "t2z4" => Some(RingExpr::Triangular(Shape::Upper, 2, Box::new(zmod(4)))),
            "m2f2" => Some(RingExpr::Matrix(2, Box::new(zmod(2)))),
            "z2xz4" => Some(RingExpr::Product(Box::new(zmod(2)), Box::new(zmod(4)))),
            "zabelian" => {
                let recipe = Recipe {
                    invariants: vec![2, 3, 4, 8],
                    ..Recipe::standard()
                };
                return Ok(InstanceFamily::new(name, None, recipe, caps));
            }
            _ => return Err(Error::Argument(format!("unknown family `{name}`"))),
        };
        Ok(InstanceFamily::new(name, ring, Recipe::standard(), caps))
    }

    pub fn defaults(caps: Caps) -> Vec<Self> {
        DEFAULT_FAMILIES
            .iter()
            .map(|n| InstanceFamily::named(n, caps).expect("default family"))
            .collect()
    }

    pub fn ring_table(&self) -> Result<Option<Arc<RingTable>>> {
        self.ring.as_ref().map(|r| Ok(Arc::new(r.build()?))).transpose()
    }
}

/// A generated module with the expression that rebuilds it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub expr: ModuleExpr,
    pub module: ModuleTable,
}

/// What generation kept and what it dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyManifest {
    pub family: String,
    pub ring: Option<String>,
    pub candidates: usize,
    pub kept: usize,
    pub truncations: Vec<String>,
}

#[derive(Default)]
struct Drops {
    order: usize,
    end: usize,
    end_space: usize,
    lattice: usize,
}

struct Builder {
    caps: Caps,
    kept: Vec<(ModuleExpr, ModuleTable)>,
    /// Isomorphism buckets over kept and rejected modules; `true` marks kept.
    buckets: HashMap<(usize, (Vec<usize>, Vec<usize>)), Vec<(ModuleTable, bool)>>,
    drops: Drops,
    candidates: usize,
    bounds: Bounds,
}

impl Builder {
    fn new(caps: Caps) -> Self {
        Builder {
            caps,
            kept: Vec::new(),
            buckets: HashMap::new(),
            drops: Drops::default(),
            candidates: 0,
            bounds: Bounds {
                ring: crate::bitset::MAX_ELEMENTS,
                module: crate::bitset::MAX_ELEMENTS,
            },
        }
    }

    /// Offers a candidate; returns its module when it is a new isomorphism class.
    fn offer(&mut self, expr: ModuleExpr, module: ModuleTable) -> Result<bool> {
        self.candidates += 1;
        if module.order() > self.caps.max_order {
            self.drops.order += 1;
            return Ok(false);
        }
        let key = (module.order(), iso_invariant(&module));
        let bucket = self.buckets.entry(key).or_default();
        for (other, _) in bucket.iter() {
            if find_isomorphism(&module, other)?.is_some() {
                return Ok(false);
            }
        }
        let admissible = match HomSearch::with_filter(&module, &module, DEFAULT_HOM_BOUND, |_, _| true) {
            Ok(search) => {
                if search.count() > self.caps.max_end {
                    self.drops.end += 1;
                    false
                } else {
                    true
                }
            }
            Err(Error::Size { .. }) => {
                self.drops.end_space += 1;
                false
            }
            Err(e) => return Err(e),
        };
        let admissible = admissible
            && match module.lattice() {
                Ok(_) => true,
                Err(Error::Size { .. }) => {
                    self.drops.lattice += 1;
                    false
                }
                Err(e) => return Err(e),
            };
        bucket.push((module.clone(), admissible));
        if admissible {
            self.kept.push((expr, module));
        }
        Ok(admissible)
    }

    fn build(&self, expr: &ModuleExpr) -> Result<Option<ModuleTable>> {
        match expr.build_bounded(self.bounds) {
            Ok(m) => Ok(Some(m)),
            Err(Error::Size { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }
}

/// Parent-element generators of a submodule, minimal within the submodule.
pub fn submodule_generators(m: &ModuleTable, s: &Submodule) -> Result<Vec<usize>> {
    let r = m.restrict(s)?;
    Ok(r.module
        .minimal_generating_set()
        .iter()
        .map(|&g| r.embedding[g])
        .collect())
}

/// Generates the deduplicated instance list of a family within its caps.
pub fn generate_family(family: &InstanceFamily) -> Result<(Vec<Instance>, FamilyManifest)> {
    let ring = family.ring_table()?;
    let mut b = Builder::new(family.caps);
    let recipe = &family.recipe;
    let mut sum_order_drops = 0usize;

    let mut bases: Vec<(ModuleExpr, ModuleTable)> = Vec::new();
    match (&family.ring, &ring) {
        (Some(rexpr), Some(r)) => {
            let reg = ModuleExpr::Regular(rexpr.clone());
            let regular = ModuleTable::regular(r);
            let mut cyclic_classes: Vec<(ModuleExpr, ModuleTable)> = Vec::new();
            if recipe.cyclics || recipe.max_summands > 0 {
                for ideal in r.right_ideals() {
                    let expr = if ideal.len() == 1 {
                        reg.clone()
                    } else {
                        ModuleExpr::Quotient(Box::new(reg.clone()), submodule_generators(&regular, ideal)?)
                    };
                    let module = match b.build(&expr)? {
                        Some(m) => m,
                        None => continue,
                    };
                    let new = if recipe.cyclics {
                        b.offer(expr.clone(), module.clone())?
                    } else {
                        true
                    };
                    if new && !module.is_zero() {
                        cyclic_classes.push((expr, module));
                    }
                }
            }
            bases.extend(cyclic_classes.iter().cloned());
            for k in 2..=recipe.max_summands {
                for combo in multisets(cyclic_classes.len(), k) {
                    let order = combo
                        .iter()
                        .try_fold(1usize, |acc, &i| acc.checked_mul(cyclic_classes[i].1.order()))
                        .unwrap_or(usize::MAX);
                    if order > family.caps.max_order {
                        sum_order_drops += 1;
                        continue;
                    }
                    let expr = combo[1..].iter().fold(cyclic_classes[combo[0]].0.clone(), |acc, &i| {
                        ModuleExpr::Sum(Box::new(acc), Box::new(cyclic_classes[i].0.clone()))
                    });
                    if let Some(module) = b.build(&expr)? {
                        if b.offer(expr.clone(), module.clone())? {
                            bases.push((expr, module));
                        }
                    }
                }
            }
        }
        (None, _) => {
            if !recipe.invariants.is_empty() && recipe.max_summands > 0 {
                let zero = ModuleExpr::Zabelian(Vec::new());
                if let Some(m) = b.build(&zero)? {
                    b.offer(zero, m)?;
                }
                let mut groups: Vec<Vec<usize>> = Vec::new();
                for k in 1..=recipe.max_summands {
                    for combo in multisets(recipe.invariants.len(), k) {
                        groups.push(combo.iter().map(|&i| recipe.invariants[i]).collect());
                    }
                }
                groups.sort_by_key(|g| (g.iter().product::<usize>(), g.clone()));
                for g in groups {
                    let order: usize = g.iter().product();
                    if order > family.caps.max_order {
                        sum_order_drops += 1;
                        continue;
                    }
                    let expr = ModuleExpr::Zabelian(g);
                    if let Some(module) = b.build(&expr)? {
                        if b.offer(expr.clone(), module.clone())? {
                            bases.push((expr, module));
                        }
                    }
                }
            }
        }
        (Some(_), None) => unreachable!("ring expression without table"),
    }

    if recipe.closure {
        for (expr, module) in &bases {
            let lattice = match module.lattice() {
                Ok(l) => l,
                Err(Error::Size { .. }) => continue,
                Err(e) => return Err(e),
            };
            for s in lattice.submodules() {
                if s.len() == 1 || s.len() == module.order() {
                    continue;
                }
                let gens = submodule_generators(module, s)?;
                for e in [
                    ModuleExpr::Sub(Box::new(expr.clone()), gens.clone()),
                    ModuleExpr::Quotient(Box::new(expr.clone()), gens),
                ] {
                    if let Some(m) = b.build(&e)? {
                        b.offer(e, m)?;
                    }
                }
            }
        }
    }

    let mut truncations = Vec::new();
    if sum_order_drops + b.drops.order > 0 {
        truncations.push(format!(
            "{} candidates above the order cap {}",
            sum_order_drops + b.drops.order,
            family.caps.max_order
        ));
    }
    if b.drops.end > 0 {
        truncations.push(format!(
            "{} isomorphism classes with endomorphism ring above {}",
            b.drops.end, family.caps.max_end
        ));
    }
    if b.drops.end_space > 0 {
        truncations.push(format!(
            "{} isomorphism classes whose endomorphism search space exceeds {}",
            b.drops.end_space, DEFAULT_HOM_BOUND
        ));
    }
    if b.drops.lattice > 0 {
        truncations.push(format!("{} isomorphism classes above the lattice guard", b.drops.lattice));
    }
    let mut kept = b.kept;
    if kept.len() > family.caps.max_instances {
        truncations.push(format!(
            "{} instances beyond the instance cap {}",
            kept.len() - family.caps.max_instances,
            family.caps.max_instances
        ));
        kept.truncate(family.caps.max_instances);
    }
    let instances: Vec<Instance> = kept
        .into_iter()
        .enumerate()
        .map(|(i, (expr, module))| Instance {
            id: format!("{}/{}", family.name, i),
            expr,
            module,
        })
        .collect();
    let manifest = FamilyManifest {
        family: family.name.clone(),
        ring: family.ring.as_ref().map(|r| r.to_string()),
        candidates: b.candidates + sum_order_drops,
        kept: instances.len(),
        truncations,
    };
    Ok((instances, manifest))
}

/// Nondecreasing index sequences of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    if k > 0 {
        rec(n, k, 0, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(family: &InstanceFamily) -> Vec<String> {
        generate_family(family)
            .unwrap()
            .0
            .iter()
            .map(|i| i.expr.to_string())
            .collect()
    }

    #[test]
    fn zmod4_cyclics_only() {
        let recipe = Recipe {
            cyclics: true,
            max_summands: 1,
            closure: false,
            invariants: vec![],
        };
        let f = InstanceFamily::new("z4", Some(zmod(4)), recipe, Caps::default());
        let (inst, manifest) = generate_family(&f).unwrap();
        let mut orders: Vec<usize> = inst.iter().map(|i| i.module.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4]);
        assert!(manifest.truncations.is_empty());
    }

    #[test]
    fn integer_family_small() {
        let recipe = Recipe {
            cyclics: false,
            max_summands: 3,
            closure: false,
            invariants: vec![2, 3, 4],
        };
        let caps = Caps {
            max_order: 12,
            ..Caps::default()
        };
        let f = InstanceFamily::new("z", None, recipe, caps);
        let (inst, manifest) = generate_family(&f).unwrap();
        let mut sizes: Vec<(usize, String)> = inst.iter().map(|i| (i.module.order(), i.expr.to_string())).collect();
        sizes.sort();
        let listed: Vec<String> = sizes.into_iter().map(|(_, s)| s).collect();
        for want in [
            "module zabelian 2",
            "module zabelian 3",
            "module zabelian 4",
            "module zabelian 2 2",
            "module zabelian 2 4",
            "module zabelian 2 3",
        ] {
            assert!(listed.iter().any(|s| s == want), "{want} missing from {listed:?}");
        }
        assert!(!manifest.truncations.is_empty());
    }

    #[test]
    fn empty_recipe_is_empty() {
        let f = InstanceFamily::new("e", Some(zmod(4)), Recipe::empty(), Caps::default());
        assert!(generate_family(&f).unwrap().0.is_empty());
        let f = InstanceFamily::new("e", None, Recipe::empty(), Caps::default());
        assert!(generate_family(&f).unwrap().0.is_empty());
    }

    #[test]
    fn generation_is_deterministic_and_rebuildable() {
        let f = InstanceFamily::named("t2f2", Caps::default()).unwrap();
        let a = names(&f);
        assert_eq!(a, names(&f));
        for inst in generate_family(&f).unwrap().0 {
            let rebuilt: ModuleExpr = inst.expr.to_string().parse().unwrap();
            assert_eq!(rebuilt.build().unwrap(), inst.module);
        }
    }

    #[test]
    fn m2f2_catalog() {
        let f = InstanceFamily::named("m2f2", Caps::default()).unwrap();
        let (inst, _) = generate_family(&f).unwrap();
        let mut orders: Vec<usize> = inst.iter().map(|i| i.module.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 4, 16, 64]);
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(2, 3).len(), 4);
        assert!(multisets(0, 2).is_empty());
    }
}
