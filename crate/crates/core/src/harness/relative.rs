//! Pair and direct-sum checks over catalog factors.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::classify::{is_relative_c2, is_relative_goldie_rickart, Analysis, Predicate as P};
use crate::error::Result;
use crate::harness::catalog::{Catalog, FamilyCatalog};
use crate::harness::family::Instance;
use crate::harness::registry::{fold, sweep_modules, Record, Step, SuiteConfig, Tally};
use crate::hom::{is_relatively_injective, HomSearch};
use crate::instance::ModuleExpr;
use crate::module::{ModuleTable, Submodule};
use crate::torsion::goldie_torsion;

/// A pairwise relation cached over the factors of one family.
struct Grid {
    n: usize,
    cells: Vec<OnceLock<Result<bool>>>,
}

impl Grid {
    fn new(n: usize) -> Self {
        Grid {
            n,
            cells: (0..n * n).map(|_| OnceLock::new()).collect(),
        }
    }

    fn get(&self, i: usize, j: usize, f: impl FnOnce() -> Result<bool>) -> Result<bool> {
        self.cells[i * self.n + j].get_or_init(f).clone()
    }
}

/// A direct sum of 2 or 3 factors, indices nondecreasing.
pub(crate) struct Tuple {
    pub parts: Vec<usize>,
    sum: OnceLock<Result<(Instance, Analysis)>>,
}

pub(crate) struct FamilySuite<'c> {
    pub fam: &'c FamilyCatalog,
    /// Nonzero analysed instances usable as summands.
    pub factors: Vec<(&'c Instance, &'c Analysis)>,
    pub tuples: Vec<Tuple>,
    rel_gr: Grid,
    rel_c2: Grid,
    rel_inj: Grid,
}

/// Lazily evaluated relative data for every family of a catalog.
pub struct RelativeSuite<'c> {
    pub(crate) families: Vec<FamilySuite<'c>>,
    pub(crate) config: SuiteConfig,
}

impl<'c> RelativeSuite<'c> {
    pub fn new(cat: &'c Catalog, config: &SuiteConfig) -> Self {
        let families = cat
            .families
            .iter()
            .map(|fam| {
                let factors: Vec<_> = fam
                    .analysed()
                    .filter(|(i, _)| !i.module.is_zero() && 2 * i.module.order() <= config.max_sum_order)
                    .collect();
                let n = factors.len();
                let orders: Vec<usize> = factors.iter().map(|(i, _)| i.module.order()).collect();
                let mut tuples = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        let o2 = orders[i] * orders[j];
                        if o2 > config.max_sum_order {
                            continue;
                        }
                        tuples.push(Tuple::new(vec![i, j]));
                        for k in j..n {
                            let o3 = o2 * orders[k];
                            if o3 <= config.max_sum_order {
                                tuples.push(Tuple::new(vec![i, j, k]));
                            }
                        }
                    }
                }
                tuples.sort_by_key(|t| (t.parts.len(), t.parts.clone()));
                FamilySuite {
                    fam,
                    factors,
                    tuples,
                    rel_gr: Grid::new(n),
                    rel_c2: Grid::new(n),
                    rel_inj: Grid::new(n),
                }
            })
            .collect();
        RelativeSuite {
            families,
            config: *config,
        }
    }

    /// Number of direct sums in the suite.
    pub fn tuple_count(&self) -> usize {
        self.families.iter().map(|f| f.tuples.len()).sum()
    }
}

impl Tuple {
    fn new(parts: Vec<usize>) -> Self {
        Tuple {
            parts,
            sum: OnceLock::new(),
        }
    }
}

impl<'c> FamilySuite<'c> {
    fn module(&self, i: usize) -> &ModuleTable {
        &self.factors[i].0.module
    }

    /// Factor `i` is factor `j`-Goldie Rickart.
    fn gr(&self, i: usize, j: usize) -> Result<bool> {
        self.rel_gr.get(i, j, || is_relative_goldie_rickart(self.module(i), self.module(j)))
    }

    fn c2(&self, i: usize, j: usize) -> Result<bool> {
        self.rel_c2.get(i, j, || is_relative_c2(self.module(i), self.module(j)))
    }

    /// Factor `i` is factor `j`-injective.
    fn inj(&self, i: usize, j: usize) -> Result<bool> {
        self.rel_inj.get(i, j, || is_relatively_injective(self.module(i), self.module(j)))
    }

    fn sum<'t>(&self, t: &'t Tuple) -> Result<&'t (Instance, Analysis)> {
        t.sum
            .get_or_init(|| {
                let first = self.factors[t.parts[0]].0;
                let mut module = first.module.clone();
                let mut expr = first.expr.clone();
                for &p in &t.parts[1..] {
                    let f = self.factors[p].0;
                    module = ModuleTable::direct_sum(&module, &f.module)?.module;
                    expr = ModuleExpr::Sum(Box::new(expr), Box::new(f.expr.clone()));
                }
                let id = format!(
                    "{}/{}",
                    self.fam.name(),
                    t.parts
                        .iter()
                        .map(|&p| self.factors[p].0.id.rsplit('/').next().unwrap_or_default().to_string())
                        .collect::<Vec<_>>()
                        .join("+")
                );
                let analysis = Analysis::new(&module)?;
                Ok((Instance { id, expr, module }, analysis))
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn tuple_id(&self, t: &Tuple) -> (String, String) {
        let names: Vec<&str> = t.parts.iter().map(|&p| self.factors[p].0.id.as_str()).collect();
        let expr = t.parts[1..].iter().fold(self.factors[t.parts[0]].0.expr.clone(), |acc, &p| {
            ModuleExpr::Sum(Box::new(acc), Box::new(self.factors[p].0.expr.clone()))
        });
        (names.join(" + "), expr.to_string())
    }

    /// Some ordering of the tuple has `M_σi` `M_σj`-injective for all `i < j`.
    fn injective_chain(&self, t: &Tuple) -> Result<bool> {
        let p = &t.parts;
        let orders: Vec<Vec<usize>> = if p.len() == 2 {
            vec![vec![p[0], p[1]], vec![p[1], p[0]]]
        } else {
            permutations3(p)
        };
        for o in orders {
            let mut ok = true;
            'pairs: for a in 0..o.len() {
                for b in a + 1..o.len() {
                    if !self.inj(o[a], o[b])? {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn probes(&self, max: usize) -> Vec<usize> {
        (0..self.factors.len()).filter(|&i| self.module(i).order() <= max).collect()
    }
}

fn permutations3(p: &[usize]) -> Vec<Vec<usize>> {
    let idx = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    idx.iter().map(|o| o.iter().map(|&i| p[i]).collect()).collect()
}

/// Runs `f` over every tuple of every family in parallel, folding in order.
fn over_tuples<F>(suite: &RelativeSuite, f: F) -> Tally
where
    F: Fn(&FamilySuite, &Tuple) -> Result<Step> + Sync,
{
    let items: Vec<(&FamilySuite, &Tuple)> =
        suite.families.iter().flat_map(|fs| fs.tuples.iter().map(move |t| (fs, t))).collect();
    let records: Vec<Record> = items
        .par_iter()
        .map(|(fs, t)| {
            let (id, spec) = fs.tuple_id(t);
            Record::new(id, spec, f(fs, t))
        })
        .collect();
    fold(records)
}

fn all_pairs(t: &Tuple, rel: impl Fn(usize, usize) -> Result<bool>) -> Result<bool> {
    for &i in &t.parts {
        for &j in &t.parts {
            if !rel(i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn relative_definition(cat: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    let mut tally = sweep_modules(cat, |_, _, a| {
        let m = a.module();
        let self_rel = is_relative_goldie_rickart(m, m)?;
        let g = a.holds(P::GoldieRickart)?;
        if self_rel != g {
            return Ok(Step::Violated(format!("M-goldie_rickart={self_rel}, goldie_rickart={g}")));
        }
        let zero = m.quotient(&m.full())?.module;
        Ok(Step::require(is_relative_goldie_rickart(m, &zero)?, || "not 0-goldie_rickart".into()))
    });
    let items: Vec<(&FamilySuite, usize, usize)> = suite
        .families
        .iter()
        .flat_map(|fs| {
            let probes = fs.probes(suite.config.max_probe_order);
            let n = fs.factors.len();
            probes.into_iter().flat_map(move |j| (0..n).map(move |i| (fs, i, j)))
        })
        .collect();
    let records: Vec<Record> = items
        .par_iter()
        .map(|&(fs, i, j)| {
            let (mi, ni) = (fs.factors[i].0, fs.factors[j].0);
            let step = (|| {
                let z2m = fs.factors[i].1.profile().z2;
                let z2n = goldie_torsion(&ni.module)?.z2;
                let mut ok = true;
                HomSearch::new(&mi.module, &ni.module)?.for_each(|t| {
                    ok = z2m.iter().all(|x| z2n.contains(t[x]));
                    if ok {
                        std::ops::ControlFlow::Continue(())
                    } else {
                        std::ops::ControlFlow::Break(())
                    }
                });
                Ok(Step::require(ok, || "some f maps Z2(M) outside Z2(N)".into()))
            })();
            Record::new(format!("{} -> {}", mi.id, ni.id), format!("{} ; {}", mi.expr, ni.expr), step)
        })
        .collect();
    let pairs = fold(records);
    merge(&mut tally, pairs);
    tally
}

fn merge(into: &mut Tally, other: Tally) {
    into.checked += other.checked;
    into.skipped += other.skipped;
    if into.failure.is_none() {
        into.failure = other.failure;
    }
    into.notes.extend(other.notes);
}

/// Submodules of `m` as standalone modules.
fn submodule_modules(m: &ModuleTable) -> Result<Vec<ModuleTable>> {
    m.lattice()?.submodules().iter().map(|s| Ok(m.restrict(s)?.module)).collect()
}

fn summand_modules(a: &Analysis) -> Result<Vec<(Submodule, ModuleTable)>> {
    a.summands().into_iter().map(|s| Ok((s, a.part(&s)?.restriction.module.clone()))).collect()
}

pub(crate) fn relative_restriction(_: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    let max = suite.config.max_pair_scan_order.min(suite.config.max_probe_order.max(1) * 2);
    let items: Vec<(&FamilySuite, usize, usize)> = suite
        .families
        .iter()
        .flat_map(|fs| {
            let small = fs.probes(max);
            let pairs: Vec<(usize, usize)> =
                small.iter().flat_map(|&i| small.iter().map(move |&j| (i, j))).collect();
            pairs.into_iter().map(move |(i, j)| (fs, i, j))
        })
        .collect();
    let records: Vec<Record> = items
        .par_iter()
        .map(|&(fs, i, j)| {
            let (mi, nj) = (fs.factors[i].0, fs.factors[j].0);
            let step = (|| {
                let lhs = fs.gr(i, j)?;
                let subs = submodule_modules(&nj.module)?;
                let mut rhs = true;
                'outer: for (_, s) in summand_modules(fs.factors[i].1)? {
                    for n1 in &subs {
                        if !is_relative_goldie_rickart(&s, n1)? {
                            rhs = false;
                            break 'outer;
                        }
                    }
                }
                Ok(Step::require(lhs == rhs, || format!("M N-goldie_rickart={lhs}, all restrictions={rhs}")))
            })();
            Record::new(format!("{} -> {}", mi.id, nj.id), format!("{} ; {}", mi.expr, nj.expr), step)
        })
        .collect();
    fold(records)
}

pub(crate) fn relative_corollary(cat: &Catalog, config: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let m = a.module();
        if m.order() > config.max_pair_scan_order {
            return Ok(Step::NotApplicable);
        }
        let g = a.holds(P::GoldieRickart)?;
        let summands = summand_modules(a)?;
        let subs = submodule_modules(m)?;
        let mut second = true;
        'outer: for (_, n) in &summands {
            for k in &subs {
                if !is_relative_goldie_rickart(n, k)? {
                    second = false;
                    break 'outer;
                }
            }
        }
        // Restricted preimages of Z2(K) for f : M -> K with N, K summands.
        let mut third = true;
        'outer3: for (_, k) in &summands {
            let z2k = goldie_torsion(k)?.z2;
            let maps = crate::hom::hom_set(m, k)?;
            for (n_set, _) in &summands {
                let part = a.part(n_set)?;
                let r = &part.restriction;
                for f in &maps {
                    let pre: Submodule = (0..r.module.order()).filter(|&x| z2k.contains(f.apply(r.embedding[x]))).collect();
                    if !part.analysis.is_summand(&pre) {
                        third = false;
                        break 'outer3;
                    }
                }
            }
        }
        Ok(Step::require(g == second && g == third, || format!("(1)={g}, (2)={second}, (3)={third}")))
    })
}

pub(crate) fn c2_direct_sums(_: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    over_tuples(suite, |fs, t| {
        if !all_pairs(t, |i, j| fs.c2(i, j))? {
            return Ok(Step::NotApplicable);
        }
        let g = fs.sum(t)?.1.holds(P::GoldieRickart)?;
        let rel = all_pairs(t, |i, j| fs.gr(i, j))?;
        Ok(Step::require(g == rel, || format!("sum goldie_rickart={g}, pairwise relative={rel}")))
    })
}

pub(crate) fn relative_sip(_: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    let items: Vec<(&FamilySuite, usize, &Tuple)> = suite
        .families
        .iter()
        .flat_map(|fs| {
            let probes = fs.probes(suite.config.max_probe_order);
            probes
                .into_iter()
                .flat_map(move |n| fs.tuples.iter().map(move |t| (fs, n, t)))
        })
        .collect();
    let records: Vec<Record> = items
        .par_iter()
        .map(|&(fs, n, t)| {
            let (tid, tspec) = fs.tuple_id(t);
            let probe = fs.factors[n].0;
            let step = (|| {
                let na = fs.factors[n].1;
                if !na.holds(P::SipOverZ2)? {
                    return Ok(Step::NotApplicable);
                }
                let sum = &fs.sum_module(t)?;
                let lhs = is_relative_goldie_rickart(&probe.module, sum)?;
                let mut rhs = true;
                for &i in &t.parts {
                    rhs &= fs.gr(n, i)?;
                }
                Ok(Step::require(lhs == rhs, || format!("N sum-goldie_rickart={lhs}, each factor={rhs}")))
            })();
            Record::new(format!("{} -> {tid}", probe.id), format!("{} ; {tspec}", probe.expr), step)
        })
        .collect();
    fold(records)
}

pub(crate) fn relative_sum_corollary(_: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    over_tuples(suite, |fs, t| {
        let sum = fs.sum_module(t)?;
        for &j in &t.parts {
            let lhs = is_relative_goldie_rickart(fs.module(j), &sum)?;
            let mut rhs = true;
            for &i in &t.parts {
                rhs &= fs.gr(j, i)?;
            }
            if lhs != rhs {
                return Ok(Step::Violated(format!("factor {j}: sum-goldie_rickart={lhs}, each factor={rhs}")));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn relative_injective_sums(_: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    let max = suite.config.max_probe_order;
    over_tuples(suite, |fs, t| {
        if !fs.injective_chain(t)? {
            return Ok(Step::NotApplicable);
        }
        let (_, sa) = fs.sum(t)?;
        for n in fs.probes(max) {
            let lhs = is_relative_goldie_rickart(sa.module(), fs.module(n))?;
            let mut rhs = true;
            for &i in &t.parts {
                rhs &= fs.gr(i, n)?;
            }
            if lhs != rhs {
                return Ok(Step::Violated(format!(
                    "probe {}: sum N-goldie_rickart={lhs}, each factor={rhs}",
                    fs.factors[n].0.id
                )));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn relative_injective_corollary(_: &Catalog, _: &SuiteConfig, suite: &RelativeSuite) -> Tally {
    over_tuples(suite, |fs, t| {
        if !fs.injective_chain(t)? {
            return Ok(Step::NotApplicable);
        }
        let g = fs.sum(t)?.1.holds(P::GoldieRickart)?;
        let rel = all_pairs(t, |i, j| fs.gr(i, j))?;
        Ok(Step::require(g == rel, || format!("sum goldie_rickart={g}, pairwise relative={rel}")))
    })
}

impl<'c> FamilySuite<'c> {
    /// The sum module without its analysis; cheaper when only homs into it are needed.
    fn sum_module(&self, t: &Tuple) -> Result<ModuleTable> {
        if let Some(Ok((i, _))) = t.sum.get() {
            return Ok(i.module.clone());
        }
        let mut module = self.module(t.parts[0]).clone();
        for &p in &t.parts[1..] {
            module = ModuleTable::direct_sum(&module, self.module(p))?.module;
        }
        Ok(module)
    }
}
