//! Module- and ring-level registry checks.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{intersection_closure, ring_predicates, Analysis, Predicate as P};
use crate::error::Result;
use crate::harness::catalog::{Catalog, FamilyCatalog};
use crate::harness::family::{submodule_generators, Instance};
use crate::harness::registry::{fold, sweep_families, sweep_modules, sweep_records, sweep_rings};
use crate::harness::registry::{Record, Step, SuiteConfig, Tally};
use crate::harness::relative::RelativeSuite;
use crate::harness::search::asymmetry_search;
use crate::hom::{HomSearch, DEFAULT_HOM_BOUND};
use crate::instance::{ModuleExpr, RingExpr};
use crate::iso::find_ring_isomorphism;
use crate::module::{ModuleTable, Submodule};
use crate::ring::{BaseRing, RingTable, Shape};
use crate::torsion::{goldie_torsion, intrinsic_z2, t_closed_submodules, t_operator};

/// Complements of `Z₂(M)` examined per instance.
const MAX_COMPLEMENTS: usize = 8;
/// Literal subsets of `End(M)` are enumerated up to this many endomorphisms.
const LITERAL_SUBSETS: usize = 10;

fn gr(a: &Analysis) -> Result<bool> {
    a.holds(P::GoldieRickart)
}

fn part_gr(a: &Analysis, k: &Submodule) -> Result<bool> {
    gr(&a.part(k)?.analysis)
}

fn is_zero(k: &Submodule) -> bool {
    k.len() == 1
}

/// The finite rings without zero divisors are the fields; the integers are a domain.
fn is_domain(m: &ModuleTable) -> bool {
    match m.base() {
        BaseRing::Integers => true,
        BaseRing::Finite(r) => has_no_zero_divisors(r),
    }
}

fn has_no_zero_divisors(r: &RingTable) -> bool {
    (1..r.order()).all(|a| (1..r.order()).all(|b| r.mul(a, b) != 0))
}

/// Torsion in the sense of nonzero annihilators: every finite abelian group
/// over the integers; only zero over a field.
fn is_torsion(m: &ModuleTable, n: &Submodule) -> bool {
    match m.base() {
        BaseRing::Integers => true,
        BaseRing::Finite(_) => is_zero(n),
    }
}

fn nontrivial_summands(a: &Analysis) -> Vec<(Submodule, Submodule)> {
    let order = a.module().order();
    a.summands()
        .into_iter()
        .filter(|k| !is_zero(k) && k.len() != order)
        .filter_map(|k| a.complement(&k).map(|c| (k, c)))
        .collect()
}

pub(crate) fn basic_classes(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let g = gr(a)?;
        let semisimple = a.summands().len() == a.lattice().len();
        let singular = a.holds(P::Singular)?;
        let torsion = a.holds(P::Z2Torsion)?;
        if (semisimple || singular || torsion) && !g {
            return Ok(Step::Violated(format!(
                "semisimple={semisimple} singular={singular} z2_torsion={torsion} but not goldie_rickart"
            )));
        }
        if a.holds(P::Nonsingular)? && a.holds(P::Rickart)? != g {
            return Ok(Step::Violated("nonsingular with rickart != goldie_rickart".into()));
        }
        Ok(Step::Held)
    })
}

pub(crate) fn indecomposable_gr(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !a.is_indecomposable() || !gr(a)? {
            return Ok(Step::NotApplicable);
        }
        let ok = a.holds(P::Rickart)? || a.holds(P::Z2Torsion)?;
        Ok(Step::require(ok, || "indecomposable goldie_rickart module neither rickart nor z2_torsion".into()))
    })
}

pub(crate) fn indecomposable_extending(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !a.is_indecomposable() || !a.holds(P::Extending)? {
            return Ok(Step::NotApplicable);
        }
        let ok = a.holds(P::Nonsingular)? || gr(a)?;
        Ok(Step::require(ok, || "indecomposable extending module neither nonsingular nor goldie_rickart".into()))
    })
}

pub(crate) fn t_baer_gr(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let tb = a.holds(P::TBaer)?;
        let g = gr(a)?;
        if tb && !g {
            return Ok(Step::Violated("t_baer but not goldie_rickart".into()));
        }
        if g && a.holds(P::SsipOverZ2)? && !tb {
            return Ok(Step::Violated("goldie_rickart with ssip over Z2 but not t_baer".into()));
        }
        Ok(Step::Held)
    })
}

pub(crate) fn t_extending_gr(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if a.holds(P::TExtending)? && !gr(a)? {
            return Ok(Step::Violated("t_extending but not goldie_rickart".into()));
        }
        let closed: BTreeSet<Submodule> = t_closed_submodules(a.module())?.into_iter().collect();
        match a.distinct_preimages().into_iter().find(|p| !closed.contains(p)) {
            Some(p) => Ok(Step::Violated(format!("preimage {p:?} is not t-closed"))),
            None => Ok(Step::Held),
        }
    })
}

/// Records `pred` on every catalog module of the family and, with `frees`,
/// on its free modules.
fn family_records<F>(fam: &FamilyCatalog, frees: bool, pred: F) -> Vec<Record>
where
    F: Fn(&Instance, &Analysis) -> Result<Step> + Sync,
{
    let mut out: Vec<Record> = fam
        .entries
        .par_iter()
        .map(|e| match &e.analysis {
            Some(a) => Record::of(&e.instance, pred(&e.instance, a)),
            None => Record::of(&e.instance, Ok(Step::Skipped)),
        })
        .collect();
    if frees {
        for f in fam.frees() {
            out.push(match &f.analysis {
                Ok(a) => Record::of(&f.instance, pred(&f.instance, a)),
                Err(e) => Record::of(&f.instance, Err(e.clone())),
            });
        }
    }
    out
}

fn require_all(a: &Analysis, preds: &[P]) -> Result<Step> {
    for &p in preds {
        if !a.holds(p)? {
            return Ok(Step::Violated(format!("{p} fails")));
        }
    }
    Ok(Step::Held)
}

pub(crate) fn sigma_t_extending(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| {
        if !ring.is_z2_semiperfect() {
            return Vec::new();
        }
        family_records(fam, true, |_, a| require_all(a, &[P::TExtending, P::TBaer, P::GoldieRickart]))
    })
}

fn lower_t2f2() -> RingTable {
    RingExpr::Triangular(Shape::Lower, 2, Box::new(RingExpr::Zmod(2)))
        .build()
        .expect("small ring")
}

pub(crate) fn morita_lower_triangular(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    let target = lower_t2f2();
    sweep_rings(cat, |fam, ring| {
        let recognised = ring.is_semisimple()
            || (ring.order() == target.order() && find_ring_isomorphism(ring, &target).is_some());
        if !recognised {
            return Vec::new();
        }
        family_records(fam, true, |_, a| require_all(a, &[P::GoldieRickart]))
    })
}

pub(crate) fn goldie_decomposition(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let g = gr(a)?;
        let z2 = a.profile().z2;
        let comps = a.complements(&z2);
        if comps.is_empty() != a.complement(&z2).is_none() {
            return Ok(Step::Violated("complement search disagrees with the lattice".into()));
        }
        let mut verdicts = Vec::new();
        for c in comps.iter().take(MAX_COMPLEMENTS) {
            let p = a.part(c)?;
            verdicts.push(p.analysis.holds(P::Rickart)? && p.analysis.holds(P::Nonsingular)?);
        }
        let rhs = verdicts.first().copied().unwrap_or(false);
        if verdicts.iter().any(|&v| v != rhs) {
            return Ok(Step::Violated("complements of Z2(M) disagree".into()));
        }
        Ok(Step::require(g == rhs, || {
            format!("goldie_rickart={g} but Z2 summand with nonsingular Rickart complement={rhs}")
        }))
    })
}

pub(crate) fn z2_semiperfect_rings(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| {
        if !ring.is_z2_semiperfect() {
            return Vec::new();
        }
        family_records(fam, true, |_, a| require_all(a, &[P::GoldieRickart]))
    })
}

/// First match of `find` over the analysed catalog, in catalog order.
fn first_match<F>(cat: &Catalog, find: F) -> (Tally, Option<String>)
where
    F: Fn(&Instance, &Analysis) -> Result<Option<String>> + Sync,
{
    let items: Vec<_> = cat.entries().collect();
    let found: Vec<Option<Result<Option<String>>>> = items
        .par_iter()
        .map(|(_, e)| e.analysis.as_ref().map(|a| find(&e.instance, a)))
        .collect();
    let mut tally = Tally::default();
    let mut first = None;
    for ((_, e), r) in items.iter().zip(found) {
        let step = match r {
            None => Ok(Step::Skipped),
            Some(Ok(hit)) => {
                if first.is_none() {
                    first = hit.map(|h| format!("{} ({}): {h}", e.instance.id, e.instance.expr));
                }
                Ok(Step::Held)
            }
            Some(Err(e)) => Err(e),
        };
        tally.record(&e.instance.id, &e.instance.expr.to_string(), step);
    }
    (tally, first)
}

pub(crate) fn quotient_remark(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    let (mut tally, first) = first_match(cat, |_, a| {
        if gr(a)? {
            return Ok(None);
        }
        let q = a.module().quotient(&a.profile().z2)?;
        let qa = Analysis::new(&q.module)?;
        Ok(gr(&qa)?.then(|| "M/Z2(M) is Goldie Rickart, M is not".to_string()))
    });
    tally.note(match first {
        Some(w) => format!("finite analogue found: {w}"),
        None => "no finite analogue in the catalog".to_string(),
    });
    tally
}

pub(crate) fn rickart_vs_gr_examples(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    let expr = ModuleExpr::Zabelian(vec![4]);
    let step = (|| {
        let m = expr.build()?;
        let a = Analysis::new(&m)?;
        let v = a.verdict(P::Rickart)?;
        let witness_ok = matches!(
            &v.witness,
            Some(crate::classify::Witness::Endomorphism { map, submodule, .. })
                if map == &[0, 2, 0, 2] && submodule.iter().collect::<Vec<_>>() == [0, 2]
        );
        Ok(Step::require(gr(&a)? && !v.holds && witness_ok, || {
            format!("expected goldie_rickart and not rickart via multiplication by 2, got {v:?}")
        }))
    })();
    let mut records = vec![Record::new("z4-over-z", format!("{expr}"), step)];
    let (_, first) = first_match(cat, |_, a| Ok((a.holds(P::Rickart)? && !gr(a)?).then(|| "rickart, not goldie_rickart".into())));
    records[0].note = Some(match first {
        Some(w) => format!("finite Rickart module that is not Goldie Rickart: {w}"),
        None => "no Rickart module that fails Goldie Rickart in the catalog".to_string(),
    });
    fold(records)
}

pub(crate) fn rickart_versus_gr(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let rhs = a.holds(P::Rickart)? && a.holds(P::Z2Summand)?;
        let mut lhs = gr(a)?;
        if lhs {
            let pairs: BTreeSet<(Submodule, Submodule)> =
                a.kernels().iter().copied().zip(a.preimages().iter().copied()).collect();
            for (ker, pre) in pairs {
                let p = a.part(&pre)?;
                if !p.analysis.is_summand(&p.restriction.pull(&ker)) {
                    lhs = false;
                    break;
                }
            }
        }
        Ok(Step::require(lhs == rhs, || format!("condition (kernels within preimages)={lhs}, rickart with Z2 summand={rhs}")))
    })
}

pub(crate) fn rickart_singular_summand(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let g = gr(a)?;
        let z_summand = a.is_summand(&a.profile().z);
        if a.holds(P::Rickart)? && z_summand && !g {
            return Ok(Step::Violated("rickart with Z(M) summand but not goldie_rickart".into()));
        }
        let ring_nonsingular = match a.module().base() {
            BaseRing::Integers => true,
            BaseRing::Finite(r) => r.right_singular_ideal().len() == 1,
        };
        Ok(Step::require(!(g && ring_nonsingular) || z_summand, || {
            "goldie_rickart over a right nonsingular ring with Z(M) not a summand".into()
        }))
    })
}

/// A section of `M → M/P`, when one exists.
fn has_section(m: &ModuleTable, p: &Submodule) -> Result<bool> {
    let q = m.quotient(p)?;
    let gens = q.module.minimal_generating_set().to_vec();
    let search = HomSearch::with_filter(&q.module, m, DEFAULT_HOM_BOUND, |i, y| q.projection[y] == gens[i])?;
    Ok(search.find(|_| true).is_some())
}

pub(crate) fn split_sequence(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let mut all = true;
        for p in a.distinct_preimages() {
            let split = has_section(a.module(), &p)?;
            if split != a.is_summand(&p) {
                return Ok(Step::Violated(format!("splitting of M -> M/{p:?} disagrees with summand test")));
            }
            all &= split;
        }
        let g = gr(a)?;
        Ok(Step::require(all == g, || format!("all sequences split={all}, goldie_rickart={g}")))
    })
}

/// Outcome of the semisimple-ring sweep on one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleSweep {
    pub family: String,
    pub semisimple: bool,
    pub checked: usize,
    /// First module that is not Goldie Rickart or has non-projective `Z₂(M)`.
    pub witness: Option<SweepWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepWitness {
    pub instance: String,
    pub spec: String,
    pub goldie_rickart: bool,
    pub z2_is_whole_module: bool,
    pub z2_projective: bool,
}

fn z2_projective(a: &Analysis) -> Result<bool> {
    a.part(&a.profile().z2)?.analysis.holds(P::Projective)
}

/// Sweeps a family for modules failing "Goldie Rickart with projective `Z₂`".
pub fn semisimple_sweep(fam: &FamilyCatalog) -> Result<SemisimpleSweep> {
    let semisimple = fam.ring.as_ref().is_some_and(|r| r.is_semisimple());
    let mut checked = 0;
    let mut witness = None;
    for (inst, a) in fam.analysed() {
        checked += 1;
        let g = gr(a)?;
        let proj = z2_projective(a)?;
        if !(g && proj) {
            witness = Some(SweepWitness {
                instance: inst.id.clone(),
                spec: inst.expr.to_string(),
                goldie_rickart: g,
                z2_is_whole_module: a.profile().z2.len() == a.module().order(),
                z2_projective: proj,
            });
            break;
        }
    }
    Ok(SemisimpleSweep {
        family: fam.name().to_string(),
        semisimple,
        checked,
        witness,
    })
}

pub(crate) fn semisimple_rings(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_families(cat, |fam| {
        let semisimple = fam.ring.as_ref().is_some_and(|r| r.is_semisimple());
        if semisimple {
            return family_records(fam, true, |_, a| {
                let g = gr(a)?;
                let proj = z2_projective(a)?;
                Ok(Step::require(g && proj, || format!("goldie_rickart={g}, Z2 projective={proj}")))
            });
        }
        let sweep = semisimple_sweep(fam);
        let note = match &sweep {
            Ok(SemisimpleSweep { witness: Some(w), .. }) => format!(
                "{}: not semisimple, witness {} ({}) with goldie_rickart={} and Z2 projective={}",
                fam.name(),
                w.instance,
                w.spec,
                w.goldie_rickart,
                w.z2_projective
            ),
            Ok(_) => format!("{}: not semisimple, no witness among catalog modules", fam.name()),
            Err(e) => format!("{}: sweep stopped: {e}", fam.name()),
        };
        vec![Record::ring(fam, sweep.map(|_| Step::NotApplicable)).with_note(note)]
    })
}

/// The restriction of every endomorphism of `M` to `n`, as tables on `n`.
fn restrictions(a: &Analysis, n: &Submodule) -> Result<HashSet<Vec<usize>>> {
    let part = a.part(n)?;
    let r = &part.restriction;
    Ok(a
        .end()
        .maps()
        .iter()
        .map(|f| r.embedding.iter().map(|&x| r.position[f.apply(x)].expect("n is invariant")).collect())
        .collect())
}

fn fully_invariant(a: &Analysis, n: &Submodule) -> bool {
    a.end().maps().iter().all(|f| a.module().image_of(&f.table, n).is_subset(n))
}

pub(crate) fn fully_invariant_inheritance(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !gr(a)? {
            return Ok(Step::NotApplicable);
        }
        let mut applied = false;
        for n in a.lattice().submodules() {
            if !fully_invariant(a, n) {
                continue;
            }
            let part = a.part(n)?;
            if restrictions(a, n)?.len() != part.analysis.end().len() {
                continue;
            }
            applied = true;
            if !gr(&part.analysis)? {
                return Ok(Step::Violated(format!("fully invariant {n:?} with extendable endomorphisms is not goldie_rickart")));
            }
        }
        Ok(if applied { Step::Held } else { Step::NotApplicable })
    })
}

pub(crate) fn quasi_injective_duo(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !gr(a)? || !a.holds(P::Duo)? || !a.holds(P::QuasiInjective)? {
            return Ok(Step::NotApplicable);
        }
        for n in a.lattice().submodules() {
            if !part_gr(a, n)? {
                return Ok(Step::Violated(format!("submodule {n:?} is not goldie_rickart")));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn summand_closure(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !gr(a)? {
            return Ok(Step::NotApplicable);
        }
        for s in a.summands() {
            if !part_gr(a, &s)? {
                return Ok(Step::Violated(format!("summand {s:?} is not goldie_rickart")));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn direct_sum_search(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    let (mut tally, first) = first_match(cat, |_, a| {
        if gr(a)? {
            return Ok(None);
        }
        for (k, c) in nontrivial_summands(a) {
            if part_gr(a, &k)? && part_gr(a, &c)? {
                return Ok(Some(format!("{k:?} + {c:?} with both summands Goldie Rickart")));
            }
        }
        Ok(None)
    });
    tally.note(match first {
        Some(w) => format!("finite example: {w}"),
        None => "no finite example in the catalog".to_string(),
    });
    tally
}

fn sum_equivalence(a: &Analysis, k: &Submodule, c: &Submodule) -> Result<Step> {
    let g = gr(a)?;
    let parts = part_gr(a, k)? && part_gr(a, c)?;
    Ok(Step::require(g == parts, || format!("sum goldie_rickart={g}, summands {k:?}, {c:?} goldie_rickart={parts}")))
}

pub(crate) fn hom_orthogonal_sums(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let mut applied = false;
        for (k, c) in nontrivial_summands(a) {
            let (pk, pc) = (a.part(&k)?, a.part(&c)?);
            let zero_homs = HomSearch::new(&pk.restriction.module, &pc.restriction.module)?.count() == 1
                && HomSearch::new(&pc.restriction.module, &pk.restriction.module)?.count() == 1;
            if !zero_homs {
                continue;
            }
            applied = true;
            if let Step::Violated(d) = sum_equivalence(a, &k, &c)? {
                return Ok(Step::Violated(d));
            }
        }
        Ok(if applied { Step::Held } else { Step::NotApplicable })
    })
}

pub(crate) fn abelian_sums(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !a.holds(P::Abelian)? {
            return Ok(Step::NotApplicable);
        }
        for (k, c) in nontrivial_summands(a) {
            if let Step::Violated(d) = sum_equivalence(a, &k, &c)? {
                return Ok(Step::Violated(d));
            }
        }
        Ok(Step::Held)
    })
}

/// Records `M^k` Goldie Rickart for `k = 2, 3` within the order cap.
fn power_records(fam: &FamilyCatalog, inst: &Instance) -> Vec<Record> {
    let mut out = Vec::new();
    let mut module = inst.module.clone();
    let mut expr = inst.expr.clone();
    for k in 2..=3u32 {
        let order = inst.module.order().checked_pow(k).unwrap_or(usize::MAX);
        if order > fam.family.caps.max_order {
            break;
        }
        let step = ModuleTable::direct_sum(&module, &inst.module).map(|s| s.module);
        expr = ModuleExpr::Sum(Box::new(expr), Box::new(inst.expr.clone()));
        let id = format!("{}^{k}", inst.id);
        match step {
            Ok(m) => {
                let s = Analysis::new(&m).and_then(|pa| Ok(Step::require(gr(&pa)?, || "power is not goldie_rickart".into())));
                out.push(Record::new(id, expr.to_string(), s));
                module = m;
            }
            Err(e) => {
                out.push(Record::new(id, expr.to_string(), Err(e)));
                break;
            }
        }
    }
    out
}

fn powers_under(cat: &Catalog, hyp: P) -> Tally {
    sweep_records(cat, |fam, inst, a| {
        let applies = (|| Ok::<_, crate::error::Error>(gr(a)? && a.holds(hyp)? && !a.module().is_zero()))();
        match applies {
            Ok(true) => power_records(fam, inst),
            Ok(false) => Vec::new(),
            Err(e) => vec![Record::of(inst, Err(e))],
        }
    })
}

pub(crate) fn regular_endomorphism_powers(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    powers_under(cat, P::EndRegular)
}

pub(crate) fn c2_powers(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    powers_under(cat, P::C2)
}

pub(crate) fn sip_lemma(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !gr(a)? {
            return Ok(Step::NotApplicable);
        }
        let summands = a.summands();
        for n in a.summands_over_z2() {
            for k in &summands {
                if !a.is_summand(&n.intersection(k)) {
                    return Ok(Step::Violated(format!("{n:?} meet {k:?} is not a summand")));
                }
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn sip_over_z2(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !gr(a)? {
            return Ok(Step::NotApplicable);
        }
        Ok(Step::require(a.holds(P::SipOverZ2)?, || "goldie_rickart without sip over Z2".into()))
    })
}

/// Whether `t_M(I)` is a summand for every `I ⊆ End(M)` with `|I| ≤ 3`, via
/// intersections of at most three distinct preimages.
pub fn small_subsets_summand(a: &Analysis) -> bool {
    let d = a.distinct_preimages();
    for i in 0..d.len() {
        for j in i..d.len() {
            let ij = d[i].intersection(&d[j]);
            for dk in &d[j..] {
                if !a.is_summand(&ij.intersection(dk)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `t_M(I)` is a summand for every nonempty `I ⊆ End(M)`.
pub fn all_subsets_summand(a: &Analysis) -> bool {
    intersection_closure(&a.distinct_preimages()).iter().all(|s| a.is_summand(s))
}

pub(crate) fn finite_subsets(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let g = gr(a)?;
        let small = small_subsets_summand(a);
        if g != small {
            return Ok(Step::Violated(format!("goldie_rickart={g}, subsets of size <= 3 summand={small}")));
        }
        let n = a.end().len();
        if n <= 64 {
            let all = all_subsets_summand(a);
            if g != all {
                return Ok(Step::Violated(format!("goldie_rickart={g}, all subsets summand={all}")));
            }
        }
        if n <= LITERAL_SUBSETS {
            let closure: BTreeSet<Submodule> = intersection_closure(&a.distinct_preimages()).into_iter().collect();
            for mask in 1u32..(1 << n) {
                let maps = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| a.end().map(i));
                let t = t_operator(a.module(), maps)?;
                if !closure.contains(&t) {
                    return Ok(Step::Violated(format!("t_M of subset {mask:#b} is outside the intersection closure")));
                }
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn projective_injective_sums(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !gr(a)? {
            return Ok(Step::NotApplicable);
        }
        let proj = a.holds(P::Projective)?;
        let inj = a.holds(P::Injective)?;
        if !proj && !inj {
            return Ok(Step::NotApplicable);
        }
        let z2 = a.profile().z2;
        for n in a.summands() {
            let s = a.module().sum(&z2, &n);
            let p = a.part(&s)?;
            if proj && !p.analysis.holds(P::Projective)? {
                return Ok(Step::Violated(format!("Z2(M) + {n:?} is not projective")));
            }
            if inj && !p.analysis.holds(P::Injective)? {
                return Ok(Step::Violated(format!("Z2(M) + {n:?} is not injective")));
            }
        }
        Ok(Step::Held)
    })
}

fn image(projection: &[usize], set: &Submodule) -> Submodule {
    set.iter().map(|x| projection[x]).collect()
}

pub(crate) fn quotient_torsion_inclusion(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let m = a.module();
        let prof = a.profile();
        let domain = is_domain(m);
        for n in a.lattice().submodules() {
            let q = m.quotient(n)?;
            let qp = goldie_torsion(&q.module)?;
            let (z, z2) = (image(&q.projection, &prof.z), image(&q.projection, &prof.z2));
            if !z.is_subset(&qp.z) || !z2.is_subset(&qp.z2) {
                return Ok(Step::Violated(format!("inclusion fails for N = {n:?}")));
            }
            if domain && is_torsion(m, n) && (z != qp.z || z2 != qp.z2) {
                return Ok(Step::Violated(format!("equality fails for torsion N = {n:?}")));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn quasi_projective_preimage(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        if !a.holds(P::QuasiProjective)? {
            return Ok(Step::NotApplicable);
        }
        let m = a.module();
        let domain = is_domain(m);
        for n in a.lattice().submodules() {
            let q = m.quotient(n)?;
            let qz2 = goldie_torsion(&q.module)?.z2;
            let mut induced = HashSet::new();
            for (i, f) in a.end().maps().iter().enumerate() {
                if !m.image_of(&f.table, n).is_subset(n) {
                    continue;
                }
                let fbar: Vec<usize> = q.representatives.iter().map(|&r| q.projection[f.apply(r)]).collect();
                let lhs = image(&q.projection, &a.preimages()[i]);
                let rhs: Submodule = (0..q.module.order()).filter(|&c| qz2.contains(fbar[c])).collect();
                if !lhs.is_subset(&rhs) {
                    return Ok(Step::Violated(format!("inclusion fails for N = {n:?}, endomorphism {i}")));
                }
                if domain && is_torsion(m, n) && lhs != rhs {
                    return Ok(Step::Violated(format!("equality fails for torsion N = {n:?}, endomorphism {i}")));
                }
                induced.insert(fbar);
            }
            if induced.len() != HomSearch::new(&q.module, &q.module)?.count() {
                return Ok(Step::Violated(format!("some endomorphism of M/{n:?} has no lift")));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn quasi_projective_quotients(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let m = a.module();
        if !is_domain(m) || !gr(a)? || !a.holds(P::QuasiProjective)? {
            return Ok(Step::NotApplicable);
        }
        for n in a.lattice().submodules() {
            if !is_torsion(m, n) || !fully_invariant(a, n) {
                continue;
            }
            let q = m.quotient(n)?;
            if !gr(&Analysis::new(&q.module)?)? {
                return Ok(Step::Violated(format!("M/{n:?} is not goldie_rickart")));
            }
        }
        Ok(Step::Held)
    })
}

pub(crate) fn asymmetry_search_check(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    let mut rings: Vec<RingExpr> = crate::harness::search::triangular_rings();
    for f in &cat.families {
        if let Some(r) = &f.family.ring {
            if !rings.contains(r) {
                rings.push(r.clone());
            }
        }
    }
    let mut tally = Tally::default();
    match asymmetry_search(&rings) {
        Ok(outcome) => {
            tally.checked = outcome.examined;
            tally.note(match outcome.witness {
                Some(w) => format!(
                    "finite asymmetry: ring {} has left goldie_rickart={} and right goldie_rickart={}",
                    w.ring, w.predicates.left_goldie_rickart, w.predicates.right_goldie_rickart
                ),
                None => format!("no left/right asymmetry among {} finite rings", outcome.examined),
            });
        }
        Err(e) => tally.record("asymmetry-search", "", Err(e)),
    }
    tally
}

pub(crate) fn ring_rickart_remark(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| {
        let step = (|| {
            let rp = ring_predicates(ring)?;
            let right_ns = ring.right_singular_ideal().len() == 1;
            let left_ns = ring.opposite().right_singular_ideal().len() == 1;
            let ok = rp.right_rickart == (rp.right_goldie_rickart && right_ns)
                && rp.left_rickart == (rp.left_goldie_rickart && left_ns);
            Ok(Step::require(ok, || format!("{rp:?} with right nonsingular={right_ns}, left nonsingular={left_ns}")))
        })();
        vec![Record::ring(fam, step)]
    })
}

fn regular_analysis(fam: &FamilyCatalog) -> Result<&Analysis> {
    match fam.frees().first() {
        Some(f) => f.analysis.as_ref().map_err(|e| e.clone()),
        None => Err(crate::error::Error::size("regular module order", fam.family.caps.max_order as u128 + 1, fam.family.caps.max_order as u128)),
    }
}

/// `eR` for every idempotent `e`, as submodules of `R_R`.
fn idempotent_records(fam: &FamilyCatalog, ring: &Arc<RingTable>) -> Vec<Record> {
    let regular = match regular_analysis(fam) {
        Ok(a) => a,
        Err(e) => return vec![Record::ring(fam, Err(e))],
    };
    let base = fam.frees()[0].instance.expr.clone();
    ring.idempotents()
        .into_iter()
        .map(|e| {
            let er = ring.principal_right_ideal(e);
            let gens = submodule_generators(regular.module(), &er).unwrap_or_default();
            let spec = ModuleExpr::Sub(Box::new(base.clone()), gens);
            let step = part_gr(regular, &er).map(|g| Step::require(g, || format!("eR for e = {e} is not goldie_rickart")));
            Record::new(format!("{}/e{e}", fam.name()), spec.to_string(), step)
        })
        .collect()
}

pub(crate) fn idempotent_summands(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| match regular_analysis(fam).and_then(gr) {
        Ok(true) => idempotent_records(fam, ring),
        Ok(false) => Vec::new(),
        Err(e) => vec![Record::ring(fam, Err(e))],
    })
}

pub(crate) fn vnr_fg_projective(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| {
        if !ring.is_von_neumann_regular() {
            return Vec::new();
        }
        family_records(fam, true, |_, a| {
            if !a.holds(P::Projective)? {
                return Ok(Step::NotApplicable);
            }
            require_all(a, &[P::GoldieRickart])
        })
    })
}

pub(crate) fn vnr_finitely_presented(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| {
        if !ring.is_von_neumann_regular() {
            return Vec::new();
        }
        family_records(fam, false, |_, a| require_all(a, &[P::GoldieRickart]))
    })
}

fn free_records<F>(fam: &FamilyCatalog, pred: F) -> Vec<Record>
where
    F: Fn(&Analysis) -> Result<Step>,
{
    fam.frees()
        .iter()
        .map(|f| match &f.analysis {
            Ok(a) => Record::of(&f.instance, pred(a)),
            Err(e) => Record::of(&f.instance, Err(e.clone())),
        })
        .collect()
}

pub(crate) fn abelian_free(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, _| match regular_analysis(fam).and_then(gr) {
        Ok(true) => free_records(fam, |a| {
            if !a.holds(P::Abelian)? {
                return Ok(Step::NotApplicable);
            }
            require_all(a, &[P::GoldieRickart])
        }),
        Ok(false) => Vec::new(),
        Err(e) => vec![Record::ring(fam, Err(e))],
    })
}

pub(crate) fn c2_free(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, _| {
        let hyp = regular_analysis(fam).and_then(|a| Ok(gr(a)? && a.holds(P::C2)?));
        match hyp {
            Ok(true) => family_records(fam, true, |_, a| {
                if !a.holds(P::Projective)? {
                    return Ok(Step::NotApplicable);
                }
                require_all(a, &[P::GoldieRickart])
            }),
            Ok(false) => Vec::new(),
            Err(e) => vec![Record::ring(fam, Err(e))],
        }
    })
}

pub(crate) fn ring_chain(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_rings(cat, |fam, ring| {
        let regular = match regular_analysis(fam) {
            Ok(a) => a,
            Err(e) => return vec![Record::ring(fam, Err(e))],
        };
        let mut out = Vec::new();
        // (5) <=> (6): eR ranges over the cyclic projectives up to isomorphism.
        let step = (|| {
            let right = gr(regular)?;
            let mut cyclic = true;
            for e in ring.idempotents() {
                cyclic &= part_gr(regular, &ring.principal_right_ideal(e))?;
            }
            Ok(Step::require(right == cyclic, || format!("R right goldie_rickart={right}, cyclic projectives={cyclic}")))
        })();
        out.push(Record::ring(fam, step));
        // (2) => (4): Z2(R) a summand of R makes Z2(F) a summand of each free F.
        let z2_summand = regular.holds(P::Z2Summand);
        out.extend(free_records(fam, |a| {
            if !z2_summand.clone()? {
                return Ok(Step::NotApplicable);
            }
            Ok(Step::require(a.holds(P::Z2Summand)?, || "Z2(F) is not a summand".into()))
        }));
        // (4) => (3): a projective module on g generators is a summand of R^g.
        let frees: Vec<Option<bool>> = fam
            .frees()
            .iter()
            .map(|f| f.analysis.as_ref().ok().and_then(|a| gr(a).ok()))
            .collect();
        out.extend(family_records(fam, false, |_, a| {
            if !a.holds(P::Projective)? {
                return Ok(Step::NotApplicable);
            }
            let g = a.module().minimal_generating_set().len().max(1);
            match frees.get(g - 1).copied().flatten() {
                Some(true) => require_all(a, &[P::GoldieRickart]),
                _ => Ok(Step::NotApplicable),
            }
        }));
        // (1) => (2): nonsingular Goldie Rickart modules are Rickart.
        out.extend(family_records(fam, false, |_, a| {
            if !a.holds(P::Nonsingular)? || !gr(a)? {
                return Ok(Step::NotApplicable);
            }
            require_all(a, &[P::Rickart])
        }));
        out
    })
}

pub(crate) fn torsion_identities(cat: &Catalog, _: &SuiteConfig, _: &RelativeSuite) -> Tally {
    sweep_modules(cat, |_, _, a| {
        let m = a.module();
        let z2 = a.profile().z2;
        for n in a.lattice().submodules() {
            if intrinsic_z2(m, n)? != z2.intersection(n) {
                return Ok(Step::Violated(format!("Z2 of {n:?} differs from Z2(M) meet N")));
            }
        }
        for (k, c) in nontrivial_summands(a) {
            if m.sum(&z2.intersection(&k), &z2.intersection(&c)) != z2 {
                return Ok(Step::Violated(format!("Z2 does not split along {k:?} + {c:?}")));
            }
        }
        let q = m.quotient(&z2)?;
        Ok(Step::require(goldie_torsion(&q.module)?.z.len() == 1, || "M/Z2(M) is singular somewhere".into()))
    })
}
