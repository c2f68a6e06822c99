//! The theorem registry and its replay over a catalog.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{Analysis, REPORT_VERSION};
use crate::error::{Error, Result};
use crate::harness::catalog::{Catalog, FamilyCatalog};
use crate::harness::checks;
use crate::harness::family::Instance;
use crate::harness::relative::{self, RelativeSuite};
use crate::ring::RingTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Implication,
    Equivalence,
    Construction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    PerModule,
    PerPair,
    PerRing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Partial,
}

/// A reproducible violation: the instance id and its spec text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub spec: String,
    pub detail: String,
}

/// Outcome of one registry entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub version: u32,
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: Kind,
    pub scope: Scope,
    pub status: Status,
    pub checked: usize,
    pub skipped: usize,
    pub note: Option<String>,
    pub witness: Option<Failure>,
}

pub(crate) const DEFECT_NOTE: &str =
    "implementation defect: the statement is a theorem, so a violation means the decision procedures are wrong";

/// Tuning for the pair and sum suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Largest direct sum built from catalog factors.
    pub max_sum_order: usize,
    /// Largest factor used as a probe module or in restriction checks.
    pub max_probe_order: usize,
    /// Largest module for the checks that scan all summand/submodule pairs.
    pub max_pair_scan_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_sum_order: 64,
            max_probe_order: 8,
            max_pair_scan_order: 16,
        }
    }
}

/// Result of evaluating a statement on one instance.
pub(crate) enum Step {
    NotApplicable,
    Held,
    Violated(String),
    /// Not evaluated because a size bound was hit earlier.
    Skipped,
}

impl Step {
    pub(crate) fn require(ok: bool, detail: impl FnOnce() -> String) -> Step {
        if ok {
            Step::Held
        } else {
            Step::Violated(detail())
        }
    }
}

/// Accumulated evidence for one entry.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checked: usize,
    pub skipped: usize,
    pub failure: Option<Failure>,
    pub notes: Vec<String>,
}

impl Tally {
    pub(crate) fn record(&mut self, instance: &str, spec: &str, step: Result<Step>) {
        match step {
            Ok(Step::NotApplicable) => {}
            Ok(Step::Skipped) => self.skipped += 1,
            Ok(Step::Held) => self.checked += 1,
            Ok(Step::Violated(detail)) => {
                self.checked += 1;
                self.fail(instance, spec, detail);
            }
            Err(Error::Size { .. }) => self.skipped += 1,
            Err(e) => self.fail(instance, spec, format!("error: {e}")),
        }
    }

    fn fail(&mut self, instance: &str, spec: &str, detail: String) {
        if self.failure.is_none() {
            self.failure = Some(Failure {
                instance: instance.to_string(),
                spec: spec.to_string(),
                detail,
            });
        }
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

/// One evaluated case.
pub(crate) struct Record {
    pub id: String,
    pub spec: String,
    pub step: Result<Step>,
    pub note: Option<String>,
}

impl Record {
    pub(crate) fn new(id: impl Into<String>, spec: impl Into<String>, step: Result<Step>) -> Self {
        Record {
            id: id.into(),
            spec: spec.into(),
            step,
            note: None,
        }
    }

    pub(crate) fn of(instance: &Instance, step: Result<Step>) -> Self {
        Record::new(instance.id.clone(), instance.expr.to_string(), step)
    }

    pub(crate) fn ring(fam: &FamilyCatalog, step: Result<Step>) -> Self {
        let spec = fam.family.ring.as_ref().map(|r| format!("ring {r}")).unwrap_or_default();
        Record::new(fam.name(), spec, step)
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Folds records in order.
pub(crate) fn fold(records: impl IntoIterator<Item = Record>) -> Tally {
    let mut tally = Tally::default();
    for r in records {
        tally.record(&r.id, &r.spec, r.step);
        if let Some(n) = r.note {
            tally.note(n);
        }
    }
    tally
}

/// Evaluates `f` on every analysed instance in parallel and folds the records
/// in catalog order. Instances without an analysis count as skipped.
pub(crate) fn sweep_records<F>(cat: &Catalog, f: F) -> Tally
where
    F: Fn(&FamilyCatalog, &Instance, &Analysis) -> Vec<Record> + Sync,
{
    let items: Vec<_> = cat.entries().collect();
    let records: Vec<Vec<Record>> = items
        .par_iter()
        .map(|(fam, e)| match &e.analysis {
            Some(a) => f(fam, &e.instance, a),
            None => vec![Record::of(&e.instance, Ok(Step::Skipped))],
        })
        .collect();
    fold(records.into_iter().flatten())
}

/// One record per analysed instance.
pub(crate) fn sweep_modules<F>(cat: &Catalog, f: F) -> Tally
where
    F: Fn(&FamilyCatalog, &Instance, &Analysis) -> Result<Step> + Sync,
{
    sweep_records(cat, |fam, inst, a| vec![Record::of(inst, f(fam, inst, a))])
}

/// Evaluates `f` on every family in parallel.
pub(crate) fn sweep_families<F>(cat: &Catalog, f: F) -> Tally
where
    F: Fn(&FamilyCatalog) -> Vec<Record> + Sync,
{
    let records: Vec<Vec<Record>> = cat.families.par_iter().map(&f).collect();
    fold(records.into_iter().flatten())
}

/// Evaluates `f` on every family with a finite ring.
pub(crate) fn sweep_rings<F>(cat: &Catalog, f: F) -> Tally
where
    F: Fn(&FamilyCatalog, &Arc<RingTable>) -> Vec<Record> + Sync,
{
    sweep_families(cat, |fam| match &fam.ring {
        Some(r) => f(fam, r),
        None => Vec::new(),
    })
}

type Runner = fn(&Catalog, &SuiteConfig, &RelativeSuite) -> Tally;

enum Body {
    Run(Runner),
    Skip(&'static str),
    /// Skipped as stated, with a finite search whose outcome is reported.
    SkipWithSearch(&'static str, Runner),
}

pub(crate) struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    kind: Kind,
    scope: Scope,
    /// Set when the finite sweep cannot cover the statement's quantifiers.
    partial: Option<&'static str>,
    body: Body,
}

const fn run(
    id: &'static str,
    statement: &'static str,
    kind: Kind,
    scope: Scope,
    partial: Option<&'static str>,
    f: Runner,
) -> Theorem {
    Theorem {
        id,
        statement,
        kind,
        scope,
        partial,
        body: Body::Run(f),
    }
}

const fn skip(id: &'static str, statement: &'static str, kind: Kind, scope: Scope, reason: &'static str) -> Theorem {
    Theorem {
        id,
        statement,
        kind,
        scope,
        partial: None,
        body: Body::Skip(reason),
    }
}

const fn skip_search(
    id: &'static str,
    statement: &'static str,
    kind: Kind,
    scope: Scope,
    reason: &'static str,
    f: Runner,
) -> Theorem {
    Theorem {
        id,
        statement,
        kind,
        scope,
        partial: None,
        body: Body::SkipWithSearch(reason, f),
    }
}

use Kind::*;
use Scope::*;

const ALL_MODULES: Option<&str> = Some("finite catalog sweep of a statement about all modules");

pub(crate) static REGISTRY: &[Theorem] = &[
    run("basic-classes", "semisimple, singular and Z2-torsion modules are Goldie Rickart; a nonsingular module is Rickart iff it is Goldie Rickart", Implication, PerModule, None, checks::basic_classes),
    run("indecomposable-gr", "an indecomposable Goldie Rickart module is Rickart or Z2-torsion", Implication, PerModule, None, checks::indecomposable_gr),
    run("indecomposable-extending", "an indecomposable extending module is nonsingular or Goldie Rickart", Implication, PerModule, None, checks::indecomposable_extending),
    run("t-baer-gr", "t-Baer implies Goldie Rickart; the converse holds under the strong summand intersection property for summands containing Z2(M)", Implication, PerModule, None, checks::t_baer_gr),
    run("t-extending-gr", "t-extending implies Goldie Rickart; every preimage of Z2(M) under an endomorphism is t-closed", Implication, PerModule, None, checks::t_extending_gr),
    run("sigma-t-extending", "for a ring: every free module t-extending, every module t-extending, every module t-Baer and every module Goldie Rickart are equivalent", Equivalence, PerRing, Some("checked on Z2-semiperfect rings, where every module is Goldie Rickart, over catalog modules and free modules of rank at most 3"), checks::sigma_t_extending),
    run("morita-lower-triangular", "over a ring Morita-equivalent to a finite product of lower triangular matrix rings over division rings every module is Goldie Rickart", Implication, PerRing, Some("recognises semisimple rings and rings isomorphic to lower T2(F2); catalog modules only"), checks::morita_lower_triangular),
    run("goldie-decomposition", "M is Goldie Rickart iff M = Z2(M) + N (direct) with N a nonsingular Rickart module", Equivalence, PerModule, None, checks::goldie_decomposition),
    run("z2-semiperfect-rings", "over a Z2-semiperfect ring every module is Goldie Rickart", Implication, PerRing, ALL_MODULES, checks::z2_semiperfect_rings),
    skip("qf-rings", "every module over a QF ring is Goldie Rickart", Implication, PerRing, "QF detection out of scope"),
    skip("product-of-primes-example", "the product of Z_p over all primes is Rickart but not Goldie Rickart", Construction, PerModule, "infinite module"),
    run("quotient-remark", "M/N Goldie Rickart does not force M Goldie Rickart", Construction, PerModule, Some("finite search for a module with Goldie Rickart quotient M/Z2(M) that is not Goldie Rickart; outcome reported, not asserted"), checks::quotient_remark),
    run("rickart-vs-gr-examples", "Rickart and Goldie Rickart are independent; Z4 over Z is Goldie Rickart and not Rickart", Construction, PerModule, Some("the Z4 example is reproduced; the infinite example is out of scope"), checks::rickart_vs_gr_examples),
    run("rickart-versus-gr", "Goldie Rickart with every kernel a summand of the matching preimage of Z2(M) iff Rickart with Z2(M) a summand", Equivalence, PerModule, None, checks::rickart_versus_gr),
    run("rickart-singular-summand", "Rickart with Z(M) a summand implies Goldie Rickart; over a right nonsingular ring Goldie Rickart implies Z(M) is a summand", Implication, PerModule, None, checks::rickart_singular_summand),
    run("split-sequence", "M is Goldie Rickart iff 0 -> f^-1(Z2(M)) -> M -> M/f^-1(Z2(M)) -> 0 splits for every endomorphism f", Equivalence, PerModule, None, checks::split_sequence),
    run("semisimple-rings", "R is semisimple iff every module is Goldie Rickart with projective Goldie torsion submodule", Equivalence, PerRing, Some("semisimple rings: every catalog module passes; other rings: a catalog witness is sought"), checks::semisimple_rings),
    run("fully-invariant-inheritance", "a fully invariant submodule of a Goldie Rickart module whose endomorphisms all extend is Goldie Rickart", Implication, PerModule, None, checks::fully_invariant_inheritance),
    skip("injective-hull", "a quasi-injective module with Goldie Rickart injective hull is Goldie Rickart", Implication, PerModule, "injective hulls out of scope"),
    run("quasi-injective-duo", "every submodule of a quasi-injective duo Goldie Rickart module is Goldie Rickart", Implication, PerModule, None, checks::quasi_injective_duo),
    run("summand-closure", "direct summands of Goldie Rickart modules are Goldie Rickart", Implication, PerModule, None, checks::summand_closure),
    skip_search("direct-sum-example", "a direct sum of Goldie Rickart modules need not be Goldie Rickart", Construction, PerModule, "the example ring is infinite", checks::direct_sum_search),
    run("hom-orthogonal-sums", "if Hom(Mi, Mj) = 0 for i != j then the sum is Goldie Rickart iff each Mi is", Equivalence, PerModule, None, checks::hom_orthogonal_sums),
    run("abelian-sums", "an abelian direct sum is Goldie Rickart iff each summand is", Equivalence, PerModule, None, checks::abelian_sums),
    run("regular-endomorphism-powers", "a Goldie Rickart module with von Neumann regular endomorphism ring has Goldie Rickart finite direct powers", Implication, PerModule, Some("powers 2 and 3 within the order cap"), checks::regular_endomorphism_powers),
    run("sip-lemma", "in a Goldie Rickart module, a summand containing Z2(M) meets every summand in a summand", Implication, PerModule, None, checks::sip_lemma),
    run("sip-over-z2", "a Goldie Rickart module has the summand intersection property for summands containing Z2(M)", Implication, PerModule, None, checks::sip_over_z2),
    run("finite-subsets", "M is Goldie Rickart iff t_M(I) is a summand for every finite subset I of End(M)", Equivalence, PerModule, None, checks::finite_subsets),
    run("projective-injective-sums", "in a projective (injective) Goldie Rickart module, Z2(M) + N is projective (injective) for every summand N", Implication, PerModule, None, checks::projective_injective_sums),
    run("quotient-torsion-inclusion", "(Z(M)+N)/N lies in Z(M/N) and (Z2(M)+N)/N lies in Z2(M/N); equality for torsion N over a domain", Implication, PerModule, None, checks::quotient_torsion_inclusion),
    run("quasi-projective-preimage", "for quasi-projective M every endomorphism of M/N lifts to f with (f^-1(Z2(M))+N)/N inside the preimage of Z2(M/N)", Implication, PerModule, None, checks::quasi_projective_preimage),
    run("quasi-projective-quotients", "over a ring without zero divisors, M/N is Goldie Rickart for quasi-projective Goldie Rickart M and fully invariant torsion N", Implication, PerModule, Some("finite domains are fields or the integers, where the hypotheses are degenerate"), checks::quasi_projective_quotients),
    skip_search("asymmetric-triangular-example", "a ring can be left Goldie Rickart without being right Goldie Rickart", Construction, PerRing, "the example ring is infinite", checks::asymmetry_search_check),
    run("ring-rickart-remark", "a ring is right (left) Rickart iff it is right (left) Goldie Rickart and right (left) nonsingular", Equivalence, PerRing, None, checks::ring_rickart_remark),
    skip("overmodule-example", "Goldie Rickart does not pass to overmodules", Construction, PerModule, "the example ring is infinite"),
    run("idempotent-summands", "over a right Goldie Rickart ring, eR is Goldie Rickart for every idempotent e", Implication, PerRing, None, checks::idempotent_summands),
    run("vnr-fg-projective", "finitely generated projective modules over a von Neumann regular ring are Goldie Rickart", Implication, PerRing, Some("projective catalog modules and free modules of rank at most 3"), checks::vnr_fg_projective),
    run("vnr-finitely-presented", "finitely presented modules over a von Neumann regular ring are Goldie Rickart", Implication, PerRing, ALL_MODULES, checks::vnr_finitely_presented),
    run("abelian-free", "abelian free modules over a right Goldie Rickart ring are Goldie Rickart", Implication, PerRing, Some("free modules of rank at most 3 within the order cap"), checks::abelian_free),
    run("ring-chain", "every module GR => nonsingular modules Rickart and Z2(R) summand => projectives GR <=> frees GR => R right GR <=> cyclic projectives GR", Implication, PerRing, Some("instance-level consequences on catalog modules and free modules of rank at most 3"), checks::ring_chain),
    run("relative-definition", "M is Goldie Rickart iff it is M-Goldie Rickart; Z2(M) lies in f^-1(Z2(N)) for every f: M -> N", Equivalence, PerPair, None, relative::relative_definition),
    run("relative-restriction", "M is N-Goldie Rickart iff every summand of M is N1-Goldie Rickart for every submodule N1 of N", Equivalence, PerPair, Some("pairs of small catalog factors"), relative::relative_restriction),
    run("relative-corollary", "M is Goldie Rickart iff summands are K-Goldie Rickart for submodules K iff restricted preimages of Z2(K) are summands", Equivalence, PerModule, Some("modules up to the pair-scan order"), relative::relative_corollary),
    run("c2-direct-sums", "with pairwise relative C2, a finite direct sum is Goldie Rickart iff each Mi is Mj-Goldie Rickart", Equivalence, PerPair, Some("2- and 3-factor sums of catalog factors"), relative::c2_direct_sums),
    run("c2-powers", "a Goldie Rickart module with C2 has Goldie Rickart finite direct powers", Implication, PerModule, Some("powers 2 and 3 within the order cap"), checks::c2_powers),
    run("c2-free", "a right Goldie Rickart ring with C2 has Goldie Rickart finitely generated free and projective modules", Implication, PerRing, Some("free modules of rank at most 3 and projective catalog modules"), checks::c2_free),
    run("relative-sip", "with the (strong) summand intersection property for summands containing Z2(N), N is sum-Goldie Rickart iff it is Mi-Goldie Rickart for each i", Equivalence, PerPair, Some("finite sums of 2 or 3 catalog factors; products coincide with sums"), relative::relative_sip),
    run("relative-sum-corollary", "Mj is sum-Goldie Rickart iff it is Mi-Goldie Rickart for every i", Equivalence, PerPair, Some("2- and 3-factor sums of catalog factors"), relative::relative_sum_corollary),
    run("relative-injective-sums", "if Mi is Mj-injective for i < j, the sum is N-Goldie Rickart iff each Mi is", Equivalence, PerPair, Some("2- and 3-factor sums with small probe modules N"), relative::relative_injective_sums),
    run("relative-injective-corollary", "if Mi is Mj-injective for i < j, the sum is Goldie Rickart iff each Mi is Mj-Goldie Rickart", Equivalence, PerPair, Some("2- and 3-factor sums of catalog factors"), relative::relative_injective_corollary),
    run("torsion-identities", "Z2(N) = Z2(M) meet N, Z2 of a direct sum is the sum of the Z2, and M/Z2(M) is nonsingular", Construction, PerModule, None, checks::torsion_identities),
];

/// Registry ids in report order.
pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.id).collect()
}

/// Replays every registry entry with the default suite configuration.
pub fn run_theorems(cat: &Catalog) -> Vec<TheoremCheck> {
    run_theorems_with(cat, &SuiteConfig::default())
}

pub fn run_theorems_with(cat: &Catalog, config: &SuiteConfig) -> Vec<TheoremCheck> {
    let suite = RelativeSuite::new(cat, config);
    REGISTRY.iter().map(|t| evaluate(t, cat, config, &suite)).collect()
}

/// Replays the entries with the given ids, in registry order.
pub fn run_selected(cat: &Catalog, config: &SuiteConfig, ids: &[&str]) -> Result<Vec<TheoremCheck>> {
    for id in ids {
        if !REGISTRY.iter().any(|t| t.id == *id) {
            return Err(Error::Argument(format!("unknown theorem `{id}`")));
        }
    }
    let suite = RelativeSuite::new(cat, config);
    Ok(REGISTRY
        .iter()
        .filter(|t| ids.contains(&t.id))
        .map(|t| evaluate(t, cat, config, &suite))
        .collect())
}

fn evaluate(t: &Theorem, cat: &Catalog, config: &SuiteConfig, suite: &RelativeSuite) -> TheoremCheck {
    let mut check = TheoremCheck {
        version: REPORT_VERSION,
        id: t.id,
        statement: t.statement,
        kind: t.kind,
        scope: t.scope,
        status: Status::Pass,
        checked: 0,
        skipped: 0,
        note: None,
        witness: None,
    };
    let tally = match &t.body {
        Body::Skip(reason) => {
            check.status = Status::Skipped;
            check.note = Some(reason.to_string());
            return check;
        }
        Body::SkipWithSearch(_, f) | Body::Run(f) => f(cat, config, suite),
    };
    check.checked = tally.checked;
    check.skipped = tally.skipped;
    let mut notes = Vec::new();
    if tally.failure.is_some() {
        check.status = Status::Fail;
        notes.push(DEFECT_NOTE.to_string());
    } else if let Body::SkipWithSearch(reason, _) = &t.body {
        check.status = Status::Skipped;
        notes.push(reason.to_string());
    } else if t.partial.is_some() || tally.skipped > 0 || tally.checked == 0 {
        check.status = Status::Partial;
        if let Some(p) = t.partial {
            notes.push(p.to_string());
        }
        if tally.skipped > 0 {
            notes.push(format!("{} cases skipped at size bounds", tally.skipped));
        }
        if tally.checked == 0 {
            notes.push("no applicable instance in the catalog".to_string());
        }
    }
    notes.extend(tally.notes);
    check.note = (!notes.is_empty()).then(|| notes.join("; "));
    check.witness = tally.failure;
    check
}

/// True when any check failed.
pub fn has_failure(checks: &[TheoremCheck]) -> bool {
    checks.iter().any(|c| c.status == Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{Caps, InstanceFamily};

    const EXPECTED: [&str; 51] = [
        "basic-classes",
        "indecomposable-gr",
        "indecomposable-extending",
        "t-baer-gr",
        "t-extending-gr",
        "sigma-t-extending",
        "morita-lower-triangular",
        "goldie-decomposition",
        "z2-semiperfect-rings",
        "qf-rings",
        "product-of-primes-example",
        "quotient-remark",
        "rickart-vs-gr-examples",
        "rickart-versus-gr",
        "rickart-singular-summand",
        "split-sequence",
        "semisimple-rings",
        "fully-invariant-inheritance",
        "injective-hull",
        "quasi-injective-duo",
        "summand-closure",
        "direct-sum-example",
        "hom-orthogonal-sums",
        "abelian-sums",
        "regular-endomorphism-powers",
        "sip-lemma",
        "sip-over-z2",
        "finite-subsets",
        "projective-injective-sums",
        "quotient-torsion-inclusion",
        "quasi-projective-preimage",
        "quasi-projective-quotients",
        "asymmetric-triangular-example",
        "ring-rickart-remark",
        "overmodule-example",
        "idempotent-summands",
        "vnr-fg-projective",
        "vnr-finitely-presented",
        "abelian-free",
        "ring-chain",
        "relative-definition",
        "relative-restriction",
        "relative-corollary",
        "c2-direct-sums",
        "c2-powers",
        "c2-free",
        "relative-sip",
        "relative-sum-corollary",
        "relative-injective-sums",
        "relative-injective-corollary",
        "torsion-identities",
    ];

    #[test]
    fn registry_matches_the_statement_map() {
        assert_eq!(registry_ids(), EXPECTED);
    }

    #[test]
    fn skip_entries_carry_reasons() {
        let cat = Catalog::build(&[]).unwrap();
        for c in run_theorems(&cat) {
            assert_ne!(c.status, Status::Fail, "{}", c.id);
            if c.status == Status::Skipped {
                assert!(c.note.is_some(), "{}", c.id);
            }
        }
    }

    #[test]
    fn injective_hull_is_skipped_with_fixed_reason() {
        let cat = Catalog::build(&[]).unwrap();
        let c = run_selected(&cat, &SuiteConfig::default(), &["injective-hull"]).unwrap();
        assert_eq!(c[0].status, Status::Skipped);
        assert_eq!(c[0].note.as_deref(), Some("injective hulls out of scope"));
    }

    #[test]
    fn unknown_id_is_an_argument_error() {
        let cat = Catalog::build(&[]).unwrap();
        assert!(matches!(
            run_selected(&cat, &SuiteConfig::default(), &["nope"]),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn zmod4_catalog_replays_without_failure() {
        let cat = Catalog::build(&[InstanceFamily::named("zmod4", Caps::default()).unwrap()]).unwrap();
        let checks = run_theorems(&cat);
        assert!(!has_failure(&checks));
        let gd = checks.iter().find(|c| c.id == "goldie-decomposition").unwrap();
        assert_eq!(gd.status, Status::Pass);
        assert_eq!(gd.checked, cat.len());
    }

    #[test]
    fn statuses_serialize_uppercase() {
        assert_eq!(serde_json::to_string(&Status::Partial).unwrap(), "\"PARTIAL\"");
        assert_eq!(serde_json::to_string(&Scope::PerModule).unwrap(), "\"per-module\"");
    }
}
