//! Counterexample search over a catalog.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{ring_predicates, Analysis, Predicate, RingPredicates, REPORT_VERSION};
use crate::error::{Error, Result};
use crate::harness::catalog::Catalog;
use crate::harness::registry::SuiteConfig;
use crate::instance::{ModuleExpr, RingExpr};
use crate::module::ModuleTable;
use crate::ring::Shape;

/// A conjunction of possibly negated predicates, e.g. `goldie_rickart&!rickart`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjunction(pub Vec<(Predicate, bool)>);

impl Conjunction {
    pub fn matches(&self, a: &Analysis) -> Result<bool> {
        for &(p, want) in &self.0 {
            if a.holds(p)? != want {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl FromStr for Conjunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = s
            .split('&')
            .map(|t| {
                let t = t.trim();
                match t.strip_prefix('!') {
                    Some(rest) => Ok((rest.trim().parse()?, false)),
                    None => Ok((t.parse()?, true)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if terms.is_empty() {
            return Err(Error::Argument("empty conjunction".into()));
        }
        Ok(Conjunction(terms))
    }
}

impl fmt::Display for Conjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, want)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("&")?;
            }
            if !want {
                f.write_str("!")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// What to search for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Conjunction(Conjunction),
    /// Goldie Rickart `M₁`, `M₂` with `M₁ ⊕ M₂` not Goldie Rickart.
    DirectSum,
    /// A finite ring whose left and right Goldie Rickart verdicts differ.
    RingAsymmetry,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "direct-sum" => Ok(Target::DirectSum),
            "ring-asymmetry" => Ok(Target::RingAsymmetry),
            other => Ok(Target::Conjunction(other.parse()?)),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Conjunction(c) => write!(f, "{c}"),
            Target::DirectSum => f.write_str("direct-sum"),
            Target::RingAsymmetry => f.write_str("ring-asymmetry"),
        }
    }
}

/// Progress over one family (or ring).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchStep {
    pub version: u32,
    pub record: &'static str,
    pub scope: String,
    pub examined: usize,
    pub skipped: usize,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchWitness {
    pub instance: String,
    pub spec: String,
    pub verdicts: BTreeMap<String, bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Witness,
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub version: u32,
    pub record: &'static str,
    pub target: String,
    pub outcome: Outcome,
    pub examined: usize,
    pub skipped: usize,
    pub witness: Option<SearchWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub steps: Vec<SearchStep>,
    pub result: SearchResult,
}

impl SearchReport {
    fn new(target: String, steps: Vec<SearchStep>, witness: Option<SearchWitness>) -> Self {
        let result = SearchResult {
            version: REPORT_VERSION,
            record: "result",
            target,
            outcome: if witness.is_some() {
                Outcome::Witness
            } else {
                Outcome::Exhausted
            },
            examined: steps.iter().map(|s| s.examined).sum(),
            skipped: steps.iter().map(|s| s.skipped).sum(),
            witness,
        };
        SearchReport { steps, result }
    }

    pub fn witness(&self) -> Option<&SearchWitness> {
        self.result.witness.as_ref()
    }
}

fn step(scope: impl Into<String>, examined: usize, skipped: usize, found: bool) -> SearchStep {
    SearchStep {
        version: REPORT_VERSION,
        record: "step",
        scope: scope.into(),
        examined,
        skipped,
        found,
    }
}

/// Dispatches on the target kind.
pub fn run_search(target: &Target, cat: &Catalog, config: &SuiteConfig) -> Result<SearchReport> {
    match target {
        Target::Conjunction(c) => search_counterexample(c, cat),
        Target::DirectSum => search_direct_sum(cat, config),
        Target::RingAsymmetry => {
            let mut rings = triangular_rings();
            for f in &cat.families {
                if let Some(r) = &f.family.ring {
                    if !rings.contains(r) {
                        rings.push(r.clone());
                    }
                }
            }
            let out = asymmetry_search(&rings)?;
            Ok(out.report)
        }
    }
}

/// First catalog instance satisfying the conjunction, in catalog order.
/// Instances over a size bound are counted as skipped.
pub fn search_counterexample(target: &Conjunction, cat: &Catalog) -> Result<SearchReport> {
    let mut steps = Vec::new();
    for fam in &cat.families {
        let evaluated: Vec<Option<Result<bool>>> = fam
            .entries
            .par_iter()
            .map(|e| e.analysis.as_ref().map(|a| target.matches(a)))
            .collect();
        let mut examined = 0;
        let mut skipped = 0;
        let mut hit = None;
        for (e, r) in fam.entries.iter().zip(evaluated) {
            match r {
                None | Some(Err(Error::Size { .. })) => skipped += 1,
                Some(Err(err)) => return Err(err),
                Some(Ok(m)) => {
                    examined += 1;
                    if m {
                        hit = Some(e);
                        break;
                    }
                }
            }
        }
        steps.push(step(fam.name(), examined, skipped, hit.is_some()));
        if let Some(e) = hit {
            let a = e.analysis.as_ref().expect("matched entries are analysed");
            let verdicts = target
                .0
                .iter()
                .map(|&(p, _)| Ok((p.name().to_string(), a.holds(p)?)))
                .collect::<Result<_>>()?;
            let witness = SearchWitness {
                instance: e.instance.id.clone(),
                spec: e.instance.expr.to_string(),
                verdicts,
            };
            return Ok(SearchReport::new(target.to_string(), steps, Some(witness)));
        }
    }
    Ok(SearchReport::new(target.to_string(), steps, None))
}

/// Pairs of Goldie Rickart catalog modules (same family) whose sum is not
/// Goldie Rickart, within `max_sum_order`.
pub fn search_direct_sum(cat: &Catalog, config: &SuiteConfig) -> Result<SearchReport> {
    let mut steps = Vec::new();
    for fam in &cat.families {
        let mut factors = Vec::new();
        for (i, a) in fam.analysed() {
            if !i.module.is_zero() && a.holds(Predicate::GoldieRickart)? {
                factors.push(i);
            }
        }
        let mut pairs = Vec::new();
        for x in 0..factors.len() {
            for y in x..factors.len() {
                if factors[x].module.order() * factors[y].module.order() <= config.max_sum_order {
                    pairs.push((x, y));
                }
            }
        }
        let evaluated: Vec<Result<Option<bool>>> = pairs
            .par_iter()
            .map(|&(x, y)| {
                let sum = ModuleTable::direct_sum(&factors[x].module, &factors[y].module)?.module;
                match Analysis::new(&sum) {
                    Ok(a) => Ok(Some(!a.holds(Predicate::GoldieRickart)?)),
                    Err(Error::Size { .. }) => Ok(None),
                    Err(e) => Err(e),
                }
            })
            .collect();
        let mut examined = 0;
        let mut skipped = 0;
        let mut hit = None;
        for (&(x, y), r) in pairs.iter().zip(evaluated) {
            match r? {
                None => skipped += 1,
                Some(found) => {
                    examined += 1;
                    if found {
                        hit = Some((x, y));
                        break;
                    }
                }
            }
        }
        steps.push(step(fam.name(), examined, skipped, hit.is_some()));
        if let Some((x, y)) = hit {
            let (a, b) = (factors[x], factors[y]);
            let expr = ModuleExpr::Sum(Box::new(a.expr.clone()), Box::new(b.expr.clone()));
            let verdicts = BTreeMap::from([
                ("first_goldie_rickart".to_string(), true),
                ("second_goldie_rickart".to_string(), true),
                ("sum_goldie_rickart".to_string(), false),
            ]);
            let witness = SearchWitness {
                instance: format!("{} + {}", a.id, b.id),
                spec: expr.to_string(),
                verdicts,
            };
            return Ok(SearchReport::new("direct-sum".into(), steps, Some(witness)));
        }
    }
    Ok(SearchReport::new("direct-sum".into(), steps, None))
}

/// Triangular rings examined by the asymmetry search.
pub fn triangular_rings() -> Vec<RingExpr> {
    let tri = |shape, k, n| RingExpr::Triangular(shape, k, Box::new(RingExpr::Zmod(n)));
    vec![
        tri(Shape::Upper, 2, 2),
        tri(Shape::Lower, 2, 2),
        tri(Shape::Upper, 2, 3),
        tri(Shape::Upper, 2, 4),
        tri(Shape::Upper, 3, 2),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymmetryWitness {
    pub ring: String,
    pub predicates: RingPredicates,
}

#[derive(Clone, Debug)]
pub struct AsymmetryOutcome {
    pub examined: usize,
    pub witness: Option<AsymmetryWitness>,
    pub report: SearchReport,
}

/// First ring whose left and right Goldie Rickart verdicts differ.
pub fn asymmetry_search(rings: &[RingExpr]) -> Result<AsymmetryOutcome> {
    let evaluated: Vec<Result<RingPredicates>> = rings.par_iter().map(|r| ring_predicates(&r.build()?)).collect();
    let mut steps = Vec::new();
    let mut witness = None;
    for (r, p) in rings.iter().zip(evaluated) {
        let (examined, skipped, p) = match p {
            Ok(p) => (1, 0, Some(p)),
            Err(Error::Size { .. }) => (0, 1, None),
            Err(e) => return Err(e),
        };
        let found = p.is_some_and(|p| p.left_goldie_rickart != p.right_goldie_rickart);
        steps.push(step(format!("ring {r}"), examined, skipped, found));
        if found {
            let predicates = p.expect("found implies evaluated");
            let mut verdicts = BTreeMap::new();
            verdicts.insert("left_goldie_rickart".to_string(), predicates.left_goldie_rickart);
            verdicts.insert("right_goldie_rickart".to_string(), predicates.right_goldie_rickart);
            witness = Some(AsymmetryWitness {
                ring: r.to_string(),
                predicates,
            });
            let report = SearchReport::new(
                "ring-asymmetry".into(),
                steps,
                Some(SearchWitness {
                    instance: format!("ring {r}"),
                    spec: format!("ring {r}"),
                    verdicts,
                }),
            );
            let examined = report.result.examined;
            return Ok(AsymmetryOutcome {
                examined,
                witness,
                report,
            });
        }
    }
    let report = SearchReport::new("ring-asymmetry".into(), steps, None);
    Ok(AsymmetryOutcome {
        examined: report.result.examined,
        witness: witness.take(),
        report,
    })
}
