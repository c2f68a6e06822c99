//! Decision procedures for the module classes, with witnesses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::hom::{
    baer_failure, find_isomorphism, kernel, preimage_unchecked, projective_splitting,
    quasi_projectivity_failure_with, relative_injectivity_failure, EndRing, HomSearch,
};
use crate::module::{ModuleTable, Restriction, Submodule, SubmoduleLattice};
use crate::ring::RingTable;
use crate::torsion::{closed_submodules, goldie_torsion, t_closed_submodules, TorsionProfile};

/// Version tag carried by every serialized report.
pub const REPORT_VERSION: u32 = 1;

/// A module predicate decided by [`Analysis::verdict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Rickart,
    GoldieRickart,
    TBaer,
    TExtending,
    Extending,
    Duo,
    Abelian,
    C2,
    SipOverZ2,
    SsipOverZ2,
    Nonsingular,
    Singular,
    Z2Torsion,
    Z2Summand,
    QuasiInjective,
    QuasiProjective,
    Injective,
    Projective,
    EndRegular,
}

impl Predicate {
    pub const ALL: [Predicate; 19] = [
        Predicate::Rickart,
        Predicate::GoldieRickart,
        Predicate::TBaer,
        Predicate::TExtending,
        Predicate::Extending,
        Predicate::Duo,
        Predicate::Abelian,
        Predicate::C2,
        Predicate::SipOverZ2,
        Predicate::SsipOverZ2,
        Predicate::Nonsingular,
        Predicate::Singular,
        Predicate::Z2Torsion,
        Predicate::Z2Summand,
        Predicate::QuasiInjective,
        Predicate::QuasiProjective,
        Predicate::Injective,
        Predicate::Projective,
        Predicate::EndRegular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Rickart => "rickart",
            Predicate::GoldieRickart => "goldie_rickart",
            Predicate::TBaer => "t_baer",
            Predicate::TExtending => "t_extending",
            Predicate::Extending => "extending",
            Predicate::Duo => "duo",
            Predicate::Abelian => "abelian",
            Predicate::C2 => "c2",
            Predicate::SipOverZ2 => "sip_over_z2",
            Predicate::SsipOverZ2 => "ssip_over_z2",
            Predicate::Nonsingular => "nonsingular",
            Predicate::Singular => "singular",
            Predicate::Z2Torsion => "z2_torsion",
            Predicate::Z2Summand => "z2_summand",
            Predicate::QuasiInjective => "quasi_injective",
            Predicate::QuasiProjective => "quasi_projective",
            Predicate::Injective => "injective",
            Predicate::Projective => "projective",
            Predicate::EndRegular => "end_regular",
        }
    }

    fn slot(self) -> usize {
        Predicate::ALL.iter().position(|&p| p == self).unwrap()
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown predicate `{s}`")))
    }
}

/// Evidence for a verdict. Maps are full element tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An endomorphism, by enumeration index, with its offending submodule.
    Endomorphism { index: usize, map: Vec<usize>, submodule: Submodule },
    /// A homomorphism into another module with its offending preimage.
    Map { map: Vec<usize>, submodule: Submodule },
    Submodule { submodule: Submodule },
    Pair { first: Submodule, second: Submodule },
    Element { element: usize },
    /// `f(x) ∉ xR`.
    Displacement { index: usize, map: Vec<usize>, element: usize },
    /// An idempotent `e` and an endomorphism `f` with `ef ≠ fe`.
    Noncentral { idempotent: Vec<usize>, other: Vec<usize> },
    /// A map from a submodule that does not extend; indexed by restricted elements.
    Extension { submodule: Submodule, map: Vec<usize> },
    /// A right ideal where Baer's criterion fails.
    Ideal { ideal: ElemSet },
    /// The canonical surjection from a free module on these generators does not split.
    NoSplitting { generators: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }

    fn from_failure(w: Option<Witness>) -> Self {
        match w {
            Some(w) => Verdict::fail(w),
            None => Verdict::pass(),
        }
    }
}

/// Cached structure of one module: lattice, endomorphisms, torsion, and
/// per-endomorphism kernels and `f⁻¹(Z₂(M))`.
pub struct Analysis {
    module: ModuleTable,
    lattice: Arc<SubmoduleLattice>,
    end: EndRing,
    profile: TorsionProfile,
    kernels: Vec<Submodule>,
    preimages: Vec<Submodule>,
    complements: Vec<OnceLock<Option<Submodule>>>,
    parts: Vec<OnceLock<Result<Arc<Part>>>>,
    verdicts: Vec<OnceLock<Result<Verdict>>>,
}

/// A submodule as a standalone module, with its own analysis.
#[derive(Debug)]
pub struct Part {
    pub restriction: Restriction,
    pub analysis: Analysis,
}

impl fmt::Debug for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Analysis")
            .field("order", &self.module.order())
            .field("submodules", &self.lattice.len())
            .field("endomorphisms", &self.end.len())
            .finish_non_exhaustive()
    }
}

impl Analysis {
    pub fn new(m: &ModuleTable) -> Result<Self> {
        let lattice = m.lattice()?;
        let end = EndRing::new(m)?;
        let profile = goldie_torsion(m)?;
        let kernels = end.maps().iter().map(kernel).collect();
        let preimages = end
            .maps()
            .iter()
            .map(|f| preimage_unchecked(f, &profile.z2))
            .collect();
        let complements = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        let parts = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        let verdicts = Predicate::ALL.iter().map(|_| OnceLock::new()).collect();
        Ok(Analysis {
            module: m.clone(),
            lattice,
            end,
            profile,
            kernels,
            preimages,
            complements,
            parts,
            verdicts,
        })
    }

    pub fn module(&self) -> &ModuleTable {
        &self.module
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lattice
    }

    pub fn end(&self) -> &EndRing {
        &self.end
    }

    pub fn profile(&self) -> TorsionProfile {
        self.profile
    }

    pub fn kernels(&self) -> &[Submodule] {
        &self.kernels
    }

    /// `f⁻¹(Z₂(M))` for each endomorphism, by enumeration index.
    pub fn preimages(&self) -> &[Submodule] {
        &self.preimages
    }

    /// The distinct preimages `f⁻¹(Z₂(M))`, sorted by size then bits.
    pub fn distinct_preimages(&self) -> Vec<Submodule> {
        let mut v: Vec<Submodule> = self.preimages.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        v.sort_by_key(|s| (s.len(), *s));
        v
    }

    /// A complement of `k` (which must be a submodule), memoized.
    pub fn complement(&self, k: &Submodule) -> Option<Submodule> {
        let pos = self.lattice.position(k).expect("argument is a submodule");
        *self.complements[pos].get_or_init(|| self.lattice.complement(k, self.module.order()))
    }

    /// The submodule `k` as a module with its analysis, memoized.
    pub fn part(&self, k: &Submodule) -> Result<Arc<Part>> {
        let pos = self.lattice.position(k).expect("argument is a submodule");
        self.parts[pos]
            .get_or_init(|| {
                let restriction = self.module.restrict(k)?;
                let analysis = Analysis::new(&restriction.module)?;
                Ok(Arc::new(Part { restriction, analysis }))
            })
            .clone()
    }

    /// Every complement of `k`, in lattice order.
    pub fn complements(&self, k: &Submodule) -> Vec<Submodule> {
        let order = self.module.order();
        if !order.is_multiple_of(k.len()) {
            return Vec::new();
        }
        let full = self.module.full();
        self.lattice
            .of_size(order / k.len())
            .filter(|c| c.intersection(k).len() == 1 && self.module.sum(k, c) == full)
            .copied()
            .collect()
    }

    pub fn is_summand(&self, k: &Submodule) -> bool {
        self.complement(k).is_some()
    }

    pub fn summands(&self) -> Vec<Submodule> {
        self.lattice
            .submodules()
            .iter()
            .filter(|k| self.is_summand(k))
            .copied()
            .collect()
    }

    /// Exactly two summands; the zero module is not indecomposable.
    pub fn is_indecomposable(&self) -> bool {
        !self.module.is_zero() && self.summands().len() == 2
    }

    pub fn holds(&self, p: Predicate) -> Result<bool> {
        Ok(self.verdict(p)?.holds)
    }

    pub fn verdict(&self, p: Predicate) -> Result<Verdict> {
        self.verdicts[p.slot()].get_or_init(|| self.decide(p)).clone()
    }

    fn decide(&self, p: Predicate) -> Result<Verdict> {
        let m = &self.module;
        let full = m.full();
        let zero = ElemSet::singleton(0);
        let v = match p {
            Predicate::Rickart => self.first_nonsummand(&self.kernels),
            Predicate::GoldieRickart => self.first_nonsummand(&self.preimages),
            Predicate::TBaer => {
                let closure = intersection_closure(&self.distinct_preimages());
                self.first_nonsummand_set(&closure)
            }
            Predicate::TExtending => self.first_nonsummand_set(&t_closed_submodules(m)?),
            Predicate::Extending => self.first_nonsummand_set(&closed_submodules(m)?),
            Predicate::Duo => Verdict::from_failure(self.end.maps().iter().enumerate().find_map(|(i, f)| {
                (0..m.order())
                    .find(|&x| !m.cyclic(x).contains(f.apply(x)))
                    .map(|x| Witness::Displacement {
                        index: i,
                        map: f.table.clone(),
                        element: x,
                    })
            })),
            Predicate::Abelian => Verdict::from_failure(self.end.noncentral_idempotent().map(|(e, f)| {
                Witness::Noncentral {
                    idempotent: self.end.map(e).table.clone(),
                    other: self.end.map(f).table.clone(),
                }
            })),
            Predicate::C2 => relative_c2(m, m)?,
            Predicate::SipOverZ2 => {
                let over = self.summands_over_z2();
                let mut w = None;
                'outer: for (i, a) in over.iter().enumerate() {
                    for b in &over[i + 1..] {
                        if !self.is_summand(&a.intersection(b)) {
                            w = Some(Witness::Pair { first: *a, second: *b });
                            break 'outer;
                        }
                    }
                }
                Verdict::from_failure(w)
            }
            Predicate::SsipOverZ2 => self.first_nonsummand_set(&intersection_closure(&self.summands_over_z2())),
            Predicate::Nonsingular => self.element_outside(&self.profile.z, &zero, true),
            Predicate::Singular => self.element_outside(&full, &self.profile.z, false),
            Predicate::Z2Torsion => self.element_outside(&full, &self.profile.z2, false),
            Predicate::Z2Summand => match self.complement(&self.profile.z2) {
                Some(_) => Verdict::pass(),
                None => Verdict::fail(Witness::Submodule {
                    submodule: self.profile.z2,
                }),
            },
            Predicate::QuasiInjective => Verdict::from_failure(
                relative_injectivity_failure(m, m)?.map(|f| Witness::Extension {
                    submodule: f.submodule,
                    map: f.map,
                }),
            ),
            Predicate::QuasiProjective => Verdict::from_failure(
                quasi_projectivity_failure_with(m, &self.end)?.map(|n| Witness::Submodule { submodule: n }),
            ),
            Predicate::Injective => Verdict::from_failure(baer_failure(m)?.map(|ideal| Witness::Ideal { ideal })),
            Predicate::Projective => match projective_splitting(m)? {
                Some(_) => Verdict::pass(),
                None => Verdict::fail(Witness::NoSplitting {
                    generators: m.minimal_generating_set().to_vec(),
                }),
            },
            Predicate::EndRegular => Verdict::from_failure(self.end.irregular_element().map(|i| {
                Witness::Endomorphism {
                    index: i,
                    map: self.end.map(i).table.clone(),
                    submodule: self.kernels[i],
                }
            })),
        };
        Ok(v)
    }

    fn first_nonsummand(&self, per_map: &[Submodule]) -> Verdict {
        Verdict::from_failure(per_map.iter().enumerate().find(|(_, s)| !self.is_summand(s)).map(|(i, s)| {
            Witness::Endomorphism {
                index: i,
                map: self.end.map(i).table.clone(),
                submodule: *s,
            }
        }))
    }

    fn first_nonsummand_set(&self, sets: &[Submodule]) -> Verdict {
        Verdict::from_failure(
            sets.iter()
                .find(|s| !self.is_summand(s))
                .map(|s| Witness::Submodule { submodule: *s }),
        )
    }

    /// Fails with the first element of `set` outside `allowed`. With
    /// `skip_zero`, the zero element is ignored.
    fn element_outside(&self, set: &Submodule, allowed: &Submodule, skip_zero: bool) -> Verdict {
        Verdict::from_failure(
            set.difference(allowed)
                .iter()
                .find(|&x| !(skip_zero && x == 0))
                .map(|element| Witness::Element { element }),
        )
    }

    /// Direct summands containing `Z₂(M)`, in lattice order.
    pub fn summands_over_z2(&self) -> Vec<Submodule> {
        self.lattice
            .submodules()
            .iter()
            .filter(|k| self.profile.z2.is_subset(k) && self.is_summand(k))
            .copied()
            .collect()
    }

    pub fn facts(&self) -> Facts {
        Facts {
            order: self.module.order(),
            submodules: self.lattice.len(),
            summands: self.summands().len(),
            endomorphisms: self.end.len(),
            singular: self.profile.z,
            goldie_torsion: self.profile.z2,
            indecomposable: self.is_indecomposable(),
        }
    }
}

/// Closure of a family under pairwise intersection, sorted by size then bits.
pub fn intersection_closure(family: &[Submodule]) -> Vec<Submodule> {
    let mut seen: BTreeSet<Submodule> = family.iter().copied().collect();
    let mut frontier: Vec<Submodule> = seen.iter().copied().collect();
    while let Some(s) = frontier.pop() {
        for g in family {
            let t = s.intersection(g);
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    let mut v: Vec<Submodule> = seen.into_iter().collect();
    v.sort_by_key(|s| (s.len(), *s));
    v
}

/// Structural counts reported alongside verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facts {
    pub order: usize,
    pub submodules: usize,
    pub summands: usize,
    pub endomorphisms: usize,
    pub singular: Submodule,
    pub goldie_torsion: Submodule,
    pub indecomposable: bool,
}

/// The classification record of one module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub facts: Facts,
    pub verdicts: BTreeMap<&'static str, bool>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<&'static str, Witness>,
}

impl PropertyReport {
    pub fn with_instance(mut self, id: impl Into<String>) -> Self {
        self.instance = Some(id.into());
        self
    }

    pub fn without_witnesses(mut self) -> Self {
        self.witnesses.clear();
        self
    }
}

/// Runs every predicate of [`Predicate::ALL`].
pub fn classify(m: &ModuleTable) -> Result<PropertyReport> {
    classify_analysis(&Analysis::new(m)?)
}

pub fn classify_analysis(a: &Analysis) -> Result<PropertyReport> {
    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for p in Predicate::ALL {
        let v = a.verdict(p)?;
        verdicts.insert(p.name(), v.holds);
        if let Some(w) = v.witness {
            witnesses.insert(p.name(), w);
        }
    }
    Ok(PropertyReport {
        version: REPORT_VERSION,
        instance: None,
        facts: a.facts(),
        verdicts,
        witnesses,
    })
}

pub fn is_rickart(m: &ModuleTable) -> Result<bool> {
    Analysis::new(m)?.holds(Predicate::Rickart)
}

pub fn is_goldie_rickart(m: &ModuleTable) -> Result<bool> {
    Analysis::new(m)?.holds(Predicate::GoldieRickart)
}

/// `m` is `n`-Goldie Rickart: `f⁻¹(Z₂(N))` is a summand of `m` for every `f : m → n`.
pub fn relative_goldie_rickart(m: &ModuleTable, n: &ModuleTable) -> Result<Verdict> {
    let z2 = goldie_torsion(n)?.z2;
    let lattice = m.lattice()?;
    let order = m.order();
    let search = HomSearch::new(m, n)?;
    let mut witness = None;
    search.for_each(|t| {
        let pre: Submodule = (0..order).filter(|&x| z2.contains(t[x])).collect();
        if lattice.complement(&pre, order).is_none() {
            witness = Some(Witness::Map {
                map: t.to_vec(),
                submodule: pre,
            });
            std::ops::ControlFlow::Break(())
        } else {
            std::ops::ControlFlow::Continue(())
        }
    });
    Ok(Verdict::from_failure(witness))
}

pub fn is_relative_goldie_rickart(m: &ModuleTable, n: &ModuleTable) -> Result<bool> {
    Ok(relative_goldie_rickart(m, n)?.holds)
}

/// Cheap isomorphism invariant of a module: sorted additive orders and
/// sorted cyclic-submodule sizes.
pub(crate) fn iso_invariant(m: &ModuleTable) -> (Vec<usize>, Vec<usize>) {
    let mut orders = m.additive_orders().to_vec();
    orders.sort_unstable();
    let mut cyclic: Vec<usize> = (0..m.order()).map(|x| m.cyclic(x).len()).collect();
    cyclic.sort_unstable();
    (orders, cyclic)
}

/// `m` is `n`-C₂: every submodule of `n` isomorphic to a summand of `m` is a summand of `n`.
/// A failure is reported as `(K ≤ n, summand of m)`.
pub fn relative_c2(m: &ModuleTable, n: &ModuleTable) -> Result<Verdict> {
    if !m.same_base(n) {
        return Err(Error::BaseMismatch);
    }
    let m_lattice = m.lattice()?;
    let n_lattice = n.lattice()?;
    let summands: Vec<(Submodule, ModuleTable)> = m_lattice
        .summands(m.order())
        .into_iter()
        .filter(|s| s.len() > 1)
        .map(|s| Ok((s, m.restrict(&s)?.module)))
        .collect::<Result<_>>()?;
    let invariants: Vec<_> = summands.iter().map(|(_, r)| iso_invariant(r)).collect();
    for k in n_lattice.submodules() {
        if k.len() == 1 || n_lattice.complement(k, n.order()).is_some() {
            continue;
        }
        let candidates: Vec<usize> = (0..summands.len()).filter(|&i| summands[i].0.len() == k.len()).collect();
        if candidates.is_empty() {
            continue;
        }
        let kr = n.restrict(k)?.module;
        let kinv = iso_invariant(&kr);
        for i in candidates {
            if invariants[i] == kinv && find_isomorphism(&kr, &summands[i].1)?.is_some() {
                return Ok(Verdict::fail(Witness::Pair {
                    first: *k,
                    second: summands[i].0,
                }));
            }
        }
    }
    Ok(Verdict::pass())
}

pub fn is_relative_c2(m: &ModuleTable, n: &ModuleTable) -> Result<bool> {
    Ok(relative_c2(m, n)?.holds)
}

/// Rickart and Goldie Rickart on both sides of a finite ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RingPredicates {
    pub right_goldie_rickart: bool,
    pub left_goldie_rickart: bool,
    pub right_rickart: bool,
    pub left_rickart: bool,
}

/// Right versions on `R_R`; left versions on the regular module of the opposite ring.
pub fn ring_predicates(r: &RingTable) -> Result<RingPredicates> {
    let right = Analysis::new(&ModuleTable::regular(&Arc::new(r.clone())))?;
    let left = Analysis::new(&ModuleTable::regular(&Arc::new(r.opposite())))?;
    Ok(RingPredicates {
        right_goldie_rickart: right.holds(Predicate::GoldieRickart)?,
        left_goldie_rickart: left.holds(Predicate::GoldieRickart)?,
        right_rickart: right.holds(Predicate::Rickart)?,
        left_rickart: left.holds(Predicate::Rickart)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Shape;

    fn regular(r: RingTable) -> ModuleTable {
        ModuleTable::regular(&Arc::new(r))
    }

    fn f2() -> RingTable {
        RingTable::zmod(2).unwrap()
    }

    fn f2_power(k: usize) -> ModuleTable {
        let f = regular(f2());
        let mut m = f.clone();
        for _ in 1..k {
            m = ModuleTable::direct_sum(&m, &f).unwrap().module;
        }
        m
    }

    fn zero_module() -> ModuleTable {
        let z4 = regular(RingTable::zmod(4).unwrap());
        z4.restrict(&ElemSet::singleton(0)).unwrap().module
    }

    #[test]
    fn integer_z4_reproduces_example() {
        let g = ModuleTable::zabelian(&[4]).unwrap();
        let r = classify(&g).unwrap();
        assert!(r.verdicts["goldie_rickart"]);
        assert!(!r.verdicts["rickart"]);
        match &r.witnesses["rickart"] {
            Witness::Endomorphism { map, submodule, .. } => {
                assert_eq!(map, &vec![0, 2, 0, 2]);
                assert_eq!(submodule.to_vec(), vec![0, 2]);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn zero_module_is_all_true() {
        let r = classify(&zero_module()).unwrap();
        assert!(r.verdicts.values().all(|&v| v));
        assert!(r.witnesses.is_empty());
        assert!(!r.facts.indecomposable);
    }

    #[test]
    fn vector_space_verdicts() {
        let m = f2_power(2);
        let r = classify(&m).unwrap();
        for p in ["rickart", "goldie_rickart", "t_baer", "t_extending", "extending", "c2", "sip_over_z2"] {
            assert!(r.verdicts[p], "{p}");
        }
        assert!(!r.verdicts["duo"]);
        assert!(!r.verdicts["abelian"]);
        assert!(r.witnesses.contains_key("duo"));
        assert!(r.witnesses.contains_key("abelian"));
        let r3 = classify(&f2_power(3)).unwrap();
        assert!(r3.verdicts["sip_over_z2"] && r3.verdicts["ssip_over_z2"]);
    }

    #[test]
    fn zmod4_regular() {
        let m = regular(RingTable::zmod(4).unwrap());
        let a = Analysis::new(&m).unwrap();
        assert!(a.holds(Predicate::GoldieRickart).unwrap());
        assert!(!a.holds(Predicate::Rickart).unwrap());
        assert!(a.holds(Predicate::TExtending).unwrap());
        assert!(a.holds(Predicate::Duo).unwrap());
        assert!(a.holds(Predicate::Z2Torsion).unwrap());
        assert!(a.is_indecomposable());
    }

    #[test]
    fn semisimple_modules_are_rickart() {
        let z6 = regular(RingTable::zmod(6).unwrap());
        let m2 = regular(RingTable::matrix(&f2(), 2).unwrap());
        for m in [z6, m2] {
            let a = Analysis::new(&m).unwrap();
            for p in [Predicate::Rickart, Predicate::GoldieRickart, Predicate::TBaer, Predicate::Extending, Predicate::C2] {
                assert!(a.holds(p).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn regular_end_gives_c2() {
        for m in [f2_power(3), regular(RingTable::zmod(6).unwrap()), ModuleTable::zabelian(&[2, 3]).unwrap()] {
            let a = Analysis::new(&m).unwrap();
            if a.end().is_von_neumann_regular() {
                assert!(a.holds(Predicate::C2).unwrap());
            }
        }
    }

    #[test]
    fn relative_goldie_rickart_examples() {
        let z4 = regular(RingTable::zmod(4).unwrap());
        let zero = zero_module();
        assert!(is_relative_goldie_rickart(&z4, &zero).unwrap());
        let z8 = regular(RingTable::zmod(8).unwrap());
        assert_eq!(
            is_relative_goldie_rickart(&z8, &z8).unwrap(),
            is_goldie_rickart(&z8).unwrap()
        );
        let z6 = regular(RingTable::zmod(6).unwrap());
        assert!(is_relative_goldie_rickart(&z6, &z6).unwrap());
    }

    #[test]
    fn relative_c2_examples() {
        let z4 = regular(RingTable::zmod(4).unwrap());
        assert!(is_relative_c2(&z4, &zero_module()).unwrap());
        // ℤ₂ ⊕ ℤ₄ over ℤ₄: the copy {0,2} of the summand ℤ₂ inside ℤ₄ is not a summand.
        let z2 = z4.quotient(&[0, 2].into_iter().collect()).unwrap().module;
        assert!(!is_relative_c2(&z2, &z4).unwrap());
        assert!(is_relative_c2(&z4, &z4).unwrap());
    }

    #[test]
    fn ring_predicate_examples() {
        let z4 = ring_predicates(&RingTable::zmod(4).unwrap()).unwrap();
        assert!(z4.right_goldie_rickart && !z4.right_rickart);
        assert_eq!(z4.left_goldie_rickart, z4.right_goldie_rickart);
        let z6 = ring_predicates(&RingTable::zmod(6).unwrap()).unwrap();
        assert!(z6.right_goldie_rickart && z6.left_goldie_rickart && z6.right_rickart && z6.left_rickart);
        let t = RingTable::triangular(&f2(), 2, Shape::Upper).unwrap();
        let p = ring_predicates(&t).unwrap();
        assert!(p.right_goldie_rickart && p.left_goldie_rickart);
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>().unwrap(), p);
        }
        assert!("nonsense".parse::<Predicate>().is_err());
    }

    #[test]
    fn closure_contains_generators() {
        let fam: Vec<Submodule> = vec![[0, 1, 2, 3].into_iter().collect(), [0, 1].into_iter().collect(), [0, 2].into_iter().collect()];
        let c = intersection_closure(&fam);
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], ElemSet::singleton(0));
    }
}
