//! Homomorphism enumeration, endomorphism rings, and the injectivity and
//! projectivity tests built on them.
//!
//! A homomorphism out of `M` is determined by the images of a generating set
//! of `M`. The search assigns generator images one at a time and extends the
//! partial map to the submodule generated so far, rejecting an assignment as
//! soon as two representations of an element disagree.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{ModuleTable, Submodule};
use crate::ring::{BaseRing, RingTable};

/// Default bound on the size of a homomorphism search space.
pub const DEFAULT_HOM_BOUND: u128 = 1 << 16;

/// An `R`-linear map, stored as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct HomMap {
    pub table: Vec<usize>,
}

impl HomMap {
    pub fn identity(m: &ModuleTable) -> Self {
        HomMap {
            table: (0..m.order()).collect(),
        }
    }

    pub fn zero(source: &ModuleTable) -> Self {
        HomMap {
            table: vec![0; source.order()],
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HomMap) -> HomMap {
        HomMap {
            table: other.table.iter().map(|&x| self.table[x]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = ElemSet::empty();
        self.table.iter().all(|&y| seen.insert(y))
    }

    /// Checks additivity and linearity against the given tables.
    pub fn is_linear(&self, source: &ModuleTable, target: &ModuleTable) -> bool {
        if self.table.len() != source.order() || self.table.iter().any(|&y| y >= target.order()) {
            return false;
        }
        let n = source.order();
        let additive = (0..n).all(|a| {
            (0..n).all(|b| self.table[source.add(a, b)] == target.add(self.table[a], self.table[b]))
        });
        additive
            && source.scalar_generators().iter().all(|&r| {
                (0..n).all(|a| self.table[source.act(a, r)] == target.act(self.table[a], r))
            })
    }
}

/// `ker f`.
pub fn kernel(f: &HomMap) -> Submodule {
    f.table
        .iter()
        .enumerate()
        .filter(|&(_, &y)| y == 0)
        .map(|(x, _)| x)
        .collect()
}

/// `f(M)`.
pub fn image(f: &HomMap) -> Submodule {
    f.table.iter().copied().collect()
}

/// `f⁻¹(K)` for a submodule `K` of the target.
pub fn preimage(f: &HomMap, target: &ModuleTable, k: &Submodule) -> Result<Submodule> {
    if !target.is_submodule(k) {
        return Err(Error::Argument("preimage needs a submodule of the target".into()));
    }
    Ok(preimage_unchecked(f, k))
}

#[inline]
pub(crate) fn preimage_unchecked(f: &HomMap, k: &Submodule) -> Submodule {
    f.table
        .iter()
        .enumerate()
        .filter(|&(_, &y)| k.contains(y))
        .map(|(x, _)| x)
        .collect()
}

/// Generator-image search for homomorphisms `source → target`.
pub struct HomSearch<'a> {
    source: &'a ModuleTable,
    target: &'a ModuleTable,
    gens: Vec<usize>,
    /// Per generator: admissible images with the value pairs they force on
    /// the cyclic submodule of that generator.
    candidates: Vec<Vec<(usize, Vec<(usize, usize)>)>>,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a ModuleTable, target: &'a ModuleTable) -> Result<Self> {
        Self::with_filter(source, target, DEFAULT_HOM_BOUND, |_, _| true)
    }

    /// Restricts the image of generator `i` to targets `y` with `allow(i, y)`.
    /// Generators are those of [`ModuleTable::minimal_generating_set`].
    pub fn with_filter(
        source: &'a ModuleTable,
        target: &'a ModuleTable,
        bound: u128,
        allow: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        if !source.same_base(target) {
            return Err(Error::BaseMismatch);
        }
        let gens = source.minimal_generating_set().to_vec();
        let orders = source.additive_orders();
        let mut candidates = Vec::with_capacity(gens.len());
        let mut space: u128 = 1;
        let mut scratch = vec![usize::MAX; source.order()];
        for (i, &g) in gens.iter().enumerate() {
            let len = orders[g];
            let orbit = source.orbit(g, len);
            let mut list = Vec::new();
            for y in 0..target.order() {
                if !allow(i, y) {
                    continue;
                }
                if let Some(pairs) = forced_pairs(&orbit, &target.orbit(y, len), &mut scratch) {
                    list.push((y, pairs));
                }
            }
            space = space.saturating_mul(list.len().max(1) as u128);
            candidates.push(list);
        }
        if space > bound {
            return Err(Error::size("homomorphism search space", space, bound));
        }
        Ok(HomSearch {
            source,
            target,
            gens,
            candidates,
        })
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Visits every homomorphism in lexicographic order of generator images.
    pub fn for_each(&self, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) {
        let mut values = vec![usize::MAX; self.source.order()];
        values[0] = 0;
        let mut domain = vec![0usize];
        let _ = self.descend(0, &mut values, &mut domain, &mut visit);
    }

    fn descend(
        &self,
        level: usize,
        values: &mut Vec<usize>,
        domain: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if level == self.gens.len() {
            debug_assert!(values.iter().all(|&v| v != usize::MAX));
            return visit(values);
        }
        let base_len = domain.len();
        for (_, pairs) in &self.candidates[level] {
            let mut ok = true;
            'outer: for di in 0..base_len {
                let d = domain[di];
                let fd = values[d];
                for &(c, fc) in pairs {
                    let e = self.source.add(d, c);
                    let v = self.target.add(fd, fc);
                    let cur = values[e];
                    if cur == usize::MAX {
                        values[e] = v;
                        domain.push(e);
                    } else if cur != v {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                self.descend(level + 1, values, domain, visit)?;
            }
            for &e in &domain[base_len..] {
                values[e] = usize::MAX;
            }
            domain.truncate(base_len);
        }
        ControlFlow::Continue(())
    }

    pub fn collect(&self) -> Vec<HomMap> {
        let mut out = Vec::new();
        self.for_each(|t| {
            out.push(HomMap { table: t.to_vec() });
            ControlFlow::Continue(())
        });
        out
    }

    pub fn find(&self, mut pred: impl FnMut(&[usize]) -> bool) -> Option<HomMap> {
        let mut found = None;
        self.for_each(|t| {
            if pred(t) {
                found = Some(HomMap { table: t.to_vec() });
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    pub fn target(&self) -> &ModuleTable {
        self.target
    }
}

/// Pairs `(x·s, y·s)` forced by sending `x ↦ y`, or `None` when the
/// assignment is not well defined.
fn forced_pairs(orbit_x: &[usize], orbit_y: &[usize], scratch: &mut [usize]) -> Option<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    let mut ok = true;
    for (&a, &b) in orbit_x.iter().zip(orbit_y) {
        match scratch[a] {
            usize::MAX => {
                scratch[a] = b;
                pairs.push((a, b));
            }
            v if v != b => {
                ok = false;
                break;
            }
            _ => {}
        }
    }
    for &(a, _) in &pairs {
        scratch[a] = usize::MAX;
    }
    ok.then_some(pairs)
}

/// All homomorphisms `m → n`.
pub fn hom_set(m: &ModuleTable, n: &ModuleTable) -> Result<Vec<HomMap>> {
    Ok(HomSearch::new(m, n)?.collect())
}

pub fn hom_set_bounded(m: &ModuleTable, n: &ModuleTable, bound: u128) -> Result<Vec<HomMap>> {
    Ok(HomSearch::with_filter(m, n, bound, |_, _| true)?.collect())
}

/// An isomorphism `a → b`, if the modules are isomorphic.
pub fn find_isomorphism(a: &ModuleTable, b: &ModuleTable) -> Result<Option<HomMap>> {
    find_isomorphism_bounded(a, b, DEFAULT_HOM_BOUND)
}

pub fn find_isomorphism_bounded(a: &ModuleTable, b: &ModuleTable, bound: u128) -> Result<Option<HomMap>> {
    if !a.same_base(b) {
        return Err(Error::BaseMismatch);
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    let gens = a.minimal_generating_set().to_vec();
    let search = HomSearch::with_filter(a, b, bound, |i, y| {
        b.cyclic(y).len() == a.cyclic(gens[i]).len()
    })?;
    Ok(search.find(|t| {
        let mut seen = ElemSet::empty();
        t.iter().all(|&y| seen.insert(y))
    }))
}

/// Key of a map: the images of the source generators, packed 8 bits each.
fn gen_key(gens: &[usize], table: &[usize]) -> u128 {
    gens.iter().fold(0u128, |acc, &g| (acc << 8) | table[g] as u128)
}

/// The endomorphism ring of a module.
#[derive(Debug, Clone)]
pub struct EndRing {
    maps: Vec<HomMap>,
    gens: Vec<usize>,
    index: HashMap<u128, usize>,
    identity: usize,
}

impl EndRing {
    pub fn new(m: &ModuleTable) -> Result<Self> {
        Self::bounded(m, DEFAULT_HOM_BOUND)
    }

    pub fn bounded(m: &ModuleTable, bound: u128) -> Result<Self> {
        let search = HomSearch::with_filter(m, m, bound, |_, _| true)?;
        let gens = search.generators().to_vec();
        if gens.len() > 16 {
            return Err(Error::size("module generators", gens.len() as u128, 16u128));
        }
        let maps = search.collect();
        let index: HashMap<u128, usize> = maps
            .iter()
            .enumerate()
            .map(|(i, f)| (gen_key(&gens, &f.table), i))
            .collect();
        let identity = index[&gen_key(&gens, &HomMap::identity(m).table)];
        Ok(EndRing {
            maps,
            gens,
            index,
            identity,
        })
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[HomMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &HomMap {
        &self.maps[i]
    }

    /// Evaluates endomorphism `i` at `x`.
    #[inline]
    pub fn eval(&self, i: usize, x: usize) -> usize {
        self.maps[i].table[x]
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, f: &HomMap) -> Option<usize> {
        self.index.get(&gen_key(&self.gens, &f.table)).copied()
    }

    /// Index of `f_i ∘ f_j`.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        let key = self
            .gens
            .iter()
            .fold(0u128, |acc, &g| (acc << 8) | self.maps[i].table[self.maps[j].table[g]] as u128);
        self.index[&key]
    }

    /// Index of `f_i + f_j`, given the module's addition.
    pub fn add(&self, m: &ModuleTable, i: usize, j: usize) -> usize {
        let key = self.gens.iter().fold(0u128, |acc, &g| {
            (acc << 8) | m.add(self.maps[i].table[g], self.maps[j].table[g]) as u128
        });
        self.index[&key]
    }

    pub fn neg(&self, m: &ModuleTable, i: usize) -> usize {
        let key = self
            .gens
            .iter()
            .fold(0u128, |acc, &g| (acc << 8) | m.neg(self.maps[i].table[g]) as u128);
        self.index[&key]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.compose(i, i) == i).collect()
    }

    /// First pair `(e, f)` with `e` idempotent and `ef ≠ fe`.
    pub fn noncentral_idempotent(&self) -> Option<(usize, usize)> {
        self.idempotents().into_iter().find_map(|e| {
            (0..self.len())
                .find(|&f| self.compose(e, f) != self.compose(f, e))
                .map(|f| (e, f))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.noncentral_idempotent().is_none()
    }

    /// First `a` with no `x` satisfying `a x a = a`.
    pub fn irregular_element(&self) -> Option<usize> {
        (0..self.len()).find(|&a| !(0..self.len()).any(|x| self.compose(self.compose(a, x), a) == a))
    }

    pub fn is_von_neumann_regular(&self) -> bool {
        self.irregular_element().is_none()
    }

    /// Ring tables under pointwise addition and composition.
    pub fn ring_table(&self, m: &ModuleTable) -> Result<RingTable> {
        let n = self.len();
        if n > crate::bitset::MAX_ELEMENTS {
            return Err(Error::size("endomorphism ring order", n as u128, crate::bitset::MAX_ELEMENTS as u128));
        }
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = self.add(m, i, j);
                mul[i * n + j] = self.compose(i, j);
            }
        }
        RingTable::from_tables(n, add, mul, self.identity)
    }
}

/// Counts the distinct restrictions of `maps` (tables on the parent) to the
/// submodule with the given generators.
fn distinct_restrictions<'m>(maps: impl Iterator<Item = &'m [usize]>, gens: &[usize]) -> usize {
    maps.map(|t| gen_key(gens, t)).collect::<HashSet<_>>().len()
}

/// A submodule `k ≤ b` and a hom `k → a` that does not extend to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFailure {
    pub submodule: Submodule,
    /// The non-extendable map, indexed by parent elements of `k` in increasing order.
    pub map: Vec<usize>,
}

/// `a` is `b`-injective: every hom from a submodule of `b` into `a` extends to `b`.
pub fn is_relatively_injective(a: &ModuleTable, b: &ModuleTable) -> Result<bool> {
    Ok(relative_injectivity_failure(a, b)?.is_none())
}

pub fn relative_injectivity_failure(a: &ModuleTable, b: &ModuleTable) -> Result<Option<ExtensionFailure>> {
    if !a.same_base(b) {
        return Err(Error::BaseMismatch);
    }
    let from_b = hom_set(b, a)?;
    let lattice = b.lattice()?;
    for k in lattice.submodules() {
        let restricted = b.restrict(k)?;
        let sub = &restricted.module;
        let sub_gens = sub.minimal_generating_set();
        let parent_gens: Vec<usize> = sub_gens.iter().map(|&g| restricted.embedding[g]).collect();
        let reachable = distinct_restrictions(from_b.iter().map(|f| f.table.as_slice()), &parent_gens);
        let search = HomSearch::new(sub, a)?;
        let all = search.count();
        if reachable != all {
            let extendable: HashSet<u128> = from_b.iter().map(|f| gen_key(&parent_gens, &f.table)).collect();
            let witness = search
                .find(|t| !extendable.contains(&gen_key(sub_gens, t)))
                .expect("a non-extendable map exists");
            return Ok(Some(ExtensionFailure {
                submodule: *k,
                map: witness.table,
            }));
        }
    }
    Ok(None)
}

pub fn is_quasi_injective(m: &ModuleTable) -> Result<bool> {
    is_relatively_injective(m, m)
}

/// For every submodule `n` and every `g : M → M/n` there is `f ∈ End(M)` with `π f = g`.
pub fn is_quasi_projective(m: &ModuleTable) -> Result<bool> {
    Ok(quasi_projectivity_failure(m)?.is_none())
}

/// A submodule `n` for which some map `M → M/n` does not lift.
pub fn quasi_projectivity_failure(m: &ModuleTable) -> Result<Option<Submodule>> {
    let end = EndRing::new(m)?;
    quasi_projectivity_failure_with(m, &end)
}

pub(crate) fn quasi_projectivity_failure_with(m: &ModuleTable, end: &EndRing) -> Result<Option<Submodule>> {
    let gens = m.minimal_generating_set();
    for n in m.lattice()?.submodules() {
        let q = m.quotient(n)?;
        let lifted: HashSet<u128> = end
            .maps()
            .iter()
            .map(|f| gens.iter().fold(0u128, |acc, &g| (acc << 8) | q.projection[f.table[g]] as u128))
            .collect();
        if lifted.len() != HomSearch::new(m, &q.module)?.count() {
            return Ok(Some(*n));
        }
    }
    Ok(None)
}

/// Injectivity by Baer's criterion: every hom from a right ideal into `m`
/// extends to the ring. Over the integers a finite module is injective only
/// when it is zero.
pub fn is_injective_module(m: &ModuleTable) -> Result<bool> {
    Ok(baer_failure(m)?.is_none())
}

/// A right ideal witnessing the failure of Baer's criterion.
pub fn baer_failure(m: &ModuleTable) -> Result<Option<ElemSet>> {
    let ring = match m.base() {
        BaseRing::Integers => {
            return Ok((!m.is_zero()).then(ElemSet::empty));
        }
        BaseRing::Finite(r) => r,
    };
    let regular = ModuleTable::regular(ring);
    for ideal in ring.right_ideals() {
        let restricted = regular.restrict(ideal)?;
        let sub = &restricted.module;
        let sub_gens: Vec<usize> = sub
            .minimal_generating_set()
            .iter()
            .map(|&g| restricted.embedding[g])
            .collect();
        // Homs R → M are x ↦ (r ↦ x·r); restrict each to the ideal's generators.
        let reachable: HashSet<u128> = (0..m.order())
            .map(|x| sub_gens.iter().fold(0u128, |acc, &i| (acc << 8) | m.act(x, i) as u128))
            .collect();
        if reachable.len() != HomSearch::new(sub, m)?.count() {
            return Ok(Some(*ideal));
        }
    }
    Ok(None)
}

/// The free module `R^k` with coordinates; index digits are base `|R|`, first
/// coordinate most significant.
pub fn free_module(ring: &std::sync::Arc<RingTable>, k: usize) -> Result<ModuleTable> {
    let regular = ModuleTable::regular(ring);
    let mut f = regular.clone();
    for _ in 1..k {
        f = ModuleTable::direct_sum(&f, &regular)?.module;
    }
    Ok(f)
}

/// Projectivity: the canonical surjection `R^g → M` on a minimal generating
/// set splits. Returns the splitting map when it exists.
pub fn projective_splitting(m: &ModuleTable) -> Result<Option<HomMap>> {
    let ring = match m.base() {
        BaseRing::Integers => {
            return Ok(m.is_zero().then(|| HomMap::zero(m)));
        }
        BaseRing::Finite(r) => r,
    };
    if m.is_zero() {
        return Ok(Some(HomMap::zero(m)));
    }
    let gens = m.minimal_generating_set().to_vec();
    let q = ring.order();
    let k = gens.len();
    let size = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > crate::bitset::MAX_ELEMENTS as u128 {
        return Err(Error::size("free module order", size, crate::bitset::MAX_ELEMENTS as u128));
    }
    let free = free_module(ring, k)?;
    let surjection: Vec<usize> = (0..free.order())
        .map(|mut x| {
            let mut acc = 0;
            for &g in gens.iter().rev() {
                acc = m.add(acc, m.act(g, x % q));
                x /= q;
            }
            acc
        })
        .collect();
    let search = HomSearch::with_filter(m, &free, DEFAULT_HOM_BOUND, |i, y| surjection[y] == gens[i])?;
    Ok(search.find(|_| true))
}

pub fn is_projective_module(m: &ModuleTable) -> Result<bool> {
    Ok(projective_splitting(m)?.is_some())
}
