//! Finite right modules over a [`BaseRing`], their constructions, and the
//! submodule lattice.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::ring::{BaseRing, RingTable};

/// Default bound on the order of constructed modules.
pub const DEFAULT_MODULE_BOUND: usize = MAX_ELEMENTS;

/// Abort lattice enumeration beyond this many submodules.
pub const LATTICE_GUARD: usize = 20_000;

/// A submodule, as the set of parent element indices it contains.
pub type Submodule = ElemSet;

#[derive(Default)]
struct ModuleCache {
    cyclic: OnceLock<Vec<ElemSet>>,
    lattice: OnceLock<std::result::Result<Arc<SubmoduleLattice>, Error>>,
    generators: OnceLock<Vec<usize>>,
    additive_order: OnceLock<Vec<usize>>,
    torsion: OnceLock<(ElemSet, ElemSet)>,
}

impl Clone for ModuleCache {
    fn clone(&self) -> Self {
        ModuleCache::default()
    }
}

/// A finite right module with explicit addition and action tables.
///
/// Over a finite ring the action table is `order × |R|`. Over the integer
/// backend no action table is stored: `m · n` is `n`-fold addition.
#[derive(Clone)]
pub struct ModuleTable {
    base: BaseRing,
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    act: Vec<usize>,
    cache: ModuleCache,
}

impl PartialEq for ModuleTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.base == other.base
            && self.add == other.add
            && self.act == other.act
    }
}

impl Eq for ModuleTable {}

impl fmt::Debug for ModuleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match &self.base {
            BaseRing::Finite(r) => format!("finite ring of order {}", r.order()),
            BaseRing::Integers => "integers".to_string(),
        };
        f.debug_struct("ModuleTable")
            .field("order", &self.order)
            .field("base", &base)
            .finish_non_exhaustive()
    }
}

/// `M₁ ⊕ M₂` with its canonical maps. Element `(a, b)` has index `a·|M₂| + b`.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: ModuleTable,
    pub inj1: Vec<usize>,
    pub inj2: Vec<usize>,
    pub proj1: Vec<usize>,
    pub proj2: Vec<usize>,
}

impl DirectSum {
    /// Images of the two injections as submodules of the sum.
    pub fn summands(&self) -> (Submodule, Submodule) {
        (
            self.inj1.iter().copied().collect(),
            self.inj2.iter().copied().collect(),
        )
    }
}

/// `M/N` with the canonical projection. Cosets are numbered in order of
/// their least representative.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: ModuleTable,
    pub projection: Vec<usize>,
    pub representatives: Vec<usize>,
}

/// A submodule viewed as a standalone module.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub module: ModuleTable,
    /// Parent index of each element of the restricted module.
    pub embedding: Vec<usize>,
    /// Restricted index of each parent element, when it belongs to the submodule.
    pub position: Vec<Option<usize>>,
}

impl Restriction {
    /// Pulls a parent submodule contained in this one back to restricted indices.
    pub fn pull(&self, set: &Submodule) -> Submodule {
        set.iter().filter_map(|x| self.position[x]).collect()
    }

    /// Pushes a submodule of the restricted module into the parent.
    pub fn push(&self, set: &Submodule) -> Submodule {
        set.iter().map(|x| self.embedding[x]).collect()
    }
}

impl ModuleTable {
    /// Builds a module from tables and validates the module axioms.
    ///
    /// `act` must be `order × |R|` for a finite base and empty for the integers.
    pub fn from_tables(base: BaseRing, order: usize, add: Vec<usize>, act: Vec<usize>) -> Result<Self> {
        if order == 0 || order > MAX_ELEMENTS {
            return Err(Error::size("module order", order as u128, MAX_ELEMENTS as u128));
        }
        if add.len() != order * order || add.iter().any(|&x| x >= order) {
            return Err(Error::Argument("addition table has the wrong shape".into()));
        }
        let expected = match &base {
            BaseRing::Finite(r) => order * r.order(),
            BaseRing::Integers => 0,
        };
        if act.len() != expected || act.iter().any(|&x| x >= order) {
            return Err(Error::Argument("action table has the wrong shape".into()));
        }
        let m = Self::unchecked(base, order, add, act)?;
        m.validate()?;
        Ok(m)
    }

    fn unchecked(base: BaseRing, order: usize, add: Vec<usize>, act: Vec<usize>) -> Result<Self> {
        let mut neg = vec![usize::MAX; order];
        for a in 0..order {
            neg[a] = (0..order)
                .find(|&b| add[a * order + b] == 0)
                .ok_or_else(|| Error::invalid("additive inverse", format!("m={a}")))?;
        }
        Ok(ModuleTable {
            base,
            order,
            add,
            neg,
            act,
            cache: ModuleCache::default(),
        })
    }

    /// Module-axiom validation over all tuples.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.add(0, a) != a {
                return Err(Error::invalid("additive identity is index 0", format!("m={a}")));
            }
            let mut seen = ElemSet::empty();
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::invalid("commutative addition", format!("m={a}, m'={b}")));
                }
                if !seen.insert(self.add(a, b)) {
                    return Err(Error::invalid("addition rows are permutations", format!("m={a}")));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(Error::invalid(
                            "associative addition",
                            format!("m={a}, m'={b}, m''={c}"),
                        ));
                    }
                }
            }
        }
        if let BaseRing::Finite(r) = &self.base {
            let q = r.order();
            for m in 0..n {
                if self.act(m, r.one()) != m {
                    return Err(Error::invalid("m·1 = m", format!("m={m}")));
                }
                for s in 0..q {
                    for t in 0..q {
                        if self.act(self.act(m, s), t) != self.act(m, r.mul(s, t)) {
                            return Err(Error::invalid(
                                "(m·r)·s = m·(rs)",
                                format!("m={m}, r={s}, s={t}"),
                            ));
                        }
                        if self.act(m, r.add(s, t)) != self.add(self.act(m, s), self.act(m, t)) {
                            return Err(Error::invalid(
                                "m·(r+s) = m·r + m·s",
                                format!("m={m}, r={s}, s={t}"),
                            ));
                        }
                    }
                }
                for m2 in 0..n {
                    for s in 0..q {
                        if self.act(self.add(m, m2), s) != self.add(self.act(m, s), self.act(m2, s)) {
                            return Err(Error::invalid(
                                "(m+m')·r = m·r + m'·r",
                                format!("m={m}, m'={m2}, r={s}"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    /// `m · r` for a finite base ring. Panics on the integer backend.
    #[inline]
    pub fn act(&self, m: usize, r: usize) -> usize {
        let q = self.act.len() / self.order;
        self.act[m * q + r]
    }

    /// `m · k` for a nonnegative integer `k`, by doubling.
    pub fn mul_int(&self, m: usize, mut k: u64) -> usize {
        let (mut acc, mut base) = (0, m);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    /// Ring elements whose action, together with addition, generates the full action.
    pub fn scalar_generators(&self) -> &[usize] {
        match &self.base {
            BaseRing::Finite(r) => r.additive_generators(),
            BaseRing::Integers => &[],
        }
    }

    pub fn same_base(&self, other: &ModuleTable) -> bool {
        self.base == other.base
    }

    /// Additive order of every element.
    pub fn additive_orders(&self) -> &[usize] {
        self.cache.additive_order.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let (mut k, mut acc) = (1, x);
                    while acc != 0 {
                        acc = self.add(acc, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// The orbit of `x` under scalars: `x·r` for each `r` of a finite base,
    /// or `k·x` for `k = 0..=len` over the integers.
    pub(crate) fn orbit(&self, x: usize, len: usize) -> Vec<usize> {
        match &self.base {
            BaseRing::Finite(r) => (0..r.order()).map(|s| self.act(x, s)).collect(),
            BaseRing::Integers => {
                let mut out = Vec::with_capacity(len + 1);
                let mut acc = 0;
                for _ in 0..=len {
                    out.push(acc);
                    acc = self.add(acc, x);
                }
                out
            }
        }
    }

    /// The regular module `R_R`.
    pub fn regular(ring: &Arc<RingTable>) -> Self {
        let n = ring.order();
        let act = ring.mul_table().to_vec();
        ModuleTable {
            base: BaseRing::Finite(Arc::clone(ring)),
            order: n,
            add: ring.add_table().to_vec(),
            neg: (0..n).map(|a| ring.neg(a)).collect(),
            act,
            cache: ModuleCache::default(),
        }
    }

    pub fn regular_of(base: &BaseRing) -> Result<Self> {
        match base {
            BaseRing::Finite(r) => Ok(Self::regular(r)),
            BaseRing::Integers => Err(Error::Unsupported("the regular module of the integers is infinite")),
        }
    }

    /// `ℤ_{d₁} × … × ℤ_{d_k}` as a module over the integer backend.
    /// The first coordinate is the most significant digit of the index.
    pub fn zabelian(invariants: &[usize]) -> Result<Self> {
        Self::zabelian_bounded(invariants, DEFAULT_MODULE_BOUND)
    }

    pub fn zabelian_bounded(invariants: &[usize], bound: usize) -> Result<Self> {
        if invariants.iter().any(|&d| d < 2) {
            return Err(Error::Argument("cyclic factors must have order at least 2".into()));
        }
        let order = invariants
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .unwrap_or(u128::MAX);
        let cap = bound.min(MAX_ELEMENTS) as u128;
        if order > cap {
            return Err(Error::size("module order", order, cap));
        }
        let n = order as usize;
        let decode = |mut x: usize| -> Vec<usize> {
            let mut v = vec![0; invariants.len()];
            for (i, &d) in invariants.iter().enumerate().rev() {
                v[i] = x % d;
                x /= d;
            }
            v
        };
        let encode = |v: &[usize]| v.iter().zip(invariants).fold(0, |acc, (&x, &d)| acc * d + x);
        let digits: Vec<Vec<usize>> = (0..n).map(decode).collect();
        let mut add = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<usize> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .zip(invariants)
                    .map(|((x, y), d)| (x + y) % d)
                    .collect();
                add[a * n + b] = encode(&s);
            }
        }
        Self::unchecked(BaseRing::Integers, n, add, Vec::new())
    }

    /// External direct sum.
    pub fn direct_sum(m1: &ModuleTable, m2: &ModuleTable) -> Result<DirectSum> {
        Self::direct_sum_bounded(m1, m2, DEFAULT_MODULE_BOUND)
    }

    pub fn direct_sum_bounded(m1: &ModuleTable, m2: &ModuleTable, bound: usize) -> Result<DirectSum> {
        if !m1.same_base(m2) {
            return Err(Error::BaseMismatch);
        }
        let (n1, n2) = (m1.order, m2.order);
        let cap = bound.min(MAX_ELEMENTS);
        if n1 * n2 > cap {
            return Err(Error::size("module order", (n1 * n2) as u128, cap as u128));
        }
        let n = n1 * n2;
        let mut add = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                add[x * n + y] = m1.add(x / n2, y / n2) * n2 + m2.add(x % n2, y % n2);
            }
        }
        let act = match &m1.base {
            BaseRing::Finite(r) => {
                let q = r.order();
                let mut act = vec![0; n * q];
                for x in 0..n {
                    for s in 0..q {
                        act[x * q + s] = m1.act(x / n2, s) * n2 + m2.act(x % n2, s);
                    }
                }
                act
            }
            BaseRing::Integers => Vec::new(),
        };
        let module = Self::unchecked(m1.base.clone(), n, add, act)?;
        Ok(DirectSum {
            module,
            inj1: (0..n1).map(|a| a * n2).collect(),
            inj2: (0..n2).collect(),
            proj1: (0..n).map(|x| x / n2).collect(),
            proj2: (0..n).map(|x| x % n2).collect(),
        })
    }

    /// `M/N` for a submodule `N`.
    pub fn quotient(&self, sub: &Submodule) -> Result<Quotient> {
        if !self.is_submodule(sub) {
            return Err(Error::Argument("quotient needs a submodule".into()));
        }
        let n = self.order;
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if class[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for s in sub.iter() {
                class[self.add(a, s)] = id;
            }
        }
        let m = reps.len();
        let mut add = vec![0; m * m];
        for (x, &a) in reps.iter().enumerate() {
            for (y, &b) in reps.iter().enumerate() {
                add[x * m + y] = class[self.add(a, b)];
            }
        }
        let act = match &self.base {
            BaseRing::Finite(r) => {
                let q = r.order();
                let mut act = vec![0; m * q];
                for (x, &a) in reps.iter().enumerate() {
                    for s in 0..q {
                        act[x * q + s] = class[self.act(a, s)];
                    }
                }
                act
            }
            BaseRing::Integers => Vec::new(),
        };
        let module = Self::unchecked(self.base.clone(), m, add, act)?;
        Ok(Quotient {
            module,
            projection: class,
            representatives: reps,
        })
    }

    /// A submodule as a standalone module, elements in increasing parent order.
    pub fn restrict(&self, sub: &Submodule) -> Result<Restriction> {
        if !self.is_submodule(sub) {
            return Err(Error::Argument("restriction needs a submodule".into()));
        }
        let embedding = sub.to_vec();
        let mut position = vec![None; self.order];
        for (i, &x) in embedding.iter().enumerate() {
            position[x] = Some(i);
        }
        let m = embedding.len();
        let at = |x: usize| position[x].expect("submodule is closed");
        let mut add = vec![0; m * m];
        for (i, &a) in embedding.iter().enumerate() {
            for (j, &b) in embedding.iter().enumerate() {
                add[i * m + j] = at(self.add(a, b));
            }
        }
        let act = match &self.base {
            BaseRing::Finite(r) => {
                let q = r.order();
                let mut act = vec![0; m * q];
                for (i, &a) in embedding.iter().enumerate() {
                    for s in 0..q {
                        act[i * q + s] = at(self.act(a, s));
                    }
                }
                act
            }
            BaseRing::Integers => Vec::new(),
        };
        let module = Self::unchecked(self.base.clone(), m, add, act)?;
        Ok(Restriction {
            module,
            embedding,
            position,
        })
    }

    pub fn is_submodule(&self, set: &ElemSet) -> bool {
        if !set.contains(0) || set.iter().any(|x| x >= self.order) {
            return false;
        }
        let gens = self.scalar_generators();
        set.iter().all(|a| {
            gens.iter().all(|&r| set.contains(self.act(a, r)))
                && set.iter().all(|b| set.contains(self.add(a, b)))
        })
    }

    /// The cyclic submodule `xR`.
    pub fn cyclic(&self, x: usize) -> Submodule {
        self.cyclics()[x]
    }

    fn cyclics(&self) -> &[ElemSet] {
        self.cache.cyclic.get_or_init(|| {
            (0..self.order)
                .map(|x| match &self.base {
                    BaseRing::Finite(r) => (0..r.order()).map(|s| self.act(x, s)).collect(),
                    BaseRing::Integers => {
                        let mut set = ElemSet::singleton(0);
                        let mut acc = x;
                        while acc != 0 {
                            set.insert(acc);
                            acc = self.add(acc, x);
                        }
                        set
                    }
                })
                .collect()
        })
    }

    /// `A + B` for submodules.
    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Submodule {
        if b.is_subset(a) {
            return *a;
        }
        if a.is_subset(b) {
            return *b;
        }
        let bs: Vec<usize> = b.iter().collect();
        let mut out = ElemSet::empty();
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Smallest submodule containing `gens`.
    pub fn submodule_generated(&self, gens: &[usize]) -> Submodule {
        gens.iter()
            .fold(ElemSet::singleton(0), |acc, &g| self.sum(&acc, &self.cyclic(g)))
    }

    /// A generating set from which no element can be dropped.
    ///
    /// Elements are tried in order of decreasing cyclic size, so the result
    /// tends to be short.
    pub fn minimal_generating_set(&self) -> &[usize] {
        self.cache.generators.get_or_init(|| {
            let mut candidates: Vec<usize> = (1..self.order).collect();
            candidates.sort_by_key(|&x| (std::cmp::Reverse(self.cyclic(x).len()), x));
            let full = ElemSet::full(self.order);
            let mut span = ElemSet::singleton(0);
            let mut gens = Vec::new();
            for x in candidates {
                if span == full {
                    break;
                }
                if !span.contains(x) {
                    gens.push(x);
                    span = self.sum(&span, &self.cyclic(x));
                }
            }
            loop {
                let redundant = (0..gens.len()).find(|&i| {
                    let rest: Vec<usize> = gens
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &g)| g)
                        .collect();
                    self.submodule_generated(&rest) == full
                });
                match redundant {
                    Some(i) => {
                        gens.remove(i);
                    }
                    None => break,
                }
            }
            gens
        })
    }

    /// The full submodule lattice.
    pub fn lattice(&self) -> Result<Arc<SubmoduleLattice>> {
        self.cache
            .lattice
            .get_or_init(|| SubmoduleLattice::build(self).map(Arc::new))
            .clone()
    }

    /// A complement of `k`, if `k` is a direct summand.
    pub fn summand_complement(&self, k: &Submodule) -> Result<Option<Submodule>> {
        Ok(self.lattice()?.complement(k, self.order))
    }

    pub fn is_direct_summand(&self, k: &Submodule) -> Result<bool> {
        Ok(self.summand_complement(k)?.is_some())
    }

    /// `n` is essential in `within`: `n ⊆ within` and `n` meets every nonzero
    /// cyclic submodule of `within`.
    pub fn is_essential_submodule(&self, n: &Submodule, within: &Submodule) -> Result<bool> {
        if !n.is_subset(within) {
            return Err(Error::Argument("the submodule is not contained in the extension".into()));
        }
        let zero = ElemSet::singleton(0);
        Ok(within
            .iter()
            .filter(|&x| x != 0)
            .all(|x| self.cyclic(x).intersection(n) != zero))
    }

    pub(crate) fn torsion_cache(&self) -> &OnceLock<(ElemSet, ElemSet)> {
        &self.cache.torsion
    }

    pub fn full(&self) -> Submodule {
        ElemSet::full(self.order)
    }

    /// Image of a submodule under an element map.
    pub fn image_of(&self, map: &[usize], set: &Submodule) -> Submodule {
        set.iter().map(|x| map[x]).collect()
    }
}

/// Every submodule of a module, deduplicated.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    all: Vec<Submodule>,
    index: HashMap<Submodule, usize>,
    by_size: HashMap<usize, Vec<usize>>,
}

impl SubmoduleLattice {
    fn build(m: &ModuleTable) -> Result<Self> {
        let mut cyclics: Vec<ElemSet> = (0..m.order()).map(|x| m.cyclic(x)).collect();
        cyclics.sort();
        cyclics.dedup();
        let mut seen = BTreeSet::new();
        let zero = ElemSet::singleton(0);
        seen.insert(zero);
        let mut frontier = vec![zero];
        while let Some(s) = frontier.pop() {
            for c in &cyclics {
                if c.is_subset(&s) {
                    continue;
                }
                let t = m.sum(&s, c);
                if seen.insert(t) {
                    if seen.len() > LATTICE_GUARD {
                        return Err(Error::size(
                            "submodule lattice",
                            seen.len() as u128,
                            LATTICE_GUARD as u128,
                        ));
                    }
                    frontier.push(t);
                }
            }
        }
        let mut all: Vec<ElemSet> = seen.into_iter().collect();
        all.sort_by_key(|s| (s.len(), *s));
        let index = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut by_size: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, s) in all.iter().enumerate() {
            by_size.entry(s.len()).or_default().push(i);
        }
        let lattice = SubmoduleLattice { all, index, by_size };
        lattice.check_intersections()?;
        Ok(lattice)
    }

    fn check_intersections(&self) -> Result<()> {
        if self.all.len() > 2_000 {
            return Ok(());
        }
        for a in &self.all {
            for b in &self.all {
                if !self.index.contains_key(&a.intersection(b)) {
                    return Err(Error::invalid("lattice closed under intersection", format!("{a:?} ∩ {b:?}")));
                }
            }
        }
        Ok(())
    }

    /// Checks closure under sums; quadratic in the lattice size.
    pub fn verify_sums(&self, m: &ModuleTable) -> bool {
        self.all
            .iter()
            .all(|a| self.all.iter().all(|b| self.index.contains_key(&m.sum(a, b))))
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    /// Submodules sorted by size, then bit pattern.
    pub fn submodules(&self) -> &[Submodule] {
        &self.all
    }

    pub fn contains(&self, s: &Submodule) -> bool {
        self.index.contains_key(s)
    }

    pub fn position(&self, s: &Submodule) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Submodules of exactly `size` elements.
    pub fn of_size(&self, size: usize) -> impl Iterator<Item = &Submodule> + '_ {
        self.by_size
            .get(&size)
            .into_iter()
            .flat_map(move |v| v.iter().map(move |&i| &self.all[i]))
    }

    /// First complement of `k` in lattice order, where `order = |M|`.
    pub fn complement(&self, k: &Submodule, order: usize) -> Option<Submodule> {
        let size = k.len();
        if size == 0 || !order.is_multiple_of(size) {
            return None;
        }
        let zero = ElemSet::singleton(0);
        self.of_size(order / size)
            .find(|n| n.intersection(k) == zero)
            .copied()
    }

    /// All direct summands, in lattice order.
    pub fn summands(&self, order: usize) -> Vec<Submodule> {
        self.all
            .iter()
            .filter(|k| self.complement(k, order).is_some())
            .copied()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Shape;

    fn ring(r: RingTable) -> Arc<RingTable> {
        Arc::new(r)
    }

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    /// Submodule count by scanning every subset (tiny modules only).
    fn submodule_count_by_scan(m: &ModuleTable) -> usize {
        let n = m.order();
        (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<ElemSet>())
            .filter(|s| m.is_submodule(s))
            .count()
    }

    fn f2_squared() -> ModuleTable {
        let f2 = ring(RingTable::zmod(2).unwrap());
        let r = ModuleTable::regular(&f2);
        ModuleTable::direct_sum(&r, &r).unwrap().module
    }

    #[test]
    fn regular_module_examples() {
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        assert_eq!(z4.order(), 4);
        z4.validate().unwrap();
        let t2 = ModuleTable::regular(&ring(
            RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Upper).unwrap(),
        ));
        assert_eq!(t2.order(), 8);
        t2.validate().unwrap();
        let zero = ModuleTable::regular(&ring(RingTable::zmod(1).unwrap()));
        assert!(zero.is_zero());
        assert!(ModuleTable::regular_of(&BaseRing::Integers).is_err());
    }

    #[test]
    fn zabelian_examples() {
        let z4 = ModuleTable::zabelian(&[4]).unwrap();
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.mul_int(1, 2), 2);
        assert_eq!(z4.mul_int(3, 3), 1);
        let klein = ModuleTable::zabelian(&[2, 2]).unwrap();
        klein.validate().unwrap();
        assert!(klein.additive_orders().iter().all(|&o| o <= 2));
        let m = ModuleTable::zabelian(&[2, 4]).unwrap();
        assert_eq!(m.order(), 8);
        assert_eq!(*m.additive_orders().iter().max().unwrap(), 4);
        assert!(ModuleTable::zabelian(&[1]).is_err());
        assert!(matches!(ModuleTable::zabelian(&[16, 32]), Err(Error::Size { .. })));
    }

    #[test]
    fn direct_sum_examples() {
        let f2 = ring(RingTable::zmod(2).unwrap());
        let r = ModuleTable::regular(&f2);
        let ds = ModuleTable::direct_sum(&r, &r).unwrap();
        assert_eq!(ds.module.order(), 4);
        ds.module.validate().unwrap();
        let (a, b) = ds.summands();
        assert!(ds.module.is_submodule(&a) && ds.module.is_submodule(&b));
        let zero = ModuleTable::regular(&ring(RingTable::zmod(1).unwrap()));
        let z4 = ModuleTable::zabelian(&[4]).unwrap();
        assert!(matches!(ModuleTable::direct_sum(&z4, &r), Err(Error::BaseMismatch)));
        let zg = ModuleTable::direct_sum(&z4, &ModuleTable::zabelian(&[2]).unwrap()).unwrap();
        zg.module.validate().unwrap();
        let r4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        let zero4 = r4.quotient(&r4.full()).unwrap().module;
        assert_eq!(ModuleTable::direct_sum(&r4, &zero4).unwrap().module, r4);
        let _ = zero;
    }

    #[test]
    fn quotient_examples() {
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        let q = z4.quotient(&set(&[0])).unwrap();
        assert_eq!(q.module, z4);
        assert!(z4.quotient(&z4.full()).unwrap().module.is_zero());
        let q2 = z4.quotient(&set(&[0, 2])).unwrap();
        assert_eq!(q2.module.order(), 2);
        q2.module.validate().unwrap();
        assert_eq!(q2.projection, vec![0, 1, 0, 1]);
        assert!(z4.quotient(&set(&[0, 1])).is_err());
    }

    #[test]
    fn generated_submodules() {
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        assert_eq!(z4.submodule_generated(&[]), set(&[0]));
        assert_eq!(z4.submodule_generated(&[2]), set(&[0, 2]));
        assert_eq!(z4.submodule_generated(&[1]), z4.full());
        assert_eq!(z4.submodule_generated(&[3]), z4.full());
    }

    #[test]
    fn lattice_examples() {
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        assert_eq!(z4.lattice().unwrap().len(), 3);
        assert_eq!(f2_squared().lattice().unwrap().len(), 5);
        let zero = ModuleTable::regular(&ring(RingTable::zmod(1).unwrap()));
        assert_eq!(zero.lattice().unwrap().len(), 1);
    }

    #[test]
    fn lattice_matches_subset_scan() {
        let f2 = RingTable::zmod(2).unwrap();
        let modules = vec![
            ModuleTable::regular(&ring(RingTable::zmod(4).unwrap())),
            ModuleTable::regular(&ring(RingTable::zmod(8).unwrap())),
            ModuleTable::regular(&ring(RingTable::zmod(12).unwrap())),
            ModuleTable::regular(&ring(RingTable::triangular(&f2, 2, Shape::Upper).unwrap())),
            ModuleTable::regular(&ring(RingTable::matrix(&f2, 2).unwrap())),
            ModuleTable::zabelian(&[2, 2]).unwrap(),
            ModuleTable::zabelian(&[2, 4]).unwrap(),
            ModuleTable::zabelian(&[2, 2, 2]).unwrap(),
            ModuleTable::zabelian(&[4, 4]).unwrap(),
            f2_squared(),
        ];
        for m in &modules {
            let lattice = m.lattice().unwrap();
            assert_eq!(lattice.len(), submodule_count_by_scan(m), "{m:?}");
            assert!(lattice.verify_sums(m));
        }
    }

    #[test]
    fn direct_summand_examples() {
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        assert!(z4.is_direct_summand(&set(&[0])).unwrap());
        assert!(z4.is_direct_summand(&z4.full()).unwrap());
        assert!(!z4.is_direct_summand(&set(&[0, 2])).unwrap());
        let v = f2_squared();
        let line = set(&[0, 1]);
        let complement = v.summand_complement(&line).unwrap().unwrap();
        assert_eq!(complement.intersection(&line), set(&[0]));
        assert_eq!(v.sum(&complement, &line), v.full());
    }

    #[test]
    fn minimal_generating_sets() {
        let zero = ModuleTable::regular(&ring(RingTable::zmod(1).unwrap()));
        assert!(zero.minimal_generating_set().is_empty());
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        assert_eq!(z4.minimal_generating_set().len(), 1);
        assert_eq!(ModuleTable::zabelian(&[2, 2]).unwrap().minimal_generating_set().len(), 2);
        assert_eq!(ModuleTable::zabelian(&[2, 3]).unwrap().minimal_generating_set().len(), 1);
    }

    #[test]
    fn essential_submodule_examples() {
        let z4 = ModuleTable::regular(&ring(RingTable::zmod(4).unwrap()));
        assert!(z4.is_essential_submodule(&z4.full(), &z4.full()).unwrap());
        assert!(z4.is_essential_submodule(&set(&[0, 2]), &z4.full()).unwrap());
        let v = f2_squared();
        assert!(!v.is_essential_submodule(&set(&[0, 1]), &v.full()).unwrap());
        assert!(v.is_essential_submodule(&v.full(), &set(&[0, 1])).is_err());
    }

    #[test]
    fn restriction_round_trip() {
        let m = ModuleTable::zabelian(&[2, 4]).unwrap();
        let sub = m.submodule_generated(&[2]);
        let r = m.restrict(&sub).unwrap();
        r.module.validate().unwrap();
        assert_eq!(r.module.order(), sub.len());
        assert_eq!(r.push(&r.pull(&sub)), sub);
    }
}
