//! Finite unital rings stored as dense operation tables.
//!
//! Elements are indices `0..order`. Index 0 is always the additive identity;
//! the multiplicative identity is recorded explicitly. Right ideals are
//! [`ElemSet`]s over the element indices.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Default bound on the order of constructed rings.
pub const DEFAULT_RING_BOUND: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Upper,
    Lower,
}

#[derive(Default)]
struct RingCache {
    principal: OnceLock<Vec<ElemSet>>,
    right_ideals: OnceLock<Vec<ElemSet>>,
    additive_gens: OnceLock<Vec<usize>>,
}

impl Clone for RingCache {
    fn clone(&self) -> Self {
        RingCache::default()
    }
}

/// A finite ring with identity given by its addition and multiplication tables.
#[derive(Clone)]
pub struct RingTable {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    one: usize,
    cache: RingCache,
}

impl PartialEq for RingTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for RingTable {}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("order", &self.order)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl RingTable {
    /// Builds a ring from row-major `order × order` tables and validates every axiom.
    pub fn from_tables(order: usize, add: Vec<usize>, mul: Vec<usize>, one: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Argument("a ring needs at least one element".into()));
        }
        if order > MAX_ELEMENTS {
            return Err(Error::size("ring order", order as u128, MAX_ELEMENTS as u128));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::Argument("table size does not match order".into()));
        }
        if one >= order || add.iter().chain(mul.iter()).any(|&x| x >= order) {
            return Err(Error::Argument("table entry out of range".into()));
        }
        let ring = Self::from_tables_unchecked(order, add, mul, one)?;
        ring.validate()?;
        Ok(ring)
    }

    /// Builds the tables without checking associativity or distributivity.
    /// Used by constructors whose output is correct by construction.
    fn from_tables_unchecked(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
    ) -> Result<Self> {
        let mut neg = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] == 0 {
                    neg[a] = b;
                    break;
                }
            }
            if neg[a] == usize::MAX {
                return Err(Error::invalid("additive inverse", format!("a={a}")));
            }
        }
        Ok(RingTable {
            order,
            add,
            mul,
            neg,
            one,
            cache: RingCache::default(),
        })
    }

    /// Full ring-axiom validation over all pairs and triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(Error::invalid("additive identity is index 0", format!("a={a}")));
            }
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(Error::invalid("multiplicative identity", format!("a={a}")));
            }
            let mut seen = ElemSet::empty();
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::invalid("commutative addition", format!("a={a}, b={b}")));
                }
                if !seen.insert(self.add(a, b)) {
                    return Err(Error::invalid("addition rows are permutations", format!("a={a}")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::invalid(
                            "associative addition",
                            format!("a={a}, b={b}, c={c}"),
                        ));
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::invalid(
                            "associative multiplication",
                            format!("a={a}, b={b}, c={c}"),
                        ));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(Error::invalid(
                            "left distributivity",
                            format!("a={a}, b={b}, c={c}"),
                        ));
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(Error::invalid(
                            "right distributivity",
                            format!("a={a}, b={b}, c={c}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    /// ℤ/nℤ with the default order bound.
    pub fn zmod(n: usize) -> Result<Self> {
        Self::zmod_bounded(n, DEFAULT_RING_BOUND)
    }

    pub fn zmod_bounded(n: usize, bound: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("zmod needs n >= 1".into()));
        }
        check_bound(n as u128, bound)?;
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        Self::from_tables_unchecked(n, add, mul, 1 % n)
    }

    /// Componentwise product; `(a, b)` is stored at index `a * |r2| + b`.
    pub fn product(r1: &RingTable, r2: &RingTable) -> Result<Self> {
        Self::product_bounded(r1, r2, DEFAULT_RING_BOUND)
    }

    pub fn product_bounded(r1: &RingTable, r2: &RingTable, bound: usize) -> Result<Self> {
        let (n1, n2) = (r1.order, r2.order);
        check_bound(n1 as u128 * n2 as u128, bound)?;
        let n = n1 * n2;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for x in 0..n {
            let (a1, b1) = (x / n2, x % n2);
            for y in 0..n {
                let (a2, b2) = (y / n2, y % n2);
                add[x * n + y] = r1.add(a1, a2) * n2 + r2.add(b1, b2);
                mul[x * n + y] = r1.mul(a1, a2) * n2 + r2.mul(b1, b2);
            }
        }
        Self::from_tables_unchecked(n, add, mul, r1.one * n2 + r2.one)
    }

    /// Full `k × k` matrix ring over `r`.
    pub fn matrix(r: &RingTable, k: usize) -> Result<Self> {
        Self::matrix_bounded(r, k, DEFAULT_RING_BOUND)
    }

    pub fn matrix_bounded(r: &RingTable, k: usize, bound: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
        Self::matrix_like(r, k, &cells, bound)
    }

    /// Ring of `k × k` triangular matrices over `r`.
    pub fn triangular(r: &RingTable, k: usize, shape: Shape) -> Result<Self> {
        Self::triangular_bounded(r, k, shape, DEFAULT_RING_BOUND)
    }

    pub fn triangular_bounded(r: &RingTable, k: usize, shape: Shape, bound: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| match shape {
                Shape::Upper => i <= j,
                Shape::Lower => i >= j,
            })
            .collect();
        Self::matrix_like(r, k, &cells, bound)
    }

    /// Matrices supported on `cells`; the cell list must be closed under
    /// matrix multiplication and contain the diagonal.
    fn matrix_like(r: &RingTable, k: usize, cells: &[(usize, usize)], bound: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("matrix size must be at least 1".into()));
        }
        let q = r.order as u128;
        let order = q
            .checked_pow(cells.len() as u32)
            .ok_or_else(|| Error::size("ring order", u128::MAX, bound as u128))?;
        check_bound(order, bound)?;
        let n = order as usize;
        let cell_index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
        let decode = |mut x: usize| -> Vec<usize> {
            let mut v = vec![0; k * k];
            for &(i, j) in cells {
                v[i * k + j] = x % r.order;
                x /= r.order;
            }
            v
        };
        let encode = |v: &[usize]| -> usize {
            cells
                .iter()
                .rev()
                .fold(0, |acc, &(i, j)| acc * r.order + v[i * k + j])
        };
        let mats: Vec<Vec<usize>> = (0..n).map(decode).collect();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let mut buf = vec![0; k * k];
        for x in 0..n {
            for y in 0..n {
                for t in 0..k * k {
                    buf[t] = r.add(mats[x][t], mats[y][t]);
                }
                add[x * n + y] = encode(&buf);
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = 0;
                        for l in 0..k {
                            acc = r.add(acc, r.mul(mats[x][i * k + l], mats[y][l * k + j]));
                        }
                        buf[i * k + j] = acc;
                    }
                }
                debug_assert!(buf
                    .iter()
                    .enumerate()
                    .all(|(t, &v)| v == 0 || cell_index(t / k, t % k).is_some()));
                mul[x * n + y] = encode(&buf);
            }
        }
        let mut id = vec![0; k * k];
        for i in 0..k {
            id[i * k + i] = r.one;
        }
        Self::from_tables_unchecked(n, add, mul, encode(&id))
    }

    /// The opposite ring: same addition, `a ∘ b = b · a`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mul = (0..n * n).map(|i| self.mul(i % n, i / n)).collect();
        RingTable {
            order: n,
            add: self.add.clone(),
            mul,
            neg: self.neg.clone(),
            one: self.one,
            cache: RingCache::default(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A small set of elements generating `(R, +)`.
    pub fn additive_generators(&self) -> &[usize] {
        self.cache.additive_gens.get_or_init(|| {
            let mut span = ElemSet::singleton(0);
            let mut gens = Vec::new();
            for a in 0..self.order {
                if span.contains(a) {
                    continue;
                }
                gens.push(a);
                span = self.additive_closure(span, a);
            }
            gens
        })
    }

    fn additive_closure(&self, mut span: ElemSet, extra: usize) -> ElemSet {
        let mut frontier = vec![extra];
        span.insert(extra);
        let mut members: Vec<usize> = span.to_vec();
        while let Some(x) = frontier.pop() {
            let current = members.clone();
            for y in current {
                let s = self.add(x, y);
                if span.insert(s) {
                    members.push(s);
                    frontier.push(s);
                }
            }
        }
        span
    }

    /// The principal right ideal `aR`.
    pub fn principal_right_ideal(&self, a: usize) -> ElemSet {
        self.principal()[a]
    }

    fn principal(&self) -> &[ElemSet] {
        self.cache.principal.get_or_init(|| {
            (0..self.order)
                .map(|a| (0..self.order).map(|r| self.mul(a, r)).collect())
                .collect()
        })
    }

    pub fn is_right_ideal(&self, set: &ElemSet) -> bool {
        if !set.contains(0) || set.iter().any(|x| x >= self.order) {
            return false;
        }
        set.iter().all(|a| {
            set.iter().all(|b| set.contains(self.add(a, b)))
                && (0..self.order).all(|r| set.contains(self.mul(a, r)))
        })
    }

    fn is_two_sided_ideal(&self, set: &ElemSet) -> bool {
        self.is_right_ideal(set)
            && set
                .iter()
                .all(|a| (0..self.order).all(|r| set.contains(self.mul(r, a))))
    }

    /// Sum of two right ideals.
    pub fn ideal_sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        if b.is_subset(a) {
            return *a;
        }
        if a.is_subset(b) {
            return *b;
        }
        let mut out = ElemSet::empty();
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// All right ideals, sorted by size and then by bit pattern.
    pub fn right_ideals(&self) -> &[ElemSet] {
        self.cache.right_ideals.get_or_init(|| {
            let mut principal: Vec<ElemSet> = self.principal().to_vec();
            principal.sort();
            principal.dedup();
            let mut all = std::collections::BTreeSet::new();
            all.insert(ElemSet::singleton(0));
            let mut frontier = vec![ElemSet::singleton(0)];
            while let Some(i) = frontier.pop() {
                for p in &principal {
                    let s = self.ideal_sum(&i, p);
                    if all.insert(s) {
                        frontier.push(s);
                    }
                }
            }
            let mut v: Vec<ElemSet> = all.into_iter().collect();
            v.sort_by_key(|s| (s.len(), *s));
            v
        })
    }

    /// Essentiality of a right ideal via the principal criterion:
    /// `I` is essential iff `aR ∩ I ≠ 0` for every nonzero `a`.
    pub fn is_essential_right_ideal(&self, ideal: &ElemSet) -> bool {
        let zero = ElemSet::singleton(0);
        (1..self.order).all(|a| self.principal()[a].intersection(ideal) != zero)
    }

    /// Essentiality by the definition: `I ∩ J ≠ 0` for every nonzero right ideal `J`.
    pub fn is_essential_right_ideal_naive(&self, ideal: &ElemSet) -> bool {
        let zero = ElemSet::singleton(0);
        self.right_ideals()
            .iter()
            .filter(|j| **j != zero)
            .all(|j| j.intersection(ideal) != zero)
    }

    /// Right annihilator of a single element: `{r : a r = 0}`.
    pub fn right_annihilator(&self, a: usize) -> ElemSet {
        (0..self.order).filter(|&r| self.mul(a, r) == 0).collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.idempotents()
            .into_iter()
            .all(|e| (0..self.order).all(|r| self.mul(e, r) == self.mul(r, e)))
    }

    pub fn is_von_neumann_regular(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// Complement of a right ideal inside `R_R`, if one exists.
    pub fn ideal_complement(&self, ideal: &ElemSet) -> Option<ElemSet> {
        let n = self.order;
        let zero = ElemSet::singleton(0);
        self.right_ideals()
            .iter()
            .filter(|j| j.len() * ideal.len() == n)
            .find(|j| j.intersection(ideal) == zero)
            .copied()
    }

    /// Every right ideal is a direct summand of `R_R`.
    pub fn is_semisimple(&self) -> bool {
        self.right_ideals()
            .iter()
            .all(|i| self.ideal_complement(i).is_some())
    }

    /// Singular ideal `Z(R_R)`: elements whose right annihilator is essential.
    pub fn right_singular_ideal(&self) -> ElemSet {
        (0..self.order)
            .filter(|&a| self.is_essential_right_ideal(&self.right_annihilator(a)))
            .collect()
    }

    /// Goldie torsion ideal `Z₂(R_R)`: `x` with `{r : x r ∈ Z(R_R)}` essential.
    pub fn right_goldie_torsion_ideal(&self) -> ElemSet {
        let z = self.right_singular_ideal();
        (0..self.order)
            .filter(|&a| {
                let coset_ann: ElemSet = (0..self.order)
                    .filter(|&r| z.contains(self.mul(a, r)))
                    .collect();
                self.is_essential_right_ideal(&coset_ann)
            })
            .collect()
    }

    /// Quotient by a two-sided ideal; cosets are numbered by their least element.
    pub fn quotient(&self, ideal: &ElemSet) -> Result<Self> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::Argument("quotient needs a two-sided ideal".into()));
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
            for i in ideal.iter() {
                class[self.add(a, i)] = id;
            }
        }
        let m = reps.len();
        let mut add = vec![0; m * m];
        let mut mul = vec![0; m * m];
        for (x, &a) in reps.iter().enumerate() {
            for (y, &b) in reps.iter().enumerate() {
                add[x * m + y] = class[self.add(a, b)];
                mul[x * m + y] = class[self.mul(a, b)];
            }
        }
        Self::from_tables_unchecked(m, add, mul, class[self.one])
    }

    /// `R/Z₂(R_R)` is semisimple and idempotents lift strongly modulo `Z₂(R_R)`.
    pub fn is_z2_semiperfect(&self) -> bool {
        let z2 = self.right_goldie_torsion_ideal();
        let quotient = match self.quotient(&z2) {
            Ok(q) => q,
            Err(_) => return false,
        };
        if !quotient.is_semisimple() {
            return false;
        }
        let idem: Vec<usize> = self.idempotents();
        (0..self.order)
            .filter(|&a| z2.contains(self.sub(self.mul(a, a), a)))
            .all(|a| {
                let ar = self.principal_right_ideal(a);
                idem.iter()
                    .any(|&e| ar.contains(e) && z2.contains(self.sub(e, a)))
            })
    }
}

fn check_bound(order: u128, bound: usize) -> Result<()> {
    let cap = bound.min(MAX_ELEMENTS) as u128;
    if order > cap {
        return Err(Error::size("ring order", order, cap));
    }
    Ok(())
}

/// The ring a module lives over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseRing {
    Finite(Arc<RingTable>),
    /// The integers, never enumerated; only annihilator essentiality is answered.
    Integers,
}

/// A right ideal of a [`BaseRing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RightIdeal {
    Finite(ElemSet),
    /// The ideal `nℤ`.
    Integer(u64),
}

impl BaseRing {
    pub fn finite(ring: RingTable) -> Self {
        BaseRing::Finite(Arc::new(ring))
    }

    pub fn table(&self) -> Result<&RingTable> {
        match self {
            BaseRing::Finite(r) => Ok(r),
            BaseRing::Integers => Err(Error::Unsupported("the ring of integers has no element table")),
        }
    }

    pub fn right_ideals(&self) -> Result<Vec<RightIdeal>> {
        Ok(self
            .table()?
            .right_ideals()
            .iter()
            .map(|&s| RightIdeal::Finite(s))
            .collect())
    }

    pub fn is_essential_right_ideal(&self, ideal: &RightIdeal) -> bool {
        match (self, ideal) {
            (BaseRing::Finite(r), RightIdeal::Finite(s)) => r.is_essential_right_ideal(s),
            (BaseRing::Integers, RightIdeal::Integer(n)) => *n != 0,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> RingTable {
        RingTable::zmod(2).unwrap()
    }

    /// Right ideals by scanning every subset (small rings only).
    fn right_ideals_by_subset_scan(r: &RingTable) -> Vec<ElemSet> {
        let n = r.order();
        assert!(n <= 16);
        let mut out: Vec<ElemSet> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<ElemSet>())
            .filter(|s| r.is_right_ideal(s))
            .collect();
        out.sort_by_key(|s| (s.len(), *s));
        out
    }

    #[test]
    fn zmod_examples() {
        let z1 = RingTable::zmod(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.zero(), z1.one());
        let z4 = RingTable::zmod(4).unwrap();
        assert_eq!(z4.mul(2, 2), 0);
        assert_eq!(z4.one(), 1);
        assert!(RingTable::zmod(6).unwrap().is_semisimple());
        assert!(RingTable::zmod(0).is_err());
        assert!(matches!(RingTable::zmod(65), Err(Error::Size { .. })));
        for n in 1..=12 {
            RingTable::zmod(n).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn product_examples() {
        let z2 = f2();
        let z3 = RingTable::zmod(3).unwrap();
        let p = RingTable::product(&z2, &z3).unwrap();
        p.validate().unwrap();
        assert_eq!(p.order(), 6);
        let p22 = RingTable::product(&z2, &z2).unwrap();
        assert_eq!(p22.idempotents().len(), 4);
        let z = RingTable::zmod(1).unwrap();
        let r0 = RingTable::product(&z3, &z).unwrap();
        assert_eq!(r0, z3);
        assert!(RingTable::product(&RingTable::zmod(8).unwrap(), &RingTable::zmod(9).unwrap()).is_err());
    }

    #[test]
    fn triangular_and_matrix() {
        let t = RingTable::triangular(&f2(), 2, Shape::Upper).unwrap();
        t.validate().unwrap();
        assert_eq!(t.order(), 8);
        assert!(!t.is_commutative());
        let k1 = RingTable::triangular(&RingTable::zmod(3).unwrap(), 1, Shape::Lower).unwrap();
        assert_eq!(k1, RingTable::zmod(3).unwrap());
        let m = RingTable::matrix(&f2(), 2).unwrap();
        m.validate().unwrap();
        assert_eq!(m.order(), 16);
        assert!(m.is_semisimple());
        assert_eq!(RingTable::matrix(&RingTable::zmod(5).unwrap(), 1).unwrap(), RingTable::zmod(5).unwrap());
        assert!(RingTable::matrix(&f2(), 3).is_err());
        RingTable::triangular(&f2(), 3, Shape::Lower).unwrap().validate().unwrap();
    }

    #[test]
    fn right_ideal_examples() {
        let z4 = RingTable::zmod(4).unwrap();
        assert_eq!(z4.right_ideals().len(), 3);
        assert_eq!(z4.right_ideals()[1].to_vec(), vec![0, 2]);
        assert_eq!(f2().right_ideals().len(), 2);
        let z6 = RingTable::zmod(6).unwrap();
        let ideals: Vec<Vec<usize>> = z6.right_ideals().iter().map(|s| s.to_vec()).collect();
        assert_eq!(ideals, vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]);
        assert!(BaseRing::Integers.right_ideals().is_err());
    }

    #[test]
    fn right_ideals_match_subset_scan() {
        let rings = [
            RingTable::zmod(4).unwrap(),
            RingTable::zmod(6).unwrap(),
            RingTable::zmod(8).unwrap(),
            RingTable::zmod(12).unwrap(),
            RingTable::triangular(&f2(), 2, Shape::Upper).unwrap(),
            RingTable::triangular(&f2(), 2, Shape::Lower).unwrap(),
            RingTable::matrix(&f2(), 2).unwrap(),
            RingTable::product(&f2(), &RingTable::zmod(4).unwrap()).unwrap(),
        ];
        for r in &rings {
            assert_eq!(r.right_ideals(), right_ideals_by_subset_scan(r).as_slice());
        }
    }

    #[test]
    fn essentiality_examples() {
        let z4 = RingTable::zmod(4).unwrap();
        assert!(z4.is_essential_right_ideal(&[0, 2].into_iter().collect()));
        let z6 = RingTable::zmod(6).unwrap();
        assert!(!z6.is_essential_right_ideal(&[0, 2, 4].into_iter().collect()));
        assert!(z6.is_essential_right_ideal(&ElemSet::full(6)));
        assert!(BaseRing::Integers.is_essential_right_ideal(&RightIdeal::Integer(4)));
        assert!(!BaseRing::Integers.is_essential_right_ideal(&RightIdeal::Integer(0)));
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(RingTable::zmod(4).unwrap().idempotents(), vec![0, 1]);
        assert_eq!(RingTable::zmod(6).unwrap().idempotents(), vec![0, 1, 3, 4]);
        assert_eq!(f2().idempotents(), vec![0, 1]);
    }

    #[test]
    fn regularity_and_semisimplicity() {
        assert!(RingTable::zmod(6).unwrap().is_von_neumann_regular());
        assert!(!RingTable::zmod(4).unwrap().is_von_neumann_regular());
        assert!(RingTable::zmod(1).unwrap().is_von_neumann_regular());
        assert!(RingTable::zmod(6).unwrap().is_semisimple());
        assert!(!RingTable::zmod(4).unwrap().is_semisimple());
    }

    #[test]
    fn z2_semiperfect_examples() {
        let z4 = RingTable::zmod(4).unwrap();
        assert_eq!(z4.right_singular_ideal().to_vec(), vec![0, 2]);
        assert_eq!(z4.right_goldie_torsion_ideal(), ElemSet::full(4));
        assert!(z4.is_z2_semiperfect());
        assert!(f2().is_z2_semiperfect());
        assert!(RingTable::zmod(6).unwrap().is_z2_semiperfect());
        assert!(RingTable::matrix(&f2(), 2).unwrap().is_z2_semiperfect());
    }

    #[test]
    fn opposite_examples() {
        let z6 = RingTable::zmod(6).unwrap();
        assert_eq!(z6.opposite(), z6);
        let t = RingTable::triangular(&f2(), 2, Shape::Upper).unwrap();
        assert_eq!(t.opposite().opposite(), t);
        assert_ne!(t.opposite(), t);
    }
}
