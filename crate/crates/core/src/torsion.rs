//! Singular and Goldie torsion submodules, the `t_M` operator, and
//! t-essential / t-closed submodules.

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::Result;
use crate::hom::{preimage_unchecked, HomMap};
use crate::module::{ModuleTable, Submodule, SubmoduleLattice};
use crate::ring::{BaseRing, RightIdeal};

/// `Z(M) ⊆ Z₂(M)` of a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionProfile {
    pub z: Submodule,
    pub z2: Submodule,
}

/// `{r ∈ R : x·r = 0}`. Over the integers this is `nℤ` with `n` the additive order of `x`.
pub fn annihilator(m: &ModuleTable, x: usize) -> RightIdeal {
    match m.base() {
        BaseRing::Integers => RightIdeal::Integer(m.additive_orders()[x] as u64),
        BaseRing::Finite(r) => RightIdeal::Finite((0..r.order()).filter(|&s| m.act(x, s) == 0).collect()),
    }
}

/// `Z(M)`: elements whose annihilator is an essential right ideal.
pub fn singular_submodule(m: &ModuleTable) -> Submodule {
    match m.base() {
        BaseRing::Integers => m.full(),
        BaseRing::Finite(r) => {
            let z: Submodule = (0..m.order())
                .filter(|&x| {
                    let ann: ElemSet = (0..r.order()).filter(|&s| m.act(x, s) == 0).collect();
                    r.is_essential_right_ideal(&ann)
                })
                .collect();
            debug_assert!(m.is_submodule(&z));
            z
        }
    }
}

/// `Z(M)` decided with the all-ideal essentiality test instead of the principal one.
pub fn singular_submodule_naive(m: &ModuleTable) -> Submodule {
    match m.base() {
        BaseRing::Integers => m.full(),
        BaseRing::Finite(r) => (0..m.order())
            .filter(|&x| {
                let ann: ElemSet = (0..r.order()).filter(|&s| m.act(x, s) == 0).collect();
                r.is_essential_right_ideal_naive(&ann)
            })
            .collect(),
    }
}

/// `Z(M)` and `Z₂(M)`, the latter as the pullback of `Z(M/Z(M))`. Memoized per module.
pub fn goldie_torsion(m: &ModuleTable) -> Result<TorsionProfile> {
    if let Some(&(z, z2)) = m.torsion_cache().get() {
        return Ok(TorsionProfile { z, z2 });
    }
    let z = singular_submodule(m);
    let q = m.quotient(&z)?;
    let zq = singular_submodule(&q.module);
    let z2: Submodule = (0..m.order()).filter(|&x| zq.contains(q.projection[x])).collect();
    debug_assert!(z.is_subset(&z2));
    debug_assert!(singular_submodule(&m.quotient(&z2)?.module).len() == 1);
    let _ = m.torsion_cache().set((z, z2));
    Ok(TorsionProfile { z, z2 })
}

/// `Z₂(k)` for a submodule `k`, computed on `k` as a standalone module.
pub fn intrinsic_z2(m: &ModuleTable, k: &Submodule) -> Result<Submodule> {
    let r = m.restrict(k)?;
    Ok(r.push(&goldie_torsion(&r.module)?.z2))
}

/// `f⁻¹(Z₂(N))` for `f : M → N`.
pub fn preimage_z2(f: &HomMap, target: &ModuleTable) -> Result<Submodule> {
    let z2 = goldie_torsion(target)?.z2;
    Ok(preimage_unchecked(f, &z2))
}

/// `t_M(I) = ⋂_{f∈I} f⁻¹(Z₂(M))`; the whole module for empty `I`.
pub fn t_operator<'a>(m: &ModuleTable, fs: impl IntoIterator<Item = &'a HomMap>) -> Result<Submodule> {
    let z2 = goldie_torsion(m)?.z2;
    Ok(fs
        .into_iter()
        .fold(m.full(), |acc, f| acc.intersection(&preimage_unchecked(f, &z2))))
}

/// `n` is t-essential in `M`: `n ∩ L ⊆ Z₂(M)` forces `L ⊆ Z₂(M)` for every submodule `L`.
pub fn is_t_essential(m: &ModuleTable, n: &Submodule) -> Result<bool> {
    let z2 = goldie_torsion(m)?.z2;
    Ok(m.lattice()?
        .submodules()
        .iter()
        .all(|l| !n.intersection(l).is_subset(&z2) || l.is_subset(&z2)))
}

/// `n ≤ k` is t-essential in `k`, given `Z₂(k)`. Only cyclic `L` need checking.
fn t_essential_in(m: &ModuleTable, n: &Submodule, k: &Submodule, z2k: &Submodule) -> bool {
    k.difference(z2k)
        .iter()
        .all(|x| !n.intersection(&m.cyclic(x)).is_subset(z2k))
}

/// Submodules with no proper t-essential extension, in lattice order.
pub fn t_closed_submodules(m: &ModuleTable) -> Result<Vec<Submodule>> {
    let lattice = m.lattice()?;
    let z2s = intrinsic_z2_all(m, &lattice)?;
    let subs = lattice.submodules();
    Ok(subs
        .iter()
        .filter(|n| {
            !subs
                .iter()
                .zip(&z2s)
                .any(|(k, z2k)| k.len() > n.len() && n.is_subset(k) && t_essential_in(m, n, k, z2k))
        })
        .copied()
        .collect())
}

/// `Z₂` of every lattice member, via `Z₂(k) = Z₂(M) ∩ k`.
fn intrinsic_z2_all(m: &ModuleTable, lattice: &SubmoduleLattice) -> Result<Vec<Submodule>> {
    let z2 = goldie_torsion(m)?.z2;
    Ok(lattice.submodules().iter().map(|k| k.intersection(&z2)).collect())
}

/// Essentially closed submodules: no proper essential extension in `M`.
pub fn closed_submodules(m: &ModuleTable) -> Result<Vec<Submodule>> {
    let lattice = m.lattice()?;
    let subs = lattice.submodules();
    let mut out = Vec::new();
    for n in subs {
        let mut closed = true;
        for k in subs {
            if k.len() > n.len() && n.is_subset(k) && m.is_essential_submodule(n, k)? {
                closed = false;
                break;
            }
        }
        if closed {
            out.push(*n);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::EndRing;
    use crate::ring::{RingTable, Shape};
    use std::sync::Arc;

    fn regular(r: RingTable) -> ModuleTable {
        ModuleTable::regular(&Arc::new(r))
    }

    fn set(xs: &[usize]) -> Submodule {
        xs.iter().copied().collect()
    }

    fn f2_squared() -> ModuleTable {
        let f2 = regular(RingTable::zmod(2).unwrap());
        ModuleTable::direct_sum(&f2, &f2).unwrap().module
    }

    #[test]
    fn annihilator_examples() {
        let z4 = regular(RingTable::zmod(4).unwrap());
        assert_eq!(annihilator(&z4, 0), RightIdeal::Finite(ElemSet::full(4)));
        assert_eq!(annihilator(&z4, 2), RightIdeal::Finite(set(&[0, 2])));
        let g = ModuleTable::zabelian(&[4]).unwrap();
        assert_eq!(annihilator(&g, 1), RightIdeal::Integer(4));
    }

    #[test]
    fn singular_examples() {
        let g = ModuleTable::zabelian(&[2, 4]).unwrap();
        assert_eq!(singular_submodule(&g), g.full());
        let z4 = regular(RingTable::zmod(4).unwrap());
        assert_eq!(singular_submodule(&z4), set(&[0, 2]));
        assert_eq!(singular_submodule(&f2_squared()), set(&[0]));
    }

    #[test]
    fn goldie_torsion_examples() {
        let g = ModuleTable::zabelian(&[4]).unwrap();
        assert_eq!(goldie_torsion(&g).unwrap().z2, g.full());
        let z4 = regular(RingTable::zmod(4).unwrap());
        let p = goldie_torsion(&z4).unwrap();
        assert_eq!(p.z, set(&[0, 2]));
        assert_eq!(p.z2, z4.full());
        assert_eq!(goldie_torsion(&f2_squared()).unwrap().z2, set(&[0]));
        // Upper triangular T₂(𝔽₂): Z(R_R) is the strictly upper corner.
        let t = regular(RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Upper).unwrap());
        let p = goldie_torsion(&t).unwrap();
        assert!(p.z.is_subset(&p.z2));
        assert_eq!(singular_submodule(&t.quotient(&p.z2).unwrap().module).len(), 1);
    }

    #[test]
    fn naive_singular_agrees() {
        for n in [2, 4, 6, 8, 9] {
            let m = regular(RingTable::zmod(n).unwrap());
            assert_eq!(singular_submodule(&m), singular_submodule_naive(&m));
        }
        let t = regular(RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Lower).unwrap());
        assert_eq!(singular_submodule(&t), singular_submodule_naive(&t));
    }

    #[test]
    fn preimage_and_t_operator() {
        let z4 = regular(RingTable::zmod(4).unwrap());
        let end = EndRing::new(&z4).unwrap();
        let id = end.map(end.identity());
        assert_eq!(preimage_z2(id, &z4).unwrap(), goldie_torsion(&z4).unwrap().z2);
        let zero = end.map(end.zero());
        assert_eq!(preimage_z2(zero, &z4).unwrap(), z4.full());
        let double = HomMap { table: vec![0, 2, 0, 2] };
        assert_eq!(preimage_z2(&double, &z4).unwrap(), z4.full());

        let m = f2_squared();
        let end = EndRing::new(&m).unwrap();
        let z2 = goldie_torsion(&m).unwrap().z2;
        assert_eq!(t_operator(&m, []).unwrap(), m.full());
        assert_eq!(t_operator(&m, [end.map(end.identity())]).unwrap(), z2);
        assert_eq!(t_operator(&m, end.maps()).unwrap(), z2);
        assert_eq!(t_operator(&m, [end.map(end.zero())]).unwrap(), m.full());
    }

    #[test]
    fn intrinsic_z2_matches_intersection() {
        for m in [
            regular(RingTable::zmod(8).unwrap()),
            regular(RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Upper).unwrap()),
            ModuleTable::zabelian(&[2, 4]).unwrap(),
        ] {
            let z2 = goldie_torsion(&m).unwrap().z2;
            for k in m.lattice().unwrap().submodules() {
                assert_eq!(intrinsic_z2(&m, k).unwrap(), z2.intersection(k));
            }
        }
    }

    #[test]
    fn t_essential_examples() {
        let m = f2_squared();
        assert!(is_t_essential(&m, &m.full()).unwrap());
        let line = set(&[0, 1]);
        assert!(!is_t_essential(&m, &line).unwrap());
        let g = ModuleTable::zabelian(&[2, 2]).unwrap();
        assert!(is_t_essential(&g, &set(&[0])).unwrap());
    }

    #[test]
    fn cyclic_criterion_matches_lattice_scan() {
        for m in [
            f2_squared(),
            regular(RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Upper).unwrap()),
            regular(RingTable::zmod(6).unwrap()),
        ] {
            let z2 = goldie_torsion(&m).unwrap().z2;
            let full = m.full();
            for n in m.lattice().unwrap().submodules() {
                assert_eq!(t_essential_in(&m, n, &full, &z2), is_t_essential(&m, n).unwrap());
            }
        }
    }

    #[test]
    fn t_closed_examples() {
        let z4 = regular(RingTable::zmod(4).unwrap());
        assert_eq!(t_closed_submodules(&z4).unwrap(), vec![z4.full()]);
        for m in [
            f2_squared(),
            regular(RingTable::zmod(6).unwrap()),
            regular(RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Upper).unwrap()),
            ModuleTable::zabelian(&[2, 4]).unwrap(),
        ] {
            let closed = t_closed_submodules(&m).unwrap();
            assert!(closed.contains(&m.full()));
            assert!(closed.contains(&goldie_torsion(&m).unwrap().z2));
        }
        // In a vector space every subspace is t-closed.
        let m = f2_squared();
        assert_eq!(t_closed_submodules(&m).unwrap().len(), 5);
    }

    #[test]
    fn closed_submodule_examples() {
        let z4 = regular(RingTable::zmod(4).unwrap());
        assert_eq!(closed_submodules(&z4).unwrap(), vec![set(&[0]), z4.full()]);
        assert_eq!(closed_submodules(&f2_squared()).unwrap().len(), 5);
    }
}
