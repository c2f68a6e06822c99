use std::sync::Arc;

use finmod::classify::{Analysis, Predicate};
use finmod::harness::checks::small_subsets_summand;
use finmod::hom::{hom_set, EndRing};
use finmod::instance::{InstanceSpec, ModuleExpr, RingExpr};
use finmod::module::ModuleTable;
use finmod::ring::{RingTable, Shape};
use finmod::torsion::{goldie_torsion, intrinsic_z2, singular_submodule, t_operator};
use proptest::prelude::*;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn small_ring() -> impl Strategy<Value = RingExpr> {
    let leaf = (2usize..=6).prop_map(RingExpr::Zmod);
    leaf.prop_recursive(2, 4, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RingExpr::Product(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|r| RingExpr::Opposite(Box::new(r))),
            (any::<bool>(), inner).prop_map(|(up, r)| {
                let shape = if up { Shape::Upper } else { Shape::Lower };
                RingExpr::Triangular(shape, 2, Box::new(r))
            }),
        ]
    })
}

fn module_expr() -> impl Strategy<Value = ModuleExpr> {
    let leaf = prop_oneof![
        small_ring().prop_map(ModuleExpr::Regular),
        prop::collection::vec(2usize..=9, 0..3).prop_map(ModuleExpr::Zabelian),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ModuleExpr::Sum(Box::new(a), Box::new(b))),
            (inner.clone(), prop::collection::vec(0usize..8, 0..3))
                .prop_map(|(m, g)| ModuleExpr::Quotient(Box::new(m), g)),
            (inner, prop::collection::vec(0usize..8, 0..3)).prop_map(|(m, g)| ModuleExpr::Sub(Box::new(m), g)),
        ]
    })
}

/// A finite abelian group from up to three cyclic orders.
fn zgroup() -> impl Strategy<Value = ModuleTable> {
    prop::collection::vec(prop::sample::select(vec![2usize, 3, 4, 8]), 0..=3)
        .prop_filter("order cap", |ds| ds.iter().product::<usize>() <= 32)
        .prop_map(|ds| ModuleTable::zabelian(&ds).unwrap())
}

/// A cyclic module `R/xR` or a sum of two over a small commutative or triangular ring.
fn ring_module() -> impl Strategy<Value = ModuleTable> {
    let ring = prop_oneof![
        (2usize..=9).prop_map(|n| RingTable::zmod(n).unwrap()),
        Just(RingTable::triangular(&RingTable::zmod(2).unwrap(), 2, Shape::Upper).unwrap()),
        Just(RingTable::product(&RingTable::zmod(2).unwrap(), &RingTable::zmod(4).unwrap()).unwrap()),
    ];
    (ring, any::<usize>(), any::<bool>()).prop_map(|(r, x, twice)| {
        let r = Arc::new(r);
        let m = ModuleTable::regular(&r);
        let k = m.cyclic(x % m.order());
        let q = m.quotient(&k).unwrap().module;
        if twice {
            ModuleTable::direct_sum(&q, &m).unwrap().module
        } else {
            q
        }
    })
}

fn any_module() -> impl Strategy<Value = ModuleTable> {
    prop_oneof![zgroup(), ring_module()].prop_filter("size", |m| m.order() <= 36)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn specs_round_trip(e in module_expr()) {
        let text = e.to_string();
        let parsed: InstanceSpec = text.parse().unwrap();
        prop_assert_eq!(parsed, InstanceSpec::Module(e));
    }

    #[test]
    fn rings_validate(r in small_ring()) {
        if let Ok(t) = r.build() {
            prop_assert!(t.validate().is_ok());
            let back = t.opposite().opposite();
            prop_assert_eq!(back.mul_table(), t.mul_table());
        }
    }

    #[test]
    fn cyclic_hom_counts_are_gcds(m in 2usize..=12, n in 2usize..=12) {
        let a = ModuleTable::zabelian(&[m]).unwrap();
        let b = ModuleTable::zabelian(&[n]).unwrap();
        prop_assert_eq!(hom_set(&a, &b).unwrap().len(), gcd(m, n));
    }

    #[test]
    fn homs_are_linear_and_distinct(a in any_module(), b in any_module()) {
        prop_assume!(a.same_base(&b) && a.order() * b.order() <= 256);
        let hs = hom_set(&a, &b).unwrap();
        for h in &hs {
            prop_assert!(h.is_linear(&a, &b));
        }
        let mut tables: Vec<_> = hs.iter().map(|h| h.table.clone()).collect();
        tables.sort();
        tables.dedup();
        prop_assert_eq!(tables.len(), hs.len());
    }

    #[test]
    fn lattice_is_closed(m in any_module()) {
        let l = m.lattice().unwrap();
        prop_assert!(l.verify_sums(&m));
        for s in l.submodules() {
            prop_assert!(m.is_submodule(s));
        }
    }

    #[test]
    fn torsion_chain(m in any_module()) {
        let p = goldie_torsion(&m).unwrap();
        prop_assert_eq!(p.z, singular_submodule(&m));
        prop_assert!(p.z.is_subset(&p.z2));
        prop_assert!(m.is_submodule(&p.z2));
        // M/Z2(M) is nonsingular
        let q = m.quotient(&p.z2).unwrap().module;
        prop_assert_eq!(singular_submodule(&q).len(), 1);
    }

    #[test]
    fn intrinsic_z2_is_an_intersection(m in any_module()) {
        let z2 = goldie_torsion(&m).unwrap().z2;
        for k in m.lattice().unwrap().submodules() {
            prop_assert_eq!(intrinsic_z2(&m, k).unwrap(), z2.intersection(k));
        }
    }

    #[test]
    fn torsion_of_sums_is_additive(a in any_module(), b in any_module()) {
        prop_assume!(a.same_base(&b) && a.order() * b.order() <= 64);
        let s = ModuleTable::direct_sum(&a, &b).unwrap().module;
        let za = goldie_torsion(&a).unwrap().z2.len();
        let zb = goldie_torsion(&b).unwrap().z2.len();
        prop_assert_eq!(goldie_torsion(&s).unwrap().z2.len(), za * zb);
    }

    #[test]
    fn t_operator_is_antitone(m in any_module(), i in any::<usize>(), j in any::<usize>()) {
        let end = EndRing::new(&m).unwrap();
        let f = end.map(i % end.len());
        let g = end.map(j % end.len());
        prop_assert_eq!(t_operator(&m, std::iter::empty()).unwrap(), m.full());
        let tf = t_operator(&m, [f]).unwrap();
        let tfg = t_operator(&m, [f, g]).unwrap();
        prop_assert!(tfg.is_subset(&tf));
        prop_assert_eq!(t_operator(&m, [f, f]).unwrap(), tf);
    }

    #[test]
    fn goldie_rickart_characterisations_agree(m in any_module()) {
        let a = Analysis::new(&m).unwrap();
        let g = a.holds(Predicate::GoldieRickart).unwrap();
        prop_assert_eq!(small_subsets_summand(&a), g);
        // decomposition M = Z2(M) + N with N nonsingular Rickart
        let z2 = a.profile().z2;
        let decomposed = a.complements(&z2).into_iter().any(|n| {
            let part = a.part(&n).unwrap();
            part.analysis.holds(Predicate::Rickart).unwrap() && part.analysis.holds(Predicate::Nonsingular).unwrap()
        });
        prop_assert_eq!(decomposed, g);
        if a.holds(Predicate::TBaer).unwrap() || a.holds(Predicate::TExtending).unwrap() {
            prop_assert!(g);
        }
    }

    #[test]
    fn summands_of_goldie_rickart_modules_are_goldie_rickart(m in any_module()) {
        let a = Analysis::new(&m).unwrap();
        if a.holds(Predicate::GoldieRickart).unwrap() {
            for k in a.summands() {
                prop_assert!(a.part(&k).unwrap().analysis.holds(Predicate::GoldieRickart).unwrap());
            }
        }
    }
}
