//! Independent cross-checks of the fast paths. Any disagreement is a hard failure.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{Analysis, REPORT_VERSION};
use crate::error::{Error, Result};
use crate::harness::catalog::Catalog;
use crate::hom::{hom_set, HomMap};
use crate::module::{ModuleTable, Submodule};
use crate::ring::{BaseRing, RingTable};
use crate::torsion::{goldie_torsion, intrinsic_z2, singular_submodule, singular_submodule_naive, t_operator};

/// Largest module whose idempotents are compared with its summands.
pub const SUMMAND_ORACLE_ORDER: usize = 32;
/// Largest ring checked for principal versus naive essentiality.
pub const RING_ORACLE_ORDER: usize = 16;
/// Largest source and target for the direct map scan.
pub const HOM_ORACLE_ORDER: usize = 8;
/// Modules per family taken into the map scan.
const HOM_ORACLE_MODULES: usize = 12;
/// Endomorphisms per module taken into the `t` operator pairs.
const T_ORACLE_MAPS: usize = 16;
/// Largest lattice checked for sum closure and intrinsic `Z₂`.
const LATTICE_ORACLE_LEN: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub version: u32,
    pub name: &'static str,
    pub checked: usize,
    pub skipped: usize,
    pub disagreement: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.checks.iter().all(|c| c.disagreement.is_none())
    }
}

/// Outcome of one oracle on one instance.
enum Probe {
    Skipped,
    Agreed,
    Disagreed(String),
}

fn agree(ok: bool, detail: impl FnOnce() -> String) -> Probe {
    if ok {
        Probe::Agreed
    } else {
        Probe::Disagreed(detail())
    }
}

fn fold(name: &'static str, probes: Vec<(String, Result<Probe>)>) -> Result<OracleCheck> {
    let mut check = OracleCheck {
        version: REPORT_VERSION,
        name,
        checked: 0,
        skipped: 0,
        disagreement: None,
    };
    for (id, p) in probes {
        match p {
            Ok(Probe::Skipped) | Err(Error::Size { .. }) => check.skipped += 1,
            Err(e) => return Err(e),
            Ok(Probe::Agreed) => check.checked += 1,
            Ok(Probe::Disagreed(d)) => {
                check.checked += 1;
                if check.disagreement.is_none() {
                    check.disagreement = Some(format!("{id}: {d}"));
                }
            }
        }
    }
    Ok(check)
}

fn per_module(cat: &Catalog, f: impl Fn(&Analysis) -> Result<Probe> + Sync) -> Vec<(String, Result<Probe>)> {
    let entries: Vec<_> = cat.entries().map(|(_, e)| e).collect();
    entries
        .par_iter()
        .map(|e| {
            let p = match &e.analysis {
                Some(a) => f(a),
                None => Ok(Probe::Skipped),
            };
            (e.instance.id.clone(), p)
        })
        .collect()
}

/// Runs every oracle over the catalog.
pub fn run_oracles(cat: &Catalog) -> Result<OracleReport> {
    let checks = vec![
        fold("summands-vs-idempotents", per_module(cat, summands_vs_idempotents))?,
        fold("singular-principal-vs-naive", per_module(cat, singular_vs_naive))?,
        fold("ring-essentiality", ring_essentiality(cat))?,
        fold("hom-set-vs-scan", hom_vs_scan(cat))?,
        fold("t-operator", per_module(cat, t_operator_identities))?,
        fold("lattice-sum-closure", per_module(cat, lattice_sums))?,
        fold("intrinsic-z2", per_module(cat, intrinsic_z2_identity))?,
    ];
    Ok(OracleReport { checks })
}

/// Summands via complements equal images of idempotent endomorphisms, and
/// idempotents biject with ordered decompositions `M = K ⊕ L`.
fn summands_vs_idempotents(a: &Analysis) -> Result<Probe> {
    let m = a.module();
    if m.order() > SUMMAND_ORACLE_ORDER {
        return Ok(Probe::Skipped);
    }
    let end = a.end();
    let idem = end.idempotents();
    let images: BTreeSet<Submodule> = idem
        .iter()
        .map(|&e| end.map(e).table.iter().copied().collect())
        .collect();
    let summands: BTreeSet<Submodule> = a.summands().into_iter().collect();
    if images != summands {
        return Ok(Probe::Disagreed(format!(
            "{} summands, {} idempotent images",
            summands.len(),
            images.len()
        )));
    }
    let subs = a.lattice().submodules();
    let full = m.full();
    let decompositions = subs
        .iter()
        .flat_map(|k| subs.iter().map(move |l| (k, l)))
        .filter(|(k, l)| k.intersection(l).len() == 1 && k.len() * l.len() == m.order() && m.sum(k, l) == full)
        .count();
    Ok(agree(decompositions == idem.len(), || {
        format!("{decompositions} decompositions, {} idempotents", idem.len())
    }))
}

fn singular_vs_naive(a: &Analysis) -> Result<Probe> {
    let m = a.module();
    match m.base() {
        BaseRing::Finite(r) if r.order() <= RING_ORACLE_ORDER => {
            let fast = singular_submodule(m);
            let slow = singular_submodule_naive(m);
            Ok(agree(fast == slow, || format!("principal {fast:?}, naive {slow:?}")))
        }
        _ => Ok(Probe::Skipped),
    }
}

fn ring_essentiality(cat: &Catalog) -> Vec<(String, Result<Probe>)> {
    cat.families
        .iter()
        .map(|f| {
            let p = match &f.ring {
                Some(r) if r.order() <= RING_ORACLE_ORDER => Ok(essentiality_probe(r)),
                _ => Ok(Probe::Skipped),
            };
            (f.name().to_string(), p)
        })
        .collect()
}

fn essentiality_probe(r: &RingTable) -> Probe {
    match r
        .right_ideals()
        .iter()
        .find(|i| r.is_essential_right_ideal(i) != r.is_essential_right_ideal_naive(i))
    {
        Some(i) => Probe::Disagreed(format!("right ideal {i:?}")),
        None => Probe::Agreed,
    }
}

/// Every map `M → N` by depth-first assignment of images, element by element.
pub fn scan_homs(m: &ModuleTable, n: &ModuleTable) -> Vec<HomMap> {
    let scalars: Vec<usize> = match m.base() {
        BaseRing::Finite(r) => (0..r.order()).collect(),
        BaseRing::Integers => Vec::new(),
    };
    let mut table = vec![usize::MAX; m.order()];
    table[0] = 0;
    let mut out = Vec::new();
    scan(m, n, &scalars, &mut table, 1, &mut out);
    out
}

fn scan(m: &ModuleTable, n: &ModuleTable, scalars: &[usize], table: &mut [usize], x: usize, out: &mut Vec<HomMap>) {
    if x == m.order() {
        out.push(HomMap { table: table.to_vec() });
        return;
    }
    for y in 0..n.order() {
        table[x] = y;
        if consistent(m, n, scalars, table, x) {
            scan(m, n, scalars, table, x + 1, out);
        }
    }
    table[x] = usize::MAX;
}

/// Checks every additive and scalar constraint whose terms are all assigned
/// and which involves `x`.
fn consistent(m: &ModuleTable, n: &ModuleTable, scalars: &[usize], table: &[usize], x: usize) -> bool {
    let set = |v: usize| table[v] != usize::MAX;
    for a in 0..=x {
        let s = m.add(a, x);
        if set(s) && table[s] != n.add(table[a], table[x]) {
            return false;
        }
        for b in 0..=x {
            let s = m.add(a, b);
            if s == x && table[x] != n.add(table[a], table[b]) {
                return false;
            }
        }
    }
    for &r in scalars {
        let xr = m.act(x, r);
        if set(xr) && table[xr] != n.act(table[x], r) {
            return false;
        }
        for a in 0..x {
            if m.act(a, r) == x && table[x] != n.act(table[a], r) {
                return false;
            }
        }
    }
    true
}

fn hom_vs_scan(cat: &Catalog) -> Vec<(String, Result<Probe>)> {
    let mut pairs = Vec::new();
    for f in &cat.families {
        let small: Vec<_> = f
            .entries
            .iter()
            .filter(|e| e.instance.module.order() <= HOM_ORACLE_ORDER)
            .take(HOM_ORACLE_MODULES)
            .collect();
        for a in &small {
            for b in &small {
                pairs.push((*a, *b));
            }
        }
    }
    pairs
        .par_iter()
        .map(|(a, b)| {
            let id = format!("{} -> {}", a.instance.id, b.instance.id);
            let p = hom_set(&a.instance.module, &b.instance.module).map(|fast| {
                let fast: BTreeSet<Vec<usize>> = fast.into_iter().map(|h| h.table).collect();
                let slow: BTreeSet<Vec<usize>> = scan_homs(&a.instance.module, &b.instance.module)
                    .into_iter()
                    .map(|h| h.table)
                    .collect();
                agree(fast == slow, || format!("{} maps by search, {} by scan", fast.len(), slow.len()))
            });
            (id, p)
        })
        .collect()
}

/// `t({f, g}) = f⁻¹(Z₂) ∩ g⁻¹(Z₂)` and `t(Sf) = f⁻¹(Z₂)`.
fn t_operator_identities(a: &Analysis) -> Result<Probe> {
    let m = a.module();
    let end = a.end();
    let pre = a.preimages();
    let n = end.len().min(T_ORACLE_MAPS);
    for i in 0..n {
        let f = end.map(i);
        let left: Vec<HomMap> = (0..end.len()).map(|s| end.map(end.compose(s, i)).clone()).collect();
        let t = t_operator(m, &left)?;
        if t != pre[i] {
            return Ok(Probe::Disagreed(format!("t(Sf) for endomorphism {i}")));
        }
        for j in 0..n {
            let t = t_operator(m, [f, end.map(j)])?;
            if t != pre[i].intersection(&pre[j]) {
                return Ok(Probe::Disagreed(format!("t of endomorphisms {i}, {j}")));
            }
        }
    }
    Ok(Probe::Agreed)
}

fn lattice_sums(a: &Analysis) -> Result<Probe> {
    let l = a.lattice();
    if l.len() > LATTICE_ORACLE_LEN {
        return Ok(Probe::Skipped);
    }
    Ok(agree(l.verify_sums(a.module()), || "lattice not closed under sums".into()))
}

/// `Z₂(k)` of `k` as a module equals `Z₂(M) ∩ k`.
fn intrinsic_z2_identity(a: &Analysis) -> Result<Probe> {
    let m = a.module();
    let l = a.lattice();
    if l.len() > LATTICE_ORACLE_LEN {
        return Ok(Probe::Skipped);
    }
    let z2 = goldie_torsion(m)?.z2;
    for k in l.submodules() {
        let direct = intrinsic_z2(m, k)?;
        if direct != z2.intersection(k) {
            return Ok(Probe::Disagreed(format!("Z₂ of {k:?}")));
        }
    }
    Ok(Probe::Agreed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn scan_counts_endomorphisms_of_small_groups() {
        let z4 = ModuleTable::zabelian(&[4]).unwrap();
        assert_eq!(scan_homs(&z4, &z4).len(), 4);
        let v = ModuleTable::zabelian(&[2, 2]).unwrap();
        assert_eq!(scan_homs(&v, &v).len(), 16);
        let z2 = ModuleTable::zabelian(&[2]).unwrap();
        assert_eq!(scan_homs(&z4, &z2).len(), 2);
    }

    #[test]
    fn scan_respects_scalars() {
        let r = Arc::new(RingTable::zmod(3).unwrap());
        let m = ModuleTable::regular(&r);
        assert_eq!(scan_homs(&m, &m).len(), 3);
    }
}
