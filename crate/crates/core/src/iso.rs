//! Isomorphism search between finite rings.
//!
//! Backtracking over images of a ring generating set with closure
//! propagation. Intended for small rings in tests and examples.

use crate::ring::RingTable;

/// A bijection `φ` with `φ(a+b) = φ(a)+φ(b)`, `φ(ab) = φ(a)φ(b)`, `φ(1) = 1`.
pub fn find_ring_isomorphism(a: &RingTable, b: &RingTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let gens = ring_generators(a);
    let add_order = |r: &RingTable, x: usize| {
        let (mut k, mut acc) = (1, x);
        while acc != 0 {
            acc = r.add(acc, x);
            k += 1;
        }
        k
    };
    let profile = |r: &RingTable, x: usize| {
        let sq = r.mul(x, x);
        (add_order(r, x), sq == x, sq == 0, add_order(r, sq))
    };
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| profile(b, y) == profile(a, g)).collect())
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut domain = Vec::new();
    if !assign(a, b, &mut map, &mut used, &mut domain, 0, 0) || !assign(a, b, &mut map, &mut used, &mut domain, a.one(), b.one()) {
        return None;
    }
    search(a, b, &gens, &candidates, 0, &mut map, &mut used, &mut domain).then_some(map)
}

fn ring_generators(r: &RingTable) -> Vec<usize> {
    let n = r.order();
    let mut closed = vec![false; n];
    let mut members = Vec::new();
    let mut gens = Vec::new();
    let absorb = |x: usize, closed: &mut Vec<bool>, members: &mut Vec<usize>| {
        let mut work = vec![x];
        if closed[x] {
            return;
        }
        closed[x] = true;
        members.push(x);
        while let Some(y) = work.pop() {
            let current = members.clone();
            for z in current {
                for w in [r.add(y, z), r.mul(y, z), r.mul(z, y)] {
                    if !closed[w] {
                        closed[w] = true;
                        members.push(w);
                        work.push(w);
                    }
                }
            }
        }
    };
    absorb(0, &mut closed, &mut members);
    absorb(r.one(), &mut closed, &mut members);
    for x in 0..n {
        if !closed[x] {
            gens.push(x);
            absorb(x, &mut closed, &mut members);
        }
    }
    gens
}

/// Records `x ↦ y` and propagates through sums and products.
fn assign(
    a: &RingTable,
    b: &RingTable,
    map: &mut [usize],
    used: &mut [bool],
    domain: &mut Vec<usize>,
    x: usize,
    y: usize,
) -> bool {
    let mut work = vec![(x, y)];
    while let Some((x, y)) = work.pop() {
        if map[x] != usize::MAX {
            if map[x] != y {
                return false;
            }
            continue;
        }
        if used[y] {
            return false;
        }
        map[x] = y;
        used[y] = true;
        domain.push(x);
        let current = domain.clone();
        for z in current {
            let fz = map[z];
            work.push((a.add(x, z), b.add(y, fz)));
            work.push((a.mul(x, z), b.mul(y, fz)));
            work.push((a.mul(z, x), b.mul(fz, y)));
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &RingTable,
    b: &RingTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    level: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    domain: &mut Vec<usize>,
) -> bool {
    if level == gens.len() {
        return map.iter().all(|&v| v != usize::MAX);
    }
    if map[gens[level]] != usize::MAX {
        return search(a, b, gens, candidates, level + 1, map, used, domain);
    }
    for &y in &candidates[level] {
        let (saved_map, saved_used, saved_len) = (map.clone(), used.clone(), domain.len());
        if assign(a, b, map, used, domain, gens[level], y)
            && search(a, b, gens, candidates, level + 1, map, used, domain)
        {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
        domain.truncate(saved_len);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Shape;

    fn is_iso(a: &RingTable, b: &RingTable, phi: &[usize]) -> bool {
        let n = a.order();
        (0..n).all(|x| {
            (0..n).all(|y| phi[a.add(x, y)] == b.add(phi[x], phi[y]) && phi[a.mul(x, y)] == b.mul(phi[x], phi[y]))
        })
    }

    #[test]
    fn crt_isomorphism() {
        let p = RingTable::product(&RingTable::zmod(2).unwrap(), &RingTable::zmod(3).unwrap()).unwrap();
        let z6 = RingTable::zmod(6).unwrap();
        let phi = find_ring_isomorphism(&p, &z6).unwrap();
        assert!(is_iso(&p, &z6, &phi));
        let z4 = RingTable::zmod(4).unwrap();
        let v = RingTable::product(&RingTable::zmod(2).unwrap(), &RingTable::zmod(2).unwrap()).unwrap();
        assert!(find_ring_isomorphism(&z4, &v).is_none());
    }

    #[test]
    fn opposite_of_upper_is_lower() {
        let f2 = RingTable::zmod(2).unwrap();
        let upper = RingTable::triangular(&f2, 2, Shape::Upper).unwrap();
        let lower = RingTable::triangular(&f2, 2, Shape::Lower).unwrap();
        let phi = find_ring_isomorphism(&upper.opposite(), &lower).unwrap();
        assert!(is_iso(&upper.opposite(), &lower, &phi));
        let m2 = RingTable::matrix(&f2, 2).unwrap();
        assert!(find_ring_isomorphism(&m2, &m2.opposite()).is_some());
    }
}
