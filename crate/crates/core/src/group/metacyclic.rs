use super::lattice::maximal_subgroups_uncapped;
use super::{Bitset, GroupTable, Subgroup};

/// `H` has a cyclic normal subgroup `N` with `H/N` cyclic.
pub fn is_metacyclic_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    if g.is_cyclic_subgroup(h) {
        return true;
    }
    if g.rank(h) > 2 {
        return false;
    }
    let p = g.prime() as u64;
    let elems = h.elements();
    let mut seen: Vec<Bitset> = Vec::new();
    for &x in &elems {
        let n = g.closure(&[x]);
        if n.is_trivial() || seen.contains(n.members()) {
            continue;
        }
        seen.push(n.members().clone());
        if !h.gens().iter().all(|&t| n.contains(g.conj(x, t))) {
            continue;
        }
        let need = h.order() / n.order();
        let cyclic_quotient = elems.iter().any(|&y| {
            // order of yN
            let mut k = 1usize;
            let mut z = y;
            while !n.contains(z) {
                z = g.pow(z, p);
                k *= p as usize;
            }
            k == need
        });
        if cyclic_quotient {
            return true;
        }
    }
    false
}

pub fn is_metacyclic(g: &GroupTable) -> bool {
    is_metacyclic_subgroup(g, &g.whole())
}

/// Not metacyclic while every maximal subgroup is. A maximal subgroup has
/// rank at least `d(G) - 1` and metacyclic groups have rank at most 2, so
/// only `d(G) <= 3` needs the lattice of `G/Phi(G)`.
pub fn is_minimal_non_metacyclic(g: &GroupTable) -> bool {
    if g.rank_of_group() > 3 || is_metacyclic(g) {
        return false;
    }
    maximal_subgroups_uncapped(g)
        .iter()
        .all(|m| is_metacyclic_subgroup(g, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};

    #[test]
    fn q8_is_metacyclic() {
        let g = build(&NamedGroup::Q8).unwrap();
        assert!(is_metacyclic(&g));
        assert!(!is_minimal_non_metacyclic(&g));
    }

    #[test]
    fn elementary_abelian() {
        let e3 = build(&NamedGroup::ElemAbelian { p: 2, rank: 3 }).unwrap();
        assert!(!is_metacyclic(&e3));
        assert!(is_minimal_non_metacyclic(&e3));
        let e4 = build(&NamedGroup::ElemAbelian { p: 2, rank: 4 }).unwrap();
        assert!(!is_minimal_non_metacyclic(&e4));
        let e2 = build(&NamedGroup::ElemAbelian { p: 2, rank: 2 }).unwrap();
        assert!(is_metacyclic(&e2));
    }

    #[test]
    fn theorem_list_is_minimal_non_metacyclic() {
        for k in [NamedGroup::C2xQ8, NamedGroup::C4StarQ8, NamedGroup::Blackburn32] {
            let g = build(&k).unwrap();
            assert!(is_minimal_non_metacyclic(&g), "{k}");
        }
    }
}
