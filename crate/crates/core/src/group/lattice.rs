//! Subgroup lattices by layered extension: every subgroup of order `p^{k+1}`
//! of a p-group contains a normal subgroup of order `p^k`, so it is reached
//! from some level-`k` subgroup `S` by adjoining an `x` normalising `S` with
//! `x^p` in `S`. Levels are deduplicated by bitset.

use std::collections::HashSet;

use super::{quotient, Bitset, GroupTable, Subgroup};
use crate::limits::enumeration_cap;
use crate::{Error, Result};

/// Every subgroup of `G` exactly once, sorted by (order, bitset). Fails above
/// the enumeration cap.
pub fn all_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>> {
    all_subgroups_with_cap(g, enumeration_cap())
}

pub fn all_subgroups_with_cap(g: &GroupTable, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::OrderCap {
            order: g.order() as u128,
            cap,
        });
    }
    Ok(layered(g, &g.whole()))
}

/// Every subgroup of `H` (as subgroups of `G`), sorted.
pub fn subgroups_within(g: &GroupTable, h: &Subgroup) -> Result<Vec<Subgroup>> {
    let cap = enumeration_cap();
    if h.order() > cap {
        return Err(Error::OrderCap {
            order: h.order() as u128,
            cap,
        });
    }
    Ok(layered(g, h))
}

fn layered(g: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let p = g.prime() as u64;
    let hel = h.elements();
    let mut all = vec![g.trivial_subgroup()];
    let mut level = vec![g.trivial_subgroup()];
    while !level.is_empty() {
        let mut seen: HashSet<Bitset> = HashSet::new();
        let mut next = Vec::new();
        for s in &level {
            if s.order() == h.order() {
                continue;
            }
            let mut used = s.members().clone();
            for &x in &hel {
                if used.contains(x) || !s.contains(g.pow(x, p)) {
                    continue;
                }
                if !s.gens().iter().all(|&a| s.contains(g.conj(a, x))) {
                    continue;
                }
                let t = g.extend(s, &[x]);
                for y in t.members().iter() {
                    used.insert(y);
                }
                if seen.insert(t.members().clone()) {
                    next.push(t);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort();
    all
}

pub fn normal_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g)?
        .into_iter()
        .filter(|h| g.is_normal(h))
        .collect())
}

/// Subgroups containing the normal subgroup `N`, via the correspondence
/// with subgroups of `G/N`.
pub fn subgroups_containing(g: &GroupTable, n: &Subgroup) -> Result<Vec<Subgroup>> {
    let q = quotient(g, n)?;
    let cap = enumeration_cap();
    let subs = all_subgroups_with_cap(&q.table, cap)?;
    let mut out: Vec<Subgroup> = subs.iter().map(|s| q.pull_back(g, n, s)).collect();
    out.sort();
    Ok(out)
}

/// Maximal subgroups: the index-p subgroups containing `Phi(G)`.
pub fn maximal_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>> {
    let cap = enumeration_cap();
    if g.order() > cap {
        return Err(Error::OrderCap {
            order: g.order() as u128,
            cap,
        });
    }
    Ok(maximal_subgroups_uncapped(g))
}

/// Maximal subgroups without the order cap, as kernels of the nonzero
/// functionals on `G/Phi(G)` (normalised to leading coefficient 1).
pub(crate) fn maximal_subgroups_uncapped(g: &GroupTable) -> Vec<Subgroup> {
    if g.order() == 1 {
        return Vec::new();
    }
    let p = g.prime() as usize;
    let whole = g.whole();
    let f = g.frattini(&whole);
    let basis = g.minimal_generators(&whole);
    let d = basis.len();
    // coordinates of every element modulo Phi
    let mut coords: Vec<Option<Vec<usize>>> = vec![None; g.order()];
    coords[0] = Some(vec![0; d]);
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (k, &b) in basis.iter().enumerate() {
            let y = g.mul(x, b);
            if coords[y].is_none() {
                let mut c = coords[x].clone().unwrap();
                c[k] = (c[k] + 1) % p;
                coords[y] = Some(c);
                queue.push(y);
            }
        }
    }
    let coords: Vec<Vec<usize>> = coords.into_iter().map(|c| c.unwrap()).collect();

    let mut out = Vec::new();
    let total = p.pow(d as u32);
    for code in 1..total {
        let mut func = vec![0usize; d];
        let mut c = code;
        for slot in func.iter_mut().rev() {
            *slot = c % p;
            c /= p;
        }
        let pivot = func.iter().position(|&v| v != 0).unwrap();
        if func[pivot] != 1 {
            continue;
        }
        let members = Bitset::from_elements(
            g.order(),
            (0..g.order()).filter(|&x| {
                coords[x].iter().zip(&func).map(|(a, b)| a * b).sum::<usize>() % p == 0
            }),
        );
        let mut gens = f.gens().to_vec();
        for (k, &b) in basis.iter().enumerate() {
            if k != pivot {
                let shift = g.pow(basis[pivot], ((p - func[k]) % p) as u64);
                gens.push(g.mul(b, shift));
            }
        }
        out.push(Subgroup::from_parts(members, gens));
    }
    out.sort();
    out
}

/// Maximal subgroups of `H`, as subgroups of `G`.
pub fn maximal_subgroups_within(g: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let (t, emb) = g.subgroup_table(h);
    let mut out: Vec<Subgroup> = maximal_subgroups_uncapped(&t)
        .iter()
        .map(|m| {
            Subgroup::from_parts(
                Bitset::from_elements(g.order(), m.members().iter().map(|x| emb[x])),
                m.gens().iter().map(|&x| emb[x]).collect(),
            )
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};

    #[test]
    fn q8_has_six_subgroups_all_normal() {
        let g = build(&NamedGroup::Q8).unwrap();
        let subs = all_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(
            subs.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 2, 4, 4, 4, 8]
        );
        assert_eq!(normal_subgroups(&g).unwrap().len(), 6);
    }

    #[test]
    fn klein_four_has_five() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 2 }).unwrap();
        assert_eq!(all_subgroups(&g).unwrap().len(), 5);
    }

    #[test]
    fn trivial_group_has_one() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 0 }).unwrap();
        assert_eq!(all_subgroups(&g).unwrap().len(), 1);
    }

    #[test]
    fn hyperplanes_of_rank_three() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 3 }).unwrap();
        let m = maximal_subgroups(&g).unwrap();
        assert_eq!(m.len(), 7);
        assert!(m.iter().all(|h| h.order() == 4));
    }

    #[test]
    fn containing_center_of_q8() {
        let g = build(&NamedGroup::Q8).unwrap();
        let subs = subgroups_containing(&g, &g.center()).unwrap();
        assert_eq!(subs.len(), 5);
        assert!(subs.iter().all(|s| g.center().is_subgroup_of(s)));
    }

    #[test]
    fn cap_is_enforced() {
        let g = build(&NamedGroup::Q8).unwrap();
        assert!(matches!(
            all_subgroups_with_cap(&g, 4),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn elementary_abelian_counts_are_gaussian_binomials() {
        // 1 + 15 + 35 + 15 + 1 for rank 4 over F_2
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 4 }).unwrap();
        assert_eq!(all_subgroups(&g).unwrap().len(), 67);
        // 1 + 13 + 13 + 1 for rank 3 over F_3
        let g = build(&NamedGroup::ElemAbelian { p: 3, rank: 3 }).unwrap();
        assert_eq!(all_subgroups(&g).unwrap().len(), 28);
    }
}
