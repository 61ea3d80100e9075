use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use super::{Bitset, GroupTable};

/// A subgroup stored as the bitset of its members.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Bitset,
    order: usize,
    gens: Vec<usize>,
    rank: OnceLock<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// Subgroups sort by order, then by member bitset.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub(crate) fn from_parts(members: Bitset, gens: Vec<usize>) -> Self {
        Subgroup {
            order: members.count(),
            members,
            gens,
            rank: OnceLock::new(),
        }
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// A generating list (not necessarily minimal).
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl GroupTable {
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(Bitset::from_elements(self.order(), [0]), Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(Bitset::full(self.order()), self.generators().to_vec())
    }

    /// The smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &[usize]) -> Subgroup {
        self.extend(&self.trivial_subgroup(), seed)
    }

    /// `<H, extra>`; generators of the result are `H`'s plus the elements of
    /// `extra` that were not already inside when reached.
    pub fn extend(&self, h: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut members = h.members.clone();
        let mut list: Vec<usize> = h.elements();
        let mut gens = h.gens.clone();
        for &x in extra {
            if members.contains(x) {
                continue;
            }
            gens.push(x);
            let old = list.len();
            let mut i = 0;
            while i < list.len() {
                let e = list[i];
                if i < old {
                    let y = self.mul(e, x);
                    if members.insert(y) {
                        list.push(y);
                    }
                } else {
                    for &g in &gens {
                        let y = self.mul(e, g);
                        if members.insert(y) {
                            list.push(y);
                        }
                    }
                }
                i += 1;
            }
        }
        Subgroup::from_parts(members, gens)
    }

    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        if h.order >= k.order {
            self.extend(h, &k.gens)
        } else {
            self.extend(k, &h.gens)
        }
    }

    pub fn intersection(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let members = h.members.intersection(&k.members);
        let elems: Vec<usize> = members.iter().collect();
        // Irredundant generators for the intersection.
        self.closure(&elems)
    }

    /// The set `HK`, returned when it is a subgroup.
    pub fn set_product(&self, h: &Subgroup, k: &Subgroup) -> Option<Subgroup> {
        let mut members = Bitset::new(self.order());
        for a in h.members.iter() {
            for b in k.members.iter() {
                members.insert(self.mul(a, b));
            }
        }
        let j = self.join(h, k);
        (j.members == members).then_some(j)
    }

    /// Normal closure of `seed` inside `within` (which must contain it).
    pub fn normal_closure_in(&self, seed: &[usize], within: &Subgroup) -> Subgroup {
        let mut s = self.closure(seed);
        loop {
            let mut extra = Vec::new();
            for &x in s.gens() {
                for &w in within.gens() {
                    let c = self.conj(x, w);
                    if !s.contains(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return s;
            }
            s = self.extend(&s, &extra);
        }
    }

    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        self.normal_closure_in(seed, &self.whole())
    }

    /// `[H, K]`, the subgroup generated by all `[h, k]`.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut seed = Vec::new();
        for &a in h.gens() {
            for &b in k.gens() {
                let c = self.comm(a, b);
                if c != 0 && !seed.contains(&c) {
                    seed.push(c);
                }
            }
        }
        if seed.is_empty() {
            return self.trivial_subgroup();
        }
        let j = self.join(h, k);
        self.normal_closure_in(&seed, &j)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    /// `H^{p^k} = <x^{p^k} : x in H>`.
    pub fn power_subgroup(&self, h: &Subgroup, k: u32) -> Subgroup {
        let q = (self.prime() as u64).pow(k);
        let seed: Vec<usize> = h.members.iter().map(|x| self.pow(x, q)).collect();
        self.closure(&seed)
    }

    /// `H^n = <x^n : x in H>` for an arbitrary exponent.
    pub fn power_subgroup_exp(&self, h: &Subgroup, n: u64) -> Subgroup {
        let seed: Vec<usize> = h.members.iter().map(|x| self.pow(x, n)).collect();
        self.closure(&seed)
    }

    /// `Omega_k(H) = <x in H : x^{p^k} = 1>`.
    pub fn omega(&self, h: &Subgroup, k: u32) -> Subgroup {
        let q = (self.prime() as u64).pow(k);
        let seed: Vec<usize> = h
            .members
            .iter()
            .filter(|&x| q.is_multiple_of(self.elt_order(x) as u64))
            .collect();
        self.closure(&seed)
    }

    /// `Phi(H) = H^p [H, H]`, as the normal closure in `H` of the p-th powers
    /// and commutators of `H`'s generators.
    pub fn frattini(&self, h: &Subgroup) -> Subgroup {
        let p = self.prime() as u64;
        let mut seed = Vec::new();
        let gens = h.gens();
        for (i, &a) in gens.iter().enumerate() {
            seed.push(self.pow(a, p));
            for &b in &gens[..i] {
                seed.push(self.comm(a, b));
            }
        }
        seed.retain(|&x| x != 0);
        if seed.is_empty() {
            return self.trivial_subgroup();
        }
        self.normal_closure_in(&seed, h)
    }

    /// `d(H) = log_p |H : Phi(H)|`; cached on the subgroup.
    pub fn rank(&self, h: &Subgroup) -> u32 {
        *h.rank.get_or_init(|| {
            let f = self.frattini(h);
            super::log_p(h.order / f.order, self.prime()).expect("index is a power of p")
        })
    }

    /// `d(G)`.
    pub fn rank_of_group(&self) -> u32 {
        self.rank(&self.whole())
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&x| h.gens().iter().all(|&a| self.mul(a, x) == self.mul(x, a)))
            .collect();
        self.closure(&elems)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&x| h.gens().iter().all(|&a| h.contains(self.conj(a, x))))
            .collect();
        self.closure(&elems)
    }

    /// Normality in `G`.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normalizes(&self.whole(), h)
    }

    /// Whether every element of `by` normalises `h`.
    pub fn normalizes(&self, by: &Subgroup, h: &Subgroup) -> bool {
        h.gens()
            .iter()
            .all(|&a| by.gens().iter().all(|&g| h.contains(self.conj(a, g))))
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let g = h.gens();
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[..i].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.members.iter().any(|x| self.elt_order(x) as usize == h.order)
    }

    pub fn is_elementary_abelian(&self, h: &Subgroup) -> bool {
        self.is_abelian_subgroup(h) && h.members.iter().all(|x| x == 0 || self.elt_order(x) == self.prime())
    }

    pub fn subgroup_exponent(&self, h: &Subgroup) -> u32 {
        h.members.iter().map(|x| self.elt_order(x)).max().unwrap_or(1)
    }

    /// Lower central series of `H` (computed inside `H`), from `H` down to
    /// the first repeated term.
    pub fn lower_central_series_of(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut out = vec![h.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.commutator_subgroup(last, h);
            if next == *last {
                return out;
            }
            let done = next.is_trivial();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    /// Nilpotency class of `H` (0 for the trivial group).
    pub fn class_of(&self, h: &Subgroup) -> u32 {
        let s = self.lower_central_series_of(h);
        if s.last().is_some_and(|t| !t.is_trivial()) {
            // Not nilpotent; impossible for p-groups.
            return u32::MAX;
        }
        (s.len() - 1) as u32
    }

    /// A generating set of size `d(H)`, picked greedily in id order outside
    /// `Phi(H)` and the span of earlier picks.
    pub fn minimal_generators(&self, h: &Subgroup) -> Vec<usize> {
        let f = self.frattini(h);
        let mut span = f.clone();
        let mut out = Vec::new();
        for x in h.members.iter() {
            if span.order == h.order {
                break;
            }
            if !span.contains(x) {
                out.push(x);
                span = self.extend(&span, &[x]);
            }
        }
        out
    }

    /// Relabels `H` as a group table in its own right (element ids in
    /// increasing ambient order) and returns the embedding.
    pub fn subgroup_table(&self, h: &Subgroup) -> (GroupTable, Vec<usize>) {
        let elems = h.elements();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i;
        }
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                mul.push(index[self.mul(a, b)] as u16);
            }
        }
        let gens = h.gens().iter().map(|&x| index[x]).collect();
        let t = GroupTable::from_parts(
            format!("{}<sub {}>", self.name(), n),
            self.prime(),
            mul,
            None,
            gens,
        );
        (t, elems)
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{build, NamedGroup};

    #[test]
    fn closure_in_q8() {
        let g = build(&NamedGroup::Q8).unwrap();
        assert_eq!(g.closure(&[]).order(), 1);
        let g1 = g.generators()[0];
        assert_eq!(g.closure(&[g1]).order(), 4);
        let g2 = g.generators()[1];
        assert_eq!(g.closure(&[g1, g2]).order(), 8);
    }

    #[test]
    fn q8_derived_power_omega() {
        let g = build(&NamedGroup::Q8).unwrap();
        let whole = g.whole();
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 2);
        assert_eq!(d, g.center());
        assert_eq!(g.power_subgroup(&whole, 1), d);
        assert_eq!(g.omega(&whole, 1), d);
        assert_eq!(g.rank(&whole), 2);
        assert_eq!(g.frattini(&whole), d);
        assert_eq!(g.minimal_generators(&whole).len(), 2);
    }

    #[test]
    fn abelian_commutators_vanish() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 3 }).unwrap();
        let w = g.whole();
        assert!(g.commutator_subgroup(&w, &w).is_trivial());
        assert!(g.power_subgroup(&w, 1).is_trivial());
        assert!(g.power_subgroup(&w, 3).is_trivial());
        assert_eq!(g.omega(&w, 1), w);
        assert_eq!(g.rank(&g.trivial_subgroup()), 0);
    }

    #[test]
    fn set_product_and_intersection() {
        let g = build(&NamedGroup::Q8).unwrap();
        let a = g.closure(&[g.generators()[0]]);
        let b = g.closure(&[g.generators()[1]]);
        let ab = g.set_product(&a, &b).unwrap();
        assert_eq!(ab.order(), 8);
        assert_eq!(g.intersection(&a, &b).order(), 2);
    }

    #[test]
    fn subgroup_table_relabels() {
        let g = build(&NamedGroup::Q8).unwrap();
        let a = g.closure(&[g.generators()[0]]);
        let (t, emb) = g.subgroup_table(&a);
        assert_eq!(t.order(), 4);
        assert_eq!(emb[0], 0);
        assert_eq!(t.exponent(), 4);
    }
}
