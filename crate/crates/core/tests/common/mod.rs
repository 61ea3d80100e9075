//! Brute-force reference implementations shared by the integration tests.
//! They use nothing from the engine beyond the multiplication table.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;
use std::sync::OnceLock;

use pgx_core::corpus::{load_corpus, CorpusEntry};
use pgx_core::GroupTable;

pub type Set = BTreeSet<usize>;

/// Catalog counts of groups of order `2^k`, `k = 0..=6`.
pub const COUNTS_2: [usize; 7] = [1, 1, 2, 5, 14, 51, 267];
/// Catalog counts of groups of order `3^k`, `k = 0..=5`.
pub const COUNTS_3: [usize; 6] = [1, 1, 2, 5, 15, 67];

pub fn corpus_dir(p: u32) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(format!("p{p}"))
}

/// Parsed corpus entries of the 2-groups of order at most 64, cached.
pub fn two_entries() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| load_corpus(&corpus_dir(2), 64).expect("corpus loads").entries)
}

fn load(p: u32, max_order: u128) -> Vec<GroupTable> {
    let load = load_corpus(&corpus_dir(p), max_order).expect("corpus loads");
    assert!(load.rejected.is_empty(), "rejected: {:?}", load.rejected);
    load.entries.iter().map(|e| e.expand().expect("corpus entry expands")).collect()
}

/// Every 2-group of order at most 64, trivial group included, cached.
pub fn two_groups() -> &'static [GroupTable] {
    static C: OnceLock<Vec<GroupTable>> = OnceLock::new();
    C.get_or_init(|| load(2, 64))
}

/// Every 3-group of order at most 243, trivial group included, cached.
pub fn three_groups() -> &'static [GroupTable] {
    static C: OnceLock<Vec<GroupTable>> = OnceLock::new();
    C.get_or_init(|| load(3, 243))
}

pub fn up_to(groups: &[GroupTable], max_order: usize) -> impl Iterator<Item = &GroupTable> {
    groups.iter().filter(move |g| g.order() <= max_order)
}

/// Closure of `seed` under multiplication.
pub fn closure(g: &GroupTable, seed: &Set) -> Set {
    let mut s: Set = seed.clone();
    s.insert(0);
    loop {
        let items: Vec<usize> = s.iter().copied().collect();
        let mut grew = false;
        for &a in &items {
            for &b in &items {
                grew |= s.insert(g.mul(a, b));
            }
        }
        if !grew {
            return s;
        }
    }
}

/// All subgroups, by joining cyclic subgroups until nothing new appears.
pub fn subgroups(g: &GroupTable) -> Vec<Set> {
    let cyclic: BTreeSet<Set> = (0..g.order()).map(|x| closure(g, &Set::from([x]))).collect();
    let mut all: BTreeSet<Set> = cyclic.clone();
    let mut frontier: Vec<Set> = cyclic.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let j = closure(g, &h.union(c).copied().collect());
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    all.into_iter().collect()
}

/// Subgroups of `h`, picked out of a full list for the ambient group.
pub fn subgroups_of<'a>(all: &'a [Set], h: &'a Set) -> impl Iterator<Item = &'a Set> {
    all.iter().filter(move |k| k.is_subset(h))
}

/// `d(H)` as `log_p |H : Phi(H)|` with `Phi(H)` the intersection of the
/// maximal subgroups of `H`.
pub fn rank(all: &[Set], h: &Set, p: usize) -> u32 {
    if h.len() == 1 {
        return 0;
    }
    let mut phi = h.clone();
    for m in subgroups_of(all, h).filter(|m| m.len() * p == h.len()) {
        phi = phi.intersection(m).copied().collect();
    }
    let mut index = h.len() / phi.len();
    let mut d = 0;
    while index > 1 {
        index /= p;
        d += 1;
    }
    d
}

pub fn whole(g: &GroupTable) -> Set {
    (0..g.order()).collect()
}

/// Every proper subgroup has strictly smaller rank.
pub fn is_d_maximal(g: &GroupTable) -> bool {
    let all = subgroups(g);
    let p = g.prime() as usize;
    let w = whole(g);
    let d = rank(&all, &w, p);
    all.iter().filter(|h| h.len() < g.order()).all(|h| rank(&all, h, p) < d)
}

/// A smallest generating set, by trying subsets of increasing size.
pub fn min_generators(g: &GroupTable) -> Vec<usize> {
    fn search(g: &GroupTable, k: usize, start: usize, pick: &mut Vec<usize>) -> bool {
        if pick.len() == k {
            return closure(g, &pick.iter().copied().collect()).len() == g.order();
        }
        for x in start..g.order() {
            pick.push(x);
            if search(g, k, x + 1, pick) {
                return true;
            }
            pick.pop();
        }
        false
    }
    let mut pick = Vec::new();
    for k in 0..=g.order() {
        if search(g, k, 1, &mut pick) {
            return pick;
        }
    }
    unreachable!("the whole group generates itself")
}

/// Isomorphism by trying every image of a smallest generating set.
pub fn isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let gens = min_generators(g);
    let ord = |t: &GroupTable, x: usize| {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = t.mul(y, x);
            k += 1;
        }
        k
    };
    let mut images = vec![0; gens.len()];
    fn rec(
        g: &GroupTable,
        h: &GroupTable,
        gens: &[usize],
        images: &mut Vec<usize>,
        i: usize,
        ord: &dyn Fn(&GroupTable, usize) -> usize,
    ) -> bool {
        if i == gens.len() {
            let mut map: HashMap<usize, usize> = HashMap::from([(0, 0)]);
            let mut queue = vec![0];
            while let Some(x) = queue.pop() {
                for (k, &s) in gens.iter().enumerate() {
                    let y = g.mul(x, s);
                    let fy = h.mul(map[&x], images[k]);
                    match map.get(&y) {
                        Some(&v) if v != fy => return false,
                        Some(_) => {}
                        None => {
                            map.insert(y, fy);
                            queue.push(y);
                        }
                    }
                }
            }
            let targets: BTreeSet<usize> = map.values().copied().collect();
            if targets.len() != g.order() {
                return false;
            }
            return (0..g.order())
                .all(|a| (0..g.order()).all(|b| map[&g.mul(a, b)] == h.mul(map[&a], map[&b])));
        }
        for y in 0..h.order() {
            if ord(h, y) != ord(g, gens[i]) {
                continue;
            }
            images[i] = y;
            if rec(g, h, gens, images, i + 1, ord) {
                return true;
            }
        }
        false
    }
    rec(g, h, &gens, &mut images, 0, &ord)
}
