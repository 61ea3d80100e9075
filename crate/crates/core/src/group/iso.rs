use std::collections::HashMap;
use std::hash::{DefaultHasher, Hash, Hasher};

use super::{series, GroupTable};
use crate::limits::DEFAULT_ISO_CAP;
use crate::{Error, Result};

/// Isomorphism-invariant summary used as a prefilter and as a hash key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupInvariants {
    pub prime: u32,
    pub order: usize,
    pub element_orders: Vec<(u32, usize)>,
    pub rank: u32,
    pub class: u32,
    pub gamma_orders: Vec<usize>,
    pub lowp_orders: Vec<usize>,
    pub agemo_orders: Vec<usize>,
    pub omega_orders: Vec<usize>,
    pub center_order: usize,
    pub derived_series_orders: Vec<usize>,
    /// Sorted multiset of element fingerprints.
    pub fingerprints: Vec<(Fingerprint, usize)>,
    /// Sorted multiset of refined element colours.
    pub colors: Vec<(u64, usize)>,
}

pub type Fingerprint = (u32, usize, bool, bool, bool, usize);

/// A bijection `G -> H` respecting multiplication, as a full element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub images: Vec<usize>,
}

impl Isomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_valid(&self, g: &GroupTable, h: &GroupTable) -> bool {
        if g.order() != h.order() || self.images.len() != g.order() {
            return false;
        }
        let mut hit = vec![false; h.order()];
        for &y in &self.images {
            if y >= h.order() || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        (0..g.order()).all(|x| {
            (0..g.order()).all(|y| self.images[g.mul(x, y)] == h.mul(self.images[x], self.images[y]))
        })
    }
}

/// Per element: order, centralizer size, membership in Phi, Z and gamma_2,
/// and the number of p-th roots.
fn fingerprints(g: &GroupTable) -> Vec<Fingerprint> {
    let whole = g.whole();
    let phi = g.frattini(&whole);
    let z = g.center();
    let d = g.derived_subgroup();
    let n = g.order();
    let p = g.prime() as u64;
    let mut roots = vec![0usize; n];
    for y in 0..n {
        roots[g.pow(y, p)] += 1;
    }
    (0..n)
        .map(|x| {
            let cent = (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            (g.elt_order(x), cent, phi.contains(x), z.contains(x), d.contains(x), roots[x])
        })
        .collect()
}

const REFINE_ROUNDS: usize = 2;

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Colour refinement: each round recolours `x` by its colour together with
/// the sorted pairs `(colour(y), colour(xy))` over all `y`.
fn refined_colors(g: &GroupTable, fp: &[Fingerprint]) -> Vec<u64> {
    let n = g.order();
    let mut c: Vec<u64> = fp.iter().map(hash_of).collect();
    let mut pairs = Vec::with_capacity(n);
    for _ in 0..REFINE_ROUNDS {
        c = (0..n)
            .map(|x| {
                pairs.clear();
                pairs.extend((0..n).map(|y| (c[y], c[g.mul(x, y)])));
                pairs.sort_unstable();
                hash_of(&(c[x], &pairs))
            })
            .collect();
    }
    c
}

fn multiset<T: Ord + Clone>(items: &[T]) -> Vec<(T, usize)> {
    let mut m: std::collections::BTreeMap<T, usize> = Default::default();
    for it in items {
        *m.entry(it.clone()).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

pub fn invariants(g: &GroupTable) -> GroupInvariants {
    let s = series(g);
    let fp = fingerprints(g);
    let orders = |v: &[super::Subgroup]| v.iter().map(|h| h.order()).collect::<Vec<_>>();
    GroupInvariants {
        prime: g.prime(),
        order: g.order(),
        element_orders: g.element_order_counts(),
        rank: s.rank,
        class: s.nilpotency_class,
        gamma_orders: orders(&s.gamma),
        lowp_orders: orders(&s.lowp),
        agemo_orders: orders(&s.agemo),
        omega_orders: orders(&s.omega),
        center_order: s.center.order(),
        derived_series_orders: orders(&s.derived_series),
        fingerprints: multiset(&fp),
        colors: multiset(&refined_colors(g, &fp)),
    }
}

/// Extends `gens[i] -> images[i]` along right multiplication over `<gens>`.
/// Returns the partial map if it is well defined and injective.
pub(crate) fn extend_map(
    g: &GroupTable,
    gens: &[usize],
    h: &GroupTable,
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&a, &b) in gens.iter().zip(images) {
            let xa = g.mul(x, a);
            let yb = h.mul(map[x], b);
            if map[xa] == usize::MAX {
                if used[yb] {
                    return None;
                }
                used[yb] = true;
                map[xa] = yb;
                queue.push(xa);
            } else if map[xa] != yb {
                return None;
            }
        }
    }
    Some(map)
}

/// Decides `G ~= H`, returning a witness. Both orders must be within the
/// isomorphism cap.
pub fn is_isomorphic(g: &GroupTable, h: &GroupTable) -> Result<Option<Isomorphism>> {
    for t in [g, h] {
        if t.order() > DEFAULT_ISO_CAP {
            return Err(Error::OrderCap {
                order: t.order() as u128,
                cap: DEFAULT_ISO_CAP,
            });
        }
    }
    if g.prime() != h.prime() || g.order() != h.order() {
        return Ok(None);
    }
    if g.order() == 1 {
        return Ok(Some(Isomorphism { images: vec![0] }));
    }
    if invariants(g) != invariants(h) {
        return Ok(None);
    }
    let fg = refined_colors(g, &fingerprints(g));
    let fh = refined_colors(h, &fingerprints(h));
    let mut classes: HashMap<u64, Vec<usize>> = HashMap::new();
    for (y, f) in fh.iter().enumerate() {
        classes.entry(*f).or_default().push(y);
    }
    for v in classes.values_mut() {
        v.sort_by_key(|&y| (h.elt_order(y), y));
    }

    // Generators of G from the rarest fingerprint classes first.
    let whole = g.whole();
    let mut span = g.frattini(&whole);
    let mut order: Vec<usize> = (0..g.order()).filter(|&x| !span.contains(x)).collect();
    order.sort_by_key(|&x| (classes[&fg[x]].len(), x));
    let mut gens = Vec::new();
    for x in order {
        if span.order() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.extend(&span, &[x]);
        }
    }

    let candidates: Vec<&Vec<usize>> = gens.iter().map(|&x| &classes[&fg[x]]).collect();
    let mut images = Vec::with_capacity(gens.len());
    let found = search(g, h, &gens, &candidates, &mut images);
    Ok(found.map(|images| Isomorphism { images }))
}

fn search(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    candidates: &[&Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        let map = extend_map(g, gens, h, images)?;
        return map.iter().all(|&y| y != usize::MAX).then_some(map);
    }
    for &y in candidates[k] {
        images.push(y);
        if extend_map(g, &gens[..=k], h, images).is_some() {
            if let Some(m) = search(g, h, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}
