use std::collections::HashSet;

use super::iso::extend_map;
use super::{GroupTable, Subgroup};
use crate::pc::parse_word_text;
use crate::{Error, Result};

/// Permutations visited by [`ActionSet::verify_p_group`] before giving up.
pub const P_GROUP_CLOSURE_BOUND: usize = 100_000;

/// An automorphism stored as the image of every element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image: Vec<usize>,
}

impl Automorphism {
    /// Validates a full element map.
    pub fn new(g: &GroupTable, image: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if image.len() != n || image[0] != 0 {
            return Err(Error::InvalidAutomorphism("map must fix the identity".into()));
        }
        let mut hit = vec![false; n];
        for &y in &image {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return Err(Error::InvalidAutomorphism("map is not a permutation".into()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if image[g.mul(x, y)] != g.mul(image[x], image[y]) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "not a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(Automorphism { image })
    }

    /// Extends the images of `G`'s stored generators.
    pub fn from_generator_images(g: &GroupTable, images: &[usize]) -> Result<Self> {
        Self::from_images(g, g.generators(), images)
    }

    /// Extends `gens[i] -> images[i]`; `gens` must generate `G`.
    pub fn from_images(g: &GroupTable, gens: &[usize], images: &[usize]) -> Result<Self> {
        if images.len() != gens.len() {
            return Err(Error::InvalidAutomorphism(format!(
                "expected {} generator images, got {}",
                gens.len(),
                images.len()
            )));
        }
        if images.iter().any(|&y| y >= g.order()) {
            return Err(Error::InvalidAutomorphism("image out of range".into()));
        }
        let map = extend_map(g, gens, g, images)
            .ok_or_else(|| Error::InvalidAutomorphism("generator images do not extend".into()))?;
        if map.contains(&usize::MAX) {
            return Err(Error::InvalidAutomorphism("generators do not generate".into()));
        }
        Ok(Automorphism { image: map })
    }

    pub fn identity(g: &GroupTable) -> Self {
        Automorphism {
            image: (0..g.order()).collect(),
        }
    }

    /// `x -> t^-1 x t`.
    pub fn inner(g: &GroupTable, t: usize) -> Self {
        Automorphism {
            image: (0..g.order()).map(|x| g.conj(x, t)).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Whether the automorphism maps `H` onto itself.
    pub fn preserves(&self, h: &Subgroup) -> bool {
        h.gens().iter().all(|&x| h.contains(self.image[x]))
    }
}

/// Generators of an operator group `A` acting on `G`.
#[derive(Debug, Clone, Default)]
pub struct ActionSet {
    pub gens: Vec<Automorphism>,
    /// Caller assertion that `<gens>` is a p-group.
    pub p_group_asserted: bool,
}

impl ActionSet {
    /// The trivial action; a trivial group is a p-group, so the flag is set.
    pub fn trivial() -> Self {
        ActionSet {
            gens: Vec::new(),
            p_group_asserted: true,
        }
    }

    pub fn new(gens: Vec<Automorphism>, p_group_asserted: bool) -> Self {
        ActionSet {
            gens,
            p_group_asserted,
        }
    }

    /// Conjugation by the stored generators of `G`; `Inn(G)` of a p-group is a
    /// p-group.
    pub fn inner(g: &GroupTable) -> Self {
        ActionSet {
            gens: g
                .generators()
                .iter()
                .map(|&t| Automorphism::inner(g, t))
                .collect(),
            p_group_asserted: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_invariant(&self, h: &Subgroup) -> bool {
        self.gens.iter().all(|a| a.preserves(h))
    }

    /// Order of `<gens>` by closure, if at most `bound` permutations.
    pub fn group_order(&self, bound: usize) -> Option<usize> {
        let Some(first) = self.gens.first() else {
            return Some(1);
        };
        let id: Vec<usize> = (0..first.image.len()).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut i = 0;
        while i < queue.len() {
            let cur = queue[i].clone();
            i += 1;
            for a in &self.gens {
                let next: Vec<usize> = cur.iter().map(|&y| a.image[y]).collect();
                if seen.insert(next.clone()) {
                    if seen.len() > bound {
                        return None;
                    }
                    queue.push(next);
                }
            }
        }
        Some(seen.len())
    }

    /// Checks the p-group assertion by bounded closure. Fails with a
    /// precondition error when the closure exceeds the bound.
    pub fn verify_p_group(&self, prime: u32) -> Result<bool> {
        let order = self.group_order(P_GROUP_CLOSURE_BOUND).ok_or_else(|| {
            Error::Precondition(format!(
                "automorphism group closure exceeds {P_GROUP_CLOSURE_BOUND} permutations"
            ))
        })?;
        Ok(super::log_p(order, prime).is_some())
    }
}

/// `H` is an A-subgroup iff every generator of `A` maps it onto itself.
pub fn is_a_invariant(h: &Subgroup, a: &ActionSet) -> bool {
    a.is_invariant(h)
}

/// Reads an operator-group file for `g`:
///
/// ```text
/// # images of the pc generators g1..gn, one automorphism per line
/// aut g2 g1*g3 g3
/// pgroup
/// ```
///
/// `pgroup` asserts that the generated group is a p-group. Without it the
/// assertion is decided by closing the generators.
pub fn parse_action(text: &str, g: &GroupTable) -> Result<ActionSet> {
    let n = g.generators().len();
    let mut gens = Vec::new();
    let mut asserted = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let mut parts = line.split_whitespace();
        match parts.next() {
            None => {}
            Some("pgroup") => asserted = true,
            Some("aut") => {
                let mut images = Vec::with_capacity(n);
                for w in parts {
                    let word = parse_word_text(w, g.prime(), n).map_err(|e| {
                        Error::InvalidAutomorphism(format!("line {}: {e}", lineno + 1))
                    })?;
                    let x = g.element_of(&word.exponents(n)).ok_or_else(|| {
                        Error::InvalidAutomorphism(format!(
                            "line {}: group has no pc coordinates",
                            lineno + 1
                        ))
                    })?;
                    images.push(x);
                }
                let aut = Automorphism::from_generator_images(g, &images).map_err(|e| {
                    Error::InvalidAutomorphism(format!("line {}: {e}", lineno + 1))
                })?;
                gens.push(aut);
            }
            Some(other) => {
                return Err(Error::Syntax {
                    line: lineno + 1,
                    column: raw.find(other).map_or(1, |c| c + 1),
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let mut set = ActionSet::new(gens, true);
    if !asserted {
        set.p_group_asserted = set.verify_p_group(g.prime()).unwrap_or_else(|e| {
            log::warn!("{e}; treating the operator group as not a p-group");
            false
        });
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};
    use crate::group::direct_product;

    fn c4xc2() -> GroupTable {
        let c4 = build(&NamedGroup::Cyclic { p: 2, k: 2 }).unwrap();
        let c2 = build(&NamedGroup::Cyclic { p: 2, k: 1 }).unwrap();
        direct_product(&c4, &c2).unwrap()
    }

    #[test]
    fn empty_action_fixes_everything() {
        let g = build(&NamedGroup::D8).unwrap();
        let a = ActionSet::trivial();
        for x in 0..8 {
            assert!(is_a_invariant(&g.closure(&[x]), &a));
        }
    }

    #[test]
    fn omega_is_characteristic_in_c4_x_c2() {
        let g = c4xc2();
        let gens = g.minimal_generators(&g.whole());
        assert_eq!(gens.len(), 2);
        // Aut(C4 x C2) has order 8; generate it from all valid generator images
        let mut auts = Vec::new();
        for ya in 0..g.order() {
            for yb in 0..g.order() {
                if let Ok(f) = Automorphism::from_images(&g, &gens, &[ya, yb]) {
                    auts.push(f);
                }
            }
        }
        assert_eq!(auts.len(), 8);
        let act = ActionSet::new(auts, true);
        assert!(act.verify_p_group(2).unwrap());
        let om = g.omega(&g.whole(), 1);
        assert_eq!(om.order(), 4);
        assert!(is_a_invariant(&om, &act));
    }

    #[test]
    fn swap_moves_a_cyclic_factor() {
        let c4 = build(&NamedGroup::Cyclic { p: 2, k: 2 }).unwrap();
        let g = direct_product(&c4, &c4).unwrap();
        let t = c4.generators()[0];
        assert_eq!(c4.elt_order(t), 4);
        let gens = [t * c4.order(), t];
        let swap = Automorphism::from_images(&g, &gens, &[gens[1], gens[0]]).unwrap();
        let factor = g.closure(&[gens[0]]);
        let act = ActionSet::new(vec![swap], true);
        assert!(!is_a_invariant(&factor, &act));
        assert!(is_a_invariant(&g.center(), &act));
    }

    #[test]
    fn bad_maps_rejected() {
        let g = build(&NamedGroup::Q8).unwrap();
        let gens = g.generators().to_vec();
        // sending both generators to the same element cannot be injective
        assert!(Automorphism::from_generator_images(&g, &[gens[0], gens[0], gens[2]]).is_err());
        let mut img: Vec<usize> = (0..8).collect();
        img.swap(1, 2);
        assert!(Automorphism::new(&g, img).is_err());
    }

    #[test]
    fn inner_action_is_a_p_group() {
        let g = build(&NamedGroup::Blackburn32).unwrap();
        let a = ActionSet::inner(&g);
        assert!(a.verify_p_group(2).unwrap());
        assert!(g.is_normal(&g.derived_subgroup()));
        assert!(is_a_invariant(&g.derived_subgroup(), &a));
    }

    #[test]
    fn action_file() {
        let q8 = build(&NamedGroup::Q8).unwrap();
        let text = "# identity\naut g1 g2 g3\n\npgroup\n";
        let a = parse_action(text, &q8).unwrap();
        assert_eq!(a.gens.len(), 1);
        assert!(a.gens[0].is_identity());
        assert!(a.p_group_asserted);
        let a = parse_action("aut g1*g3 g2 g3\n", &q8).unwrap();
        assert!(a.p_group_asserted, "an involutory automorphism closes to order 2");
        let a = parse_action("aut g2 g1\n", &q8);
        assert!(a.is_err(), "two images for three generators");
        let a = parse_action("aut g2 g1*g2 g3\n", &q8).unwrap();
        assert!(!a.p_group_asserted, "order-3 automorphism of Q8");
        assert!(parse_action("bogus\n", &q8).is_err());
    }
}
