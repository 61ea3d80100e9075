use super::iso::extend_map;
use super::{quotient, Bitset, GroupTable, Subgroup};
use crate::{Error, Result};

/// `G x H` with `(a, b)` stored as `a * |H| + b`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    if g.prime() != h.prime() {
        return Err(Error::Precondition(format!(
            "direct product of a {}-group and a {}-group",
            g.prime(),
            h.prime()
        )));
    }
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    if order > crate::limits::MAX_TABLE_ORDER {
        return Err(Error::OrderCap {
            order: order as u128,
            cap: crate::limits::MAX_TABLE_ORDER,
        });
    }
    let mut mul = Vec::with_capacity(order * order);
    for a1 in 0..m {
        for b1 in 0..n {
            for a2 in 0..m {
                for b2 in 0..n {
                    mul.push((g.mul(a1, a2) * n + h.mul(b1, b2)) as u16);
                }
            }
        }
    }
    let mut gens: Vec<usize> = g.generators().iter().map(|&a| a * n).collect();
    gens.extend(h.generators().iter().copied());
    Ok(GroupTable::from_parts(
        format!("{}x{}", g.name(), h.name()),
        g.prime(),
        mul,
        None,
        gens,
    ))
}

/// `(G x H) / {(z, phi(z)^-1)}` where `phi: Z_G -> Z_H` is given by the images
/// `phi_images` of `z_g`'s generators.
pub fn central_product(
    g: &GroupTable,
    z_g: &Subgroup,
    h: &GroupTable,
    z_h: &Subgroup,
    phi_images: &[usize],
) -> Result<GroupTable> {
    let center_g = g.center();
    let center_h = h.center();
    if !z_g.is_subgroup_of(&center_g) || !z_h.is_subgroup_of(&center_h) {
        return Err(Error::InvalidAmalgam("amalgamated subgroups must be central".into()));
    }
    if phi_images.len() != z_g.gens().len() || phi_images.iter().any(|&y| !z_h.contains(y)) {
        return Err(Error::InvalidAmalgam("images must lie in the second subgroup".into()));
    }
    let phi = extend_map(g, z_g.gens(), h, phi_images)
        .ok_or_else(|| Error::InvalidAmalgam("map is not an injective homomorphism".into()))?;
    if z_g.order() != z_h.order() {
        return Err(Error::InvalidAmalgam("subgroups have different orders".into()));
    }
    let d = direct_product(g, h)?;
    let n = h.order();
    let kernel_elems = z_g.elements().into_iter().map(|z| z * n + h.inv(phi[z]));
    let members = Bitset::from_elements(d.order(), kernel_elems);
    let gens: Vec<usize> = z_g.gens().iter().map(|&z| z * n + h.inv(phi[z])).collect();
    let k = Subgroup::from_parts(members, gens);
    let mut q = quotient(&d, &k)?.table;
    q.set_name(format!("{}*{}", g.name(), h.name()));
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};
    use crate::group::is_isomorphic;

    fn b(k: NamedGroup) -> GroupTable {
        build(&k).unwrap()
    }

    fn amalgamate_centers(a: &GroupTable, q: &GroupTable) -> GroupTable {
        let za = a.omega(&a.center(), 1);
        let zq = q.center();
        assert_eq!(za.order(), 2);
        assert_eq!(zq.order(), 2);
        let za = a.closure(&[za.elements()[1]]);
        central_product(a, &za, q, &zq, &[zq.elements()[1]]).unwrap()
    }

    #[test]
    fn direct_order_multiplies() {
        let g = direct_product(&b(NamedGroup::Cyclic { p: 2, k: 1 }), &b(NamedGroup::Q8)).unwrap();
        assert_eq!(g.order(), 16);
        assert!(is_isomorphic(&g, &b(NamedGroup::C2xQ8)).unwrap().is_some());
    }

    #[test]
    fn c4_star_q8_equals_c4_star_d8() {
        let c4 = b(NamedGroup::Cyclic { p: 2, k: 2 });
        let x = amalgamate_centers(&c4, &b(NamedGroup::Q8));
        let y = amalgamate_centers(&c4, &b(NamedGroup::D8));
        assert_eq!(x.order(), 16);
        assert!(is_isomorphic(&x, &y).unwrap().is_some());
        assert!(is_isomorphic(&x, &b(NamedGroup::C4StarQ8)).unwrap().is_some());
    }

    #[test]
    fn trivial_amalgam_is_direct() {
        let c2 = b(NamedGroup::Cyclic { p: 2, k: 1 });
        let q8 = b(NamedGroup::Q8);
        let cp = central_product(&c2, &c2.trivial_subgroup(), &q8, &q8.trivial_subgroup(), &[]).unwrap();
        let dp = direct_product(&c2, &q8).unwrap();
        assert!(is_isomorphic(&cp, &dp).unwrap().is_some());
    }

    #[test]
    fn non_central_rejected() {
        let d8 = b(NamedGroup::D8);
        let c2 = b(NamedGroup::Cyclic { p: 2, k: 1 });
        let refl = (1..8)
            .find(|&x| d8.elt_order(x) == 2 && !d8.center().contains(x))
            .unwrap();
        let h = d8.closure(&[refl]);
        let r = central_product(&d8, &h, &c2, &c2.whole(), &[1]);
        assert!(matches!(r, Err(Error::InvalidAmalgam(_))));
    }
}
