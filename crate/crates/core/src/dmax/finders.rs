use super::verdict::{dmax_witness_within, is_d_maximal, Method};
use crate::group::{
    all_subgroups, maximal_subgroups_within, subgroups_within, ActionSet, GroupTable, Subgroup,
};
use crate::{Error, Result};

/// Walks down from `start` through proper A-subgroups of rank at least
/// `target` (largest order first, then least bitset) until none is left.
/// The result is minimal by inclusion in that set.
fn descend(g: &GroupTable, start: &Subgroup, a: &ActionSet, target: u32) -> Result<Subgroup> {
    let min_order = (g.prime() as usize).pow(target);
    let subs: Vec<Subgroup> = subgroups_within(g, start)?
        .into_iter()
        .filter(|s| s.order() >= min_order && a.is_invariant(s) && g.rank(s) >= target)
        .collect();
    let mut k = start.clone();
    loop {
        let next = subs
            .iter()
            .filter(|s| s.order() < k.order() && s.is_subgroup_of(&k))
            .max_by(|x, y| x.order().cmp(&y.order()).then(y.members().cmp(x.members())));
        match next {
            Some(s) => k = s.clone(),
            None => return Ok(k),
        }
    }
}

fn verify_dmax(g: &GroupTable, k: &Subgroup, a: &ActionSet, what: &str) -> Result<()> {
    if !a.is_invariant(k) {
        return Err(Error::TheoremFailure(format!("{what} is not A-invariant")));
    }
    if let Some(w) = dmax_witness_within(g, k, a)? {
        return Err(Error::TheoremFailure(format!(
            "{what} of order {} is not d-maximal (witness of order {})",
            k.order(),
            w.order()
        )));
    }
    Ok(())
}

/// An A-subgroup `K` that is d-maximal for A-subgroups with `d(K) >= d(G)`,
/// minimal by inclusion among A-subgroups of rank at least `d(G)`.
pub fn find_dmax_subgroup(g: &GroupTable, a: &ActionSet) -> Result<Subgroup> {
    let d = g.rank_of_group();
    let k = descend(g, &g.whole(), a, d)?;
    if g.rank(&k) < d {
        return Err(Error::TheoremFailure("rank dropped during descent".into()));
    }
    verify_dmax(g, &k, a, "descent result")?;
    Ok(k)
}

/// `K_0 > K_1 > ... > K_{r-1}` with `d(K_i) = r - i`, each d-maximal for
/// A-subgroups, where `r` is the largest rank of an A-subgroup. Needs the
/// caller's assertion that `A` is a p-group.
pub fn find_dmax_chain(g: &GroupTable, a: &ActionSet) -> Result<Vec<Subgroup>> {
    if !a.p_group_asserted {
        return Err(Error::Precondition("the operator group must be asserted to be a p-group".into()));
    }
    let invariant: Vec<Subgroup> = all_subgroups(g)?
        .into_iter()
        .filter(|h| a.is_invariant(h))
        .collect();
    let r = invariant.iter().map(|h| g.rank(h)).max().unwrap_or(0);
    if r == 0 {
        return Ok(Vec::new());
    }
    let h0 = invariant.iter().find(|h| g.rank(h) == r).expect("rank r is attained");
    let mut chain = vec![descend(g, h0, a, r)?];
    for i in 1..r {
        let prev = chain.last().unwrap();
        let h = maximal_subgroups_within(g, prev)
            .into_iter()
            .find(|m| a.is_invariant(m))
            .ok_or_else(|| {
                Error::TheoremFailure(format!(
                    "K_{} has no A-invariant maximal subgroup; A is not a p-group",
                    i - 1
                ))
            })?;
        let t = g.rank(&h);
        chain.push(descend(g, &h, a, t)?);
    }
    for (i, k) in chain.iter().enumerate() {
        if g.rank(k) != r - i as u32 {
            return Err(Error::TheoremFailure(format!(
                "d(K_{i}) = {} but r - i = {}",
                g.rank(k),
                r - i as u32
            )));
        }
        verify_dmax(g, k, a, &format!("K_{i}"))?;
        if i > 0 && !(k.order() < chain[i - 1].order() && k.is_subgroup_of(&chain[i - 1])) {
            return Err(Error::TheoremFailure(format!("K_{i} is not inside K_{}", i - 1)));
        }
    }
    Ok(chain)
}

/// For odd `p`: an A-subgroup `K` with `d(K) = d(G)`, class at most 2 and
/// `gamma_2(K) = Phi(K)`. `G` itself when it is d-maximal for A-subgroups,
/// otherwise the member of rank `d(G)` in the chain of
/// [`find_dmax_chain`].
pub fn find_laffey_subgroup(g: &GroupTable, a: &ActionSet) -> Result<Subgroup> {
    if g.prime() == 2 {
        return Err(Error::Precondition("Laffey subgroups are for odd primes".into()));
    }
    if !a.p_group_asserted {
        return Err(Error::Precondition("the operator group must be asserted to be a p-group".into()));
    }
    let d = g.rank_of_group();
    let k = if d == 0 {
        g.trivial_subgroup()
    } else if is_d_maximal(g, a, Method::Exhaustive)?.is_dmax {
        g.whole()
    } else {
        let chain = find_dmax_chain(g, a)?;
        let r = chain.len() as u32;
        chain
            .into_iter()
            .nth((r - d) as usize)
            .ok_or_else(|| Error::TheoremFailure("chain shorter than d(G)".into()))?
    };
    if !a.is_invariant(&k) {
        return Err(Error::TheoremFailure("Laffey subgroup is not A-invariant".into()));
    }
    if g.rank(&k) != d {
        return Err(Error::TheoremFailure(format!("d(K) = {} != d(G) = {d}", g.rank(&k))));
    }
    if g.class_of(&k) > 2 {
        return Err(Error::TheoremFailure(format!("K has class {}", g.class_of(&k))));
    }
    if g.commutator_subgroup(&k, &k) != g.frattini(&k) {
        return Err(Error::TheoremFailure("gamma_2(K) != Phi(K)".into()));
    }
    Ok(k)
}
