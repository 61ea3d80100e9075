use std::fmt;
use std::str::FromStr;

use crate::group::{
    all_subgroups, subgroups_containing, subgroups_within, ActionSet, GroupTable, Subgroup,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Every proper A-subgroup.
    Exhaustive,
    /// Only proper A-subgroups containing `gamma_2(G)`; valid for 2-groups.
    Reduced,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::Reduced => "reduced",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Method::Exhaustive),
            "reduced" => Ok(Method::Reduced),
            _ => Err(Error::UnsupportedParameter(format!("method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DMaxVerdict {
    pub is_dmax: bool,
    /// Least (by bitset) proper A-subgroup with `d(H) >= d(G)`, when not
    /// d-maximal.
    pub witness: Option<Subgroup>,
    pub method: Method,
    pub rank: u32,
}

/// Least failing candidate: proper, A-invariant, `d(H) >= d`.
fn least_failure<'a>(
    g: &GroupTable,
    whole_order: usize,
    d: u32,
    a: &ActionSet,
    candidates: impl Iterator<Item = &'a Subgroup>,
) -> Option<Subgroup> {
    let min_order = (g.prime() as usize).pow(d);
    candidates
        .filter(|h| h.order() < whole_order && h.order() >= min_order)
        .filter(|h| a.is_invariant(h) && g.rank(h) >= d)
        .min_by(|x, y| x.members().cmp(y.members()))
        .cloned()
}

fn decide(g: &GroupTable, a: &ActionSet, method: Method) -> Result<DMaxVerdict> {
    let d = g.rank_of_group();
    let subs = match method {
        Method::Exhaustive => all_subgroups(g)?,
        Method::Reduced => subgroups_containing(g, &g.derived_subgroup())?,
    };
    let witness = least_failure(g, g.order(), d, a, subs.iter());
    Ok(DMaxVerdict {
        is_dmax: witness.is_none(),
        witness,
        method,
        rank: d,
    })
}

/// Decides whether every proper A-subgroup has smaller rank than `G`. The
/// trivial group is d-maximal (the condition is vacuous). The reduced method
/// is only accepted for `p = 2`; see [`compare_methods`] for odd primes.
pub fn is_d_maximal(g: &GroupTable, a: &ActionSet, method: Method) -> Result<DMaxVerdict> {
    if method == Method::Reduced && g.prime() != 2 {
        return Err(Error::Precondition(
            "the reduced method decides d-maximality only for 2-groups".into(),
        ));
    }
    decide(g, a, method)
}

/// Least proper A-subgroup of `K` (by bitset) with rank at least `d(K)`.
pub fn dmax_witness_within(g: &GroupTable, k: &Subgroup, a: &ActionSet) -> Result<Option<Subgroup>> {
    let d = g.rank(k);
    let subs = subgroups_within(g, k)?;
    Ok(least_failure(g, k.order(), d, a, subs.iter()))
}

#[derive(Debug, Clone)]
pub struct MethodComparison {
    pub exhaustive: DMaxVerdict,
    pub reduced: DMaxVerdict,
}

impl MethodComparison {
    pub fn agree(&self) -> bool {
        self.exhaustive.is_dmax == self.reduced.is_dmax
    }
}

/// Runs both methods for any prime. For odd `p` this is the only way to
/// evaluate the reduced filter, and the result is an observation rather than
/// a verdict.
pub fn compare_methods(g: &GroupTable, a: &ActionSet) -> Result<MethodComparison> {
    Ok(MethodComparison {
        exhaustive: decide(g, a, Method::Exhaustive)?,
        reduced: decide(g, a, Method::Reduced)?,
    })
}

/// Both methods agree with the trivial action (a 2-group is required).
pub fn verify_reduced_equivalence(g: &GroupTable) -> Result<bool> {
    if g.prime() != 2 {
        return Err(Error::Precondition("equivalence is stated for 2-groups".into()));
    }
    Ok(compare_methods(g, &ActionSet::trivial())?.agree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};
    use crate::group::direct_product;

    fn none() -> ActionSet {
        ActionSet::trivial()
    }

    #[test]
    fn q8_is_dmax() {
        let g = build(&NamedGroup::Q8).unwrap();
        let v = is_d_maximal(&g, &none(), Method::Exhaustive).unwrap();
        assert!(v.is_dmax);
        assert!(v.witness.is_none());
        assert!(verify_reduced_equivalence(&g).unwrap());
    }

    #[test]
    fn c4_x_c2_fails_at_omega() {
        let c4 = build(&NamedGroup::Cyclic { p: 2, k: 2 }).unwrap();
        let c2 = build(&NamedGroup::Cyclic { p: 2, k: 1 }).unwrap();
        let g = direct_product(&c4, &c2).unwrap();
        let v = is_d_maximal(&g, &none(), Method::Exhaustive).unwrap();
        assert!(!v.is_dmax);
        let w = v.witness.unwrap();
        assert_eq!(w, g.omega(&g.whole(), 1));
        assert_eq!(g.rank(&w), 2);
    }

    #[test]
    fn elementary_abelian_both_methods() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 4 }).unwrap();
        for m in [Method::Exhaustive, Method::Reduced] {
            assert!(is_d_maximal(&g, &none(), m).unwrap().is_dmax);
        }
        let inner = ActionSet::inner(&g);
        assert!(is_d_maximal(&g, &inner, Method::Exhaustive).unwrap().is_dmax);
    }

    #[test]
    fn cyclic_four_is_not() {
        let g = build(&NamedGroup::Cyclic { p: 2, k: 2 }).unwrap();
        let v = is_d_maximal(&g, &none(), Method::Exhaustive).unwrap();
        assert!(!v.is_dmax);
        assert_eq!(v.witness.unwrap().order(), 2);
    }

    #[test]
    fn d8_agrees_on_no() {
        let g = build(&NamedGroup::D8).unwrap();
        let c = compare_methods(&g, &none()).unwrap();
        assert!(c.agree());
        assert!(!c.exhaustive.is_dmax);
    }

    #[test]
    fn reduced_rejected_for_odd_p() {
        let g = build(&NamedGroup::Cp2StarS { p: 3 }).unwrap();
        assert!(matches!(
            is_d_maximal(&g, &none(), Method::Reduced),
            Err(Error::Precondition(_))
        ));
        let c = compare_methods(&g, &none()).unwrap();
        assert!(c.exhaustive.is_dmax);
    }

    #[test]
    fn trivial_group_is_dmax() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 0 }).unwrap();
        assert!(is_d_maximal(&g, &none(), Method::Exhaustive).unwrap().is_dmax);
    }
}
