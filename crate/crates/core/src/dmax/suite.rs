use super::finders::{find_dmax_chain, find_dmax_subgroup, find_laffey_subgroup};
use super::theorems::{
    check_g4_theorem, check_key_proposition, check_small_rank_lemmas, classify_3gen,
    verify_kahn_ape_theorem, verify_structure_suite, CheckStatus, Label, TheoremReport,
};
use super::verdict::{is_d_maximal, verify_reduced_equivalence, Method};
use crate::group::{all_subgroups, ActionSet, GroupTable};
use crate::{Error, Result};

/// Largest order for which [`verify_group`] sweeps subgroup pairs.
pub const KEY_PROPOSITION_MAX_ORDER: usize = 32;

/// Every admissible pair `(H, K)` of subgroups. Counts the pairs that met
/// the hypothesis alongside the status.
pub fn key_proposition_sweep(g: &GroupTable) -> Result<(CheckStatus, usize)> {
    let subs = all_subgroups(g)?;
    let mut checked = 0;
    for h in &subs {
        for k in &subs {
            match check_key_proposition(g, h, k) {
                None => {}
                Some(true) => checked += 1,
                Some(false) => {
                    let msg = format!(
                        "H = order {} gens {:?}, K = order {} gens {:?}",
                        h.order(),
                        h.gens(),
                        k.order(),
                        k.gens()
                    );
                    return Ok((CheckStatus::Fail(msg), checked));
                }
            }
        }
    }
    Ok((CheckStatus::Pass, checked))
}

fn finder_status<T>(r: Result<T>) -> Result<CheckStatus> {
    match r {
        Ok(_) => Ok(CheckStatus::Pass),
        Err(Error::TheoremFailure(m)) => Ok(CheckStatus::Fail(m)),
        Err(e) => Err(e),
    }
}

/// Runs every check that applies to `g` with the trivial operator group.
pub fn verify_group(g: &GroupTable) -> Result<TheoremReport> {
    let none = ActionSet::trivial();
    let mut report = TheoremReport::new();
    if g.prime() == 2 {
        report.record(
            "reduced_equivalence",
            CheckStatus::from_bool(verify_reduced_equivalence(g)?, || {
                "exhaustive and reduced verdicts differ".into()
            }),
        );
    }
    report.extend(verify_structure_suite(g, &none)?);
    report.extend(check_small_rank_lemmas(g)?);
    report.record("find_dmax_subgroup", finder_status(find_dmax_subgroup(g, &none))?);
    report.record("find_dmax_chain", finder_status(find_dmax_chain(g, &none))?);
    if g.prime() == 2 {
        report.record("ape_theorem", verify_kahn_ape_theorem(g)?);
        report.extend(check_g4_theorem(g)?);
        let status = match classify_3gen(g) {
            Ok(Label::None) => {
                let v = is_d_maximal(g, &none, Method::Exhaustive)?;
                if v.is_dmax && v.rank == 3 {
                    CheckStatus::Fail("d-maximal of rank 3 but unlabelled".into())
                } else {
                    CheckStatus::NotApplicable("not d-maximal of rank 3".into())
                }
            }
            Ok(_) => CheckStatus::Pass,
            Err(Error::TheoremFailure(m)) => CheckStatus::Fail(m),
            Err(e) => return Err(e),
        };
        report.record("classification_3gen", status);
        report.record(
            "key_proposition",
            if g.order() <= KEY_PROPOSITION_MAX_ORDER {
                key_proposition_sweep(g)?.0
            } else {
                CheckStatus::NotApplicable(format!("order above {KEY_PROPOSITION_MAX_ORDER}"))
            },
        );
    } else {
        report.record("find_laffey_subgroup", finder_status(find_laffey_subgroup(g, &none))?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};

    #[test]
    fn named_groups_pass() {
        for k in [
            NamedGroup::Q8,
            NamedGroup::D8,
            NamedGroup::C4StarQ8,
            NamedGroup::ExtraspecialExpP { p: 3 },
            NamedGroup::Cp2StarS { p: 3 },
        ] {
            let r = verify_group(&build(&k).unwrap()).unwrap();
            assert!(r.all_passed(), "{k}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn sweep_counts_pairs() {
        let (s, n) = key_proposition_sweep(&build(&NamedGroup::D8).unwrap()).unwrap();
        assert_eq!(s, CheckStatus::Pass);
        assert!(n > 0);
    }
}
