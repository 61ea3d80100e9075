use std::fmt;
use std::sync::OnceLock;

use super::verdict::{is_d_maximal, Method};
use crate::constructions::rank3_dmax_references;
use crate::group::{
    all_subgroups, is_isomorphic, is_minimal_non_metacyclic, maximal_subgroups, quotient, series,
    subgroups_within, ActionSet, GroupTable, Subgroup,
};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    /// Counterexample description.
    Fail(String),
    /// The hypothesis does not hold; carries the reason.
    NotApplicable(String),
}

impl CheckStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail(_))
    }

    pub(crate) fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(detail())
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("pass"),
            CheckStatus::Fail(m) => write!(f, "FAIL ({m})"),
            CheckStatus::NotApplicable(m) => write!(f, "n/a ({m})"),
        }
    }
}

/// Named check results in registration order; each name appears once.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TheoremReport {
    entries: Vec<(String, CheckStatus)>,
}

impl TheoremReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check, replacing an earlier entry of the same name.
    pub fn record(&mut self, name: &str, status: CheckStatus) {
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = status,
            None => self.entries.push((name.to_string(), status)),
        }
    }

    pub fn extend(&mut self, other: TheoremReport) {
        for (n, s) in other.entries {
            self.record(&n, s);
        }
    }

    pub fn entries(&self) -> &[(String, CheckStatus)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CheckStatus> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn failures(&self) -> impl Iterator<Item = &(String, CheckStatus)> {
        self.entries.iter().filter(|(_, s)| s.is_fail())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// `[N,G] <= N^2` and `[N,N] <= (N^2)^2`.
pub fn is_almost_powerfully_embedded(g: &GroupTable, n: &Subgroup) -> bool {
    let n2 = g.power_subgroup(n, 1);
    g.commutator_subgroup(n, &g.whole()).is_subgroup_of(&n2)
        && g.commutator_subgroup(n, n).is_subgroup_of(&g.power_subgroup(&n2, 1))
}

/// `[N,N] <= N^4`.
pub fn is_powerful2(g: &GroupTable, n: &Subgroup) -> bool {
    g.commutator_subgroup(n, n).is_subgroup_of(&g.power_subgroup(n, 2))
}

/// `x -> x^p` is an endomorphism of `H`.
pub fn is_p_abelian(g: &GroupTable, h: &Subgroup) -> bool {
    let p = g.prime() as u64;
    let el = h.elements();
    el.iter().all(|&x| {
        el.iter()
            .all(|&y| g.pow(g.mul(x, y), p) == g.mul(g.pow(x, p), g.pow(y, p)))
    })
}

fn need_two(g: &GroupTable) -> Result<()> {
    if g.prime() != 2 {
        return Err(Error::Precondition(format!("expected a 2-group, got p = {}", g.prime())));
    }
    Ok(())
}

fn describe(h: &Subgroup) -> String {
    format!("order {} gens {:?}", h.order(), h.gens())
}

/// For every `N <= G^2` with `[N,G] <= N^2`, checks `[N,G^2] <= (N^2)^2`.
pub fn verify_kahn_ape_theorem(g: &GroupTable) -> Result<CheckStatus> {
    need_two(g)?;
    let whole = g.whole();
    let g2 = g.power_subgroup(&whole, 1);
    for n in subgroups_within(g, &g2)? {
        let n2 = g.power_subgroup(&n, 1);
        if !g.commutator_subgroup(&n, &whole).is_subgroup_of(&n2) {
            continue;
        }
        let n4 = g.power_subgroup(&n2, 1);
        if !g.commutator_subgroup(&n, &g2).is_subgroup_of(&n4) {
            return Ok(CheckStatus::Fail(format!("N = {}", describe(&n))));
        }
    }
    Ok(CheckStatus::Pass)
}

pub const STRUCTURE_CHECKS: [&str; 10] = [
    "class_at_most_2",
    "gamma3_is_gamma2_squared",
    "gamma_lowp_agemo_agree",
    "gamma_n_ape",
    "abelian_is_elementary",
    "frattini_is_derived",
    "lower_central_factors_elementary",
    "maximal_rank_drop",
    "p_abelian",
    "ape_closure",
];

/// Tests the structural conclusions for groups that are d-maximal for
/// A-subgroups (decided exhaustively first; otherwise every entry is
/// not-applicable).
pub fn verify_structure_suite(g: &GroupTable, a: &ActionSet) -> Result<TheoremReport> {
    let mut report = TheoremReport::new();
    let verdict = is_d_maximal(g, a, Method::Exhaustive)?;
    if !verdict.is_dmax {
        for name in STRUCTURE_CHECKS {
            report.record(name, CheckStatus::NotApplicable("not d-maximal".into()));
        }
        return Ok(report);
    }
    let p = g.prime();
    let whole = g.whole();
    let s = series(g);
    let na = |why: &str| CheckStatus::NotApplicable(why.to_string());
    let a_p = a.p_group_asserted;

    // odd p, A a p-group: class <= 2
    report.record(
        STRUCTURE_CHECKS[0],
        if p != 2 && a_p {
            CheckStatus::from_bool(s.nilpotency_class <= 2, || format!("class {}", s.nilpotency_class))
        } else {
            na("needs odd p and A a p-group")
        },
    );

    let two_groups = p == 2 && a_p;
    let g2 = s.gamma_n(2);
    report.record(
        STRUCTURE_CHECKS[1],
        if two_groups {
            let sq = g.power_subgroup(g2, 1);
            CheckStatus::from_bool(*s.gamma_n(3) == sq, || {
                format!("|gamma_3| = {}, |gamma_2^2| = {}", s.gamma_n(3).order(), sq.order())
            })
        } else {
            na("needs p = 2 and A a 2-group")
        },
    );

    let top = s.gamma.len() + 1;
    report.record(
        STRUCTURE_CHECKS[2],
        if two_groups {
            let mut bad = None;
            for n in 2..=top {
                let agemo = g.power_subgroup(&whole, (n - 1) as u32);
                if s.gamma_n(n) != s.lowp_n(n) || *s.gamma_n(n) != agemo {
                    bad = Some(format!(
                        "n = {n}: |gamma| = {}, |P| = {}, |G^(2^(n-1))| = {}",
                        s.gamma_n(n).order(),
                        s.lowp_n(n).order(),
                        agemo.order()
                    ));
                    break;
                }
            }
            match bad {
                Some(m) => CheckStatus::Fail(m),
                None => CheckStatus::Pass,
            }
        } else {
            na("needs p = 2 and A a 2-group")
        },
    );

    report.record(
        STRUCTURE_CHECKS[3],
        if two_groups {
            match (2..=top).find(|&n| !is_almost_powerfully_embedded(g, s.gamma_n(n))) {
                Some(n) => CheckStatus::Fail(format!("gamma_{n} is not almost powerfully embedded")),
                None => CheckStatus::Pass,
            }
        } else {
            na("needs p = 2 and A a 2-group")
        },
    );

    report.record(
        STRUCTURE_CHECKS[4],
        if g.is_abelian() {
            CheckStatus::from_bool(g.exponent() <= p, || format!("exponent {}", g.exponent()))
        } else {
            na("non-abelian")
        },
    );

    report.record(
        STRUCTURE_CHECKS[5],
        CheckStatus::from_bool(s.frattini == *g2, || {
            format!("|Phi| = {}, |gamma_2| = {}", s.frattini.order(), g2.order())
        }),
    );

    let mut bad = None;
    for n in 1..s.gamma.len() {
        let (hi, lo) = (&s.gamma[n - 1], &s.gamma[n]);
        let q = quotient(g, lo)?;
        let image = q.image(hi);
        if !q.table.is_abelian_subgroup(&image) || !q.table.is_elementary_abelian(&image) {
            bad = Some(format!("gamma_{n}/gamma_{}", n + 1));
            break;
        }
    }
    report.record(
        STRUCTURE_CHECKS[6],
        match bad {
            Some(m) => CheckStatus::Fail(m),
            None => CheckStatus::Pass,
        },
    );

    report.record(
        STRUCTURE_CHECKS[7],
        if g.order() == 1 {
            na("trivial group")
        } else {
            let d = s.rank;
            match maximal_subgroups(g)?
                .into_iter()
                .filter(|m| a.is_invariant(m))
                .find(|m| g.rank(m) + 1 != d)
            {
                Some(m) => CheckStatus::Fail(format!("d(M) = {} for M = {}", g.rank(&m), describe(&m))),
                None => CheckStatus::Pass,
            }
        },
    );

    report.record(
        STRUCTURE_CHECKS[8],
        if p != 2 && a_p {
            CheckStatus::from_bool(is_p_abelian(g, &whole), || "p-th power map is not a homomorphism".into())
        } else {
            na("needs odd p and A a p-group")
        },
    );

    report.record(
        STRUCTURE_CHECKS[9],
        if p == 2 {
            let mut bad = None;
            for n in all_subgroups(g)? {
                if !is_almost_powerfully_embedded(g, &n) {
                    continue;
                }
                let n2 = g.power_subgroup(&n, 1);
                let ng = g.commutator_subgroup(&n, &whole);
                if !is_almost_powerfully_embedded(g, &n2) || !is_almost_powerfully_embedded(g, &ng) {
                    bad = Some(format!("N = {}", describe(&n)));
                    break;
                }
            }
            match bad {
                Some(m) => CheckStatus::Fail(m),
                None => CheckStatus::Pass,
            }
        } else {
            na("needs p = 2")
        },
    );
    Ok(report)
}

/// For 2-groups with `[K,H] <= K^2`: `d(HK) >= d(H) + d(K) - d(H n K)`, with
/// equality exactly when `(H n K)^2 = H^2 n K^2`. `None` when the hypothesis
/// fails.
pub fn check_key_proposition(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Option<bool> {
    let k2 = g.power_subgroup(k, 1);
    if !g.commutator_subgroup(k, h).is_subgroup_of(&k2) {
        return None;
    }
    let hk = g.set_product(h, k)?;
    let hnk = g.intersection(h, k);
    let lhs = g.rank(&hk) as i64;
    let rhs = g.rank(h) as i64 + g.rank(k) as i64 - g.rank(&hnk) as i64;
    let equal_squares = g.power_subgroup(&hnk, 1) == g.intersection(&g.power_subgroup(h, 1), &k2);
    Some(lhs >= rhs && ((lhs == rhs) == equal_squares))
}

/// With `Q = G/G^4`: `Q` d-maximal implies `G` d-maximal, and `Q` minimal
/// non-metacyclic implies `G` minimal non-metacyclic.
pub fn check_g4_theorem(g: &GroupTable) -> Result<TheoremReport> {
    need_two(g)?;
    let mut report = TheoremReport::new();
    let g4 = g.power_subgroup(&g.whole(), 2);
    let q = quotient(g, &g4)?.table;
    let none = ActionSet::trivial();
    let q_dmax = is_d_maximal(&q, &none, Method::Exhaustive)?.is_dmax;
    report.record(
        "g4_dmax",
        if q_dmax {
            CheckStatus::from_bool(is_d_maximal(g, &none, Method::Exhaustive)?.is_dmax, || {
                "G/G^4 is d-maximal but G is not".into()
            })
        } else {
            CheckStatus::NotApplicable("G/G^4 is not d-maximal".into())
        },
    );
    report.record(
        "g4_min_non_metacyclic",
        if is_minimal_non_metacyclic(&q) {
            CheckStatus::from_bool(is_minimal_non_metacyclic(g), || {
                "G/G^4 is minimal non-metacyclic but G is not".into()
            })
        } else {
            CheckStatus::NotApplicable("G/G^4 is not minimal non-metacyclic".into())
        },
    );
    Ok(report)
}

/// Index-`p^2` normality, the Omega lemma for odd `p` and the
/// self-centralizing subgroup lemma, each gated on its hypothesis.
pub fn check_small_rank_lemmas(g: &GroupTable) -> Result<TheoremReport> {
    let mut report = TheoremReport::new();
    let p = g.prime() as usize;
    let d = g.rank_of_group();
    let subs = all_subgroups(g)?;
    let maximal = maximal_subgroups(g)?;

    let hyp = g.order() > 1 && maximal.iter().all(|m| g.rank(m) + 1 == d);
    report.record(
        "index_p2_normal",
        if hyp {
            match subs
                .iter()
                .filter(|h| h.order() * p * p == g.order())
                .find(|h| !g.is_normal(h))
            {
                Some(h) => CheckStatus::Fail(format!("H = {} is not normal", describe(h))),
                None => CheckStatus::Pass,
            }
        } else {
            CheckStatus::NotApplicable("some maximal subgroup has d(M) != d(G) - 1".into())
        },
    );

    let odd_dmax = p != 2
        && !g.is_abelian()
        && is_d_maximal(g, &ActionSet::trivial(), Method::Exhaustive)?.is_dmax;
    let whole = g.whole();
    report.record(
        "omega1_nonabelian",
        if odd_dmax {
            let om = g.omega(&whole, 1);
            CheckStatus::from_bool(!g.is_abelian_subgroup(&om), || "Omega_1(G) is abelian".into())
        } else {
            CheckStatus::NotApplicable("needs a non-abelian d-maximal group, p odd".into())
        },
    );
    report.record(
        "gamma2_rank_bound",
        if odd_dmax {
            let r = g.rank(&g.derived_subgroup());
            CheckStatus::from_bool(r + 2 <= d, || format!("d(gamma_2) = {r}, d(G) = {d}"))
        } else {
            CheckStatus::NotApplicable("needs a non-abelian d-maximal group, p odd".into())
        },
    );

    let special = subs.iter().find(|h| {
        h.order() == p * p * p
            && !g.is_abelian_subgroup(h)
            && g.centralizer(h).is_subgroup_of(h)
    });
    report.record(
        "self_centralizing_maximal_class",
        match special {
            Some(_) => {
                let m = g.log_order();
                let c = g.class_of(&whole);
                CheckStatus::from_bool(c + 1 == m && d == 2, || format!("class {c}, d = {d}, |G| = p^{m}"))
            }
            None => CheckStatus::NotApplicable("no non-abelian self-centralizing subgroup of order p^3".into()),
        },
    );
    Ok(report)
}

/// Classification label for d-maximal 2-groups of rank 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A,
    B,
    C,
    D,
    None,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::A => "a",
            Label::B => "b",
            Label::C => "c",
            Label::D => "d",
            Label::None => "none",
        })
    }
}

fn references() -> Result<&'static [GroupTable]> {
    static REFS: OnceLock<Vec<GroupTable>> = OnceLock::new();
    if let Some(r) = REFS.get() {
        return Ok(r);
    }
    let built = rank3_dmax_references()?;
    Ok(REFS.get_or_init(|| built))
}

/// Label for a group already known to be d-maximal of rank 3.
pub(crate) fn label_of(g: &GroupTable) -> Result<Label> {
    let refs = references()?;
    for (r, label) in refs.iter().zip([Label::A, Label::B, Label::C, Label::D]) {
        if is_isomorphic(g, r)?.is_some() {
            return Ok(label);
        }
    }
    Err(Error::TheoremFailure(format!(
        "{} is d-maximal with d = 3 but matches no reference group",
        g.name()
    )))
}

/// `a`..`d` for d-maximal 2-groups with `d(G) = 3`, `none` otherwise.
pub fn classify_3gen(g: &GroupTable) -> Result<Label> {
    need_two(g)?;
    if g.rank_of_group() != 3 || !is_d_maximal(g, &ActionSet::trivial(), Method::Reduced)?.is_dmax {
        return Ok(Label::None);
    }
    label_of(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};

    fn b(k: NamedGroup) -> GroupTable {
        build(&k).unwrap()
    }

    #[test]
    fn ape_examples() {
        let q8 = b(NamedGroup::Q8);
        assert!(is_almost_powerfully_embedded(&q8, &q8.derived_subgroup()));
        assert!(!is_almost_powerfully_embedded(&q8, &q8.whole()));
        let bb = b(NamedGroup::Blackburn32);
        assert!(is_almost_powerfully_embedded(&bb, &bb.derived_subgroup()));
        assert!(is_powerful2(&q8, &q8.derived_subgroup()));
    }

    #[test]
    fn kahn_theorem_small() {
        for k in [NamedGroup::Q8, NamedGroup::ElemAbelian { p: 2, rank: 3 }, NamedGroup::Blackburn32] {
            assert_eq!(verify_kahn_ape_theorem(&b(k)).unwrap(), CheckStatus::Pass);
        }
    }

    #[test]
    fn structure_suite_q8_and_blackburn() {
        for k in [NamedGroup::Q8, NamedGroup::Blackburn32] {
            let r = verify_structure_suite(&b(k), &ActionSet::trivial()).unwrap();
            assert!(r.all_passed(), "{k}: {r:?}");
            assert_eq!(r.entries().len(), STRUCTURE_CHECKS.len());
            assert_eq!(r.get("frattini_is_derived"), Some(&CheckStatus::Pass));
            assert_eq!(r.get("gamma_lowp_agemo_agree"), Some(&CheckStatus::Pass));
        }
    }

    #[test]
    fn structure_suite_gate() {
        let r = verify_structure_suite(&b(NamedGroup::D8), &ActionSet::trivial()).unwrap();
        assert!(r
            .entries()
            .iter()
            .all(|(_, s)| matches!(s, CheckStatus::NotApplicable(_))));
    }

    #[test]
    fn key_proposition_q8() {
        let g = b(NamedGroup::Q8);
        let m = maximal_subgroups(&g).unwrap();
        assert_eq!(check_key_proposition(&g, &m[0], &m[1]), Some(true));
        assert_eq!(check_key_proposition(&g, &m[0], &m[0]), Some(true));
    }

    #[test]
    fn g4_theorem_examples() {
        let r = check_g4_theorem(&b(NamedGroup::ElemAbelian { p: 2, rank: 3 })).unwrap();
        assert_eq!(r.get("g4_dmax"), Some(&CheckStatus::Pass));
        let r = check_g4_theorem(&b(NamedGroup::Cyclic { p: 2, k: 3 })).unwrap();
        assert!(matches!(r.get("g4_dmax"), Some(CheckStatus::NotApplicable(_))));
    }

    #[test]
    fn small_rank_lemmas() {
        let r = check_small_rank_lemmas(&b(NamedGroup::Q8)).unwrap();
        assert_eq!(r.get("index_p2_normal"), Some(&CheckStatus::Pass));
        let r = check_small_rank_lemmas(&b(NamedGroup::ExtraspecialExpP { p: 3 })).unwrap();
        assert!(matches!(r.get("omega1_nonabelian"), Some(CheckStatus::NotApplicable(_))));
        let r = check_small_rank_lemmas(&b(NamedGroup::Cp2StarS { p: 3 })).unwrap();
        assert_eq!(r.get("omega1_nonabelian"), Some(&CheckStatus::Pass));
        assert_eq!(r.get("gamma2_rank_bound"), Some(&CheckStatus::Pass));
    }

    #[test]
    fn classification_labels() {
        assert_eq!(classify_3gen(&b(NamedGroup::ElemAbelian { p: 2, rank: 3 })).unwrap(), Label::A);
        assert_eq!(classify_3gen(&b(NamedGroup::C2xQ8)).unwrap(), Label::B);
        assert_eq!(classify_3gen(&b(NamedGroup::C4StarQ8)).unwrap(), Label::C);
        assert_eq!(classify_3gen(&b(NamedGroup::Blackburn32)).unwrap(), Label::D);
        assert_eq!(classify_3gen(&b(NamedGroup::D8)).unwrap(), Label::None);
    }
}
