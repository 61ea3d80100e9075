use super::{GroupTable, Subgroup};

/// The characteristic series and basic invariants of a group.
#[derive(Debug, Clone)]
pub struct SeriesReport {
    /// `gamma[0] = G`, `gamma[i+1] = [gamma[i], G]`, down to the trivial group.
    pub gamma: Vec<Subgroup>,
    /// Lower p-central series: `P_1 = G`, `P_{n+1} = [P_n, G] P_n^p`.
    pub lowp: Vec<Subgroup>,
    /// `agemo[k] = G^{p^k}`, from `k = 0` until trivial.
    pub agemo: Vec<Subgroup>,
    /// `omega[k] = Omega_k(G)`, from `k = 0` (trivial) until all of `G`.
    pub omega: Vec<Subgroup>,
    pub frattini: Subgroup,
    pub center: Subgroup,
    /// `G, G', G'', ...` down to the trivial group.
    pub derived_series: Vec<Subgroup>,
    pub nilpotency_class: u32,
    pub rank: u32,
    pub exponent: u32,
}

impl SeriesReport {
    /// `gamma_n(G)` with 1-based `n`; trivial beyond the end of the series.
    pub fn gamma_n(&self, n: usize) -> &Subgroup {
        let last = self.gamma.len() - 1;
        &self.gamma[(n - 1).min(last)]
    }

    /// `P_n(G)` with 1-based `n`.
    pub fn lowp_n(&self, n: usize) -> &Subgroup {
        let last = self.lowp.len() - 1;
        &self.lowp[(n - 1).min(last)]
    }

    /// `G^{p^k}`.
    pub fn agemo_k(&self, k: usize) -> &Subgroup {
        let last = self.agemo.len() - 1;
        &self.agemo[k.min(last)]
    }
}

/// Computes every series to stabilisation.
pub fn series(g: &GroupTable) -> SeriesReport {
    let whole = g.whole();

    let gamma = g.lower_central_series_of(&whole);
    let nilpotency_class = (gamma.len() - 1) as u32;

    let mut lowp = vec![whole.clone()];
    loop {
        let last = lowp.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let c = g.commutator_subgroup(last, &whole);
        let pw = g.power_subgroup(last, 1);
        let next = g.join(&c, &pw);
        if next == *last {
            break;
        }
        lowp.push(next);
    }

    let mut agemo = vec![whole.clone()];
    let mut k = 1;
    while !agemo.last().expect("nonempty").is_trivial() {
        agemo.push(g.power_subgroup(&whole, k));
        k += 1;
    }

    let mut omega = vec![g.trivial_subgroup()];
    let mut k = 1;
    while omega.last().expect("nonempty").order() < g.order() {
        omega.push(g.omega(&whole, k));
        k += 1;
    }

    let mut derived_series = vec![whole.clone()];
    while !derived_series.last().expect("nonempty").is_trivial() {
        let last = derived_series.last().expect("nonempty");
        let next = g.commutator_subgroup(last, last);
        if next == *last {
            break;
        }
        derived_series.push(next);
    }

    let frattini = g.frattini(&whole);
    let rank = g.rank(&whole);
    SeriesReport {
        gamma,
        lowp,
        agemo,
        omega,
        frattini,
        center: g.center(),
        derived_series,
        nilpotency_class,
        rank,
        exponent: g.exponent(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};

    #[test]
    fn q8_series() {
        let g = build(&NamedGroup::Q8).unwrap();
        let s = series(&g);
        assert_eq!(s.gamma_n(2).order(), 2);
        assert!(s.gamma_n(3).is_trivial());
        assert_eq!(s.nilpotency_class, 2);
        assert_eq!(s.rank, 2);
        assert_eq!(s.frattini.order(), 2);
        assert_eq!(s.center.order(), 2);
        assert_eq!(s.exponent, 4);
        assert_eq!(s.lowp.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![8, 2, 1]);
    }

    #[test]
    fn elementary_abelian_series() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 3 }).unwrap();
        let s = series(&g);
        assert_eq!(s.nilpotency_class, 1);
        assert_eq!(s.rank, 3);
        assert!(s.frattini.is_trivial());
        assert_eq!(s.omega.len(), 2);
    }

    #[test]
    fn blackburn_series() {
        let g = build(&NamedGroup::Blackburn32).unwrap();
        let s = series(&g);
        assert_eq!(s.nilpotency_class, 2);
        assert_eq!(s.rank, 3);
        assert_eq!(s.gamma_n(2).order(), 4);
        assert_eq!(s.exponent, 4);
        assert!(s.agemo_k(2).is_trivial());
    }

    #[test]
    fn trivial_group_class_zero() {
        let g = build(&NamedGroup::ElemAbelian { p: 2, rank: 0 }).unwrap();
        let s = series(&g);
        assert_eq!(s.nilpotency_class, 0);
        assert_eq!(s.rank, 0);
        assert_eq!(s.gamma.len(), 1);
    }
}
