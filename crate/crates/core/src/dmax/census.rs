use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::theorems::{label_of, Label};
use super::verdict::{is_d_maximal, Method};
use crate::group::{is_minimal_non_metacyclic, ActionSet, GroupTable};
use crate::Result;

/// One census record. `d_g2` is `d(G^p)`, i.e. `d(G^2)` for 2-groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub name: String,
    pub order: usize,
    pub d_g: u32,
    pub d_g2: u32,
    pub class: u32,
    pub is_dmax: bool,
    pub is_elem_abelian: bool,
    pub is_min_non_metacyclic: bool,
    pub label_3gen: String,
}

/// Counts of d-maximal, non-elementary-abelian groups by `(d(G), d(G^p))`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeTable {
    pub counts: BTreeMap<(u32, u32), usize>,
}

impl TypeTable {
    pub fn from_rows(rows: &[CensusRow]) -> Self {
        let mut counts = BTreeMap::new();
        for r in rows.iter().filter(|r| r.is_dmax && !r.is_elem_abelian) {
            *counts.entry((r.d_g, r.d_g2)).or_insert(0) += 1;
        }
        TypeTable { counts }
    }

    pub fn get(&self, a: u32, b: u32) -> usize {
        self.counts.get(&(a, b)).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Default)]
pub struct CensusOutcome {
    pub rows: Vec<CensusRow>,
    pub table: TypeTable,
    /// Groups that could not be analysed, with the reason.
    pub failures: Vec<(String, String)>,
}

/// Sort key splitting digit runs so `o32_n9` precedes `o32_n10`.
pub fn natural_key(name: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut num: Option<u64> = None;
    for ch in name.chars() {
        if let Some(d) = ch.to_digit(10) {
            num = Some(num.unwrap_or(0).saturating_mul(10).saturating_add(d as u64));
        } else {
            if let Some(n) = num.take() {
                out.push((std::mem::take(&mut text), n));
            }
            text.push(ch);
        }
    }
    out.push((text, num.unwrap_or(0)));
    out
}

/// Analyses one group: reduced method for `p = 2`, exhaustive otherwise.
pub fn census_row(g: &GroupTable) -> Result<CensusRow> {
    let none = ActionSet::trivial();
    let method = if g.prime() == 2 {
        Method::Reduced
    } else {
        Method::Exhaustive
    };
    let whole = g.whole();
    let d_g = g.rank_of_group();
    let d_g2 = g.rank(&g.power_subgroup(&whole, 1));
    let is_dmax = is_d_maximal(g, &none, method)?.is_dmax;
    let label = if g.prime() == 2 && is_dmax && d_g == 3 {
        label_of(g)?
    } else {
        Label::None
    };
    Ok(CensusRow {
        name: g.name().to_string(),
        order: g.order(),
        d_g,
        d_g2,
        class: g.class_of(&whole),
        is_dmax,
        is_elem_abelian: g.is_elementary_abelian(&whole),
        is_min_non_metacyclic: is_minimal_non_metacyclic(g),
        label_3gen: label.to_string(),
    })
}

/// Runs [`census_row`] over the groups on a pool of `workers` threads
/// (0 means rayon's default). Order-1 groups are skipped. Rows are sorted by
/// (order, name), so the outcome does not depend on scheduling.
pub fn census(groups: &[GroupTable], workers: usize) -> CensusOutcome {
    let run = || {
        groups
            .par_iter()
            .filter(|g| g.order() > 1)
            .map(|g| (g.name().to_string(), g.order(), census_row(g)))
            .collect::<Vec<_>>()
    };
    let results = if workers == 0 {
        run()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(run),
            Err(e) => {
                log::warn!("could not build a pool of {workers} workers ({e}); using the global pool");
                run()
            }
        }
    };
    let mut out = CensusOutcome::default();
    for (name, order, r) in results {
        match r {
            Ok(row) => out.rows.push(row),
            Err(e) => {
                log::error!("{name} (order {order}): {e}");
                out.failures.push((name, e.to_string()));
            }
        }
    }
    out.rows
        .sort_by_key(|a| (a.order, natural_key(&a.name)));
    out.failures.sort();
    out.table = TypeTable::from_rows(&out.rows);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGroup};

    #[test]
    fn natural_order() {
        let mut v = vec!["o32_n10", "o32_n9", "o8_n2"];
        v.sort_by_key(|s| natural_key(s));
        assert_eq!(v, vec!["o8_n2", "o32_n9", "o32_n10"]);
    }

    #[test]
    fn rows_and_table() {
        let groups: Vec<GroupTable> = [
            NamedGroup::Q8,
            NamedGroup::D8,
            NamedGroup::ElemAbelian { p: 2, rank: 3 },
            NamedGroup::Blackburn32,
            NamedGroup::ElemAbelian { p: 2, rank: 0 },
        ]
        .iter()
        .map(|k| build(k).unwrap())
        .collect();
        let out = census(&groups, 2);
        assert!(out.failures.is_empty());
        assert_eq!(out.rows.len(), 4);
        assert_eq!(out.table.get(2, 1), 1);
        assert_eq!(out.table.get(3, 2), 1);
        assert_eq!(out.table.counts.len(), 2);
        let bb = out.rows.iter().find(|r| r.name == "blackburn32").unwrap();
        assert_eq!(bb.label_3gen, "d");
        assert!(bb.is_min_non_metacyclic);
        assert_eq!(census(&groups, 1).rows, out.rows);
    }
}
