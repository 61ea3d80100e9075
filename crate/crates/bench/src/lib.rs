//! Benchmark fixtures for the p-group engine.

use pgx_core::constructions::{build, NamedGroup};
use pgx_core::group::direct_product;
use pgx_core::GroupTable;

/// Named groups of increasing size used across the benchmarks.
pub fn fixtures() -> Vec<(&'static str, GroupTable)> {
    let q8 = build(&NamedGroup::Q8).expect("builds");
    let bb = build(&NamedGroup::Blackburn32).expect("builds");
    let c2 = build(&NamedGroup::Cyclic { p: 2, k: 1 }).expect("builds");
    vec![
        ("q8", q8),
        ("c4_star_q8", build(&NamedGroup::C4StarQ8).expect("builds")),
        ("blackburn32", bb.clone()),
        ("blackburn32_x_c2", direct_product(&bb, &c2).expect("order 64")),
        ("e64", build(&NamedGroup::ElemAbelian { p: 2, rank: 6 }).expect("builds")),
        ("cp2_star_s3", build(&NamedGroup::Cp2StarS { p: 3 }).expect("builds")),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_have_documented_orders() {
        let orders: Vec<usize> = super::fixtures().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![8, 16, 32, 64, 64, 81]);
    }
}
