//! Arithmetic on expanded group tables.

mod action;
mod bitset;
mod iso;
mod lattice;
mod metacyclic;
mod product;
mod quotient;
mod series;
mod subgroup;
mod table;

pub use action::{is_a_invariant, parse_action, ActionSet, Automorphism};
pub use bitset::Bitset;
pub use iso::{invariants, is_isomorphic, GroupInvariants, Isomorphism};
pub use lattice::{
    all_subgroups, all_subgroups_with_cap, maximal_subgroups, maximal_subgroups_within,
    normal_subgroups, subgroups_containing, subgroups_within,
};
pub use metacyclic::{is_metacyclic, is_metacyclic_subgroup, is_minimal_non_metacyclic};
pub use product::{central_product, direct_product};
pub use quotient::{quotient, Quotient};
pub use series::{series, SeriesReport};
pub use subgroup::Subgroup;
pub use table::GroupTable;

pub(crate) use table::log_p;
