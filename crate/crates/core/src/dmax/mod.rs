//! d-maximality: decision procedures, the subgroups promised by the
//! existence results, executable theorem checks and the census.

mod census;
mod finders;
mod suite;
mod theorems;
mod verdict;

pub use census::{census, census_row, natural_key, CensusOutcome, CensusRow, TypeTable};
pub use finders::{find_dmax_chain, find_dmax_subgroup, find_laffey_subgroup};
pub use suite::{key_proposition_sweep, verify_group, KEY_PROPOSITION_MAX_ORDER};
pub use theorems::{
    check_g4_theorem, check_key_proposition, check_small_rank_lemmas, classify_3gen,
    is_almost_powerfully_embedded, is_p_abelian, is_powerful2, verify_kahn_ape_theorem,
    verify_structure_suite, CheckStatus, Label, TheoremReport,
};
pub use verdict::{
    compare_methods, dmax_witness_within, is_d_maximal, verify_reduced_equivalence, DMaxVerdict,
    Method, MethodComparison,
};
