//! Power-commutator presentations of finite p-groups.

mod collect;
mod consistency;
mod expand;
mod parse;
mod presentation;
mod word;

pub use collect::{collect, Collector};
pub use consistency::{check_consistency, overlap_tests, ConsistencyReport, Overlap};
pub(crate) use consistency::table_violation;
pub use expand::{expand, expand_with_cap};
pub use parse::{parse_presentation, parse_word_text};
pub use presentation::PcPresentation;
pub use word::{ElementVec, Word};

/// Trial-division primality test; primes here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
