//! Size caps shared by the enumeration routines.

use std::sync::OnceLock;

/// Largest order a presentation may be expanded to.
pub const DEFAULT_EXPAND_CAP: usize = 1 << 12;
/// Largest order for which subgroup lattices are enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 8;
/// Largest order accepted by the isomorphism backtracker.
pub const DEFAULT_ISO_CAP: usize = 1 << 8;
/// Rewrite steps allowed for a single collection.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;
/// Hard limit imposed by the 16-bit element ids of [`crate::GroupTable`].
pub const MAX_TABLE_ORDER: usize = 1 << 16;
/// Above this order consistency falls back to the overlap tests alone.
pub const EXHAUSTIVE_ASSOCIATIVITY_CAP: usize = 1 << 9;

/// Environment variable overriding [`DEFAULT_ENUMERATION_CAP`].
pub const MAX_ORDER_ENV: &str = "PGX_MAX_ORDER";

static ENUMERATION_CAP: OnceLock<usize> = OnceLock::new();

/// The subgroup-enumeration cap: `PGX_MAX_ORDER` when set to a positive
/// integer (read once per process), otherwise [`DEFAULT_ENUMERATION_CAP`].
pub fn enumeration_cap() -> usize {
    *ENUMERATION_CAP.get_or_init(|| {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| parse_order(&v))
            .unwrap_or(DEFAULT_ENUMERATION_CAP)
    })
}

/// Parses an order given either as an integer (`64`) or as a prime power
/// (`2^6`).
pub fn parse_order(text: &str) -> Option<usize> {
    let text = text.trim();
    if let Some((base, exp)) = text.split_once('^') {
        let base: usize = base.trim().parse().ok()?;
        let exp: u32 = exp.trim().parse().ok()?;
        base.checked_pow(exp).filter(|&v| v > 0)
    } else {
        text.parse().ok().filter(|&v: &usize| v > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_power_orders() {
        assert_eq!(parse_order("64"), Some(64));
        assert_eq!(parse_order("2^5"), Some(32));
        assert_eq!(parse_order(" 3^4 "), Some(81));
        assert_eq!(parse_order("0"), None);
        assert_eq!(parse_order("x"), None);
    }
}
