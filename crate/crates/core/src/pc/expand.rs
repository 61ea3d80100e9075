use super::consistency::check_with;
use super::{Collector, ElementVec, PcPresentation};
use crate::group::GroupTable;
use crate::limits::{DEFAULT_EXPAND_CAP, MAX_TABLE_ORDER};
use crate::{Error, Result};

/// Expands a consistent presentation into its multiplication table with the
/// default order cap. Element ids enumerate exponent vectors
/// lexicographically (`g_1` most significant), so id 0 is the identity.
pub fn expand(pres: &PcPresentation) -> Result<GroupTable> {
    expand_with_cap(pres, DEFAULT_EXPAND_CAP)
}

pub fn expand_with_cap(pres: &PcPresentation, cap: usize) -> Result<GroupTable> {
    let order = pres.order().unwrap_or(u128::MAX);
    let cap = cap.min(MAX_TABLE_ORDER);
    if order > cap as u128 {
        return Err(Error::OrderCap { order, cap });
    }
    let collector = Collector::new(pres)?;
    let report = check_with(&collector);
    if !report.consistent {
        return Err(Error::Inconsistent(
            report.first_failure.unwrap_or_else(|| "unknown".into()),
        ));
    }
    let mul = build_mul_table(&collector)?;
    let n = pres.ngens();
    let p = pres.prime() as usize;
    let order = order as usize;
    let coords = (0..order).map(|id| ElementVec(digits(id, p, n))).collect();
    let gens = (0..n).map(|k| p.pow((n - 1 - k) as u32)).collect();
    Ok(GroupTable::from_parts(
        pres.name().to_string(),
        pres.prime(),
        mul,
        Some(coords),
        gens,
    ))
}

fn digits(mut id: usize, p: usize, n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for k in (0..n).rev() {
        v[k] = (id % p) as u32;
        id /= p;
    }
    v
}

fn id_of(exps: &[u32], p: usize) -> usize {
    exps.iter().fold(0, |acc, &e| acc * p + e as usize)
}

/// Row-major table of collected products. Column `y` is derived from the
/// column of `y` with its last nonzero exponent decremented, times that
/// generator, so only `|G| * n` collections are needed.
pub(crate) fn build_mul_table(collector: &Collector<'_>) -> Result<Vec<u16>> {
    let pres = collector.presentation();
    let n = pres.ngens();
    let p = pres.prime() as usize;
    let order = p.pow(n as u32);
    // right[k][x] = x * g_k
    let mut right = vec![vec![0usize; order]; n];
    for x in 0..order {
        let base = digits(x, p, n);
        for (k, row) in right.iter_mut().enumerate() {
            let mut exps = base.clone();
            collector.multiply_generator(&mut exps, k)?;
            row[x] = id_of(&exps, p);
        }
    }
    let mut mul = vec![0u16; order * order];
    for x in 0..order {
        mul[x * order] = x as u16;
    }
    for y in 1..order {
        let m = n - 1 - (0..n).find(|&t| !(y / p.pow(t as u32)).is_multiple_of(p)).expect("y nonzero");
        let pred = y - p.pow((n - 1 - m) as u32);
        for x in 0..order {
            let xp = mul[x * order + pred] as usize;
            mul[x * order + y] = right[m][xp] as u16;
        }
    }
    Ok(mul)
}
