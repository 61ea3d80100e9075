//! Consistency of a presentation: the standard overlap tests, backed for
//! small orders by a full associativity check of the collected table.

use super::expand::build_mul_table;
use super::{Collector, ElementVec, PcPresentation};
use crate::limits::EXHAUSTIVE_ASSOCIATIVITY_CAP;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub consistent: bool,
    /// Which test failed first, with the two normal forms it produced.
    pub first_failure: Option<String>,
}

impl ConsistencyReport {
    fn ok() -> Self {
        ConsistencyReport {
            consistent: true,
            first_failure: None,
        }
    }

    fn fail(msg: String) -> Self {
        ConsistencyReport {
            consistent: false,
            first_failure: Some(msg),
        }
    }
}

/// One overlap: two bracketings of the same product and their normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub label: String,
    pub lhs: ElementVec,
    pub rhs: ElementVec,
}

impl Overlap {
    pub fn agrees(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn g(i: usize) -> String {
    format!("g{}", i + 1)
}

/// Evaluates every overlap test (for `k > j > i`):
///
/// * `(g_k g_j) g_i = g_k (g_j g_i)`
/// * `(g_j^p) g_i = g_j^{p-1} (g_j g_i)`
/// * `g_j (g_i^p) = (g_j g_i) g_i^{p-1}`
/// * `(g_i^p) g_i = g_i (g_i^p)`
pub fn overlap_tests(collector: &Collector<'_>) -> Result<Vec<Overlap>> {
    let pres = collector.presentation();
    let n = pres.ngens();
    let p = pres.prime() as i64;
    let mut out = Vec::new();
    let power_nf = |i: usize| -> Vec<u32> { pres.power(i).exponents(n) };

    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                let lhs = collector.collect(&[(k, 1), (j, 1), (i, 1)])?;
                let ji = collector.collect(&[(j, 1), (i, 1)])?;
                let rhs = collector.product(&unit(n, k), &ji)?;
                out.push(Overlap {
                    label: format!("({} {}) {} = {} ({} {})", g(k), g(j), g(i), g(k), g(j), g(i)),
                    lhs,
                    rhs,
                });
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            let lhs = collector.product(&power_nf(j), &unit(n, i))?;
            let ji = collector.collect(&[(j, 1), (i, 1)])?;
            let rhs = collector.collect(&[(j, p - 1)])?;
            let rhs = collector.product(&rhs, &ji)?;
            out.push(Overlap {
                label: format!("({}^p) {} = {}^(p-1) ({} {})", g(j), g(i), g(j), g(j), g(i)),
                lhs,
                rhs,
            });

            let lhs = collector.product(&unit(n, j), &power_nf(i))?;
            let mut rhs = collector.collect(&[(j, 1), (i, 1)])?.0;
            collector.multiply(&mut rhs, &[(i, p - 1)])?;
            out.push(Overlap {
                label: format!("{} ({}^p) = ({} {}) {}^(p-1)", g(j), g(i), g(j), g(i), g(i)),
                lhs,
                rhs: ElementVec(rhs),
            });
        }
    }
    for i in 0..n {
        let lhs = collector.product(&power_nf(i), &unit(n, i))?;
        let rhs = collector.product(&unit(n, i), &power_nf(i))?;
        out.push(Overlap {
            label: format!("({}^p) {} = {} ({}^p)", g(i), g(i), g(i), g(i)),
            lhs,
            rhs,
        });
    }
    Ok(out)
}

fn unit(n: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

/// Light's associativity test over a generating set plus the inverse check;
/// returns a description of the first violation.
pub(crate) fn table_violation(mul: &[u16], order: usize, gens: &[usize]) -> Option<String> {
    for x in 0..order {
        if !mul[x * order..(x + 1) * order].contains(&0) {
            return Some(format!("element {x} has no inverse in the collected table"));
        }
    }
    for &s in gens {
        for x in 0..order {
            let xs = mul[x * order + s] as usize;
            for y in 0..order {
                let sy = mul[s * order + y] as usize;
                if mul[xs * order + y] != mul[x * order + sy] {
                    return Some(format!(
                        "associativity fails: (x s) y != x (s y) for x={x}, s={s}, y={y}"
                    ));
                }
            }
        }
    }
    None
}

/// Decides consistency: overlap tests first, then (for orders up to 2^9) the
/// associativity of the full collected table.
pub fn check_consistency(pres: &PcPresentation) -> ConsistencyReport {
    let collector = match Collector::new(pres) {
        Ok(c) => c,
        Err(e) => return ConsistencyReport::fail(format!("collecting inverses: {e}")),
    };
    check_with(&collector)
}

pub(crate) fn check_with(collector: &Collector<'_>) -> ConsistencyReport {
    let pres = collector.presentation();
    match overlap_tests(collector) {
        Err(e) => return ConsistencyReport::fail(format!("collection failed: {e}")),
        Ok(tests) => {
            if let Some(bad) = tests.iter().find(|t| !t.agrees()) {
                return ConsistencyReport::fail(format!(
                    "overlap {}: {} vs {}",
                    bad.label, bad.lhs, bad.rhs
                ));
            }
        }
    }
    let order = match pres.order() {
        Some(o) if o <= EXHAUSTIVE_ASSOCIATIVITY_CAP as u128 => o as usize,
        _ => return ConsistencyReport::ok(),
    };
    match build_mul_table(collector) {
        Err(e) => ConsistencyReport::fail(format!("expansion failed: {e}")),
        Ok(mul) => {
            let gens: Vec<usize> = (0..pres.ngens())
                .map(|k| (pres.prime() as usize).pow((pres.ngens() - 1 - k) as u32))
                .collect();
            match table_violation(&mul, order, &gens) {
                Some(msg) => ConsistencyReport::fail(msg),
                None => ConsistencyReport::ok(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::{parse_presentation, Word};

    fn parse(s: &str) -> PcPresentation {
        parse_presentation(s).unwrap()
    }

    #[test]
    fn q8_is_consistent() {
        let p = parse("group q8\nprime 2\nngens 3\npower 1 = g3\npower 2 = g3\ncomm 2 1 = g3\nend\n");
        let r = check_consistency(&p);
        assert!(r.consistent, "{r:?}");
        assert!(r.first_failure.is_none());
    }

    #[test]
    fn collapsing_relation_is_inconsistent() {
        // comm 2 1 = g2 is rejected by the parser, so build it directly
        let mut p = PcPresentation::new("bad", 2, 2).unwrap();
        p.set_commutator_polycyclic(1, 0, Word::generator(1)).unwrap();
        let r = check_consistency(&p);
        assert!(!r.consistent);
        let msg = r.first_failure.unwrap();
        assert!(msg.contains("overlap"), "{msg}");
    }

    #[test]
    fn cyclic_four_is_consistent() {
        let p = parse("group c4\nprime 2\nngens 2\npower 1 = g2\nend\n");
        assert!(check_consistency(&p).consistent);
    }

    #[test]
    fn bad_power_relation_is_inconsistent() {
        // g1^3 = g2 with [g2, g1] = g3 forces g2 to commute with g1.
        let p = parse("group bad\nprime 3\nngens 3\npower 1 = g2\ncomm 2 1 = g3\nend\n");
        assert!(!check_consistency(&p).consistent);
    }
}
