use super::{GroupTable, Subgroup};
use crate::{Error, Result};

/// `G/N` together with the natural projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub table: GroupTable,
    /// Coset id of every element of `G`.
    pub projection: Vec<usize>,
    /// Least element of each coset.
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// Preimage of a subgroup of the quotient.
    pub fn pull_back(&self, g: &GroupTable, n: &Subgroup, s: &Subgroup) -> Subgroup {
        let mut gens = n.gens().to_vec();
        gens.extend(s.gens().iter().map(|&c| self.representatives[c]));
        let members = super::Bitset::from_elements(
            g.order(),
            (0..g.order()).filter(|&x| s.contains(self.projection[x])),
        );
        Subgroup::from_parts(members, gens)
    }

    /// Image of a subgroup of `G`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.gens().iter().map(|&x| self.projection[x]).collect();
        self.table.closure(&gens)
    }
}

/// The coset table of a normal subgroup; coset ids follow the least element
/// of each coset, so the identity coset is 0.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<Quotient> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut projection = vec![usize::MAX; order];
    let mut representatives = Vec::with_capacity(order / n.order());
    let nelems = n.elements();
    for x in 0..order {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        for &m in &nelems {
            projection[g.mul(x, m)] = c;
        }
    }
    let q = representatives.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &representatives {
        for &b in &representatives {
            mul.push(projection[g.mul(a, b)] as u16);
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    for &x in g.generators() {
        let c = projection[x];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let table = GroupTable::from_parts(
        format!("{}/N{}", g.name(), n.order()),
        g.prime(),
        mul,
        None,
        gens,
    );
    Ok(Quotient {
        table,
        projection,
        representatives,
    })
}
