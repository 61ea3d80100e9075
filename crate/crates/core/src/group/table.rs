use std::fmt;

use crate::limits::MAX_TABLE_ORDER;
use crate::pc::ElementVec;
use crate::{Error, Result};

/// A fully expanded finite p-group. Element `0` is the identity.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    prime: u32,
    order: usize,
    log_order: u32,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elt_order: Vec<u32>,
    coords: Option<Vec<ElementVec>>,
    gens: Vec<usize>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("prime", &self.prime)
            .field("order", &self.order)
            .field("gens", &self.gens)
            .finish_non_exhaustive()
    }
}

/// Returns `m` with `p^m == n`, if any.
pub(crate) fn log_p(n: usize, p: u32) -> Option<u32> {
    let mut m = 0;
    let mut v = 1usize;
    while v < n {
        v = v.checked_mul(p as usize)?;
        m += 1;
    }
    (v == n).then_some(m)
}

impl GroupTable {
    /// Assembles a table from a row-major multiplication table known to
    /// describe a group; `gens` must generate it.
    pub(crate) fn from_parts(
        name: String,
        prime: u32,
        mul: Vec<u16>,
        coords: Option<Vec<ElementVec>>,
        gens: Vec<usize>,
    ) -> Self {
        let order = (mul.len() as f64).sqrt().round() as usize;
        debug_assert_eq!(order * order, mul.len());
        let log_order = log_p(order, prime).expect("order is a power of the prime");
        let mut inv = vec![0u16; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).expect("every element has an inverse");
            inv[x] = y as u16;
        }
        let mut elt_order = vec![1u32; order];
        for x in 1..order {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = mul[y * order + x] as usize;
                k += 1;
            }
            elt_order[x] = k;
        }
        GroupTable {
            name,
            prime,
            order,
            log_order,
            mul,
            inv,
            elt_order,
            coords,
            gens,
        }
    }

    /// Builds a table from explicit Cayley rows, checking the group axioms
    /// (identity `0`, inverses, associativity) and that the order is a power
    /// of `prime`. Associativity is checked with Light's test over a
    /// generating set.
    pub fn from_cayley(name: impl Into<String>, prime: u32, rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 || order > MAX_TABLE_ORDER {
            return Err(Error::InvalidTable(format!("unsupported order {order}")));
        }
        if !crate::pc::is_prime(prime as u64) {
            return Err(Error::NotPrime(prime as u64));
        }
        if log_p(order, prime).is_none() {
            return Err(Error::InvalidTable(format!("order {order} is not a power of {prime}")));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!("row {x} has length {}", row.len())));
            }
            let mut seen = vec![false; order];
            for &v in row {
                if v >= order || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTable(format!("row {x} is not a permutation")));
                }
                mul.push(v as u16);
            }
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let gens = greedy_generators(order, |a, b| mul[a * order + b] as usize);
        if let Some(why) = crate::pc::table_violation(&mul, order, &gens) {
            return Err(Error::InvalidTable(why));
        }
        Ok(GroupTable::from_parts(name.into(), prime, mul, None, gens))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `m` with `|G| = p^m`.
    pub fn log_order(&self) -> u32 {
        self.log_order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    #[inline]
    pub fn elt_order(&self, x: usize) -> u32 {
        self.elt_order[x]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.elt_order
    }

    /// `x^k`.
    pub fn pow(&self, x: usize, k: u64) -> usize {
        let k = k % self.elt_order[x] as u64;
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// `[x, y] = x^{-1} y^{-1} x y`.
    #[inline]
    pub fn comm(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// `x^g = g^{-1} x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Exponent vector behind an element id, for tables expanded from a
    /// presentation.
    pub fn coords(&self, x: usize) -> Option<&ElementVec> {
        self.coords.as_ref().map(|c| &c[x])
    }

    /// Element id for an exponent vector (tables expanded from a
    /// presentation only).
    pub fn element_of(&self, exps: &[u32]) -> Option<usize> {
        self.coords.as_ref()?;
        let mut id = 0usize;
        for &e in exps {
            if e >= self.prime {
                return None;
            }
            id = id * self.prime as usize + e as usize;
        }
        (id < self.order).then_some(id)
    }

    /// A generating list (the pc generators for expanded tables).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Raw row-major multiplication table.
    pub fn raw_mul(&self) -> &[u16] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u32 {
        self.elt_order.iter().copied().max().unwrap_or(1)
    }

    /// Multiset of element orders as sorted `(order, count)` pairs.
    pub fn element_order_counts(&self) -> Vec<(u32, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &o in &self.elt_order {
            *counts.entry(o).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

/// Picks elements in id order, keeping those outside the closure of the ones
/// already kept.
pub(crate) fn greedy_generators(order: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = vec![false; order];
    inside[0] = true;
    let mut list = vec![0];
    let mut gens = Vec::new();
    for x in 1..order {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let old = list.len();
        let mut i = 0;
        while i < list.len() {
            let e = list[i];
            let apply: &[usize] = if i < old { &gens[gens.len() - 1..] } else { &gens };
            for &g in apply {
                let y = mul(e, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}
