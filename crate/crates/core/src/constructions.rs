//! Named groups as hand-derived power-commutator presentations.
//!
//! Keys use the CLI syntax: `cyclic:<order>`, `elem_abelian:<p>:<rank>`,
//! `q8`, `d8`, `c2_x_q8`, `c4_star_q8`, `blackburn32`,
//! `extraspecial_p3_exp_p:<p>`, `extraspecial_p3_exp_p2:<p>`,
//! `cp2_star_s:<p>`.

use std::fmt;
use std::str::FromStr;

use crate::group::{is_isomorphic, GroupTable};
use crate::limits::parse_order;
use crate::pc::{expand, PcPresentation, Word};
use crate::{Error, Result};

/// Primes accepted by the parameterised builders.
pub const SUPPORTED_PRIMES: [u32; 3] = [2, 3, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    /// Cyclic of order `p^k`.
    Cyclic { p: u32, k: u32 },
    ElemAbelian { p: u32, rank: u32 },
    Q8,
    D8,
    C2xQ8,
    C4StarQ8,
    /// Order 32: `a^4 = b^4 = [a,b] = 1, c^2 = a^2, a^c = ab^2, b^c = ba^2`.
    Blackburn32,
    /// Order `p^3`, exponent `p`, `p` odd.
    ExtraspecialExpP { p: u32 },
    /// Order `p^3`, exponent `p^2`, `p` odd.
    ExtraspecialExpP2 { p: u32 },
    /// `C_{p^2} * S` of order `p^4` with `S` extraspecial of exponent `p`:
    /// `a^{p^2} = b^p = c^p = 1, [a,b] = [a,c] = 1, [b,c] = a^p`.
    Cp2StarS { p: u32 },
}

impl NamedGroup {
    /// Every fixed key plus one instance of each parameterised family.
    pub fn examples() -> Vec<NamedGroup> {
        vec![
            NamedGroup::Cyclic { p: 2, k: 3 },
            NamedGroup::ElemAbelian { p: 2, rank: 3 },
            NamedGroup::Q8,
            NamedGroup::D8,
            NamedGroup::C2xQ8,
            NamedGroup::C4StarQ8,
            NamedGroup::Blackburn32,
            NamedGroup::ExtraspecialExpP { p: 3 },
            NamedGroup::ExtraspecialExpP2 { p: 3 },
            NamedGroup::Cp2StarS { p: 3 },
        ]
    }

    pub fn prime(&self) -> u32 {
        match *self {
            NamedGroup::Cyclic { p, .. }
            | NamedGroup::ElemAbelian { p, .. }
            | NamedGroup::ExtraspecialExpP { p }
            | NamedGroup::ExtraspecialExpP2 { p }
            | NamedGroup::Cp2StarS { p } => p,
            _ => 2,
        }
    }

    /// Documented order.
    pub fn order(&self) -> u128 {
        let (p, n) = (self.prime() as u128, self.ngens());
        p.pow(n as u32)
    }

    fn ngens(&self) -> usize {
        match *self {
            NamedGroup::Cyclic { k, .. } => k as usize,
            NamedGroup::ElemAbelian { rank, .. } => rank as usize,
            NamedGroup::Q8 | NamedGroup::D8 => 3,
            NamedGroup::C2xQ8 | NamedGroup::C4StarQ8 => 4,
            NamedGroup::Blackburn32 => 5,
            NamedGroup::ExtraspecialExpP { .. } | NamedGroup::ExtraspecialExpP2 { .. } => 3,
            NamedGroup::Cp2StarS { .. } => 4,
        }
    }

    fn validate(&self) -> Result<()> {
        let p = self.prime();
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::UnsupportedParameter(format!("prime {p} (supported: 2, 3, 5)")));
        }
        match *self {
            NamedGroup::ExtraspecialExpP { .. }
            | NamedGroup::ExtraspecialExpP2 { .. }
            | NamedGroup::Cp2StarS { .. }
                if p == 2 =>
            {
                Err(Error::UnsupportedParameter(format!("{self} needs an odd prime")))
            }
            NamedGroup::Cyclic { k: 0, .. } => {
                Err(Error::UnsupportedParameter("cyclic order must exceed 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// The presentation, with 0-based generator indices.
    pub fn presentation(&self) -> Result<PcPresentation> {
        self.validate()?;
        let p = self.prime();
        let mut pres = PcPresentation::new(self.to_string(), p, self.ngens())?;
        let g = Word::generator;
        let pw = |i: usize, e: u32| Word::from_factors(vec![(i, e)]);
        match *self {
            NamedGroup::Cyclic { k, .. } => {
                for i in 0..(k as usize).saturating_sub(1) {
                    pres.set_power(i, g(i + 1))?;
                }
            }
            NamedGroup::ElemAbelian { .. } => {}
            NamedGroup::Q8 => {
                pres.set_power(0, g(2))?;
                pres.set_power(1, g(2))?;
                pres.set_commutator(1, 0, g(2))?;
            }
            NamedGroup::D8 => {
                pres.set_power(1, g(2))?;
                pres.set_commutator(1, 0, g(2))?;
            }
            NamedGroup::C2xQ8 => {
                pres.set_power(1, g(3))?;
                pres.set_power(2, g(3))?;
                pres.set_commutator(2, 1, g(3))?;
            }
            NamedGroup::C4StarQ8 => {
                pres.set_power(0, g(3))?;
                pres.set_power(1, g(3))?;
                pres.set_power(2, g(3))?;
                pres.set_commutator(1, 0, g(3))?;
            }
            NamedGroup::Blackburn32 => {
                // (g1, ..., g5) = (c, a, b, a^2, b^2)
                pres.set_power(0, g(3))?;
                pres.set_power(1, g(3))?;
                pres.set_power(2, g(4))?;
                pres.set_commutator(1, 0, g(4))?;
                pres.set_commutator(2, 0, g(3))?;
            }
            NamedGroup::ExtraspecialExpP { .. } => {
                pres.set_commutator(1, 0, g(2))?;
            }
            NamedGroup::ExtraspecialExpP2 { .. } => {
                pres.set_power(1, g(2))?;
                pres.set_commutator(1, 0, g(2))?;
            }
            NamedGroup::Cp2StarS { p } => {
                // (g1, g2, g3, g4) = (b, c, a, a^p)
                pres.set_power(2, g(3))?;
                pres.set_commutator(1, 0, pw(3, p - 1))?;
            }
        }
        Ok(pres)
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGroup::Cyclic { p, k } => write!(f, "cyclic:{}", (p as u128).pow(k)),
            NamedGroup::ElemAbelian { p, rank } => write!(f, "elem_abelian:{p}:{rank}"),
            NamedGroup::Q8 => f.write_str("q8"),
            NamedGroup::D8 => f.write_str("d8"),
            NamedGroup::C2xQ8 => f.write_str("c2_x_q8"),
            NamedGroup::C4StarQ8 => f.write_str("c4_star_q8"),
            NamedGroup::Blackburn32 => f.write_str("blackburn32"),
            NamedGroup::ExtraspecialExpP { p } => write!(f, "extraspecial_p3_exp_p:{p}"),
            NamedGroup::ExtraspecialExpP2 { p } => write!(f, "extraspecial_p3_exp_p2:{p}"),
            NamedGroup::Cp2StarS { p } => write!(f, "cp2_star_s:{p}"),
        }
    }
}

impl FromStr for NamedGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| -> Result<u32> {
            t.parse()
                .map_err(|_| Error::UnsupportedParameter(format!("`{t}` in `{s}`")))
        };
        let key = match parts.as_slice() {
            ["q8"] => NamedGroup::Q8,
            ["d8"] => NamedGroup::D8,
            ["c2_x_q8"] => NamedGroup::C2xQ8,
            ["c4_star_q8"] => NamedGroup::C4StarQ8,
            ["blackburn32"] => NamedGroup::Blackburn32,
            ["cyclic", n] => {
                let order = parse_order(n)
                    .ok_or_else(|| Error::UnsupportedParameter(format!("order `{n}`")))?;
                let (p, k) = prime_power(order as u64)
                    .ok_or_else(|| Error::UnsupportedParameter(format!("{order} is not a prime power")))?;
                NamedGroup::Cyclic { p, k }
            }
            ["elem_abelian", p, r] => NamedGroup::ElemAbelian {
                p: num(p)?,
                rank: num(r)?,
            },
            ["extraspecial_p3_exp_p", p] => NamedGroup::ExtraspecialExpP { p: num(p)? },
            ["extraspecial_p3_exp_p2", p] => NamedGroup::ExtraspecialExpP2 { p: num(p)? },
            ["cp2_star_s", p] => NamedGroup::Cp2StarS { p: num(p)? },
            _ => return Err(Error::UnknownKey(s.to_string())),
        };
        key.validate()?;
        Ok(key)
    }
}

fn prime_power(n: u64) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p as u32, k))
}

/// Expands a named group; the expansion re-checks consistency.
pub fn build(key: &NamedGroup) -> Result<GroupTable> {
    expand(&key.presentation()?)
}

/// The four d-maximal 2-groups of rank 3: `C2^3`, `C2 x Q8`, `C4 * Q8` and
/// the Blackburn group of order 32.
pub fn rank3_dmax_references() -> Result<Vec<GroupTable>> {
    let keys = [
        NamedGroup::ElemAbelian { p: 2, rank: 3 },
        NamedGroup::C2xQ8,
        NamedGroup::C4StarQ8,
        NamedGroup::Blackburn32,
    ];
    let tables = keys.iter().map(build).collect::<Result<Vec<_>>>()?;
    for i in 0..tables.len() {
        for j in i + 1..tables.len() {
            if is_isomorphic(&tables[i], &tables[j])?.is_some() {
                return Err(Error::TheoremFailure(format!("{} ~= {}", keys[i], keys[j])));
            }
        }
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::check_consistency;

    #[test]
    fn keys_round_trip() {
        for k in NamedGroup::examples() {
            assert_eq!(k.to_string().parse::<NamedGroup>().unwrap(), k);
        }
        assert_eq!("cyclic:2^3".parse::<NamedGroup>().unwrap(), NamedGroup::Cyclic { p: 2, k: 3 });
        assert!(matches!("s3".parse::<NamedGroup>(), Err(Error::UnknownKey(_))));
        assert!(matches!(
            "cp2_star_s:2".parse::<NamedGroup>(),
            Err(Error::UnsupportedParameter(_))
        ));
        assert!(matches!(
            "elem_abelian:7:2".parse::<NamedGroup>(),
            Err(Error::UnsupportedParameter(_))
        ));
        assert!("cyclic:12".parse::<NamedGroup>().is_err());
    }

    #[test]
    fn builders_are_consistent_with_documented_orders() {
        for k in NamedGroup::examples() {
            let pres = k.presentation().unwrap();
            assert!(check_consistency(&pres).consistent, "{k}");
            assert_eq!(build(&k).unwrap().order() as u128, k.order(), "{k}");
        }
        for p in [3, 5] {
            for k in [
                NamedGroup::ExtraspecialExpP { p },
                NamedGroup::ExtraspecialExpP2 { p },
                NamedGroup::Cp2StarS { p },
            ] {
                assert!(check_consistency(&k.presentation().unwrap()).consistent, "{k}");
            }
        }
    }

    #[test]
    fn involution_counts() {
        let count = |k| {
            let g = build(&k).unwrap();
            (0..g.order()).filter(|&x| g.elt_order(x) == 2).count()
        };
        assert_eq!(count(NamedGroup::Q8), 1);
        assert_eq!(count(NamedGroup::D8), 5);
    }

    #[test]
    fn blackburn_satisfies_its_defining_relations() {
        let g = build(&NamedGroup::Blackburn32).unwrap();
        let gens = g.generators();
        let (c, a, b) = (gens[0], gens[1], gens[2]);
        let sq = |x| g.mul(x, x);
        assert_eq!(g.pow(a, 4), 0);
        assert_eq!(g.pow(b, 4), 0);
        assert_eq!(g.comm(a, b), 0);
        assert_eq!(sq(c), sq(a));
        assert_eq!(g.conj(a, c), g.mul(a, sq(b)));
        assert_eq!(g.conj(b, c), g.mul(b, sq(a)));
        assert_eq!(g.order(), 32);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn cp2_star_s_satisfies_its_defining_relations() {
        for p in [3u64, 5] {
            let g = build(&NamedGroup::Cp2StarS { p: p as u32 }).unwrap();
            let gens = g.generators();
            let (b, c, a) = (gens[0], gens[1], gens[2]);
            assert_eq!(g.pow(a, p * p), 0);
            assert_eq!(g.elt_order(a) as u64, p * p);
            assert_eq!(g.pow(b, p), 0);
            assert_eq!(g.pow(c, p), 0);
            assert_eq!(g.comm(a, b), 0);
            assert_eq!(g.comm(a, c), 0);
            assert_eq!(g.comm(b, c), g.pow(a, p));
            assert_eq!(g.order() as u64, p.pow(4));
        }
    }

    #[test]
    fn extraspecial_exponents() {
        let e = build(&NamedGroup::ExtraspecialExpP { p: 3 }).unwrap();
        assert_eq!(e.exponent(), 3);
        assert!(!e.is_abelian());
        let m = build(&NamedGroup::ExtraspecialExpP2 { p: 3 }).unwrap();
        assert_eq!(m.exponent(), 9);
        assert_eq!(m.center().order(), 3);
        assert_eq!(m.derived_subgroup(), m.center());
    }

    #[test]
    fn c4_star_q8_relations() {
        let g = build(&NamedGroup::C4StarQ8).unwrap();
        let gens = g.generators();
        let (a, b, c) = (gens[0], gens[1], gens[2]);
        // c central of order 4 with c^2 = a^2 = b^2
        assert!(g.center().contains(c));
        assert_eq!(g.elt_order(c), 4);
        assert_eq!(g.mul(c, c), g.mul(a, a));
        assert_eq!(g.mul(b, b), g.mul(a, a));
        assert_eq!(g.comm(b, a), g.mul(a, a));
    }

    #[test]
    fn reference_set() {
        let refs = rank3_dmax_references().unwrap();
        assert_eq!(refs.iter().map(|g| g.order()).collect::<Vec<_>>(), vec![8, 16, 16, 32]);
    }
}
