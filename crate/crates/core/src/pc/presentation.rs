use std::fmt::Write as _;

use super::{is_prime, Word};
use crate::{Error, Result};

/// A power-commutator presentation on generators `g_1, ..., g_n` of a finite
/// p-group: one relation `g_i^p = w` per generator and one relation
/// `[g_j, g_i] = w` per pair `j > i`. Omitted relations are trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    name: String,
    prime: u32,
    ngens: usize,
    powers: Vec<Word>,
    /// `[g_j, g_i]` for `j > i`, stored at `j * (j - 1) / 2 + i`.
    comms: Vec<Word>,
}

fn comm_slot(j: usize, i: usize) -> usize {
    debug_assert!(j > i);
    j * (j - 1) / 2 + i
}

impl PcPresentation {
    /// A presentation with all relations trivial (elementary abelian).
    pub fn new(name: impl Into<String>, prime: u32, ngens: usize) -> Result<Self> {
        if !is_prime(prime as u64) {
            return Err(Error::NotPrime(prime as u64));
        }
        Ok(PcPresentation {
            name: name.into(),
            prime,
            ngens,
            powers: vec![Word::identity(); ngens],
            comms: vec![Word::identity(); ngens * ngens.saturating_sub(1) / 2],
        })
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

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// `p^n`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        (self.prime as u128).checked_pow(self.ngens as u32)
    }

    /// Right-hand side of `g_i^p` (0-based `i`).
    pub fn power(&self, i: usize) -> &Word {
        &self.powers[i]
    }

    /// Right-hand side of `[g_j, g_i]` for `j > i` (0-based).
    pub fn commutator(&self, j: usize, i: usize) -> &Word {
        &self.comms[comm_slot(j, i)]
    }

    fn check_word(&self, w: &Word, min_index: usize, what: &str) -> Result<()> {
        if !w.is_normal_form(self.ngens, self.prime) {
            return Err(Error::InvalidPresentation(format!(
                "{what}: `{w}` is not a normal-form word for p={} n={}",
                self.prime, self.ngens
            )));
        }
        if let Some(g) = w.min_generator() {
            if g < min_index {
                return Err(Error::InvalidPresentation(format!(
                    "{what}: `{w}` mentions g{} but only generators after g{min_index} are allowed",
                    g + 1
                )));
            }
        }
        Ok(())
    }

    /// Sets `g_i^p = w`; `w` may only use generators after `g_i`.
    pub fn set_power(&mut self, i: usize, w: Word) -> Result<()> {
        if i >= self.ngens {
            return Err(Error::InvalidPresentation(format!("no generator g{}", i + 1)));
        }
        self.check_word(&w, i + 1, &format!("power g{}", i + 1))?;
        self.powers[i] = w;
        Ok(())
    }

    /// Sets `[g_j, g_i] = w` for `j > i`; `w` may only use generators after `g_j`.
    pub fn set_commutator(&mut self, j: usize, i: usize, w: Word) -> Result<()> {
        if j >= self.ngens || i >= j {
            return Err(Error::InvalidPresentation(format!(
                "commutator [g{}, g{}] needs j > i within 1..={}",
                j + 1,
                i + 1,
                self.ngens
            )));
        }
        self.check_word(&w, j + 1, &format!("comm g{} g{}", j + 1, i + 1))?;
        self.comms[comm_slot(j, i)] = w;
        Ok(())
    }

    /// Sets `[g_j, g_i] = w` under the weaker polycyclic rule: `w` may use any
    /// generator after `g_i`. The parser never produces such relations; they
    /// exist to exercise consistency checking on non-weighted input.
    pub fn set_commutator_polycyclic(&mut self, j: usize, i: usize, w: Word) -> Result<()> {
        if j >= self.ngens || i >= j {
            return Err(Error::InvalidPresentation(format!(
                "commutator [g{}, g{}] needs j > i within 1..={}",
                j + 1,
                i + 1,
                self.ngens
            )));
        }
        self.check_word(&w, i + 1, &format!("comm g{} g{}", j + 1, i + 1))?;
        self.comms[comm_slot(j, i)] = w;
        Ok(())
    }

    /// True when every commutator relation is trivial.
    pub fn is_abelian_presentation(&self) -> bool {
        self.comms.iter().all(Word::is_identity)
    }

    /// Serialises to the `.pcg` text format, listing only non-trivial
    /// relations.
    pub fn to_pcg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group {}", self.name);
        let _ = writeln!(out, "prime {}", self.prime);
        let _ = writeln!(out, "ngens {}", self.ngens);
        for (i, w) in self.powers.iter().enumerate() {
            if !w.is_identity() {
                let _ = writeln!(out, "power {} = {}", i + 1, w);
            }
        }
        for j in 1..self.ngens {
            for i in 0..j {
                let w = self.commutator(j, i);
                if !w.is_identity() {
                    let _ = writeln!(out, "comm {} {} = {}", j + 1, i + 1, w);
                }
            }
        }
        out.push_str("end\n");
        out
    }
}
