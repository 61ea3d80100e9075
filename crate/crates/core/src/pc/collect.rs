//! Collection from the left.
//!
//! The collected prefix is kept as an exponent vector; pending generators
//! live on an explicit stack. Multiplying `u * v` (with `u` ending at `g_k`
//! and `v` in the later generators) by `g_k` rewrites to
//! `u g_k * prod_{j>k} (g_j [g_j, g_k])^{v_j}`, and the conjugated tail is
//! pushed back onto the stack. Every pushed generator is strictly later than
//! `g_k`, so collection terminates for any weighted presentation.

use super::{ElementVec, PcPresentation, Word};
use crate::limits::DEFAULT_STEP_BUDGET;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Collector<'a> {
    pres: &'a PcPresentation,
    budget: usize,
    /// Letters of each power relation's right-hand side.
    power_letters: Vec<Vec<usize>>,
    /// Letters of `[g_j, g_i]`, indexed `j * n + i`.
    comm_letters: Vec<Vec<usize>>,
    /// Normal form of `g_k^{-1}` as letters.
    inverse_letters: Vec<Vec<usize>>,
}

fn letters_of(w: &Word) -> Vec<usize> {
    let mut out = Vec::new();
    for &(g, e) in w.factors() {
        for _ in 0..e {
            out.push(g);
        }
    }
    out
}

fn letters_of_exps(exps: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            out.push(g);
        }
    }
    out
}

impl<'a> Collector<'a> {
    pub fn new(pres: &'a PcPresentation) -> Result<Self> {
        Self::with_budget(pres, DEFAULT_STEP_BUDGET)
    }

    pub fn with_budget(pres: &'a PcPresentation, budget: usize) -> Result<Self> {
        let n = pres.ngens();
        let power_letters = (0..n).map(|i| letters_of(pres.power(i))).collect();
        let mut comm_letters = vec![Vec::new(); n * n];
        for j in 1..n {
            for i in 0..j {
                comm_letters[j * n + i] = letters_of(pres.commutator(j, i));
            }
        }
        let mut c = Collector {
            pres,
            budget,
            power_letters,
            comm_letters,
            inverse_letters: vec![Vec::new(); n],
        };
        // g_k^{-1} = g_k^{p-1} (g_k^p)^{-1}; the power word only involves
        // later generators, whose inverses are already known.
        for k in (0..n).rev() {
            let mut seq: Vec<usize> = Vec::new();
            for &(g, e) in pres.power(k).factors().iter().rev() {
                for _ in 0..e {
                    seq.extend(&c.inverse_letters[g]);
                }
            }
            let mut pending: Vec<usize> = seq.into_iter().rev().collect();
            let mut exps = vec![0; n];
            exps[k] = pres.prime() - 1;
            let mut steps = 0;
            c.run(&mut exps, &mut pending, &mut steps)?;
            c.inverse_letters[k] = letters_of_exps(&exps);
        }
        Ok(c)
    }

    pub fn presentation(&self) -> &PcPresentation {
        self.pres
    }

    /// Normal form of a word given as `(generator, exponent)` letters; negative
    /// exponents denote inverses.
    pub fn collect(&self, word: &[(usize, i64)]) -> Result<ElementVec> {
        let mut exps = vec![0; self.pres.ngens()];
        self.multiply(&mut exps, word)?;
        Ok(ElementVec(exps))
    }

    /// Replaces `exps` (a normal form) by the normal form of `exps * word`.
    pub fn multiply(&self, exps: &mut [u32], word: &[(usize, i64)]) -> Result<()> {
        let mut stack = Vec::new();
        for &(g, e) in word.iter().rev() {
            if g >= self.pres.ngens() {
                return Err(Error::InvalidPresentation(format!(
                    "word mentions g{} but there are only {} generators",
                    g + 1,
                    self.pres.ngens()
                )));
            }
            if e >= 0 {
                for _ in 0..e {
                    stack.push(g);
                }
            } else {
                for _ in 0..(-e) {
                    stack.extend(self.inverse_letters[g].iter().rev());
                }
            }
        }
        let mut steps = 0;
        self.run(exps, &mut stack, &mut steps)
    }

    /// Multiplies a normal form by a single generator on the right.
    pub fn multiply_generator(&self, exps: &mut [u32], k: usize) -> Result<()> {
        let mut stack = vec![k];
        let mut steps = 0;
        self.run(exps, &mut stack, &mut steps)
    }

    /// Product of two normal forms.
    pub fn product(&self, a: &[u32], b: &[u32]) -> Result<ElementVec> {
        let mut exps = a.to_vec();
        let mut stack: Vec<usize> = letters_of_exps(b);
        stack.reverse();
        let mut steps = 0;
        self.run(&mut exps, &mut stack, &mut steps)?;
        Ok(ElementVec(exps))
    }

    fn run(&self, exps: &mut [u32], stack: &mut Vec<usize>, steps: &mut usize) -> Result<()> {
        while let Some(k) = stack.pop() {
            *steps += 1;
            if *steps > self.budget {
                return Err(Error::StepBudget {
                    budget: self.budget,
                });
            }
            self.step(exps, k, stack);
        }
        Ok(())
    }

    fn step(&self, exps: &mut [u32], k: usize, stack: &mut Vec<usize>) {
        let n = exps.len();
        let p = self.pres.prime();
        let tail_commutes = (k + 1..n)
            .all(|j| exps[j] == 0 || self.comm_letters[j * n + k].is_empty());
        if tail_commutes && exps[k] + 1 < p {
            exps[k] += 1;
            return;
        }
        let tail_empty = exps[k + 1..].iter().all(|&e| e == 0);
        if tail_empty {
            exps[k] += 1;
            if exps[k] == p {
                exps[k] = 0;
                stack.extend(self.power_letters[k].iter().rev());
            }
            return;
        }
        let tail: Vec<u32> = exps[k + 1..].to_vec();
        for e in exps[k + 1..].iter_mut() {
            *e = 0;
        }
        exps[k] += 1;
        let mut pending: Vec<usize> = Vec::new();
        if exps[k] == p {
            exps[k] = 0;
            pending.extend(&self.power_letters[k]);
        }
        for (off, &e) in tail.iter().enumerate() {
            let j = k + 1 + off;
            let c = &self.comm_letters[j * n + k];
            for _ in 0..e {
                pending.push(j);
                pending.extend(c);
            }
        }
        stack.extend(pending.into_iter().rev());
    }
}

/// Collects `word` with a fresh collector and the default step budget.
pub fn collect(pres: &PcPresentation, word: &[(usize, i64)]) -> Result<ElementVec> {
    Collector::new(pres)?.collect(word)
}
