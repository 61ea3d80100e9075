use std::fmt;
use std::ops::Deref;

/// A word in normal form: generator indices strictly increase and every
/// exponent lies in `1..p`. Indices are 0-based; the textual form uses
/// 1-based `g<k>` names.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    factors: Vec<(usize, u32)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word without checking the normal-form invariants; callers
    /// validate against a presentation via [`crate::PcPresentation`] setters.
    pub fn from_factors(factors: Vec<(usize, u32)>) -> Self {
        Word { factors }
    }

    /// `g_{gen}` to the first power.
    pub fn generator(gen: usize) -> Self {
        Word {
            factors: vec![(gen, 1)],
        }
    }

    /// The word `g_1^{e_1} ... g_n^{e_n}` with zero exponents dropped.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Word {
            factors: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (i, e))
                .collect(),
        }
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Smallest generator index occurring in the word.
    pub fn min_generator(&self) -> Option<usize> {
        self.factors.first().map(|&(g, _)| g)
    }

    /// Exponent vector of length `n`.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        for &(g, e) in &self.factors {
            v[g] = e;
        }
        v
    }

    /// Checks the normal-form invariants for `n` generators and prime `p`.
    pub fn is_normal_form(&self, n: usize, p: u32) -> bool {
        self.factors.windows(2).all(|w| w[0].0 < w[1].0)
            && self.factors.iter().all(|&(g, e)| g < n && e >= 1 && e < p)
    }

    /// Signed letters, as accepted by [`crate::pc::Collector::collect`].
    pub fn letters(&self) -> Vec<(usize, i64)> {
        self.factors.iter().map(|&(g, e)| (g, e as i64)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("id");
        }
        for (k, &(g, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "g{}", g + 1)?;
            } else {
                write!(f, "g{}^{}", g + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Normal-form exponent vector `(e_1, ..., e_n)` of the element
/// `g_1^{e_1} ... g_n^{e_n}`; the zero vector is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementVec(pub Vec<u32>);

impl ElementVec {
    pub fn identity(n: usize) -> Self {
        ElementVec(vec![0; n])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn to_word(&self) -> Word {
        Word::from_exponents(&self.0)
    }
}

impl Deref for ElementVec {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for ElementVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
