//! Seed-index sets: Maya-diagram conjugation, run structure and the
//! gap/run encoding.

use std::fmt;

use crate::error::{Error, Result};
use crate::sign::Sign;

/// Strictly increasing positive seed indexes of one sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeedSet {
    sign: Sign,
    indexes: Vec<usize>,
}

impl SeedSet {
    /// Requires a strictly increasing list of indexes `>= 1`.
    pub fn new(sign: Sign, indexes: Vec<usize>) -> Result<Self> {
        if indexes.first() == Some(&0) {
            return Err(Error::InvalidSeedSet("index 0 is not a seed".into()));
        }
        if indexes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSeedSet(format!(
                "indexes must be strictly increasing: {indexes:?}"
            )));
        }
        Ok(SeedSet { sign, indexes })
    }

    /// Sorts and checks for duplicates before validating.
    pub fn from_unsorted(sign: Sign, mut indexes: Vec<usize>) -> Result<Self> {
        indexes.sort_unstable();
        Self::new(sign, indexes)
    }

    pub fn empty(sign: Sign) -> Self {
        SeedSet {
            sign,
            indexes: Vec::new(),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn indexes(&self) -> &[usize] {
        &self.indexes
    }

    pub fn len(&self) -> usize {
        self.indexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indexes.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.indexes.last().copied()
    }

    pub fn contains(&self, m: usize) -> bool {
        self.indexes.binary_search(&m).is_ok()
    }
}

impl fmt::Display for SeedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indexes.iter().map(|m| m.to_string()).collect();
        write!(f, "{}{{{}}}", self.sign, parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationResult {
    pub dual: SeedSet,
    /// Added to the Morse parameter to reach the dual construction.
    pub parameter_shift: i64,
}

/// Maya-diagram flip: the dual holds `m_max - m` for every `m` in
/// `0..=m_max` missing from `set`, with the opposite sign.
pub fn conjugate(set: &SeedSet) -> Result<ConjugationResult> {
    let m_max = set
        .largest()
        .ok_or_else(|| Error::InvalidSeedSet("cannot conjugate an empty set".into()))?;
    let mut dual: Vec<usize> = (0..=m_max)
        .filter(|m| !set.contains(*m))
        .map(|m| m_max - m)
        .collect();
    dual.reverse();
    let width = m_max as i64 + 1;
    let parameter_shift = match set.sign {
        Sign::Minus => -width,
        Sign::Plus => width,
    };
    Ok(ConjugationResult {
        dual: SeedSet::new(set.sign.flip(), dual)?,
        parameter_shift,
    })
}

/// Maximal runs of consecutive indexes.
pub fn runs(indexes: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &m in indexes {
        match out.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == m => run.push(m),
            _ => out.push(vec![m]),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStructure {
    pub juxtaposed: bool,
    pub segments: Vec<Vec<usize>>,
}

/// True when every maximal run has even length.
pub fn is_juxtaposed_pairs(set: &SeedSet) -> PairStructure {
    let segments = runs(&set.indexes);
    let juxtaposed =
        segments.iter().all(|r| r.len() % 2 == 0) && set.indexes.first().is_none_or(|&m| m >= 1);
    PairStructure {
        juxtaposed,
        segments,
    }
}

/// Alternating gap/run lengths. `gaps[l]` counts the missing indexes
/// (starting from 0) before run `l`, whose length is `runs[l]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionPair {
    pub gaps: Vec<usize>,
    pub runs: Vec<usize>,
}

pub fn set_to_partition(set: &SeedSet) -> PartitionPair {
    let mut gaps = Vec::new();
    let mut lens = Vec::new();
    let mut next = 0;
    for run in runs(&set.indexes) {
        gaps.push(run[0] - next);
        lens.push(run.len());
        next = run[0] + run.len();
    }
    PartitionPair { gaps, runs: lens }
}

pub fn partition_to_set(sign: Sign, p: &PartitionPair) -> Result<SeedSet> {
    if p.gaps.len() != p.runs.len() {
        return Err(Error::InvalidSeedSet("gap and run counts differ".into()));
    }
    if p.runs.contains(&0) || p.gaps.iter().skip(1).any(|&g| g == 0) {
        return Err(Error::InvalidSeedSet("empty run or inner gap".into()));
    }
    let mut out = Vec::new();
    let mut next = 0;
    for (&g, &r) in p.gaps.iter().zip(&p.runs) {
        let start = next + g;
        out.extend(start..start + r);
        next = start + r;
    }
    SeedSet::new(sign, out)
}
