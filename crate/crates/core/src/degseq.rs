//! Degree sequences, graphicality and the potential-connectivity
//! characterizations.
//!
//! A [`DegreeSequence`] is an immutable, non-increasing, zero-free list of
//! degrees. Anything derived from one (a GHH step, the two sides of a cut)
//! is a new value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::ValueCounts;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct DegreeSequence {
    terms: Vec<u32>,
    sum: u64,
}

impl DegreeSequence {
    /// The empty sequence. Only reachable through multiset subtraction.
    pub fn empty() -> Self {
        Self { terms: Vec::new(), sum: 0 }
    }

    /// Sorts `terms` non-increasingly. Rejects zeros but accepts an empty
    /// list, which [`normalize`] does not.
    pub fn from_terms(mut terms: Vec<u32>) -> Result<Self> {
        if terms.contains(&0) {
            return Err(Error::NonPositiveTerm(0));
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted_unchecked(terms))
    }

    /// `terms` must already be non-increasing and zero-free.
    pub(crate) fn from_sorted_unchecked(terms: Vec<u32>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!terms.contains(&0));
        let sum = terms.iter().map(|&t| t as u64).sum();
        Self { terms, sum }
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// Largest term, 0 for the empty sequence.
    pub fn max_term(&self) -> u32 {
        self.terms.first().copied().unwrap_or(0)
    }

    /// Smallest term, 0 for the empty sequence.
    pub fn min_term(&self) -> u32 {
        self.terms.last().copied().unwrap_or(0)
    }

    /// 1-based access in non-increasing order, so `kth(1)` is the largest.
    pub fn kth(&self, k: usize) -> u32 {
        self.terms[k - 1]
    }

    pub fn counts(&self) -> ValueCounts {
        ValueCounts::from_sorted(&self.terms)
    }

    pub fn contains(&self, value: u32) -> bool {
        self.terms.binary_search_by(|t| value.cmp(t)).is_ok()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(d: DegreeSequence) -> Self {
        d.terms
    }
}

impl TryFrom<Vec<u32>> for DegreeSequence {
    type Error = Error;

    fn try_from(terms: Vec<u32>) -> Result<Self> {
        Self::from_terms(terms)
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        normalize(&parse_terms(s)?)
    }
}

/// Splits comma- or whitespace-separated integers. Zeros and negatives are
/// kept so callers can decide how to treat them.
pub fn parse_terms(text: &str) -> Result<Vec<i64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| tok.parse::<i64>().map_err(|_| Error::Parse(tok.to_string())))
        .collect()
}

pub fn normalize(raw: &[i64]) -> Result<DegreeSequence> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut terms = Vec::with_capacity(raw.len());
    for &t in raw {
        if t <= 0 {
            return Err(Error::NonPositiveTerm(t));
        }
        let t = u32::try_from(t).map_err(|_| Error::Parse(t.to_string()))?;
        terms.push(t);
    }
    terms.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DegreeSequence::from_sorted_unchecked(terms))
}

pub fn is_graphical(d: &DegreeSequence) -> bool {
    is_graphical_sorted(d.terms())
}

/// Erdős–Gallai on a non-increasing slice (zeros allowed), linear in the
/// length.
///
/// For each prefix length `k` the right-hand side
/// `k(k-1) + sum_{i>k} min(d_i, k)` is evaluated with a pointer `p` to the
/// number of terms that are at least `k`; `p` only moves left as `k` grows.
pub fn is_graphical_sorted(d: &[u32]) -> bool {
    let n = d.len();
    if n == 0 {
        return true;
    }
    let total: u64 = d.iter().map(|&t| t as u64).sum();
    if total % 2 == 1 || d[0] as usize > n - 1 {
        return false;
    }
    let mut prefix = 0u64;
    let mut p = n;
    let mut prefix_at_p = total;
    for k in 1..=n {
        let dk = d[k - 1] as u64;
        prefix += dk;
        while p > 0 && (d[p - 1] as usize) < k {
            prefix_at_p -= d[p - 1] as u64;
            p -= 1;
        }
        let k64 = k as u64;
        let rhs = if p > k {
            // indices k..p contribute k each, the rest their own value
            k64 * (k64 - 1) + k64 * (p - k) as u64 + (total - prefix_at_p)
        } else {
            k64 * (k64 - 1) + (total - prefix)
        };
        if prefix > rhs {
            return false;
        }
        // Past this point every remaining inequality holds.
        if dk < k64 {
            break;
        }
    }
    true
}

/// Graphical, and the degree sum can support a spanning tree.
pub fn potentially_connected(d: &DegreeSequence) -> bool {
    let n = d.len() as u64;
    is_graphical(d) && (n == 1 || d.sum() >= 2 * (n - 1))
}

/// Some realization is 2-connected: graphical, n ≥ 3, dₙ ≥ 2 and
/// `sum ≥ 2(n-1) + 2(d₁-1)`.
pub fn potentially_biconnected(d: &DegreeSequence) -> bool {
    potentially_biconnected_sorted(d.terms())
}

pub(crate) fn potentially_biconnected_sorted(d: &[u32]) -> bool {
    let n = d.len();
    if n < 3 || d[n - 1] < 2 {
        return false;
    }
    let sum: u64 = d.iter().map(|&t| t as u64).sum();
    let need = 2 * (n as u64 - 1) + 2 * (d[0] as u64 - 1);
    sum >= need && is_graphical_sorted(d)
}

/// A derived sequence described as `base - removed + added`.
#[derive(Clone, Debug)]
pub struct MultisetDelta<'a> {
    pub base: &'a DegreeSequence,
    pub removed: Vec<u32>,
    pub added: Vec<u32>,
}

impl<'a> MultisetDelta<'a> {
    pub fn new(base: &'a DegreeSequence) -> Self {
        Self { base, removed: Vec::new(), added: Vec::new() }
    }

    pub fn without(mut self, values: &[u32]) -> Self {
        self.removed.extend_from_slice(values);
        self
    }

    pub fn with(mut self, values: &[u32]) -> Self {
        self.added.extend_from_slice(values);
        self
    }

    pub fn apply(&self) -> Result<DegreeSequence> {
        let mut rest = multiset_subtract(self.base, &self.removed)?.terms;
        rest.extend_from_slice(&self.added);
        DegreeSequence::from_terms(rest)
    }
}

/// Removes one copy of each listed element.
pub fn multiset_subtract(d: &DegreeSequence, m: &[u32]) -> Result<DegreeSequence> {
    let mut counts = d.counts();
    for &v in m {
        if !counts.take(v) {
            return Err(Error::NotSubMultiset(m.to_vec()));
        }
    }
    Ok(DegreeSequence::from_sorted_unchecked(counts.to_sorted_vec()))
}
