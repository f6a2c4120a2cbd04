//! Multisets of degrees stored as (value, multiplicity) pairs, and
//! enumeration of their distinct sub-multisets of a fixed size.

use crate::degseq::DegreeSequence;

/// Distinct values in decreasing order with their multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ValueCounts {
    values: Vec<u32>,
    mult: Vec<usize>,
}

impl ValueCounts {
    pub fn from_sorted(terms: &[u32]) -> Self {
        let mut out = Self::default();
        for &t in terms {
            match out.values.last() {
                Some(&v) if v == t => *out.mult.last_mut().unwrap() += 1,
                _ => {
                    out.values.push(t);
                    out.mult.push(1);
                }
            }
        }
        out
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    pub fn len(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    fn position(&self, value: u32) -> Option<usize> {
        self.values.binary_search_by(|v| value.cmp(v)).ok()
    }

    pub fn count_of(&self, value: u32) -> usize {
        self.position(value).map_or(0, |i| self.mult[i])
    }

    /// Removes one copy of `value`; false if none is left.
    pub fn take(&mut self, value: u32) -> bool {
        match self.position(value) {
            Some(i) if self.mult[i] > 0 => {
                self.mult[i] -= 1;
                true
            }
            _ => false,
        }
    }

    pub fn to_sorted_vec(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        for (&v, &m) in self.values.iter().zip(&self.mult) {
            out.extend(std::iter::repeat_n(v, m));
        }
        out
    }

    /// Keeps only the values `<= bound`.
    pub fn at_most(&self, bound: u32) -> Self {
        let start = self.values.partition_point(|&v| v > bound);
        Self { values: self.values[start..].to_vec(), mult: self.mult[start..].to_vec() }
    }
}

/// Walks the distinct size-`size` sub-multisets of a [`ValueCounts`] pool as
/// multiplicity vectors, in lexicographically decreasing order (the first
/// one greedily takes the largest values).
#[derive(Clone, Debug)]
pub struct Combinator {
    values: Vec<u32>,
    avail: Vec<usize>,
    /// `cap_after[i]` = number of pool elements strictly after slot `i`.
    cap_after: Vec<usize>,
    chosen: Vec<usize>,
    size: usize,
    state: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Active,
    Done,
}

impl Combinator {
    pub fn new(pool: &ValueCounts, size: usize) -> Self {
        let k = pool.values.len();
        let mut cap_after = vec![0; k];
        let mut acc = 0;
        for i in (0..k).rev() {
            cap_after[i] = acc;
            acc += pool.mult[i];
        }
        let state = if acc < size { State::Done } else { State::Fresh };
        Self {
            values: pool.values.clone(),
            avail: pool.mult.clone(),
            cap_after,
            chosen: vec![0; k],
            size,
            state,
        }
    }

    fn fill_from(&mut self, start: usize, mut need: usize) {
        for j in start..self.chosen.len() {
            let c = need.min(self.avail[j]);
            self.chosen[j] = c;
            need -= c;
        }
        debug_assert_eq!(need, 0);
    }

    /// Moves to the next combination; false once exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => false,
            State::Fresh => {
                self.fill_from(0, self.size);
                self.state = State::Active;
                true
            }
            State::Active => {
                let mut tail = 0;
                for i in (0..self.chosen.len()).rev() {
                    if self.chosen[i] > 0 && self.cap_after[i] > tail {
                        self.chosen[i] -= 1;
                        self.fill_from(i + 1, tail + 1);
                        return true;
                    }
                    tail += self.chosen[i];
                }
                self.state = State::Done;
                false
            }
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Multiplicities of the current combination, aligned with `values()`.
    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    pub fn chosen_sum(&self) -> u64 {
        self.values.iter().zip(&self.chosen).map(|(&v, &c)| v as u64 * c as u64).sum()
    }

    pub fn chosen_vec(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size);
        for (&v, &c) in self.values.iter().zip(&self.chosen) {
            out.extend(std::iter::repeat_n(v, c));
        }
        out
    }
}

/// Iterator over the distinct sub-multisets of size `s`, each as a
/// non-increasing vector.
pub struct MultisetCombinations {
    inner: Combinator,
}

impl Iterator for MultisetCombinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.inner.advance().then(|| self.inner.chosen_vec())
    }
}

pub fn multiset_combinations(d: &DegreeSequence, s: usize) -> MultisetCombinations {
    MultisetCombinations { inner: Combinator::new(&d.counts(), s) }
}

/// Merges two non-increasing slices into one non-increasing vector.
pub(crate) fn merge_desc(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Inserts `value` into a non-increasing vector.
pub(crate) fn insert_desc(v: &mut Vec<u32>, value: u32) {
    let at = v.partition_point(|&t| t > value);
    v.insert(at, value);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn seq(t: &[u32]) -> DegreeSequence {
        DegreeSequence::from_terms(t.to_vec()).unwrap()
    }

    fn all(t: &[u32], s: usize) -> Vec<Vec<u32>> {
        multiset_combinations(&seq(t), s).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(all(&[2, 2, 1], 2), vec![vec![2, 2], vec![2, 1]]);
        assert_eq!(all(&[3, 2, 1], 3), vec![vec![3, 2, 1]]);
        assert_eq!(all(&[2, 2, 2, 2], 2), vec![vec![2, 2]]);
        assert_eq!(all(&[3, 2, 1], 0), vec![Vec::<u32>::new()]);
        assert!(all(&[3, 2], 3).is_empty());
    }

    #[test]
    fn value_counts_take_and_filter() {
        let mut c = ValueCounts::from_sorted(&[5, 3, 3, 1]);
        assert_eq!(c.count_of(3), 2);
        assert!(c.take(3));
        assert!(!c.take(4));
        assert_eq!(c.to_sorted_vec(), vec![5, 3, 1]);
        assert_eq!(c.at_most(3).to_sorted_vec(), vec![3, 1]);
    }

    /// Reference: every index subset, sorted, deduplicated through a set.
    fn reference(terms: &[u32], s: usize) -> HashSet<Vec<u32>> {
        let n = terms.len();
        let mut out = HashSet::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == s {
                let mut pick: Vec<u32> =
                    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| terms[i]).collect();
                pick.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(pick);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn matches_subset_reference(terms in prop::collection::vec(1u32..5, 1..10), s in 0usize..10) {
            let d = seq(&terms);
            let got: Vec<Vec<u32>> = multiset_combinations(&d, s).collect();
            let set: HashSet<Vec<u32>> = got.iter().cloned().collect();
            prop_assert_eq!(set.len(), got.len(), "duplicate emitted");
            prop_assert_eq!(set, reference(d.terms(), s));
        }

        #[test]
        fn merge_keeps_order(mut a in prop::collection::vec(0u32..9, 0..8), mut b in prop::collection::vec(0u32..9, 0..8)) {
            a.sort_unstable_by(|x, y| y.cmp(x));
            b.sort_unstable_by(|x, y| y.cmp(x));
            let m = merge_desc(&a, &b);
            let mut expect = [a, b].concat();
            expect.sort_unstable_by(|x, y| y.cmp(x));
            prop_assert_eq!(m, expect);
        }
    }
}
