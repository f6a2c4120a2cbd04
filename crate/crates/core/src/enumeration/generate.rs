//! Exhaustive generators for zero-free graphical sequences of fixed length
//! and graphical partitions of a fixed even sum.
//!
//! Both walk non-increasing sequences depth first, largest term first, and
//! cut a branch as soon as its prefix violates the Erdős–Gallai inequality
//! for that prefix length under the most favourable completion. Leaves are
//! checked with the full test.

use crate::degseq::{is_graphical_sorted, DegreeSequence};
use crate::error::{Error, Result};

/// Zero-free graphical sequences of length `n`, in reverse lexicographic
/// order, optionally restricted to a range of largest terms.
#[derive(Clone, Debug)]
pub struct SequenceIter {
    n: usize,
    first_lo: u32,
    first_hi: u32,
    cur: Vec<u32>,
    sum: u64,
    started: bool,
    done: bool,
}

impl SequenceIter {
    pub fn new(n: usize) -> Self {
        Self::with_largest(n, 1, u32::MAX)
    }

    /// Only sequences whose largest term lies in `lo..=hi`.
    pub fn with_largest(n: usize, lo: u32, hi: u32) -> Self {
        let cap = n.saturating_sub(1).min(u32::MAX as usize) as u32;
        Self {
            n,
            first_lo: lo.max(1),
            first_hi: hi.min(cap),
            cur: Vec::with_capacity(n),
            sum: 0,
            started: false,
            done: false,
        }
    }

    fn push(&mut self, v: u32) {
        self.cur.push(v);
        self.sum += v as u64;
    }

    fn pop(&mut self) -> Option<u32> {
        let v = self.cur.pop()?;
        self.sum -= v as u64;
        Some(v)
    }

    fn prefix_ok(&self) -> bool {
        let l = self.cur.len() as u64;
        let last = *self.cur.last().unwrap() as u64;
        let rest = self.n as u64 - l;
        self.sum <= l * (l - 1) + rest * last.min(l)
    }

    /// Steps to the next node that survives the prefix test, going up as far
    /// as needed. False when the walk is over.
    fn backtrack(&mut self) -> bool {
        while let Some(v) = self.pop() {
            let lo = if self.cur.is_empty() { self.first_lo } else { 1 };
            let mut w = v;
            while w > lo {
                w -= 1;
                self.push(w);
                if self.prefix_ok() {
                    return true;
                }
                self.pop();
            }
        }
        false
    }
}

impl Iterator for SequenceIter {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        if self.done {
            return None;
        }
        let alive = if !self.started {
            self.started = true;
            if self.n == 0 || self.first_hi < self.first_lo {
                false
            } else {
                self.push(self.first_hi);
                self.prefix_ok() || self.backtrack()
            }
        } else {
            self.backtrack()
        };
        if !alive {
            self.done = true;
            return None;
        }
        loop {
            if self.cur.len() == self.n {
                if self.sum.is_multiple_of(2) && is_graphical_sorted(&self.cur) {
                    return Some(DegreeSequence::from_sorted_unchecked(self.cur.clone()));
                }
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            let v = *self.cur.last().unwrap();
            self.push(v);
            if !self.prefix_ok() && !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Graphical partitions of an even `total`, optionally restricted to a
/// range of largest parts.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    total: u64,
    first_lo: u32,
    first_hi: u32,
    cur: Vec<u32>,
    sum: u64,
    started: bool,
    done: bool,
}

impl PartitionIter {
    pub fn new(total: u32) -> Result<Self> {
        Self::with_largest(total, 1, u32::MAX)
    }

    pub fn with_largest(total: u32, lo: u32, hi: u32) -> Result<Self> {
        if total % 2 == 1 {
            return Err(Error::OddSum(total as u64));
        }
        if total == 0 {
            return Err(Error::InvalidParameter("partitions of 0".into()));
        }
        Ok(Self {
            total: total as u64,
            first_lo: lo.max(1),
            first_hi: hi.min(total / 2),
            cur: Vec::new(),
            sum: 0,
            started: false,
            done: false,
        })
    }

    fn push(&mut self, v: u32) {
        self.cur.push(v);
        self.sum += v as u64;
    }

    fn pop(&mut self) -> Option<u32> {
        let v = self.cur.pop()?;
        self.sum -= v as u64;
        Some(v)
    }

    fn prefix_ok(&self) -> bool {
        let l = self.cur.len() as u64;
        let rest = self.total - self.sum;
        // enough parts left for the largest one, and Erdős–Gallai at l with
        // the remaining sum as the most the tail can contribute
        l + rest > self.cur[0] as u64 && self.sum <= l * (l - 1) + rest
    }

    fn backtrack(&mut self) -> bool {
        while let Some(v) = self.pop() {
            let lo = if self.cur.is_empty() { self.first_lo } else { 1 };
            let mut w = v;
            while w > lo {
                w -= 1;
                self.push(w);
                if self.prefix_ok() {
                    return true;
                }
                self.pop();
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        if self.done {
            return None;
        }
        let alive = if !self.started {
            self.started = true;
            if self.first_hi < self.first_lo {
                false
            } else {
                self.push(self.first_hi);
                self.prefix_ok() || self.backtrack()
            }
        } else {
            self.backtrack()
        };
        if !alive {
            self.done = true;
            return None;
        }
        loop {
            if self.sum == self.total {
                if is_graphical_sorted(&self.cur) {
                    return Some(DegreeSequence::from_sorted_unchecked(self.cur.clone()));
                }
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            let v = (*self.cur.last().unwrap() as u64).min(self.total - self.sum) as u32;
            self.push(v);
            if !self.prefix_ok() && !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

pub fn enum_sequences(n: usize) -> SequenceIter {
    SequenceIter::new(n)
}

pub fn enum_partitions(total: u32) -> Result<PartitionIter> {
    PartitionIter::new(total)
}
