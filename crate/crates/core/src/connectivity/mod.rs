//! Forcible connectivity decision procedures.
//!
//! * [`forcibly_connected`] searches for a split of the sequence into two
//!   graphical halves (a disconnected realization).
//! * [`forcibly_biconnected_basic`] tries every generalized Havel–Hakimi
//!   step and asks whether the result can be disconnected.
//! * [`forcibly_biconnected`] is the faster test: it narrows the possible
//!   orders of the small side of a cut and enumerates the two sequences a
//!   cut vertex would leave behind.
//!
//! [`Tester`] carries an optional deadline, search counters and the choice
//! between sequential and parallel cut search. The free functions use a
//! default tester without a deadline.

mod basic;
mod cut;
mod split;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::degseq::{is_graphical, DegreeSequence};
use crate::error::{Error, Result};

pub use basic::ghh;
pub use cut::candidate_orders;
pub(crate) use cut::has_cut;
pub(crate) use split::find_split;

/// Certificate that some realization has a cut vertex of degree
/// `cut_degree`, with `d_low` edges into the small side and `d_high` into
/// the large side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub cut_degree: u32,
    pub d_low: u32,
    pub d_high: u32,
    /// Order of the small side.
    pub s: usize,
    /// Degrees (in the whole graph) of the small side's vertices.
    pub s_low: Vec<u32>,
    /// `s_low` plus `d_low`: the small side together with the cut vertex.
    pub seq_low: DegreeSequence,
    /// The large side together with the cut vertex, which has degree `d_high`.
    pub seq_high: DegreeSequence,
}

impl CutWitness {
    /// Checks every structural invariant against the sequence it certifies.
    pub fn validate(&self, d: &DegreeSequence) -> std::result::Result<(), String> {
        let n = d.len();
        if !(1 <= self.d_low && self.d_low < self.cut_degree) {
            return Err(format!("d_low {} outside [1, {})", self.d_low, self.cut_degree));
        }
        if self.d_low + self.d_high != self.cut_degree {
            return Err("d_low + d_high != cut_degree".into());
        }
        if !(d.min_term() as usize <= self.s && self.s <= (n - 1) / 2) {
            return Err(format!("s = {} outside [dn, (n-1)/2]", self.s));
        }
        if self.s_low.len() != self.s || self.s_low.iter().any(|&v| v as usize > self.s) {
            return Err("s_low has wrong size or a term above s".into());
        }
        if self.seq_low.len() != self.s + 1 || self.seq_high.len() != n - self.s {
            return Err("derived sequence lengths do not add up".into());
        }
        let mut low = self.s_low.clone();
        low.push(self.d_low);
        low.sort_unstable_by(|a, b| b.cmp(a));
        if low != self.seq_low.terms() {
            return Err("seq_low != s_low + d_low".into());
        }
        let mut used = vec![self.cut_degree];
        used.extend_from_slice(&self.s_low);
        let rest = crate::degseq::multiset_subtract(d, &used).map_err(|e| e.to_string())?;
        let mut high = rest.terms().to_vec();
        if high.iter().any(|&v| v as usize > n - self.s - 1) {
            return Err("a large-side term exceeds n - s - 1".into());
        }
        high.push(self.d_high);
        high.sort_unstable_by(|a, b| b.cmp(a));
        if high != self.seq_high.terms() {
            return Err("seq_high != d - ({d} + s_low) + d_high".into());
        }
        for (name, seq) in [("seq_low", &self.seq_low), ("seq_high", &self.seq_high)] {
            if seq.sum() % 2 == 1 || !is_graphical(seq) {
                return Err(format!("{name} is not graphical"));
            }
        }
        Ok(())
    }
}

/// Certificate of a disconnected realization: both sides are graphical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    pub side_a: DegreeSequence,
    pub side_b: DegreeSequence,
}

impl SplitWitness {
    pub fn validate(&self, d: &DegreeSequence) -> std::result::Result<(), String> {
        if self.side_a.len() + self.side_b.len() != d.len() {
            return Err("side lengths do not add up to n".into());
        }
        for side in [&self.side_a, &self.side_b] {
            if side.is_empty() || side.max_term() as usize > side.len() - 1 || !is_graphical(side) {
                return Err(format!("side ({side}) is not graphical"));
            }
        }
        if crate::multiset::merge_desc(self.side_a.terms(), self.side_b.terms()) != d.terms() {
            return Err("sides are not a partition of d".into());
        }
        Ok(())
    }
}

/// Possible orders of the small side of a cut, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOrders {
    pub orders: Vec<usize>,
}

impl CandidateOrders {
    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectedVerdict {
    Forcibly,
    Split(SplitWitness),
}

impl ConnectedVerdict {
    pub fn is_forcibly_connected(&self) -> bool {
        matches!(self, Self::Forcibly)
    }

    pub fn split(&self) -> Option<&SplitWitness> {
        match self {
            Self::Split(w) => Some(w),
            Self::Forcibly => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiconnectedVerdict {
    Forcibly,
    NotPotentiallyBiconnected,
    NotForciblyConnected(SplitWitness),
    Cut(CutWitness),
}

impl BiconnectedVerdict {
    pub fn is_forcibly_biconnected(&self) -> bool {
        matches!(self, Self::Forcibly)
    }

    pub fn cut_witness(&self) -> Option<&CutWitness> {
        match self {
            Self::Cut(w) => Some(w),
            _ => None,
        }
    }
}

/// Which part of the entry gate a sequence stopped at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    NotPotentiallyBiconnected,
    NotForciblyConnected,
    Passed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSearch {
    pub gate: Gate,
    pub witnesses: Vec<CutWitness>,
}

/// Work counters, accumulated over every call made through one [`Tester`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Small-side candidates examined by the split search.
    pub split_candidates: u64,
    /// (cut degree, order) pairs that reached the small-side enumeration.
    pub cut_searches: u64,
    /// Small-side degree multisets examined by the cut search.
    pub low_candidates: u64,
    /// Small-side graphicality answers served from the memo.
    pub memo_hits: u64,
    /// GHH results examined by the basic test.
    pub ghh_steps: u64,
}

impl SearchStats {
    #[cfg(feature = "parallel")]
    fn merge(&mut self, other: &SearchStats) {
        self.split_candidates += other.split_candidates;
        self.cut_searches += other.cut_searches;
        self.low_candidates += other.low_candidates;
        self.memo_hits += other.memo_hits;
        self.ghh_steps += other.ghh_steps;
    }
}

/// Deadline checks, amortized over many search steps.
#[derive(Clone, Debug)]
pub(crate) struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Budget {
    pub(crate) fn new(deadline: Option<Instant>) -> Self {
        Self { deadline, ticks: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(256) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::Timeout);
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Tester {
    deadline: Option<Instant>,
    parallel: bool,
    stats: SearchStats,
}

impl Tester {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every subsequent call fails with [`Error::Timeout`] once `budget` has
    /// elapsed from now.
    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    /// Spread the cut search over the rayon pool. Verdicts and witnesses
    /// are the same as in sequential mode. No effect without the `parallel`
    /// feature.
    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    pub fn reset_stats(&mut self) {
        self.stats = SearchStats::default();
    }

    fn budget(&self) -> Budget {
        Budget::new(self.deadline)
    }

    pub fn forcibly_connected(&mut self, d: &DegreeSequence) -> Result<ConnectedVerdict> {
        if !is_graphical(d) {
            return Err(Error::NotGraphical);
        }
        let mut budget = self.budget();
        let split = split::find_split(d.terms(), &mut budget, &mut self.stats)?;
        Ok(match split {
            None => ConnectedVerdict::Forcibly,
            Some((a, b)) => ConnectedVerdict::Split(SplitWitness {
                side_a: DegreeSequence::from_sorted_unchecked(a),
                side_b: DegreeSequence::from_sorted_unchecked(b),
            }),
        })
    }

    pub fn forcibly_biconnected(&mut self, d: &DegreeSequence) -> Result<BiconnectedVerdict> {
        cut::decide(self, d)
    }

    pub fn forcibly_biconnected_basic(&mut self, d: &DegreeSequence) -> Result<bool> {
        let mut budget = self.budget();
        basic::decide(d, &mut budget, &mut self.stats)
    }

    pub fn find_cut_witnesses(
        &mut self,
        d: &DegreeSequence,
        limit: Option<usize>,
    ) -> Result<CutSearch> {
        cut::enumerate(self, d, limit)
    }
}

/// Whether every realization of `d` is connected; a split is returned
/// otherwise.
pub fn forcibly_connected(d: &DegreeSequence) -> Result<ConnectedVerdict> {
    Tester::new().forcibly_connected(d)
}

pub fn forcibly_biconnected(d: &DegreeSequence) -> BiconnectedVerdict {
    Tester::new().forcibly_biconnected(d).expect("no deadline set")
}

pub fn forcibly_biconnected_basic(d: &DegreeSequence) -> bool {
    Tester::new().forcibly_biconnected_basic(d).expect("no deadline set")
}

pub fn find_cut_witnesses(d: &DegreeSequence, limit: Option<usize>) -> CutSearch {
    Tester::new().find_cut_witnesses(d, limit).expect("no deadline set")
}
