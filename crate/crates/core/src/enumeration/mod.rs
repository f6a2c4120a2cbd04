//! Counting forcibly (bi)connected graphical sequences and partitions.

mod cache;
mod extremal;
mod generate;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::connectivity::{candidate_orders, find_split, has_cut, Budget, SearchStats};
use crate::degseq::{potentially_biconnected, DegreeSequence};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub use cache::{ResultsCache, CACHE_VERSION};
pub use extremal::{extremal_largest_term, ExtremalKind, ExtremalReport};
pub use generate::{enum_partitions, enum_sequences, PartitionIter, SequenceIter};
pub use report::{check_unimodal, ratio_report, RatioRow};

macro_rules! named_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum $name {
            $(#[serde(rename = $text)] $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(Error::Parse(s.to_string())),
                }
            }
        }
    };
}

named_enum! {
    /// What is enumerated: sequences of fixed length or partitions of a
    /// fixed even sum.
    Mode {
        Sequences => "sequences",
        Partitions => "partitions",
    }
}

named_enum! {
    Filter {
        AllZeroFree => "all_zero_free",
        PotentiallyBiconnected => "potentially_biconnected",
        ForciblyConnected => "forcibly_connected",
        ForciblyBiconnected => "forcibly_biconnected",
    }
}

named_enum! {
    /// How counts are keyed.
    Itemize {
        ByDegreeSum => "by_degree_sum",
        ByNumParts => "by_num_parts",
        ByLargestPart => "by_largest_part",
        Totals => "totals",
    }
}

/// Exact counts for one (mode, filter, parameter), keyed by the itemize
/// kind. Totals are stored under key 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub mode: Mode,
    pub kind: Itemize,
    pub filter: Filter,
    pub fixed_parameter: u32,
    pub counts: BTreeMap<u32, u64>,
}

impl CountTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, key: u32) -> u64 {
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Counts in key order.
    pub fn values(&self) -> Vec<u64> {
        self.counts.values().copied().collect()
    }
}

/// Lazily evaluated verdicts for one enumerated (hence graphical,
/// zero-free) sequence.
struct Classify<'a> {
    d: &'a DegreeSequence,
    pb: Option<bool>,
    fc: Option<bool>,
    stats: SearchStats,
}

impl<'a> Classify<'a> {
    fn new(d: &'a DegreeSequence) -> Self {
        Self { d, pb: None, fc: None, stats: SearchStats::default() }
    }

    fn potentially_biconnected(&mut self) -> bool {
        *self.pb.get_or_insert_with(|| potentially_biconnected(self.d))
    }

    fn forcibly_connected(&mut self) -> bool {
        if let Some(fc) = self.fc {
            return fc;
        }
        let fc = find_split(self.d.terms(), &mut Budget::new(None), &mut self.stats)
            .expect("no deadline")
            .is_none();
        self.fc = Some(fc);
        fc
    }

    fn forcibly_biconnected(&mut self) -> bool {
        let d = self.d;
        let n = d.len();
        if d.min_term() < 2 || !self.potentially_biconnected() {
            return false;
        }
        if (d.kth(2) + d.min_term()) as usize >= n {
            return true;
        }
        if !self.forcibly_connected() {
            return false;
        }
        let orders = candidate_orders(d);
        orders.is_empty() || !has_cut(d, &orders.orders, &mut self.stats)
    }

    fn passes(&mut self, filter: Filter) -> bool {
        match filter {
            Filter::AllZeroFree => true,
            Filter::PotentiallyBiconnected => self.potentially_biconnected(),
            Filter::ForciblyConnected => self.forcibly_connected(),
            Filter::ForciblyBiconnected => self.forcibly_biconnected(),
        }
    }
}

/// Smallest `j` with `j(j-1) >= total`: the fewest parts a graphical
/// partition of `total` can have.
pub fn min_parts(total: u32) -> u32 {
    let mut j = 1u32;
    while (j as u64) * (j as u64 - 1) < total as u64 {
        j += 1;
    }
    j
}

/// Contiguous key range `(lo, hi, step)` that itemized tables fill with
/// explicit zeros. `None` means only the observed span is filled.
pub fn key_range(mode: Mode, kind: Itemize, filter: Filter, param: u32) -> Option<(u32, u32, u32)> {
    match (mode, kind) {
        (Mode::Sequences, Itemize::ByDegreeSum) => {
            let n = param;
            if n < 2 {
                return None;
            }
            let lo = match filter {
                Filter::AllZeroFree => n + n % 2,
                Filter::ForciblyConnected => 2 * (n - 1),
                Filter::PotentiallyBiconnected | Filter::ForciblyBiconnected => 2 * n,
            };
            let hi = n * (n - 1);
            (lo <= hi).then_some((lo, hi, 2))
        }
        (Mode::Partitions, Itemize::ByNumParts) => {
            let total = param;
            let lo = min_parts(total);
            let hi = match filter {
                Filter::AllZeroFree => total,
                Filter::ForciblyConnected => total / 2 + 1,
                Filter::PotentiallyBiconnected | Filter::ForciblyBiconnected => total / 2,
            };
            (lo <= hi).then_some((lo, hi, 1))
        }
        _ => None,
    }
}

fn item_key(kind: Itemize, d: &DegreeSequence) -> u32 {
    match kind {
        Itemize::ByDegreeSum => d.sum() as u32,
        Itemize::ByNumParts => d.len() as u32,
        Itemize::ByLargestPart => d.max_term(),
        Itemize::Totals => 0,
    }
}

fn validate(mode: Mode, param: u32) -> Result<()> {
    match mode {
        Mode::Sequences if param == 0 => {
            Err(Error::InvalidParameter("sequence length must be at least 1".into()))
        }
        Mode::Partitions if param % 2 == 1 => Err(Error::OddSum(param as u64)),
        Mode::Partitions if param == 0 => {
            Err(Error::InvalidParameter("partition sum must be at least 2".into()))
        }
        _ => Ok(()),
    }
}

/// Range of largest terms, used as shards.
fn shards(mode: Mode, param: u32) -> Vec<u32> {
    match mode {
        Mode::Sequences => (1..param).rev().collect(),
        Mode::Partitions => (1..=param / 2).rev().collect(),
    }
}

/// Visits every member with largest term `largest`.
pub(crate) fn for_each_member(
    mode: Mode,
    param: u32,
    largest: u32,
    mut f: impl FnMut(&DegreeSequence) -> bool,
) -> Result<()> {
    match mode {
        Mode::Sequences => {
            for d in SequenceIter::with_largest(param as usize, largest, largest) {
                if !f(&d) {
                    break;
                }
            }
        }
        Mode::Partitions => {
            for d in PartitionIter::with_largest(param, largest, largest)? {
                if !f(&d) {
                    break;
                }
            }
        }
    }
    Ok(())
}

/// One enumeration pass producing a table per filter.
pub fn count_tables(
    param: u32,
    mode: Mode,
    filters: &[Filter],
    itemize: Itemize,
    exec: Exec,
) -> Result<Vec<CountTable>> {
    validate(mode, param)?;
    let per_shard = exec.map(shards(mode, param), |largest| -> Result<Vec<BTreeMap<u32, u64>>> {
        let mut local = vec![BTreeMap::new(); filters.len()];
        for_each_member(mode, param, largest, |d| {
            let key = item_key(itemize, d);
            let mut c = Classify::new(d);
            for (slot, &filter) in local.iter_mut().zip(filters) {
                if c.passes(filter) {
                    *slot.entry(key).or_insert(0u64) += 1;
                }
            }
            true
        })?;
        Ok(local)
    });

    let mut merged = vec![BTreeMap::<u32, u64>::new(); filters.len()];
    for shard in per_shard {
        for (acc, local) in merged.iter_mut().zip(shard?) {
            for (k, v) in local {
                *acc.entry(k).or_insert(0) += v;
            }
        }
    }

    Ok(filters
        .iter()
        .zip(merged)
        .map(|(&filter, mut counts)| {
            pad(&mut counts, mode, itemize, filter, param);
            CountTable { mode, kind: itemize, filter, fixed_parameter: param, counts }
        })
        .collect())
}

fn pad(counts: &mut BTreeMap<u32, u64>, mode: Mode, kind: Itemize, filter: Filter, param: u32) {
    if kind == Itemize::Totals {
        counts.entry(0).or_insert(0);
        return;
    }
    let range = key_range(mode, kind, filter, param).or_else(|| {
        let lo = *counts.keys().next()?;
        let hi = *counts.keys().next_back()?;
        let step = if kind == Itemize::ByDegreeSum { 2 } else { 1 };
        Some((lo, hi, step))
    });
    if let Some((lo, hi, step)) = range {
        for key in (lo..=hi).step_by(step as usize) {
            counts.entry(key).or_insert(0);
        }
    }
}

pub fn count_filtered(
    param: u32,
    mode: Mode,
    filter: Filter,
    itemize: Itemize,
) -> Result<CountTable> {
    count_filtered_with(param, mode, filter, itemize, Exec::default())
}

pub fn count_filtered_with(
    param: u32,
    mode: Mode,
    filter: Filter,
    itemize: Itemize,
    exec: Exec,
) -> Result<CountTable> {
    Ok(count_tables(param, mode, &[filter], itemize, exec)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_parts_examples() {
        assert_eq!(min_parts(30), 6);
        assert_eq!(min_parts(31), 7);
        assert_eq!(min_parts(2), 2);
        assert_eq!(min_parts(10), 4);
    }

    #[test]
    fn names_round_trip() {
        for &f in Filter::ALL {
            assert_eq!(f.as_str().parse::<Filter>().unwrap(), f);
        }
        assert!("nope".parse::<Itemize>().is_err());
    }

    #[test]
    fn length_four_totals() {
        let t = |f| count_filtered(4, Mode::Sequences, f, Itemize::Totals).unwrap().total();
        assert_eq!(t(Filter::AllZeroFree), 7);
        assert_eq!(t(Filter::ForciblyConnected), 6);
        assert_eq!(t(Filter::ForciblyBiconnected), 3);
    }

    #[test]
    fn small_partitions() {
        let two =
            count_filtered(2, Mode::Partitions, Filter::AllZeroFree, Itemize::Totals).unwrap();
        assert_eq!(two.total(), 1);
        let four =
            count_filtered(4, Mode::Partitions, Filter::AllZeroFree, Itemize::Totals).unwrap();
        assert_eq!(four.total(), 2);
        let ten =
            count_filtered(10, Mode::Partitions, Filter::ForciblyBiconnected, Itemize::Totals)
                .unwrap();
        assert_eq!(ten.total(), 2);
        assert_eq!(
            count_filtered(9, Mode::Partitions, Filter::AllZeroFree, Itemize::Totals),
            Err(Error::OddSum(9))
        );
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for filter in [Filter::ForciblyConnected, Filter::ForciblyBiconnected] {
            let a = count_filtered_with(
                7,
                Mode::Sequences,
                filter,
                Itemize::ByDegreeSum,
                Exec::Sequential,
            )
            .unwrap();
            let b = count_filtered_with(
                7,
                Mode::Sequences,
                filter,
                Itemize::ByDegreeSum,
                Exec::workers(3),
            )
            .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn largest_part_table_keeps_only_the_observed_span() {
        let t = count_filtered(
            30,
            Mode::Partitions,
            Filter::ForciblyBiconnected,
            Itemize::ByLargestPart,
        )
        .unwrap();
        assert_eq!(t.counts.keys().copied().collect::<Vec<_>>(), vec![4, 5, 6, 7, 8]);
    }
}
