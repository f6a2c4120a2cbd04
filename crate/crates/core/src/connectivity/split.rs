//! Disconnected-realization search.
//!
//! A graphical `d` has a disconnected realization iff it can be cut into two
//! non-empty graphical sub-multisets. The smaller side `A` has some order
//! `s <= n/2`, so all of its terms are at most `s - 1`; every other term sits
//! on the larger side and must be at most `n - s - 1`.

use super::{Budget, SearchStats};
use crate::degseq::is_graphical_sorted;
use crate::error::Result;
use crate::multiset::{Combinator, ValueCounts};

/// Returns the two sides of a split (small side first), or `None` if every
/// realization is connected. `d` must be non-increasing, zero-free and
/// graphical.
pub(crate) fn find_split(
    d: &[u32],
    budget: &mut Budget,
    stats: &mut SearchStats,
) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
    let n = d.len();
    if n < 2 {
        return Ok(None);
    }
    // Two vertices in different components have degree sum at most n - 2.
    if (d[n - 2] + d[n - 1]) as usize >= n - 1 {
        return Ok(None);
    }
    let counts = ValueCounts::from_sorted(d);
    let largest = d[0] as usize;
    // Zero-free sides have at least two vertices.
    for s in 2..=n / 2 {
        if largest > n - s - 1 {
            break;
        }
        let pool = counts.at_most(s as u32 - 1);
        if pool.len() < s {
            continue;
        }
        let offset = counts.values().len() - pool.values().len();
        let mut comb = Combinator::new(&pool, s);
        while comb.advance() {
            budget.tick()?;
            stats.split_candidates += 1;
            if comb.chosen_sum() % 2 == 1 {
                continue;
            }
            let side_a = comb.chosen_vec();
            if !is_graphical_sorted(&side_a) {
                continue;
            }
            let side_b = complement(&counts, offset, comb.chosen());
            if is_graphical_sorted(&side_b) {
                return Ok(Some((side_a, side_b)));
            }
        }
    }
    Ok(None)
}

/// `counts` minus a selection whose multiplicities align with the values of
/// `counts` starting at `offset`.
pub(crate) fn complement(counts: &ValueCounts, offset: usize, chosen: &[usize]) -> Vec<u32> {
    let mut out = Vec::with_capacity(counts.len());
    for (i, (&v, &m)) in counts.values().iter().zip(counts.multiplicities()).enumerate() {
        let take = if i >= offset { chosen[i - offset] } else { 0 };
        out.extend(std::iter::repeat_n(v, m - take));
    }
    out
}

/// Forcible connectivity of a graphical, non-increasing slice that may
/// contain zeros (a GHH result). An isolated vertex next to any other vertex
/// is already a disconnected realization.
pub(crate) fn forcibly_connected_raw(
    d: &[u32],
    budget: &mut Budget,
    stats: &mut SearchStats,
) -> Result<bool> {
    if d.len() <= 1 {
        return Ok(true);
    }
    if d[d.len() - 1] == 0 {
        return Ok(false);
    }
    Ok(find_split(d, budget, stats)?.is_none())
}
