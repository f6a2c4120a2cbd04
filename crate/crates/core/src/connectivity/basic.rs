//! Generalized Havel–Hakimi step and the exhaustive test built on it.

use super::split::{find_split, forcibly_connected_raw};
use super::{Budget, SearchStats};
use crate::degseq::{is_graphical_sorted, potentially_biconnected, DegreeSequence};
use crate::error::{Error, Result};
use crate::multiset::Combinator;

/// Removes one copy of `pick` and decrements each element of `targets` (a
/// sub-multiset of what is left, of size `pick`). The result is sorted
/// non-increasingly and may contain zeros or be non-graphical.
pub fn ghh(d: &DegreeSequence, pick: u32, targets: &[u32]) -> Result<Vec<u32>> {
    if targets.len() != pick as usize {
        return Err(Error::InvalidSelection(format!(
            "{} targets for a pick of {pick}",
            targets.len()
        )));
    }
    let mut counts = d.counts();
    if !counts.take(pick) {
        return Err(Error::InvalidSelection(format!("{pick} does not occur")));
    }
    for &t in targets {
        if !counts.take(t) {
            return Err(Error::InvalidSelection(format!("target {t} is not available")));
        }
    }
    let mut out = counts.to_sorted_vec();
    out.extend(targets.iter().map(|&t| t - 1));
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

pub(super) fn decide(
    d: &DegreeSequence,
    budget: &mut Budget,
    stats: &mut SearchStats,
) -> Result<bool> {
    if !potentially_biconnected(d) || find_split(d.terms(), budget, stats)?.is_some() {
        return Ok(false);
    }
    let counts = d.counts();
    for &pick in counts.values() {
        let mut rest = counts.clone();
        rest.take(pick);
        let mut comb = Combinator::new(&rest, pick as usize);
        while comb.advance() {
            budget.tick()?;
            stats.ghh_steps += 1;
            let mut reduced = Vec::with_capacity(d.len() - 1);
            for ((&v, &m), &c) in rest.values().iter().zip(rest.multiplicities()).zip(comb.chosen())
            {
                reduced.extend(std::iter::repeat_n(v, m - c));
                reduced.extend(std::iter::repeat_n(v - 1, c));
            }
            reduced.sort_unstable_by(|a, b| b.cmp(a));
            if is_graphical_sorted(&reduced) && !forcibly_connected_raw(&reduced, budget, stats)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
