//! Cut-vertex search for the improved forcibly-biconnected test.
//!
//! Suppose a realization of `d` has a cut vertex of degree `c`, and removing
//! it leaves a small side of order `s` and a large side of order `n - s - 1`.
//! The small side's vertices have degree at most `s`, everything except the
//! cut vertex has degree at most `n - s - 1`, and the cut vertex sends
//! `d_low` edges to the small side and `d_high = c - d_low` to the large one.
//! Then `s_low + {d_low}` and `(d - {c} - s_low) + {d_high}` are both
//! graphical, and conversely gluing any two such realizations at the
//! `d_low`/`d_high` vertices produces a cut vertex of degree `c`.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::split::find_split;
use super::{
    BiconnectedVerdict, Budget, CandidateOrders, CutSearch, CutWitness, Gate, SearchStats,
    SplitWitness, Tester,
};
use crate::degseq::{is_graphical_sorted, potentially_biconnected, DegreeSequence};
use crate::error::Result;
use crate::multiset::{insert_desc, Combinator, ValueCounts};

/// Orders `s` in `[dₙ, ⌊(n-1)/2⌋]` with at least `s` terms `<= s` and
/// `d₂ <= n - s - 1`.
pub fn candidate_orders(d: &DegreeSequence) -> CandidateOrders {
    let n = d.len();
    let mut orders = Vec::new();
    if n >= 3 {
        let second = d.kth(2) as usize;
        for s in d.min_term() as usize..=(n - 1) / 2 {
            if d.kth(n - s + 1) as usize <= s && second + s < n {
                orders.push(s);
            }
        }
    }
    CandidateOrders { orders }
}

type GateOutcome = std::result::Result<Vec<usize>, (Gate, Option<SplitWitness>)>;

/// Gate shared by the decision and the enumeration. `Ok(Err(gate))` means the
/// search is not needed; `Ok(Ok(orders))` carries the candidate orders, which
/// are empty when the `d₂ + dₙ >= n` shortcut applies.
fn gate(d: &DegreeSequence, budget: &mut Budget, stats: &mut SearchStats) -> Result<GateOutcome> {
    if !potentially_biconnected(d) {
        return Ok(Err((Gate::NotPotentiallyBiconnected, None)));
    }
    let n = d.len();
    // d₂ + dₙ >= n also gives d_{n-1} + dₙ >= n - 1, so d is forcibly
    // connected and the split search can be skipped.
    if (d.kth(2) + d.min_term()) as usize >= n {
        return Ok(Ok(Vec::new()));
    }
    if let Some((a, b)) = find_split(d.terms(), budget, stats)? {
        let split = SplitWitness {
            side_a: DegreeSequence::from_sorted_unchecked(a),
            side_b: DegreeSequence::from_sorted_unchecked(b),
        };
        return Ok(Err((Gate::NotForciblyConnected, Some(split))));
    }
    Ok(Ok(candidate_orders(d).orders))
}

/// Graphicality of `s_low + {d_low}`, shared across cut degrees: the small
/// side does not depend on which term is the cut vertex.
#[derive(Default)]
struct LowMemo {
    map: HashMap<Vec<u32>, Vec<u8>>,
}

const MEMO_CAP: usize = 1 << 18;
const UNKNOWN: u8 = 0;
const YES: u8 = 1;
const NO: u8 = 2;

impl LowMemo {
    fn low_graphical(&mut self, s_low: &[u32], d_low: u32, stats: &mut SearchStats) -> bool {
        let compute = || {
            let mut low = s_low.to_vec();
            insert_desc(&mut low, d_low);
            is_graphical_sorted(&low)
        };
        if let Some(slots) = self.map.get_mut(s_low) {
            match slots[d_low as usize] {
                YES => {
                    stats.memo_hits += 1;
                    return true;
                }
                NO => {
                    stats.memo_hits += 1;
                    return false;
                }
                _ => {
                    let ok = compute();
                    slots[d_low as usize] = if ok { YES } else { NO };
                    return ok;
                }
            }
        }
        let ok = compute();
        if self.map.len() < MEMO_CAP {
            let mut slots = vec![UNKNOWN; s_low.len() + 1];
            slots[d_low as usize] = if ok { YES } else { NO };
            self.map.insert(s_low.to_vec(), slots);
        }
        ok
    }
}

/// One (cut degree, small-side order) pair, in search order.
#[derive(Clone, Copy, Debug)]
struct Task {
    cut: u32,
    s: usize,
}

fn tasks(d: &DegreeSequence, orders: &[usize]) -> Vec<Task> {
    let n = d.len();
    let largest = d.max_term();
    let counts = d.counts();
    let mut out = Vec::new();
    for &cut in counts.values() {
        if cut < 2 {
            continue;
        }
        for &s in orders {
            // The largest non-cut degree must fit in the large side.
            if cut == largest || n - s > largest as usize {
                out.push(Task { cut, s });
            }
        }
    }
    out
}

/// Runs one task, handing every witness to `sink` until it breaks.
fn run_task(
    d: &DegreeSequence,
    counts: &ValueCounts,
    task: Task,
    memo: &mut LowMemo,
    budget: &mut Budget,
    stats: &mut SearchStats,
    sink: &mut dyn FnMut(CutWitness) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let n = d.len();
    let Task { cut, s } = task;
    let mut pool = counts.at_most(s as u32);
    pool.take(cut);
    if pool.len() < s {
        return Ok(ControlFlow::Continue(()));
    }
    stats.cut_searches += 1;

    let mut rest = counts.clone();
    rest.take(cut);
    let offset = rest.values().len() - pool.values().len();
    let large_order = n - s - 1;
    // d_low <= s (small side) and d_high <= n - s - 1 (large side).
    let lo = 1.max(cut.saturating_sub(large_order as u32));
    let hi = (cut - 1).min(s as u32);
    if lo > hi {
        return Ok(ControlFlow::Continue(()));
    }

    let mut comb = Combinator::new(&pool, s);
    while comb.advance() {
        budget.tick()?;
        stats.low_candidates += 1;
        let s_low = comb.chosen_vec();
        let parity = (comb.chosen_sum() % 2) as u32;
        let mut high_base: Option<Vec<u32>> = None;
        // s_low + {d_low} must have even sum; that also fixes the parity of
        // the large side.
        let first = if lo % 2 == parity { lo } else { lo + 1 };
        for d_low in (first..=hi).step_by(2) {
            if !memo.low_graphical(&s_low, d_low, stats) {
                continue;
            }
            let base = high_base
                .get_or_insert_with(|| super::split::complement(&rest, offset, comb.chosen()));
            let d_high = cut - d_low;
            let mut high = Vec::with_capacity(base.len() + 1);
            high.extend_from_slice(base);
            insert_desc(&mut high, d_high);
            if !is_graphical_sorted(&high) {
                continue;
            }
            let mut low = s_low.clone();
            insert_desc(&mut low, d_low);
            let witness = CutWitness {
                cut_degree: cut,
                d_low,
                d_high,
                s,
                s_low: s_low.clone(),
                seq_low: DegreeSequence::from_sorted_unchecked(low),
                seq_high: DegreeSequence::from_sorted_unchecked(high),
            };
            if sink(witness).is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

pub(super) fn decide(tester: &mut Tester, d: &DegreeSequence) -> Result<BiconnectedVerdict> {
    let mut budget = tester.budget();
    let orders = match gate(d, &mut budget, &mut tester.stats)? {
        Err((Gate::NotForciblyConnected, Some(split))) => {
            return Ok(BiconnectedVerdict::NotForciblyConnected(split))
        }
        Err(_) => return Ok(BiconnectedVerdict::NotPotentiallyBiconnected),
        Ok(orders) => orders,
    };
    if orders.is_empty() {
        return Ok(BiconnectedVerdict::Forcibly);
    }
    let tasks = tasks(d, &orders);

    #[cfg(feature = "parallel")]
    if tester.parallel {
        return decide_parallel(tester, d, &tasks);
    }

    let counts = d.counts();
    let mut memo = LowMemo::default();
    let mut found = None;
    for &task in &tasks {
        let flow =
            run_task(d, &counts, task, &mut memo, &mut budget, &mut tester.stats, &mut |w| {
                found = Some(w);
                ControlFlow::Break(())
            })?;
        if flow.is_break() {
            break;
        }
    }
    Ok(match found {
        Some(w) => BiconnectedVerdict::Cut(w),
        None => BiconnectedVerdict::Forcibly,
    })
}

#[cfg(feature = "parallel")]
fn decide_parallel(
    tester: &mut Tester,
    d: &DegreeSequence,
    tasks: &[Task],
) -> Result<BiconnectedVerdict> {
    use rayon::prelude::*;
    use std::sync::Mutex;

    let counts = d.counts();
    let deadline = tester.deadline;
    let totals = Mutex::new(SearchStats::default());
    // find_map_first keeps the sequential witness: the earliest task wins.
    let hit = tasks.par_iter().find_map_first(|&task| {
        let mut memo = LowMemo::default();
        let mut budget = Budget::new(deadline);
        let mut stats = SearchStats::default();
        let mut found = None;
        let outcome = run_task(d, &counts, task, &mut memo, &mut budget, &mut stats, &mut |w| {
            found = Some(w);
            ControlFlow::Break(())
        });
        totals.lock().unwrap().merge(&stats);
        match outcome {
            Err(e) => Some(Err(e)),
            Ok(_) => found.map(Ok),
        }
    });
    tester.stats.merge(&totals.into_inner().unwrap());
    match hit {
        None => Ok(BiconnectedVerdict::Forcibly),
        Some(Ok(w)) => Ok(BiconnectedVerdict::Cut(w)),
        Some(Err(e)) => Err(e),
    }
}

/// Whether some realization has a cut vertex, for a `d` already known to be
/// potentially biconnected and forcibly connected.
pub(crate) fn has_cut(d: &DegreeSequence, orders: &[usize], stats: &mut SearchStats) -> bool {
    let counts = d.counts();
    let mut memo = LowMemo::default();
    let mut budget = Budget::new(None);
    tasks(d, orders).into_iter().any(|task| {
        run_task(d, &counts, task, &mut memo, &mut budget, stats, &mut |_| ControlFlow::Break(()))
            .expect("no deadline")
            .is_break()
    })
}

pub(super) fn enumerate(
    tester: &mut Tester,
    d: &DegreeSequence,
    limit: Option<usize>,
) -> Result<CutSearch> {
    let mut budget = tester.budget();
    let orders = match gate(d, &mut budget, &mut tester.stats)? {
        Err((gate, _)) => return Ok(CutSearch { gate, witnesses: Vec::new() }),
        Ok(orders) => orders,
    };
    let counts = d.counts();
    let mut memo = LowMemo::default();
    let mut witnesses = Vec::new();
    if limit == Some(0) {
        return Ok(CutSearch { gate: Gate::Passed, witnesses });
    }
    for task in tasks(d, &orders) {
        let flow =
            run_task(d, &counts, task, &mut memo, &mut budget, &mut tester.stats, &mut |w| {
                witnesses.push(w);
                if limit.is_some_and(|l| witnesses.len() >= l) {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
        if flow.is_break() {
            break;
        }
    }
    Ok(CutSearch { gate: Gate::Passed, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{find_cut_witnesses, forcibly_biconnected};

    fn seq(t: &[u32]) -> DegreeSequence {
        DegreeSequence::from_terms(t.to_vec()).unwrap()
    }

    #[test]
    fn candidate_order_examples() {
        assert!(candidate_orders(&seq(&[5, 5, 2, 2, 2, 2, 2])).is_empty());
        assert_eq!(candidate_orders(&seq(&[4, 4, 4, 2, 2, 2, 2])).orders, vec![2]);
        assert!(candidate_orders(&seq(&[3, 3, 3, 3])).is_empty());
    }

    #[test]
    fn decision_examples() {
        assert!(forcibly_biconnected(&seq(&[3, 3, 3, 3])).is_forcibly_biconnected());
        assert!(forcibly_biconnected(&seq(&[5, 5, 2, 2, 2, 2, 2])).is_forcibly_biconnected());
        assert!(forcibly_biconnected(&seq(&[2, 2, 2, 2, 2])).is_forcibly_biconnected());
        assert!(matches!(
            forcibly_biconnected(&seq(&[2, 2, 2, 2, 2, 2])),
            BiconnectedVerdict::NotForciblyConnected(_)
        ));
        assert_eq!(
            forcibly_biconnected(&seq(&[3, 2, 2, 1])),
            BiconnectedVerdict::NotPotentiallyBiconnected
        );
    }

    #[test]
    fn witness_for_three_fours() {
        let d = seq(&[4, 4, 4, 2, 2, 2, 2]);
        let v = forcibly_biconnected(&d);
        let w = v.cut_witness().expect("has a cut vertex");
        assert_eq!((w.cut_degree, w.d_low, w.d_high, w.s), (4, 2, 2, 2));
        assert_eq!(w.s_low, vec![2, 2]);
        assert_eq!(w.seq_low.terms(), &[2, 2, 2]);
        assert_eq!(w.seq_high.terms(), &[4, 4, 2, 2, 2]);
        w.validate(&d).unwrap();

        let all = find_cut_witnesses(&d, None);
        assert_eq!(all.gate, Gate::Passed);
        assert!(all.witnesses.contains(w));
        for x in &all.witnesses {
            x.validate(&d).unwrap();
        }
        assert_eq!(find_cut_witnesses(&d, Some(1)).witnesses.len(), 1);
    }

    #[test]
    fn enumeration_gates() {
        let k4 = find_cut_witnesses(&seq(&[3, 3, 3, 3]), None);
        assert_eq!(k4, CutSearch { gate: Gate::Passed, witnesses: vec![] });
        let two_triangles = find_cut_witnesses(&seq(&[2, 2, 2, 2, 2, 2]), None);
        assert_eq!(two_triangles.gate, Gate::NotForciblyConnected);
        assert!(two_triangles.witnesses.is_empty());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        for t in
            [&[4u32, 4, 4, 2, 2, 2, 2][..], &[3, 3, 3, 3, 2, 2, 2, 2], &[4, 4, 3, 3, 2, 2, 2, 2]]
        {
            let d = seq(t);
            let a = Tester::new().forcibly_biconnected(&d).unwrap();
            let b = Tester::new().parallel(true).forcibly_biconnected(&d).unwrap();
            assert_eq!(a, b);
        }
    }
}
