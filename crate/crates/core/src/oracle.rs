//! Brute-force ground truth for small sequences.
//!
//! Vertex `i` is assigned degree `d[i]` (non-increasing order) and every
//! simple graph with that labeled degree vector is produced exactly once.
//! Verdicts are isomorphism invariant, so this labeling loses nothing.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::connectivity::CutWitness;
use crate::degseq::{is_graphical, is_graphical_sorted, DegreeSequence};
use crate::error::{Error, Result};

pub const DEFAULT_BOUND: usize = 10;
/// Adjacency rows are 64-bit masks.
pub const HARD_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub n: usize,
    /// Each edge once, as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub degree_of: Vec<u32>,
}

impl Realization {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> =
            edges.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        edges.sort_unstable();
        let mut degree_of = vec![0; n];
        for &(u, v) in &edges {
            degree_of[u] += 1;
            degree_of[v] += 1;
        }
        Self { n, edges, degree_of }
    }

    fn from_masks(adj: &[u64]) -> Self {
        let n = adj.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
        Self::from_edges(n, edges)
    }

    fn masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// One `"u v"` line per edge.
    pub fn edge_list(&self) -> String {
        self.edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }

    pub fn sorted_degrees(&self) -> Vec<u32> {
        let mut d = self.degree_of.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of components of the subgraph induced by `alive`.
fn components(adj: &[u64], alive: u64) -> usize {
    let mut left = alive;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut frontier = left & left.wrapping_neg();
        let mut seen = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        left &= !seen;
    }
    count
}

fn connected_masks(adj: &[u64]) -> bool {
    components(adj, full(adj.len())) <= 1
}

fn biconnected_masks(adj: &[u64]) -> bool {
    let n = adj.len();
    n >= 3 && connected_masks(adj) && (0..n).all(|v| components(adj, full(n) & !(1 << v)) == 1)
}

pub fn is_connected(g: &Realization) -> bool {
    connected_masks(&g.masks())
}

pub fn is_biconnected(g: &Realization) -> bool {
    biconnected_masks(&g.masks())
}

/// Removing `v` leaves more components than the graph had.
pub fn is_cut_vertex(g: &Realization, v: usize) -> bool {
    let adj = g.masks();
    let all = full(g.n);
    components(&adj, all & !(1 << v)) > components(&adj, all)
}

struct Backtrack<'a, F> {
    n: usize,
    adj: Vec<u64>,
    residual: Vec<u32>,
    scratch: Vec<u32>,
    visit: &'a mut F,
}

impl<F: FnMut(&[u64]) -> ControlFlow<()>> Backtrack<'_, F> {
    /// Residual demands of vertices `from..` still form a graphical sequence.
    fn feasible(&mut self, from: usize) -> bool {
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.residual[from..]);
        self.scratch.sort_unstable_by(|a, b| b.cmp(a));
        is_graphical_sorted(&self.scratch)
    }

    /// Saturates vertex `v` using only later vertices; earlier vertices are
    /// already complete.
    fn vertex(&mut self, v: usize) -> ControlFlow<()> {
        if v == self.n {
            return (self.visit)(&self.adj);
        }
        let need = self.residual[v] as usize;
        let candidates: Vec<usize> = (v + 1..self.n).filter(|&w| self.residual[w] > 0).collect();
        if candidates.len() < need {
            return ControlFlow::Continue(());
        }
        let mut pick = Vec::with_capacity(need);
        self.choose(v, &candidates, 0, need, &mut pick)
    }

    fn choose(
        &mut self,
        v: usize,
        candidates: &[usize],
        start: usize,
        need: usize,
        pick: &mut Vec<usize>,
    ) -> ControlFlow<()> {
        if pick.len() == need {
            let saved = self.residual[v];
            self.residual[v] = 0;
            for &w in pick.iter() {
                self.residual[w] -= 1;
                self.adj[v] |= 1 << w;
                self.adj[w] |= 1 << v;
            }
            let flow =
                if self.feasible(v + 1) { self.vertex(v + 1) } else { ControlFlow::Continue(()) };
            for &w in pick.iter() {
                self.residual[w] += 1;
                self.adj[v] &= !(1 << w);
                self.adj[w] &= !(1 << v);
            }
            self.residual[v] = saved;
            return flow;
        }
        let remaining = need - pick.len();
        for i in start..=candidates.len() - remaining {
            pick.push(candidates[i]);
            let flow = self.choose(v, candidates, i + 1, need, pick);
            pick.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound.min(HARD_BOUND) {
        return Err(Error::OracleBoundExceeded { n, bound: bound.min(HARD_BOUND) });
    }
    Ok(())
}

/// Calls `visit` with the adjacency masks of every realization of `terms`
/// (vertex `i` gets degree `terms[i]`) until it breaks.
fn for_each_masks<F>(terms: &[u32], bound: usize, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let n = terms.len();
    check_bound(n, bound)?;
    if !is_graphical_sorted(&{
        let mut t = terms.to_vec();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }) {
        return Ok(ControlFlow::Continue(()));
    }
    let mut bt = Backtrack {
        n,
        adj: vec![0; n],
        residual: terms.to_vec(),
        scratch: Vec::with_capacity(n),
        visit: &mut visit,
    };
    Ok(bt.vertex(0))
}

pub fn for_each_realization<F>(d: &DegreeSequence, bound: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&Realization) -> ControlFlow<()>,
{
    let _ = for_each_masks(d.terms(), bound, |adj| visit(&Realization::from_masks(adj)))?;
    Ok(())
}

/// Every labeled realization, in backtracking order.
pub fn realizations(d: &DegreeSequence) -> Result<Vec<Realization>> {
    realizations_bounded(d, DEFAULT_BOUND)
}

pub fn realizations_bounded(d: &DegreeSequence, bound: usize) -> Result<Vec<Realization>> {
    let mut out = Vec::new();
    for_each_realization(d, bound, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_realizations(d: &DegreeSequence, bound: usize) -> Result<u64> {
    let mut count = 0;
    let _ = for_each_masks(d.terms(), bound, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Connected,
    Biconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every realization has the property.
    Forcibly,
    /// Some realization has the property.
    Potentially,
}

pub fn oracle_verdict(d: &DegreeSequence, property: Property, mode: Mode) -> Result<bool> {
    oracle_verdict_bounded(d, property, mode, DEFAULT_BOUND)
}

pub fn oracle_verdict_bounded(
    d: &DegreeSequence,
    property: Property,
    mode: Mode,
    bound: usize,
) -> Result<bool> {
    check_bound(d.len(), bound)?;
    if !is_graphical(d) {
        return Err(Error::NotGraphical);
    }
    let holds = |adj: &[u64]| match property {
        Property::Connected => connected_masks(adj),
        Property::Biconnected => biconnected_masks(adj),
    };
    let flow = for_each_masks(d.terms(), bound, |adj| match (mode, holds(adj)) {
        (Mode::Forcibly, false) | (Mode::Potentially, true) => ControlFlow::Break(()),
        _ => ControlFlow::Continue(()),
    })?;
    Ok(match mode {
        Mode::Forcibly => flow.is_continue(),
        Mode::Potentially => flow.is_break(),
    })
}

/// Builds a realization of the certified sequence by gluing a realization of
/// `seq_low` and one of `seq_high` at vertices of degree `d_low` and `d_high`.
/// Returns the graph and the glued vertex.
pub fn realize_cut_witness(w: &CutWitness, bound: usize) -> Result<Option<(Realization, usize)>> {
    let first = |seq: &DegreeSequence| -> Result<Option<Realization>> {
        let mut found = None;
        for_each_realization(seq, bound, |g| {
            found = Some(g.clone());
            ControlFlow::Break(())
        })?;
        Ok(found)
    };
    let (Some(low), Some(high)) = (first(&w.seq_low)?, first(&w.seq_high)?) else {
        return Ok(None);
    };
    let Some(c_low) = low.degree_of.iter().position(|&x| x == w.d_low) else {
        return Ok(None);
    };
    let Some(c_high) = high.degree_of.iter().position(|&x| x == w.d_high) else {
        return Ok(None);
    };
    // Large side keeps its labels; the small side is shifted after it, with
    // its cut vertex mapped onto the large side's one.
    let base = high.n;
    let map = |u: usize| -> usize {
        match u.cmp(&c_low) {
            std::cmp::Ordering::Equal => c_high,
            std::cmp::Ordering::Less => base + u,
            std::cmp::Ordering::Greater => base + u - 1,
        }
    };
    let n = high.n + low.n - 1;
    let edges = high.edges.iter().copied().chain(low.edges.iter().map(|&(u, v)| (map(u), map(v))));
    Ok(Some((Realization::from_edges(n, edges), c_high)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(t: &[u32]) -> DegreeSequence {
        DegreeSequence::from_terms(t.to_vec()).unwrap()
    }

    fn graph(n: usize, e: &[(usize, usize)]) -> Realization {
        Realization::from_edges(n, e.iter().copied())
    }

    #[test]
    fn realization_counts() {
        assert_eq!(realizations(&seq(&[2, 2, 2])).unwrap().len(), 1);
        assert_eq!(realizations(&seq(&[1, 1, 1, 1])).unwrap().len(), 3);
        assert_eq!(realizations(&seq(&[2, 2, 2, 2])).unwrap().len(), 3);
        assert!(realizations(&seq(&[3, 3, 1, 1])).unwrap().is_empty());
        // labeled 3-regular graphs on 6 vertices
        assert_eq!(count_realizations(&seq(&[3; 6]), 10).unwrap(), 70);
    }

    #[test]
    fn realizations_respect_invariants() {
        let d = seq(&[3, 3, 2, 2, 2]);
        let all = realizations(&d).unwrap();
        assert!(!all.is_empty());
        let mut seen = std::collections::HashSet::new();
        for g in &all {
            assert_eq!(g.degree_of, d.terms());
            assert!(g.edges.iter().all(|&(u, v)| u < v));
            assert!(seen.insert(g.edges.clone()), "duplicate realization");
        }
    }

    #[test]
    fn bound_is_enforced() {
        let d = seq(&[2; 11]);
        assert_eq!(realizations(&d), Err(Error::OracleBoundExceeded { n: 11, bound: 10 }));
        assert!(realizations_bounded(&d, 11).is_ok());
    }

    #[test]
    fn connectivity_examples() {
        let triangle = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(is_connected(&triangle));
        assert!(is_biconnected(&triangle));
        assert!(!is_connected(&graph(4, &[(0, 1), (2, 3)])));
        assert!(is_connected(&graph(4, &[(0, 1), (1, 2), (2, 3)])));
        assert!(!is_biconnected(&graph(3, &[(0, 1), (1, 2)])));
        let paw = graph(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert!(!is_biconnected(&paw));
        assert!(is_cut_vertex(&paw, 0));
        assert!(!is_biconnected(&graph(2, &[(0, 1)])));
        assert!(is_connected(&graph(1, &[])));
    }

    #[test]
    fn verdict_examples() {
        use Mode::*;
        use Property::*;
        assert!(!oracle_verdict(&seq(&[2; 6]), Connected, Forcibly).unwrap());
        assert!(oracle_verdict(&seq(&[3, 3, 2, 2]), Biconnected, Forcibly).unwrap());
        assert!(!oracle_verdict(&seq(&[4, 2, 2, 2, 2, 2, 2]), Biconnected, Potentially).unwrap());
        assert!(oracle_verdict(&seq(&[2, 2, 1, 1]), Connected, Forcibly).unwrap());
        assert_eq!(
            oracle_verdict(&seq(&[3, 3, 1, 1]), Connected, Forcibly),
            Err(Error::NotGraphical)
        );
    }

    #[test]
    fn glued_witness_has_cut_vertex() {
        let d = seq(&[4, 4, 4, 2, 2, 2, 2]);
        let v = crate::connectivity::forcibly_biconnected(&d);
        let w = v.cut_witness().unwrap();
        let (g, c) = realize_cut_witness(w, DEFAULT_BOUND).unwrap().unwrap();
        assert_eq!(g.sorted_degrees(), d.terms());
        assert_eq!(g.degree_of[c], w.cut_degree);
        assert!(is_cut_vertex(&g, c));
    }
}
