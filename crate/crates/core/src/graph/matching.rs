//! Exact induced matchings by branch and bound.
//!
//! An induced matching is an independent set in the conflict graph on
//! `E(G)` where two edges conflict when they share a vertex or are joined by
//! an edge of `G`. The search branches on the lowest remaining candidate
//! edge and prunes with the trivial `|chosen| + |candidates|` bound.

use fixedbitset::FixedBitSet;

use super::{is_cochordal, Edge, SimpleGraph};

struct Search<'a> {
    edges: &'a [Edge],
    /// `compatible[e]`: edges that can sit next to `e` in an induced matching.
    compatible: Vec<FixedBitSet>,
    /// Stop as soon as a matching of this size is found.
    target: usize,
    best: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &SimpleGraph, edges: &'a [Edge], target: usize) -> Self {
        let m = edges.len();
        // Vertices that an edge sharing an induced matching with e must avoid.
        let blocked: Vec<FixedBitSet> = edges
            .iter()
            .map(|&(a, b)| {
                let mut row = g.row(a).clone();
                row.union_with(g.row(b));
                row.insert(a - 1);
                row.insert(b - 1);
                row
            })
            .collect();
        let mut compatible = vec![FixedBitSet::with_capacity(m); m];
        for e in 0..m {
            for f in e + 1..m {
                let (c, d) = edges[f];
                if !blocked[e].contains(c - 1) && !blocked[e].contains(d - 1) {
                    compatible[e].insert(f);
                    compatible[f].insert(e);
                }
            }
        }
        Search {
            edges,
            compatible,
            target,
            best: Vec::new(),
        }
    }

    fn run(&mut self, candidates: FixedBitSet, chosen: &mut Vec<usize>) {
        if self.best.len() >= self.target {
            return;
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        let remaining = candidates.count_ones(..);
        if remaining == 0 || chosen.len() >= self.target {
            return;
        }
        if chosen.len() + remaining <= self.best.len() {
            return;
        }
        let e = candidates.minimum().expect("non-empty candidate set");
        let mut with_e = candidates.clone();
        with_e.intersect_with(&self.compatible[e]);
        chosen.push(e);
        self.run(with_e, chosen);
        chosen.pop();

        let mut without_e = candidates;
        without_e.set(e, false);
        self.run(without_e, chosen);
    }

    fn solve(mut self) -> Vec<Edge> {
        let m = self.edges.len();
        let mut all = FixedBitSet::with_capacity(m);
        all.insert_range(..);
        self.run(all, &mut Vec::new());
        self.best.iter().map(|&e| self.edges[e]).collect()
    }
}

/// Largest induced matching of `g`, stopping early once `cap` edges are
/// found. With `cap = usize::MAX` this is the exact maximum. Returns the
/// matching edges in lexicographic order.
pub fn induced_matching_number_capped(g: &SimpleGraph, cap: usize) -> Vec<Edge> {
    let edges = g.edges();
    if edges.is_empty() || cap == 0 {
        return Vec::new();
    }
    if cap == 1 || is_cochordal(g) {
        return vec![edges[0]];
    }
    Search::new(g, &edges, cap).solve()
}

/// The induced matching number `indmatch(G)`.
pub fn induced_matching_number(g: &SimpleGraph) -> usize {
    induced_matching_number_capped(g, usize::MAX).len()
}

/// `k` pairwise disjoint edges with no edges between them, if any exist.
/// The witness is the lexicographically first one found by the search.
pub fn find_induced_kk2(g: &SimpleGraph, k: usize) -> Option<Vec<Edge>> {
    assert!(k >= 1, "k must be positive");
    let edges = g.edges();
    if edges.len() < k {
        return None;
    }
    let found = Search::new(g, &edges, k).solve();
    (found.len() >= k).then(|| found[..k].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let two_k2 = SimpleGraph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(induced_matching_number(&two_k2), 2);
        assert_eq!(induced_matching_number(&SimpleGraph::complete(4)), 1);
        assert_eq!(induced_matching_number(&SimpleGraph::empty(4)), 0);
        // C6: {12, 45} is induced, three disjoint edges are not.
        assert_eq!(induced_matching_number(&SimpleGraph::cycle(6)), 2);
        // P_6 = 1-2-3-4-5-6 has {12, 56}; no three.
        let p6 = SimpleGraph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(induced_matching_number(&p6), 2);
    }

    #[test]
    fn kk2_search() {
        assert_eq!(find_induced_kk2(&SimpleGraph::complete(4), 2), None);
        let g = SimpleGraph::from_edges(6, [(1, 2), (3, 4), (5, 6)]).unwrap();
        assert_eq!(find_induced_kk2(&g, 3), Some(vec![(1, 2), (3, 4), (5, 6)]));
        assert_eq!(find_induced_kk2(&g, 2), Some(vec![(1, 2), (3, 4)]));
        assert_eq!(find_induced_kk2(&g, 4), None);
    }

    #[test]
    fn cap_stops_early() {
        let g = SimpleGraph::from_edges(6, [(1, 2), (3, 4), (5, 6)]).unwrap();
        assert_eq!(induced_matching_number_capped(&g, 2).len(), 2);
    }
}
